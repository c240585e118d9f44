#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathhom/digraph.hpp"

namespace pathhom {

enum class MoveKind { pendant_out, pendant_in, dominated_out, dominated_in, transit };
enum class TransitCase { edge_or_semi_edge, same_component, different_components };

std::string_view to_string(MoveKind k);
std::string_view to_string(TransitCase c);

// Vertices are named by label so that a move stays meaningful after other
// vertices are removed.
//   pendant_out:   a -> b is the only edge at a; witnesses {b}
//   pendant_in:    b -> a is the only edge at a; witnesses {b}
//   dominated_out: a is a source, b0 -> b for every other out-neighbor b; witnesses {b0}
//   dominated_in:  a is a sink, b -> b0 for every other in-neighbor b; witnesses {b0}
//   transit:       c -> a -> b are the only edges at a, b != c; witnesses {c, b}
struct ReductionMove {
  MoveKind kind = MoveKind::pendant_out;
  std::string removed_vertex;
  std::vector<std::string> witnesses;
  std::optional<TransitCase> case_tag;  // transit only
  friend bool operator==(const ReductionMove&, const ReductionMove&) = default;
};

// dim H_1(original) = dim H_1(reduced) + delta_h1, same for H_0; higher
// grades agree.
struct ReductionLedger {
  std::vector<ReductionMove> moves;
  long long delta_h1 = 0;
  long long delta_h0 = 0;
};

// Every applicable move, ordered by removed vertex then kind.
std::vector<ReductionMove> find_moves(const DiGraph& g);

// Throws InputError if the move does not apply to g.
DiGraph apply(const DiGraph& g, const ReductionMove& m);

struct ReductionResult {
  DiGraph reduced;
  ReductionLedger ledger;
};

// Greedy fixpoint: pendant moves first, then dominated, then transit, the
// lowest vertex first within a class. Transit moves need characteristic
// zero. preserving_only restricts transit moves to the edge_or_semi_edge
// case, so the reduced graph has exactly the same homology.
ReductionResult reduce_fully(const DiGraph& g, bool char_zero = true, bool preserving_only = false);

}  // namespace pathhom
