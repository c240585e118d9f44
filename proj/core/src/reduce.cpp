#include "pathhom/reduce.hpp"

#include <algorithm>

#include "pathhom/errors.hpp"

namespace pathhom {

std::string_view to_string(MoveKind k) {
  switch (k) {
    case MoveKind::pendant_out: return "pendant_out";
    case MoveKind::pendant_in: return "pendant_in";
    case MoveKind::dominated_out: return "dominated_out";
    case MoveKind::dominated_in: return "dominated_in";
    case MoveKind::transit: return "transit";
  }
  return "";
}

std::string_view to_string(TransitCase c) {
  switch (c) {
    case TransitCase::edge_or_semi_edge: return "edge_or_semi_edge";
    case TransitCase::same_component: return "same_component";
    case TransitCase::different_components: return "different_components";
  }
  return "";
}

namespace {

bool connected_in(const DiGraph& g, Vertex u, Vertex v) {
  for (const auto& comp : weak_components(g)) {
    bool hu = std::binary_search(comp.begin(), comp.end(), u);
    bool hv = std::binary_search(comp.begin(), comp.end(), v);
    if (hu || hv) return hu && hv;
  }
  return false;
}

// Lowest b0 among nbrs with reach(b0, b) for all other b.
std::optional<Vertex> dominator(const std::vector<Vertex>& nbrs, auto reach) {
  for (Vertex b0 : nbrs) {
    bool ok = true;
    for (Vertex b : nbrs)
      if (b != b0 && !reach(b0, b)) {
        ok = false;
        break;
      }
    if (ok) return b0;
  }
  return std::nullopt;
}

TransitCase classify_transit(const DiGraph& g, Vertex a, Vertex c, Vertex b) {
  DiGraph h = g.without_vertex(a);
  auto sh = [a](Vertex w) { return w > a ? w - 1 : w; };
  const Vertex c2 = sh(c), b2 = sh(b);
  if (h.has_edge(c2, b2)) return TransitCase::edge_or_semi_edge;
  for (Vertex k : h.out(c2))
    if (h.has_edge(k, b2)) return TransitCase::edge_or_semi_edge;
  return connected_in(h, c2, b2) ? TransitCase::same_component : TransitCase::different_components;
}

std::vector<ReductionMove> moves_at(const DiGraph& g, Vertex a) {
  std::vector<ReductionMove> out;
  const auto& lab = g.labels();
  const auto& o = g.out(a);
  const auto& i = g.in(a);
  if (i.empty() && o.size() == 1) out.push_back({MoveKind::pendant_out, lab[a], {lab[o[0]]}, {}});
  if (o.empty() && i.size() == 1) out.push_back({MoveKind::pendant_in, lab[a], {lab[i[0]]}, {}});
  if (i.empty() && o.size() >= 2)
    if (auto b0 = dominator(o, [&](Vertex x, Vertex y) { return g.has_edge(x, y); }))
      out.push_back({MoveKind::dominated_out, lab[a], {lab[*b0]}, {}});
  if (o.empty() && i.size() >= 2)
    if (auto b0 = dominator(i, [&](Vertex x, Vertex y) { return g.has_edge(y, x); }))
      out.push_back({MoveKind::dominated_in, lab[a], {lab[*b0]}, {}});
  if (i.size() == 1 && o.size() == 1 && i[0] != o[0])
    out.push_back({MoveKind::transit, lab[a], {lab[i[0]], lab[o[0]]}, classify_transit(g, a, i[0], o[0])});
  return out;
}

}  // namespace

std::vector<ReductionMove> find_moves(const DiGraph& g) {
  std::vector<ReductionMove> all;
  for (Vertex a : g.vertices())
    for (auto& m : moves_at(g, a)) all.push_back(std::move(m));
  return all;
}

DiGraph apply(const DiGraph& g, const ReductionMove& m) {
  const Vertex a = g.index_of(m.removed_vertex);
  if (a < 0) throw InputError("stale move: vertex " + m.removed_vertex + " is not in the graph");
  for (const auto& cand : moves_at(g, a))
    if (cand == m) return g.without_vertex(a);
  throw InputError("stale move: " + std::string(to_string(m.kind)) + " does not apply at " + m.removed_vertex);
}

ReductionResult reduce_fully(const DiGraph& g, bool char_zero, bool preserving_only) {
  ReductionResult r{g, {}};
  auto rank_of = [](MoveKind k) {
    switch (k) {
      case MoveKind::pendant_out:
      case MoveKind::pendant_in: return 0;
      case MoveKind::dominated_out:
      case MoveKind::dominated_in: return 1;
      case MoveKind::transit: return 2;
    }
    return 3;
  };
  for (;;) {
    std::optional<ReductionMove> best;
    int best_rank = 3;
    for (auto& m : find_moves(r.reduced)) {
      if (m.kind == MoveKind::transit) {
        if (!char_zero) continue;
        if (preserving_only && m.case_tag != TransitCase::edge_or_semi_edge) continue;
      }
      // find_moves is ordered by vertex, so the first of each class wins.
      if (rank_of(m.kind) < best_rank) {
        best_rank = rank_of(m.kind);
        best = std::move(m);
      }
    }
    if (!best) return r;
    r.reduced = r.reduced.without_vertex(r.reduced.index_of(best->removed_vertex));
    if (best->case_tag == TransitCase::same_component) ++r.ledger.delta_h1;
    if (best->case_tag == TransitCase::different_components) --r.ledger.delta_h0;
    r.ledger.moves.push_back(std::move(*best));
  }
}

}  // namespace pathhom
