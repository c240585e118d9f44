#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pathhom/chain.hpp"

namespace pathhom {

// Natural order on vertex labels: comma separated fields compared one by
// one, integers numerically and before any non-integer field.
bool natural_less(std::string_view a, std::string_view b);

using Edge = std::pair<Vertex, Vertex>;

// Loopless digraph. Vertices are numbered by the natural order of their
// labels; all algorithms work on those numbers.
class DiGraph {
 public:
  DiGraph() = default;
  // Edges index into labels as passed. Duplicate edges are merged; loops,
  // duplicate labels and out of range endpoints throw InputError.
  DiGraph(std::vector<std::string> labels, const std::vector<Edge>& edges);
  // Vertices "0" .. "n-1".
  static DiGraph numbered(int n, const std::vector<Edge>& edges);

  std::size_t size() const { return labels_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Vertex>& out(Vertex v) const { return out_[v]; }
  const std::vector<Vertex>& in(Vertex v) const { return in_[v]; }
  bool has_edge(Vertex a, Vertex b) const;
  std::vector<Edge> edges() const;
  std::vector<Vertex> vertices() const;
  // -1 when absent.
  Vertex index_of(std::string_view label) const;

  DiGraph without_vertex(Vertex v) const;
  DiGraph relabeled(std::vector<std::string> labels) const;

  friend bool operator==(const DiGraph& a, const DiGraph& b) {
    return a.labels_ == b.labels_ && a.out_ == b.out_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> out_, in_;
  std::size_t num_edges_ = 0;
};

// A non-edge pair joined by at least one two-step walk tail -> k -> head.
struct SemiEdge {
  Vertex tail, head;
  std::vector<Vertex> bridges;
  friend bool operator==(const SemiEdge&, const SemiEdge&) = default;
};

// Pairs with tail == head are excluded.
std::vector<SemiEdge> semi_edges(const DiGraph& g);

// Triples a->b, b->c, a->c on distinct vertices.
std::size_t count_triangles(const DiGraph& g);
// a->b->c and a->b'->c on four distinct vertices, unordered in {b, b'}.
std::size_t count_squares(const DiGraph& g);

// Weak components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> weak_components(const DiGraph& g);

}  // namespace pathhom
