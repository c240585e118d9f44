#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pathhom/chain.hpp"
#include "pathhom/digraph.hpp"

namespace pathhom {

// Paths of one grade stored back to back, in lexicographic order.
class PathList {
 public:
  explicit PathList(int grade = 0) : grade_(grade) {}

  int grade() const { return grade_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  std::span<const Vertex> operator[](std::size_t i) const {
    const std::size_t w = width();
    return {data_.data() + i * w, w};
  }
  Path path(std::size_t i) const {
    auto s = (*this)[i];
    return {s.begin(), s.end()};
  }
  void push_back(std::span<const Vertex> p);
  // Binary search; the list must be sorted.
  std::optional<std::size_t> find(std::span<const Vertex> p) const;
  std::vector<Path> to_vector() const;

 private:
  std::size_t width() const { return static_cast<std::size_t>(grade_ + 1); }
  int grade_;
  std::size_t count_ = 0;
  std::vector<Vertex> data_;
};

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Simplices index into labels as passed.
  SimplicialComplex(std::vector<std::string> labels, const std::vector<std::vector<Vertex>>& maximal);

  const std::vector<std::string>& labels() const { return labels_; }
  // Sorted vertex sets, after relabeling to natural order.
  const std::vector<std::vector<Vertex>>& maximal_simplices() const { return maximal_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> maximal_;
};

// Default cap on the number of allowed paths of one grade; the environment
// variable PATHHOM_MAX_PATHS overrides it.
std::size_t default_path_cap();

// A finite path complex. Every vertex is an allowed 0-path. Allowed paths
// of higher grade are produced lazily by an extension rule: given an
// allowed path, it lists the vertices k for which path + k is allowed.
// Copies share the enumeration cache.
class PathComplex {
 public:
  using Extender = std::function<void(std::span<const Vertex>, std::vector<Vertex>&)>;

  PathComplex(std::vector<std::string> labels, Extender extend, bool from_digraph = false);

  static PathComplex from_digraph(const DiGraph& g);
  static PathComplex from_simplicial(const SimplicialComplex& s);
  // Explicit list of allowed paths of grade >= 1. Truncations must be
  // present; violations throw InputError.
  static PathComplex from_paths(std::vector<std::string> labels, const std::vector<Path>& paths);

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t num_vertices() const { return labels_.size(); }
  std::vector<Vertex> vertices() const;
  bool is_digraph() const { return digraph_; }

  // Allowed paths of grade n >= -1. Throws ResourceError past the cap.
  const PathList& allowed(int n) const;
  // Vertices k with path + k allowed, for an allowed non-empty path.
  void extensions(std::span<const Vertex> path, std::vector<Vertex>& out) const { extend_(path, out); }
  bool is_allowed(std::span<const Vertex> p) const;

  std::size_t path_cap() const;
  void set_path_cap(std::size_t cap) const;

  // No allowed 1-path of the form ii.
  bool is_regular() const;

 private:
  struct Cache;
  std::vector<std::string> labels_;
  Extender extend_;
  bool digraph_;
  std::shared_ptr<Cache> cache_;
};

struct StructuralReport {
  bool regular = false;
  bool strictly_regular = false;
  bool perfect = false;  // checked up to the requested depth
  bool monotone = false;
  std::size_t triangles = 0;
  std::size_t squares = 0;
};

StructuralReport structural_report(const PathComplex& p, int depth);

// Vertex sets linked by allowed 1-paths in either direction.
std::vector<std::vector<Vertex>> connected_components(const PathComplex& p);

// Digraph on the allowed 1-paths (loops dropped).
DiGraph underlying_digraph(const PathComplex& p);

}  // namespace pathhom
