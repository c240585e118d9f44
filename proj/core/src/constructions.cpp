#include "pathhom/constructions.hpp"

#include <algorithm>
#include <map>

#include "pathhom/cross.hpp"
#include "pathhom/errors.hpp"
#include "pathhom/homology.hpp"

namespace pathhom {

namespace {

std::vector<Edge> shifted_edges(const DiGraph& g, int by) {
  std::vector<Edge> e;
  for (auto [a, b] : g.edges()) e.emplace_back(a + by, b + by);
  return e;
}

std::vector<std::string> pair_labels(const std::vector<std::string>& x, const std::vector<std::string>& y) {
  std::vector<std::string> out;
  for (const auto& a : x)
    for (const auto& b : y) out.push_back(a + "," + b);
  return out;
}

}  // namespace

DiGraph make_cycle(int n, const std::vector<int>& orientation) {
  if (n < 3) throw InputError("a cycle graph needs at least 3 vertices");
  if (orientation.size() != static_cast<std::size_t>(n))
    throw InputError("cycle orientation needs one entry per edge");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    if (orientation[i] == 1)
      e.emplace_back(i, j);
    else if (orientation[i] == -1)
      e.emplace_back(j, i);
    else
      throw InputError("cycle orientation entries must be +1 or -1");
  }
  return DiGraph::numbered(n, e);
}

DiGraph make_simplex(int n) {
  if (n < 0) throw InputError("simplex dimension must be >= 0");
  std::vector<Edge> e;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return DiGraph::numbered(n + 1, e);
}

DiGraph make_snake(int n) {
  if (n < 0) throw InputError("snake length must be >= 0");
  std::vector<Edge> e;
  for (int i = 0; i + 1 <= n; ++i) e.emplace_back(i, i + 1);
  for (int i = 0; i + 2 <= n; ++i) e.emplace_back(i, i + 2);
  return DiGraph::numbered(n + 1, e);
}

DiGraph make_cube(int n) {
  if (n < 0 || n > 16) throw InputError("cube dimension must be in 0..16");
  DiGraph g = DiGraph::numbered(1, {});
  for (int k = 0; k < n; ++k) g = cylinder(g);
  return g;
}

DiGraph make_sphere(int n, int base_len) {
  if (n < 1) throw InputError("sphere dimension must be >= 1");
  if (base_len < 3) throw InputError("sphere base cycle needs at least 3 vertices");
  DiGraph g = make_cycle(base_len, std::vector<int>(static_cast<std::size_t>(base_len), 1));
  for (int k = 1; k < n; ++k) g = suspension(g);
  return g;
}

DiGraph make_star(int n, StarDirection dir) {
  if (n < 0) throw InputError("star size must be >= 0");
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i) e.push_back(dir == StarDirection::outward ? Edge{0, i} : Edge{i, 0});
  return DiGraph::numbered(n + 1, e);
}

DiGraph join_graphs(const DiGraph& x, const DiGraph& y) {
  const int nx = static_cast<int>(x.size()), ny = static_cast<int>(y.size());
  auto e = x.edges();
  for (auto f : shifted_edges(y, nx)) e.push_back(f);
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < ny; ++b) e.emplace_back(a, nx + b);
  return DiGraph::numbered(nx + ny, e);
}

PathComplex join_complexes(const PathComplex& p, const PathComplex& q) {
  const int nx = static_cast<int>(p.num_vertices()), ny = static_cast<int>(q.num_vertices());
  std::vector<std::string> labels;
  for (int i = 0; i < nx + ny; ++i) labels.push_back(std::to_string(i));
  return PathComplex(labels, [p, q, nx, ny](std::span<const Vertex> w, std::vector<Vertex>& ext) {
    auto split = std::find_if(w.begin(), w.end(), [nx](Vertex v) { return v >= nx; }) - w.begin();
    if (split == static_cast<std::ptrdiff_t>(w.size())) {
      p.extensions(w, ext);
      for (int b = 0; b < ny; ++b) ext.push_back(nx + b);
      return;
    }
    Path v;
    for (auto it = w.begin() + split; it != w.end(); ++it) v.push_back(*it - nx);
    std::vector<Vertex> tail;
    q.extensions(v, tail);
    for (Vertex k : tail) ext.push_back(k + nx);
  });
}

DiGraph cone(const DiGraph& x) {
  const int n = static_cast<int>(x.size());
  auto e = x.edges();
  for (int b = 0; b < n; ++b) e.emplace_back(b, n);
  return DiGraph::numbered(n + 1, e);
}

DiGraph suspension(const DiGraph& x) {
  const int n = static_cast<int>(x.size());
  auto e = x.edges();
  for (int c = 0; c < n; ++c) {
    e.emplace_back(c, n);
    e.emplace_back(c, n + 1);
  }
  return DiGraph::numbered(n + 2, e);
}

DiGraph disjoint_union(const DiGraph& x, const DiGraph& y) {
  const int nx = static_cast<int>(x.size()), ny = static_cast<int>(y.size());
  auto e = x.edges();
  for (auto f : shifted_edges(y, nx)) e.push_back(f);
  return DiGraph::numbered(nx + ny, e);
}

DiGraph cartesian_product(const DiGraph& x, const DiGraph& y) {
  const int ny = static_cast<int>(y.size());
  ProductIndex idx{ny};
  std::vector<Edge> e;
  for (auto [a, b] : x.edges())
    for (int w = 0; w < ny; ++w) e.emplace_back(idx.pair(a, w), idx.pair(b, w));
  for (int v = 0; v < static_cast<int>(x.size()); ++v)
    for (auto [a, b] : y.edges()) e.emplace_back(idx.pair(v, a), idx.pair(v, b));
  // Pair labels are already in natural order, so positions stay put.
  return DiGraph(pair_labels(x.labels(), y.labels()), e);
}

PathComplex product_complexes(const PathComplex& p, const PathComplex& q) {
  const int ny = static_cast<int>(q.num_vertices());
  ProductIndex idx{ny};
  return PathComplex(pair_labels(p.labels(), q.labels()),
                     [p, q, idx](std::span<const Vertex> z, std::vector<Vertex>& ext) {
                       const Vertex x = idx.x(z.back()), y = idx.y(z.back());
                       std::vector<Vertex> step;
                       p.extensions(project_x(z, idx), step);
                       for (Vertex k : step)
                         if (k != x) ext.push_back(idx.pair(k, y));
                       step.clear();
                       q.extensions(project_y(z, idx), step);
                       for (Vertex k : step)
                         if (k != y) ext.push_back(idx.pair(x, k));
                     });
}

DiGraph cylinder(const DiGraph& x) {
  const int n = static_cast<int>(x.size());
  std::vector<Edge> e;
  for (auto [a, b] : x.edges()) {
    e.emplace_back(a, b);
    e.emplace_back(a + n, b + n);
  }
  for (int v = 0; v < n; ++v) e.emplace_back(v, v + n);
  return DiGraph::numbered(2 * n, e);
}

Chain lift(const Chain& v, int n) {
  Chain raw = cross_product(v, Chain::of({0, 1}), 2);
  Chain out(raw.grade());
  ProductIndex idx{2};
  for (const auto& [z, c] : raw.terms()) {
    Path w;
    for (Vertex u : z) w.push_back(idx.x(u) + idx.y(u) * n);
    out.add(w, c);
  }
  return out;
}

namespace {

// Sign of the permutation sorting seq (no repeats).
int sort_parity(std::vector<Vertex> seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = 0; j + 1 < seq.size() - i; ++j)
      if (seq[j] > seq[j + 1]) {
        std::swap(seq[j], seq[j + 1]);
        sign = -sign;
      }
  return sign;
}

}  // namespace

SurfacePath surface_path(const OrientedTriangulation& t) {
  if (t.facets.size() != t.signs.size()) throw InputError("one orientation sign per facet expected");
  if (t.facets.empty()) throw InputError("empty triangulation");
  std::vector<std::string> labels;
  for (const auto& f : t.facets) labels.insert(labels.end(), f.begin(), f.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  DiGraph order(labels, {});
  const std::size_t width = t.facets.front().size();
  if (width < 2) throw InputError("facets need at least two vertices");

  std::vector<Edge> edges;
  std::map<Path, int> face_count;
  Chain sigma(static_cast<int>(width) - 1);
  for (std::size_t k = 0; k < t.facets.size(); ++k) {
    const auto& f = t.facets[k];
    if (f.size() != width) throw InputError("facets of different dimensions");
    if (t.signs[k] != 1 && t.signs[k] != -1) throw InputError("facet signs must be +1 or -1");
    Path seq;
    for (const auto& l : f) seq.push_back(order.index_of(l));
    Path sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InputError("repeated vertex in a facet");
    sigma.add(sorted, t.signs[k] * sort_parity(seq));
    for (std::size_t i = 0; i < sorted.size(); ++i)
      for (std::size_t j = i + 1; j < sorted.size(); ++j) edges.emplace_back(sorted[i], sorted[j]);
    for (std::size_t q = 0; q < sorted.size(); ++q) {
      Path face = sorted;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(q));
      ++face_count[face];
    }
  }
  for (const auto& [face, count] : face_count)
    if (count != 2) throw InputError("a codimension 1 face is not shared by exactly two facets");
  return {DiGraph(order.labels(), edges), sigma};
}

std::optional<Chain> solid_path(const DiGraph& g, const Chain& sigma) {
  const int n = sigma.grade();
  OmegaEngine eng(PathComplex::from_digraph(g), {});
  if (!eng.allowed_coordinates(n, sigma)) return std::nullopt;
  if (!boundary(sigma).is_zero()) return std::nullopt;
  SparseVector target = eng.coordinates(n, sigma);
  const SparseMatrix& d = eng.boundary(n + 1);
  auto w = membership(d, to_dense(target, d.rows()));
  if (!w) return std::nullopt;
  return eng.chain_from_coordinates(n + 1, to_sparse(*w));
}

}  // namespace pathhom
