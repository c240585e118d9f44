#include "pathhom/path_complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <set>

#include "pathhom/errors.hpp"

namespace pathhom {

void PathList::push_back(std::span<const Vertex> p) {
  if (p.size() != width()) throw InputError("path of the wrong grade");
  data_.insert(data_.end(), p.begin(), p.end());
  ++count_;
}

std::optional<std::size_t> PathList::find(std::span<const Vertex> p) const {
  if (p.size() != width()) return std::nullopt;
  std::size_t lo = 0, hi = count_;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto s = (*this)[mid];
    if (std::lexicographical_compare(s.begin(), s.end(), p.begin(), p.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < count_ && std::equal(p.begin(), p.end(), (*this)[lo].begin())) return lo;
  return std::nullopt;
}

std::vector<Path> PathList::to_vector() const {
  std::vector<Path> v;
  v.reserve(count_);
  for (std::size_t i = 0; i < count_; ++i) v.push_back(path(i));
  return v;
}

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels,
                                     const std::vector<std::vector<Vertex>>& maximal) {
  DiGraph order(labels, {});  // reuse the label sort and duplicate check
  labels_ = order.labels();
  std::vector<Vertex> rank(labels.size());
  for (std::size_t k = 0; k < labels.size(); ++k) rank[k] = order.index_of(labels[k]);
  for (const auto& s : maximal) {
    std::vector<Vertex> t;
    for (Vertex v : s) {
      if (v < 0 || static_cast<std::size_t>(v) >= labels.size())
        throw InputError("simplex vertex is not declared");
      t.push_back(rank[v]);
    }
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end()) throw InputError("repeated vertex in a simplex");
    if (!t.empty()) maximal_.push_back(std::move(t));
  }
}

std::size_t default_path_cap() {
  if (const char* env = std::getenv("PATHHOM_MAX_PATHS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 5'000'000;
}

struct PathComplex::Cache {
  std::mutex mu;
  std::vector<std::unique_ptr<PathList>> grades;  // index n + 1
  std::size_t cap = default_path_cap();
};

std::size_t PathComplex::path_cap() const { return cache_->cap; }
void PathComplex::set_path_cap(std::size_t cap) const { cache_->cap = cap; }

PathComplex::PathComplex(std::vector<std::string> labels, Extender extend, bool from_digraph)
    : labels_(std::move(labels)), extend_(std::move(extend)), digraph_(from_digraph),
      cache_(std::make_shared<Cache>()) {
  for (std::size_t k = 1; k < labels_.size(); ++k)
    if (!natural_less(labels_[k - 1], labels_[k])) throw InputError("path complex labels must be sorted and distinct");
}

std::vector<Vertex> PathComplex::vertices() const {
  std::vector<Vertex> v(labels_.size());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

const PathList& PathComplex::allowed(int n) const {
  if (n < -1) throw InputError("grade below -1");
  std::lock_guard lock(cache_->mu);
  auto& g = cache_->grades;
  if (g.empty()) {
    auto e = std::make_unique<PathList>(-1);
    e->push_back({});
    g.push_back(std::move(e));
    auto v = std::make_unique<PathList>(0);
    for (Vertex k = 0; k < static_cast<Vertex>(labels_.size()); ++k) v->push_back(std::span<const Vertex>(&k, 1));
    g.push_back(std::move(v));
  }
  std::vector<Vertex> ext;
  Path buf;
  while (static_cast<int>(g.size()) <= n + 1) {
    const PathList& prev = *g.back();
    auto next = std::make_unique<PathList>(prev.grade() + 1);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      auto p = prev[i];
      ext.clear();
      extend_(p, ext);
      std::sort(ext.begin(), ext.end());
      ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
      for (Vertex k : ext) {
        if (next->size() >= cache_->cap)
          throw ResourceError("more than " + std::to_string(cache_->cap) + " allowed paths of grade " +
                              std::to_string(next->grade()) + " (raise PATHHOM_MAX_PATHS to allow more)");
        buf.assign(p.begin(), p.end());
        buf.push_back(k);
        next->push_back(buf);
      }
    }
    g.push_back(std::move(next));
  }
  return *g[static_cast<std::size_t>(n + 1)];
}

bool PathComplex::is_allowed(std::span<const Vertex> p) const {
  return allowed(static_cast<int>(p.size()) - 1).find(p).has_value();
}

bool PathComplex::is_regular() const {
  const auto& p1 = allowed(1);
  for (std::size_t i = 0; i < p1.size(); ++i)
    if (p1[i][0] == p1[i][1]) return false;
  return true;
}

PathComplex PathComplex::from_digraph(const DiGraph& g) {
  auto out = std::make_shared<std::vector<std::vector<Vertex>>>();
  for (Vertex v = 0; v < static_cast<Vertex>(g.size()); ++v) out->push_back(g.out(v));
  return PathComplex(
      g.labels(),
      [out](std::span<const Vertex> p, std::vector<Vertex>& ext) {
        const auto& o = (*out)[p.back()];
        ext.insert(ext.end(), o.begin(), o.end());
      },
      true);
}

PathComplex PathComplex::from_simplicial(const SimplicialComplex& s) {
  auto simplices = std::make_shared<std::vector<std::vector<Vertex>>>(s.maximal_simplices());
  return PathComplex(s.labels(), [simplices](std::span<const Vertex> p, std::vector<Vertex>& ext) {
    for (const auto& sim : *simplices) {
      if (!std::includes(sim.begin(), sim.end(), p.begin(), p.end())) continue;
      for (Vertex k : sim)
        if (k > p.back()) ext.push_back(k);
    }
  });
}

PathComplex PathComplex::from_paths(std::vector<std::string> labels, const std::vector<Path>& paths) {
  auto allowed = std::make_shared<std::set<Path>>();
  const auto n = static_cast<Vertex>(labels.size());
  DiGraph order(labels, {});
  for (const auto& p : paths) {
    if (p.empty()) continue;
    Path q;
    for (Vertex v : p) {
      if (v < 0 || v >= n) throw InputError("path uses an undeclared vertex");
      q.push_back(order.index_of(labels[v]));
    }
    allowed->insert(std::move(q));
  }
  for (const auto& p : *allowed) {
    if (p.size() < 2) continue;
    Path head(p.begin(), p.end() - 1), tail(p.begin() + 1, p.end());
    if ((head.size() > 1 && !allowed->count(head)) || (tail.size() > 1 && !allowed->count(tail)))
      throw InputError("path list is not closed under truncation");
  }
  return PathComplex(order.labels(), [allowed, n](std::span<const Vertex> p, std::vector<Vertex>& ext) {
    Path q(p.begin(), p.end());
    q.push_back(0);
    for (Vertex k = 0; k < n; ++k) {
      q.back() = k;
      if (allowed->count(q)) ext.push_back(k);
    }
  });
}

namespace {

bool all_faces_allowed(const PathComplex& pc, std::span<const Vertex> p) {
  Path face;
  for (std::size_t q = 0; q < p.size(); ++q) {
    face.assign(p.begin(), p.end());
    face.erase(face.begin() + static_cast<std::ptrdiff_t>(q));
    if (!pc.is_allowed(face)) return false;
  }
  return true;
}

}  // namespace

StructuralReport structural_report(const PathComplex& p, int depth) {
  if (depth < 2) throw InputError("structural report needs depth >= 2");
  StructuralReport r;
  r.regular = p.is_regular();
  r.strictly_regular = r.regular;
  const auto& p2 = p.allowed(2);
  for (std::size_t i = 0; i < p2.size() && r.strictly_regular; ++i)
    if (p2[i][0] == p2[i][2]) r.strictly_regular = false;

  r.perfect = true;
  for (int n = 1; n <= depth && r.perfect; ++n) {
    const auto& pn = p.allowed(n);
    for (std::size_t i = 0; i < pn.size() && r.perfect; ++i) r.perfect = all_faces_allowed(p, pn[i]);
  }

  DiGraph g = underlying_digraph(p);
  // Kahn's algorithm; loops already rule out any potential.
  std::vector<std::size_t> indeg(g.size());
  for (auto [a, b] : g.edges()) ++indeg[b];
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < static_cast<Vertex>(g.size()); ++v)
    if (!indeg[v]) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    ++seen;
    for (Vertex w : g.out(v))
      if (--indeg[w] == 0) ready.push_back(w);
  }
  r.monotone = r.regular && seen == g.size();

  r.triangles = count_triangles(g);
  r.squares = count_squares(g);
  return r;
}

DiGraph underlying_digraph(const PathComplex& p) {
  std::vector<Edge> e;
  const auto& p1 = p.allowed(1);
  for (std::size_t i = 0; i < p1.size(); ++i)
    if (p1[i][0] != p1[i][1]) e.emplace_back(p1[i][0], p1[i][1]);
  return DiGraph::numbered(static_cast<int>(p.num_vertices()), e).relabeled(p.labels());
}

std::vector<std::vector<Vertex>> connected_components(const PathComplex& p) {
  return weak_components(underlying_digraph(p));
}

}  // namespace pathhom
