#include "pathhom/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>

#include "pathhom/errors.hpp"

namespace pathhom {

namespace {

std::optional<long long> as_integer(std::string_view s) {
  long long v = 0;
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  while (true) {
    if (a.empty() || b.empty()) return a.empty() && !b.empty();
    auto ca = a.find(','), cb = b.find(',');
    std::string_view fa = a.substr(0, ca), fb = b.substr(0, cb);
    auto ia = as_integer(fa), ib = as_integer(fb);
    if (ia && ib) {
      if (*ia != *ib) return *ia < *ib;
    } else if (ia || ib) {
      return ia.has_value();
    } else if (fa != fb) {
      return fa < fb;
    }
    bool ea = ca == std::string_view::npos, eb = cb == std::string_view::npos;
    if (ea || eb) return ea && !eb;
    a = a.substr(ca + 1);
    b = b.substr(cb + 1);
  }
}

DiGraph::DiGraph(std::vector<std::string> labels, const std::vector<Edge>& edges) {
  const std::size_t n = labels.size();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return natural_less(labels[a], labels[b]); });
  std::vector<Vertex> rank(n);
  labels_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    rank[order[k]] = static_cast<Vertex>(k);
    labels_[k] = std::move(labels[order[k]]);
    if (labels_[k].empty()) throw InputError("empty vertex label");
    if (k && labels_[k] == labels_[k - 1]) throw InputError("duplicate vertex '" + labels_[k] + "'");
  }
  out_.assign(n, {});
  in_.assign(n, {});
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
      throw InputError("edge endpoint is not a declared vertex");
    if (a == b) throw InputError("loop at vertex '" + labels_[rank[a]] + "'");
    out_[rank[a]].push_back(rank[b]);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& o = out_[v];
    std::sort(o.begin(), o.end());
    o.erase(std::unique(o.begin(), o.end()), o.end());
    num_edges_ += o.size();
    for (Vertex w : o) in_[w].push_back(static_cast<Vertex>(v));
  }
}

DiGraph DiGraph::numbered(int n, const std::vector<Edge>& edges) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return DiGraph(std::move(labels), edges);
}

bool DiGraph::has_edge(Vertex a, Vertex b) const {
  const auto& o = out_[a];
  return std::binary_search(o.begin(), o.end(), b);
}

std::vector<Edge> DiGraph::edges() const {
  std::vector<Edge> e;
  for (std::size_t v = 0; v < out_.size(); ++v)
    for (Vertex w : out_[v]) e.emplace_back(static_cast<Vertex>(v), w);
  return e;
}

std::vector<Vertex> DiGraph::vertices() const {
  std::vector<Vertex> v(size());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

Vertex DiGraph::index_of(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label,
                             [](const std::string& a, std::string_view b) { return natural_less(a, b); });
  if (it == labels_.end() || *it != label) return -1;
  return static_cast<Vertex>(it - labels_.begin());
}

DiGraph DiGraph::without_vertex(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= size()) throw InputError("no such vertex");
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < size(); ++k)
    if (static_cast<Vertex>(k) != v) labels.push_back(labels_[k]);
  auto shift = [v](Vertex w) { return w > v ? w - 1 : w; };
  std::vector<Edge> e;
  for (auto [a, b] : edges())
    if (a != v && b != v) e.emplace_back(shift(a), shift(b));
  return DiGraph(std::move(labels), e);
}

DiGraph DiGraph::relabeled(std::vector<std::string> labels) const {
  if (labels.size() != size()) throw InputError("relabel: wrong number of labels");
  return DiGraph(std::move(labels), edges());
}

std::vector<SemiEdge> semi_edges(const DiGraph& g) {
  std::vector<SemiEdge> out;
  const auto n = static_cast<Vertex>(g.size());
  std::vector<std::vector<Vertex>> bridges(g.size());
  for (Vertex i = 0; i < n; ++i) {
    for (auto& b : bridges) b.clear();
    for (Vertex k : g.out(i))
      for (Vertex j : g.out(k))
        if (j != i && !g.has_edge(i, j)) bridges[j].push_back(k);
    for (Vertex j = 0; j < n; ++j)
      if (!bridges[j].empty()) out.push_back({i, j, bridges[j]});
  }
  return out;
}

std::size_t count_triangles(const DiGraph& g) {
  std::size_t t = 0;
  for (Vertex a = 0; a < static_cast<Vertex>(g.size()); ++a)
    for (Vertex b : g.out(a))
      for (Vertex c : g.out(b))
        if (c != a && g.has_edge(a, c)) ++t;
  return t;
}

std::size_t count_squares(const DiGraph& g) {
  std::size_t s = 0;
  const auto n = static_cast<Vertex>(g.size());
  std::vector<std::size_t> middles(g.size());
  for (Vertex a = 0; a < n; ++a) {
    std::fill(middles.begin(), middles.end(), 0);
    for (Vertex b : g.out(a))
      for (Vertex c : g.out(b))
        if (c != a) ++middles[c];
    for (auto m : middles)
      if (m > 1) s += m * (m - 1) / 2;
  }
  return s;
}

std::vector<std::vector<Vertex>> weak_components(const DiGraph& g) {
  std::vector<int> comp(g.size(), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < static_cast<Vertex>(g.size()); ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (const auto* nbrs : {&g.out(v), &g.in(v)})
        for (Vertex w : *nbrs)
          if (comp[w] < 0) {
            comp[w] = id;
            stack.push_back(w);
          }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

}  // namespace pathhom
