#include "pathhom/homology.hpp"

#include <unordered_map>

#include "pathhom/errors.hpp"
#include "pathhom/forms.hpp"

namespace pathhom {

namespace {

struct PathHash {
  std::size_t operator()(const Path& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Vertex v : p) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Boundary of the allowed n-paths, split into rows on allowed (n-1)-paths
// and rows on the remaining faces, numbered by first appearance.
struct FaceSplit {
  SparseMatrix allowed_rows;
  SparseMatrix other_rows;
};

FaceSplit split_faces(const PathComplex& p, int n, Regularity r) {
  const PathList& an = p.allowed(n);
  const PathList& below = p.allowed(n - 1);
  std::unordered_map<Path, int, PathHash> other;
  std::vector<SparseVector> acols, ocols;
  acols.reserve(an.size());
  ocols.reserve(an.size());
  Path face;
  for (std::size_t j = 0; j < an.size(); ++j) {
    auto path = an[j];
    if (r == Regularity::regular && !is_regular(path))
      throw InputError("regular mode on a complex with non-regular allowed paths");
    SparseVector a, o;
    for (std::size_t q = 0; q < path.size(); ++q) {
      face.assign(path.begin(), path.end());
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(q));
      if (r == Regularity::regular && !is_regular(face)) continue;
      Rational s = q % 2 == 0 ? 1 : -1;
      if (auto i = below.find(face)) {
        a.push_back({static_cast<int>(*i), s});
      } else {
        auto [it, fresh] = other.try_emplace(face, static_cast<int>(other.size()));
        o.push_back({it->second, s});
      }
    }
    acols.push_back(std::move(a));
    ocols.push_back(std::move(o));
  }
  FaceSplit fs;
  fs.allowed_rows = SparseMatrix::from_columns(below.size(), std::move(acols));
  fs.other_rows = SparseMatrix::from_columns(other.size(), std::move(ocols));
  return fs;
}

SparseMatrix stack(const SparseMatrix& top, const SparseMatrix& bottom) {
  std::vector<SparseVector> cols;
  const int off = static_cast<int>(top.rows());
  for (std::size_t j = 0; j < top.cols(); ++j) {
    SparseVector c = top.column(j);
    for (const auto& e : bottom.column(j)) c.push_back({e.index + off, e.value});
    cols.push_back(std::move(c));
  }
  return SparseMatrix::from_columns(top.rows() + bottom.rows(), std::move(cols));
}

Chain chain_on(const PathList& basis, const SparseVector& v) {
  Chain c(basis.grade());
  for (const auto& e : v) c.add(basis.path(static_cast<std::size_t>(e.index)), e.value);
  return c;
}

}  // namespace

Chain OmegaBasis::column_chain(std::size_t k) const {
  Chain c(grade);
  for (const auto& e : columns.column(k)) c.add(allowed[static_cast<std::size_t>(e.index)], e.value);
  return c;
}

std::vector<Chain> OmegaBasis::chains() const {
  std::vector<Chain> out;
  for (std::size_t k = 0; k < dim(); ++k) out.push_back(column_chain(k));
  return out;
}

struct OmegaEngine::Grade {
  const PathList* allowed = nullptr;
  Nullspace omega;
  SparseMatrix d_allowed;  // grade n allowed basis -> grade n-1 allowed basis
  std::vector<int> coord_of;
  std::optional<SparseMatrix> boundary;
  std::optional<std::size_t> rank;
  std::optional<OmegaBasis> basis;
};

OmegaEngine::OmegaEngine(PathComplex p, BoundaryMode mode) : p_(std::move(p)), mode_(mode) {
  if (mode_.regularity == Regularity::regular && !p_.is_regular())
    throw InputError("regular mode needs a regular path complex");
}

OmegaEngine::~OmegaEngine() = default;
OmegaEngine::OmegaEngine(OmegaEngine&&) noexcept = default;
OmegaEngine& OmegaEngine::operator=(OmegaEngine&&) noexcept = default;

OmegaEngine::Grade& OmegaEngine::grade(int n) {
  const bool augmented = mode_.augmentation == Augmentation::augmented;
  if (n < (augmented ? -1 : 0)) throw InputError("grade out of range for this boundary mode");
  while (static_cast<int>(grades_.size()) <= n + 1) grades_.push_back(nullptr);
  auto& slot = grades_[static_cast<std::size_t>(n + 1)];
  if (slot) return *slot;
  auto g = std::make_unique<Grade>();
  g->allowed = &p_.allowed(n);
  const std::size_t na = g->allowed->size();
  if (n <= 0) {
    g->omega = nullspace(SparseMatrix(0, na));
    std::size_t rows = (n == 0 && augmented) ? 1 : 0;
    std::vector<SparseVector> cols(na);
    if (rows)
      for (auto& c : cols) c.push_back({0, 1});
    g->d_allowed = SparseMatrix::from_columns(rows, std::move(cols));
  } else {
    FaceSplit fs = split_faces(p_, n, mode_.regularity);
    g->omega = nullspace(fs.other_rows);
    g->d_allowed = std::move(fs.allowed_rows);
  }
  g->coord_of.assign(na, -1);
  for (std::size_t k = 0; k < g->omega.free_columns.size(); ++k)
    g->coord_of[static_cast<std::size_t>(g->omega.free_columns[k])] = static_cast<int>(k);
  slot = std::move(g);
  return *slot;
}

const OmegaBasis& OmegaEngine::omega(int n) {
  Grade& g = grade(n);
  if (!g.basis) {
    OmegaBasis b;
    b.grade = n;
    b.mode = mode_;
    b.allowed = g.allowed->to_vector();
    b.columns = g.omega.basis;
    b.free_columns = g.omega.free_columns;
    g.basis = std::move(b);
  }
  return *g.basis;
}

const SparseMatrix& OmegaEngine::boundary(int n) {
  Grade& g = grade(n);
  if (g.boundary) return *g.boundary;
  const std::size_t dim = g.omega.basis.cols();
  const bool augmented = mode_.augmentation == Augmentation::augmented;
  if (n == -1 || (n == 0 && !augmented)) {
    g.boundary = SparseMatrix(0, dim);
    return *g.boundary;
  }
  Grade& below = grade(n - 1);
  std::vector<SparseVector> cols;
  cols.reserve(dim);
  for (const auto& v : g.omega.basis.columns()) {
    SparseVector image = g.d_allowed.multiply(v);
    SparseVector coords;
    for (auto& e : image) {
      int k = below.coord_of[static_cast<std::size_t>(e.index)];
      if (k >= 0) coords.push_back({k, std::move(e.value)});
    }
    cols.push_back(std::move(coords));
  }
  g.boundary = SparseMatrix::from_columns(below.omega.basis.cols(), std::move(cols));
  return *g.boundary;
}

std::size_t OmegaEngine::rank_boundary(int n) {
  Grade& g = grade(n);
  if (!g.rank) g.rank = rank(boundary(n));
  return *g.rank;
}

std::optional<SparseVector> OmegaEngine::allowed_coordinates(int n, const Chain& c) {
  if (c.is_zero()) return SparseVector{};
  if (c.grade() != n) throw InputError("chain grade differs from the requested grade");
  Grade& g = grade(n);
  SparseVector v;
  for (const auto& [path, coef] : c.terms()) {
    auto i = g.allowed->find(path);
    if (!i) return std::nullopt;
    v.push_back({static_cast<int>(*i), coef});
  }
  return v;
}

SparseVector OmegaEngine::coordinates(int n, const Chain& c) {
  auto a = allowed_coordinates(n, c);
  if (!a) throw InputError("chain is not allowed");
  Grade& g = grade(n);
  SparseVector out;
  for (auto& e : *a) {
    int k = g.coord_of[static_cast<std::size_t>(e.index)];
    if (k >= 0) out.push_back({k, e.value});
  }
  std::sort(out.begin(), out.end(), [](const Entry& x, const Entry& y) { return x.index < y.index; });
  return out;
}

Chain OmegaEngine::chain_from_coordinates(int n, const SparseVector& coords) {
  Grade& g = grade(n);
  SparseVector on_allowed = g.omega.basis.multiply(coords);
  return chain_on(*g.allowed, on_allowed);
}

OmegaBasis omega_basis(const PathComplex& p, int n, BoundaryMode mode) {
  OmegaEngine e(p, mode);
  return e.omega(n);
}

std::vector<std::size_t> HomologySummary::betti() const {
  std::vector<std::size_t> b;
  for (const auto& g : grades) b.push_back(g.dim_H);
  return b;
}

const GradeSummary& HomologySummary::at(int n) const {
  for (const auto& g : grades)
    if (g.n == n) return g;
  throw InputError("grade not in summary");
}

namespace {

Chain normalized(Chain c) {
  Rational lead = c.leading_coefficient();
  if (lead != 0) c *= 1 / lead;
  return c;
}

}  // namespace

HomologySummary homology(const PathComplex& p, int max_dim, BoundaryMode mode, bool reduced,
                         HomologyOptions options) {
  if (max_dim < 0) throw InputError("max_dim must be >= 0");
  const bool augmented = reduced || mode.augmentation == Augmentation::augmented;
  BoundaryMode m{mode.regularity, augmented ? Augmentation::augmented : Augmentation::truncated};
  OmegaEngine eng(p, m);

  HomologySummary s;
  s.mode = m;
  s.reduced = augmented;
  s.max_dim = max_dim;

  // Find where the invariant spaces stop, looking one grade past max_dim.
  int top = max_dim + 1;
  for (int n = 0; n <= max_dim + 1; ++n) {
    std::size_t d = eng.omega(n).dim();
    if (d == 0) {
      s.vanishes_from = n;
      top = n - 1;
      break;
    }
    if (options.early_termination && m.regularity == Regularity::regular && d <= 1 && n <= max_dim) {
      s.vanishes_from = n + 1;
      s.early_terminated = true;
      top = n;
      break;
    }
  }
  auto dim_omega = [&](int n) -> std::size_t { return n > top ? 0 : eng.omega(n).dim(); };
  auto rank_d = [&](int n) -> std::size_t { return n > top ? 0 : eng.rank_boundary(n); };

  for (int n = augmented ? -1 : 0; n <= max_dim; ++n) {
    GradeSummary g;
    g.n = n;
    g.dim_A = p.allowed(n).size();
    g.dim_Omega = dim_omega(n);
    g.rank_boundary = rank_d(n);
    g.dim_H = g.dim_Omega - g.rank_boundary - rank_d(n + 1);
    if (options.generators && g.dim_H > 0) {
      Nullspace cycles = nullspace(eng.boundary(n));
      EchelonBasis span(g.dim_Omega);
      if (n + 1 <= top)
        for (const auto& b : eng.boundary(n + 1).columns()) span.insert(b);
      for (const auto& z : cycles.basis.columns())
        if (span.insert(z)) g.generators.push_back(normalized(eng.chain_from_coordinates(n, z)));
    }
    s.euler += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(g.dim_H);
    s.grades.push_back(std::move(g));
  }
  s.euler_status = s.vanishes_from && *s.vanishes_from <= max_dim + 1 ? EulerStatus::exact
                                                                     : EulerStatus::truncated_at_max_dim;
  return s;
}

std::size_t homology_via_allowed(const PathComplex& p, int n, BoundaryMode mode) {
  if (n < -1) return 0;
  if (mode.regularity == Regularity::regular && !p.is_regular())
    throw InputError("regular mode needs a regular path complex");
  const bool augmented = mode.augmentation == Augmentation::augmented;
  if (n == -1 && !augmented) return 0;
  const std::size_t an = p.allowed(n).size();
  if (an == 0) return 0;

  auto full_rank = [&](int k) -> std::size_t {
    if (k == -1) return 0;
    if (k == 0) return augmented && !p.allowed(0).empty() ? 1 : 0;
    FaceSplit fs = split_faces(p, k, mode.regularity);
    return rank(stack(fs.allowed_rows, fs.other_rows));
  };
  std::size_t image_here = full_rank(n);
  std::size_t image_above_inside = 0;
  if (n == -1) {
    image_above_inside = full_rank(0);
  } else if (!p.allowed(n + 1).empty()) {
    FaceSplit fs = split_faces(p, n + 1, mode.regularity);
    image_above_inside = rank(stack(fs.allowed_rows, fs.other_rows)) - rank(fs.other_rows);
  }
  return an - image_here - image_above_inside;
}

std::vector<std::size_t> cohomology_dims_oracle(const PathComplex& p, int max_dim, Regularity r) {
  std::vector<std::size_t> dims;
  const auto vertices = p.vertices();
  for (int n = 0; n <= max_dim; ++n) {
    const PathList& an = p.allowed(n);
    if (n == 0) {
      dims.push_back(an.size());
      continue;
    }
    // Only faces of allowed n-paths can have differentials touching them.
    std::vector<Path> candidates;
    {
      std::unordered_map<Path, char, PathHash> seen;
      Path face;
      for (std::size_t j = 0; j < an.size(); ++j) {
        auto path = an[j];
        for (std::size_t q = 0; q < path.size(); ++q) {
          face.assign(path.begin(), path.end());
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(q));
          if (r == Regularity::regular && !is_regular(face)) continue;
          if (p.is_allowed(face)) continue;
          if (seen.emplace(face, 1).second) candidates.push_back(face);
        }
      }
    }
    EchelonBasis span(an.size());
    for (const auto& w : candidates) {
      Chain dw = exterior_differential(Chain::of(w), vertices, r);
      SparseVector proj;
      for (const auto& [z, c] : dw.terms())
        if (auto i = an.find(z)) proj.push_back({static_cast<int>(*i), c});
      std::sort(proj.begin(), proj.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
      span.insert(proj);
    }
    dims.push_back(an.size() - span.rank());
  }
  return dims;
}

std::size_t dim_omega2_formula(const DiGraph& g) {
  std::size_t p2 = 0;
  for (Vertex a = 0; a < static_cast<Vertex>(g.size()); ++a)
    for (Vertex b : g.out(a)) p2 += g.out(b).size();
  return p2 - semi_edges(g).size();
}

std::optional<NoSquaresResult> no_squares_shortcut(const DiGraph& g) {
  for (auto [a, b] : g.edges())
    if (g.has_edge(b, a)) return std::nullopt;
  if (count_squares(g) != 0) return std::nullopt;
  return NoSquaresResult{count_triangles(g)};
}

std::optional<int> early_termination_check(const std::vector<std::size_t>& dims_omega, Regularity r) {
  for (std::size_t n = 0; n < dims_omega.size(); ++n)
    if (dims_omega[n] == 0 || (r == Regularity::regular && dims_omega[n] <= 1)) return static_cast<int>(n);
  return std::nullopt;
}

bool h0_equals_components(const PathComplex& p) {
  auto s = homology(p, 0, {Regularity::nonregular, Augmentation::truncated}, false, {true, false});
  auto r = p.is_regular() ? homology(p, 0, {}, false, {true, false}) : s;
  const auto comps = connected_components(p).size();
  return s.at(0).dim_H == comps && r.at(0).dim_H == comps;
}

}  // namespace pathhom
