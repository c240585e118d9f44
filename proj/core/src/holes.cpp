#include "pathhom/holes.hpp"

#include "pathhom/errors.hpp"
#include "pathhom/homology.hpp"
#include "pathhom/l1.hpp"
#include "pathhom/linalg.hpp"

namespace pathhom {

Chain minimal_representative(const PathComplex& p, const Chain& v0, int n, BoundaryMode mode) {
  if (v0.grade() != n) throw InputError("chain grade does not match the requested grade");
  OmegaEngine eng(p, mode);
  const auto& basis = eng.omega(n);
  auto coords = eng.allowed_coordinates(n, v0);
  if (!coords) throw InputError("chain is not supported on allowed paths");
  if (!boundary(v0, mode).is_zero()) throw InputError("chain is not closed");

  const std::size_t rows = basis.allowed.size();
  EchelonBasis span(rows);
  std::vector<SparseVector> cols;
  for (const Chain& w : eng.omega(n + 1).chains()) {
    auto dw = eng.allowed_coordinates(n, boundary(w, mode));
    if (dw && span.insert(*dw)) cols.push_back(std::move(*dw));
  }
  if (cols.empty()) return v0;

  L1Problem problem{SparseMatrix::from_columns(rows, std::move(cols)), to_dense(*coords, rows)};
  L1Solution sol = minimize_l1(problem);
  Chain v(n);
  for (std::size_t i = 0; i < rows; ++i)
    if (sol.residual[i] != 0) v.add(basis.allowed[i], sol.residual[i]);
  return v;
}

std::vector<MinimizedGrade> minimized_generators(const PathComplex& p, int max_dim, BoundaryMode mode) {
  HomologySummary h = homology(p, max_dim, mode, false);
  std::vector<MinimizedGrade> out;
  for (const auto& g : h.grades) {
    if (g.n < 0) continue;
    MinimizedGrade m{g.n, {}};
    for (const Chain& gen : g.generators) m.chains.push_back(minimal_representative(p, gen, g.n, mode));
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace pathhom
