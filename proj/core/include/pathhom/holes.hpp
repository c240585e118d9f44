#pragma once

#include <vector>

#include "pathhom/chain.hpp"
#include "pathhom/path_complex.hpp"

namespace pathhom {

// A chain homologous to v0 with the smallest sum of absolute coefficients.
// v0 must be closed and invariant, otherwise InputError. Ties are broken
// by the simplex pivoting rule, so the result is one optimum among many.
Chain minimal_representative(const PathComplex& p, const Chain& v0, int n, BoundaryMode mode = {});

struct MinimizedGrade {
  int n = 0;
  std::vector<Chain> chains;
};

// One minimized chain per homology generator, grades 0..max_dim.
std::vector<MinimizedGrade> minimized_generators(const PathComplex& p, int max_dim, BoundaryMode mode = {});

}  // namespace pathhom
