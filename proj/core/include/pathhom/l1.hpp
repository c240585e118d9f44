#pragma once

#include <vector>

#include "pathhom/sparse.hpp"

namespace pathhom {

// minimize sum_i |offset_i - (constraint_matrix * w)_i| over rational w.
struct L1Problem {
  SparseMatrix constraint_matrix;
  std::vector<Rational> offset;
};

struct L1Solution {
  std::vector<Rational> w;
  std::vector<Rational> residual;
  Rational objective;
};

// Exact simplex with Bland's rule. Among optimal w the result is the
// lexicographically smallest one, as long as that is bounded; when some
// coordinate is unbounded below on the optimal face, refinement stops at
// that coordinate and the remaining ones are whatever the simplex reached.
L1Solution minimize_l1(const L1Problem& problem);

}  // namespace pathhom
