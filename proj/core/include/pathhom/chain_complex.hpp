#pragma once

#include <cstddef>
#include <vector>

#include "pathhom/homology.hpp"
#include "pathhom/sparse.hpp"

namespace pathhom {

// 0 <- X_lo <- X_lo+1 <- ... <- X_hi over Q. Grade lo is 0, or -1 for
// augmented complexes; other offsets appear after shifting.
struct FiniteChainComplex {
  int min_grade = 0;
  std::vector<std::size_t> dims;         // dims[k] belongs to grade min_grade + k
  std::vector<SparseMatrix> boundaries;  // boundaries[k]: grade min_grade + k -> one below
  // The top grade was cut off while the underlying complex continued, so
  // its homology ignores the incoming boundary.
  bool truncated = false;

  int max_grade() const { return min_grade + static_cast<int>(dims.size()) - 1; }
  std::size_t dim(int n) const;
  const SparseMatrix& d(int n) const;
  // Shapes and D^2 = 0; throws InputError.
  void validate() const;
};

// Dims of homology, indexed like dims.
std::vector<std::size_t> complex_homology_dims(const FiniteChainComplex& c);

// C_r = sum_{p+q=r} A_p (x) B_q with d(u (x) v) = du (x) v + (-1)^p u (x) dv.
// Blocks ordered by p, entries within a block by (i, j) lexicographically.
FiniteChainComplex tensor_product(const FiniteChainComplex& a, const FiniteChainComplex& b);

// Same spaces and maps, grades raised by `by`.
FiniteChainComplex shifted(FiniteChainComplex c, int by);

struct AlternatingSums {
  long long chains = 0;
  long long homology = 0;
  bool agree = false;
  bool exact = false;  // all homology vanishes
};

AlternatingSums alternating_sum_check(const FiniteChainComplex& c);

// Invariant chain complex of p, grades up to max_dim (stopping early once
// the spaces vanish). Augmented exports start at grade -1.
FiniteChainComplex export_omega_complex(const PathComplex& p, int max_dim, Regularity r = Regularity::regular,
                                        bool augmented = false);

}  // namespace pathhom
