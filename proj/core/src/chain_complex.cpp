#include "pathhom/chain_complex.hpp"

#include "pathhom/errors.hpp"
#include "pathhom/linalg.hpp"

namespace pathhom {

std::size_t FiniteChainComplex::dim(int n) const {
  if (n < min_grade || n > max_grade()) return 0;
  return dims[static_cast<std::size_t>(n - min_grade)];
}

const SparseMatrix& FiniteChainComplex::d(int n) const {
  if (n < min_grade || n > max_grade()) throw InputError("no boundary at this grade");
  return boundaries[static_cast<std::size_t>(n - min_grade)];
}

void FiniteChainComplex::validate() const {
  if (boundaries.size() != dims.size()) throw InputError("one boundary per grade expected");
  for (int n = min_grade; n <= max_grade(); ++n) {
    const auto& m = d(n);
    if (m.cols() != dim(n) || m.rows() != dim(n - 1)) throw InputError("boundary shape mismatch");
    if (n > min_grade && !d(n - 1).multiply(m).is_zero()) throw InputError("boundary does not square to zero");
  }
}

std::vector<std::size_t> complex_homology_dims(const FiniteChainComplex& c) {
  c.validate();
  std::vector<std::size_t> ranks;
  for (int n = c.min_grade; n <= c.max_grade(); ++n) ranks.push_back(rank(c.d(n)));
  ranks.push_back(0);
  std::vector<std::size_t> h;
  for (std::size_t k = 0; k < c.dims.size(); ++k) h.push_back(c.dims[k] - ranks[k] - ranks[k + 1]);
  return h;
}

FiniteChainComplex tensor_product(const FiniteChainComplex& a, const FiniteChainComplex& b) {
  FiniteChainComplex c;
  c.min_grade = a.min_grade + b.min_grade;
  c.truncated = a.truncated || b.truncated;
  const int hi = a.max_grade() + b.max_grade();
  // offset[r][p]: position of block A_p (x) B_(r-p) inside C_r.
  auto block_offset = [&](int r, int p) {
    std::size_t off = 0;
    for (int s = a.min_grade; s < p; ++s) off += a.dim(s) * b.dim(r - s);
    return off;
  };
  for (int r = c.min_grade; r <= hi; ++r) {
    std::size_t total = 0;
    for (int p = a.min_grade; p <= a.max_grade(); ++p) total += a.dim(p) * b.dim(r - p);
    c.dims.push_back(total);
  }
  for (int r = c.min_grade; r <= hi; ++r) {
    std::vector<SparseVector> cols;
    for (int p = a.min_grade; p <= a.max_grade(); ++p) {
      const int q = r - p;
      const std::size_t da = a.dim(p), db = b.dim(q);
      if (!da || !db) continue;
      const Rational sign = (p % 2 == 0) ? 1 : -1;
      const std::size_t off_a = block_offset(r - 1, p - 1);  // A_(p-1) (x) B_q
      const std::size_t off_b = block_offset(r - 1, p);      // A_p (x) B_(q-1)
      const std::size_t db_below = b.dim(q - 1);
      for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < db; ++j) {
          SparseVector col;
          if (p > a.min_grade)
            for (const auto& e : a.d(p).column(i))
              col.push_back({static_cast<int>(off_a + static_cast<std::size_t>(e.index) * db + j), e.value});
          if (q > b.min_grade)
            for (const auto& e : b.d(q).column(j))
              col.push_back({static_cast<int>(off_b + i * db_below + static_cast<std::size_t>(e.index)),
                             sign * e.value});
          cols.push_back(std::move(col));
        }
      }
    }
    c.boundaries.push_back(SparseMatrix::from_columns(c.dim(r - 1), std::move(cols)));
  }
  return c;
}

FiniteChainComplex shifted(FiniteChainComplex c, int by) {
  c.min_grade += by;
  return c;
}

AlternatingSums alternating_sum_check(const FiniteChainComplex& c) {
  AlternatingSums s;
  auto h = complex_homology_dims(c);
  s.exact = true;
  for (std::size_t k = 0; k < c.dims.size(); ++k) {
    const int n = c.min_grade + static_cast<int>(k);
    const long long sgn = (n % 2 == 0) ? 1 : -1;
    s.chains += sgn * static_cast<long long>(c.dims[k]);
    s.homology += sgn * static_cast<long long>(h[k]);
    if (h[k]) s.exact = false;
  }
  s.agree = s.chains == s.homology;
  return s;
}

FiniteChainComplex export_omega_complex(const PathComplex& p, int max_dim, Regularity r, bool augmented) {
  if (max_dim < 0) throw InputError("max_dim must be >= 0");
  OmegaEngine eng(p, {r, augmented ? Augmentation::augmented : Augmentation::truncated});
  FiniteChainComplex c;
  c.min_grade = augmented ? -1 : 0;
  int top = max_dim;
  for (int n = 0; n <= max_dim; ++n)
    if (eng.omega(n).dim() == 0) {
      top = n - 1;
      break;
    }
  for (int n = c.min_grade; n <= top; ++n) {
    c.dims.push_back(eng.omega(n).dim());
    c.boundaries.push_back(eng.boundary(n));
  }
  c.truncated = top == max_dim && eng.omega(max_dim + 1).dim() != 0;
  return c;
}

}  // namespace pathhom
