#pragma once

#include <cstddef>
#include <vector>

#include "pathhom/rational.hpp"

namespace pathhom {

struct Entry {
  int index;
  Rational value;
};

// Sorted by index, no zero values.
using SparseVector = std::vector<Entry>;

SparseVector to_sparse(const std::vector<Rational>& dense);
std::vector<Rational> to_dense(const SparseVector& v, std::size_t size);

// Column-major sparse matrix. Rows and columns are identified by position;
// callers keep the key lists (allowed paths, basis labels) alongside.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& rows);
  static SparseMatrix from_columns(std::size_t rows, std::vector<SparseVector> cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  const SparseVector& column(std::size_t j) const { return cols_[j]; }
  const std::vector<SparseVector>& columns() const { return cols_; }

  Rational at(std::size_t i, std::size_t j) const;
  // Overwrites entry (i, j); a zero value removes it.
  void set(std::size_t i, std::size_t j, const Rational& value);
  void append_column(SparseVector col);

  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  SparseMatrix transpose() const;
  std::vector<Rational> multiply(const std::vector<Rational>& x) const;
  SparseVector multiply(const SparseVector& x) const;
  SparseMatrix multiply(const SparseMatrix& rhs) const;
  std::vector<std::vector<Rational>> to_dense() const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> cols_;
};

bool operator==(const Entry& a, const Entry& b);

}  // namespace pathhom
