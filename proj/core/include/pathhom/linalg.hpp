#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pathhom/sparse.hpp"

namespace pathhom {

// Incremental column echelon form over Q. Vectors are inserted one at a
// time; each independent vector becomes a pivot keyed by its leading
// (smallest) row after reduction. With tracking on, every pivot remembers
// how it was built from the inserted vectors, which gives kernel relations
// and solutions of linear systems.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dimension, bool track = false);

  // Returns true if v was independent and is now stored. If v is dependent
  // and relation is non-null (requires tracking), *relation receives a
  // combination of inserted vectors equal to zero, with coefficient 1 on v.
  bool insert(const SparseVector& v, SparseVector* relation = nullptr);

  bool contains(const SparseVector& v) const;

  // Coefficients over the inserted vectors (by insertion order) summing to v.
  std::optional<SparseVector> express(const SparseVector& v) const;

  std::size_t rank() const { return pivots_.size(); }
  std::size_t inserted() const { return inserted_; }
  std::size_t dimension() const { return pivot_of_row_.size(); }

 private:
  struct Pivot {
    SparseVector vec;    // leading entry normalized to 1
    SparseVector combo;  // in terms of inserted vectors
  };
  std::vector<int> pivot_of_row_;
  std::vector<Pivot> pivots_;
  bool track_;
  std::size_t inserted_ = 0;
};

std::size_t rank(const SparseMatrix& m);

// Basis of {x : m x = 0}. Column k has coefficient 1 on its own free column
// free_columns[k], zero on every other free column, and support only on
// earlier columns otherwise.
struct Nullspace {
  SparseMatrix basis;
  std::vector<int> free_columns;
};

Nullspace nullspace(const SparseMatrix& m);
SparseMatrix nullspace_basis(const SparseMatrix& m);

// Some w with m w = b, or nullopt. Throws InputError if b has the wrong length.
std::optional<std::vector<Rational>> membership(const SparseMatrix& m, const std::vector<Rational>& b);

}  // namespace pathhom
