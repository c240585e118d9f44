#include "pathhom/sparse.hpp"

#include <algorithm>
#include <map>

#include "pathhom/errors.hpp"

namespace pathhom {

SparseVector to_sparse(const std::vector<Rational>& dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) v.push_back({static_cast<int>(i), dense[i]});
  return v;
}

std::vector<Rational> to_dense(const SparseVector& v, std::size_t size) {
  std::vector<Rational> out(size);
  for (const auto& e : v) out.at(static_cast<std::size_t>(e.index)) = e.value;
  return out;
}

bool operator==(const Entry& a, const Entry& b) {
  return a.index == b.index && a.value == b.value;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  SparseMatrix m(rows.size(), ncols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ncols) throw InputError("ragged dense matrix");
    for (std::size_t j = 0; j < ncols; ++j)
      if (rows[i][j] != 0) m.cols_[j].push_back({static_cast<int>(i), rows[i][j]});
  }
  return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, std::vector<SparseVector> cols) {
  SparseMatrix m;
  m.rows_ = rows;
  for (auto& c : cols) m.append_column(std::move(c));
  return m;
}

Rational SparseMatrix::at(std::size_t i, std::size_t j) const {
  const auto& c = cols_.at(j);
  auto it = std::lower_bound(c.begin(), c.end(), static_cast<int>(i),
                             [](const Entry& e, int r) { return e.index < r; });
  if (it != c.end() && it->index == static_cast<int>(i)) return it->value;
  return 0;
}

void SparseMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
  if (i >= rows_ || j >= cols_.size()) throw InputError("matrix index out of range");
  auto& c = cols_[j];
  auto it = std::lower_bound(c.begin(), c.end(), static_cast<int>(i),
                             [](const Entry& e, int r) { return e.index < r; });
  bool present = it != c.end() && it->index == static_cast<int>(i);
  if (value == 0) {
    if (present) c.erase(it);
  } else if (present) {
    it->value = value;
  } else {
    c.insert(it, Entry{static_cast<int>(i), value});
  }
}

void SparseMatrix::append_column(SparseVector col) {
  std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
  SparseVector clean;
  clean.reserve(col.size());
  for (auto& e : col) {
    if (e.index < 0 || static_cast<std::size_t>(e.index) >= rows_)
      throw InputError("column entry out of range");
    if (!clean.empty() && clean.back().index == e.index) {
      clean.back().value += e.value;
      if (clean.back().value == 0) clean.pop_back();
    } else if (e.value != 0) {
      clean.push_back(std::move(e));
    }
  }
  cols_.push_back(std::move(clean));
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_.size(), rows_);
  for (std::size_t j = 0; j < cols_.size(); ++j)
    for (const auto& e : cols_[j]) t.cols_[e.index].push_back({static_cast<int>(j), e.value});
  return t;
}

std::vector<Rational> SparseMatrix::multiply(const std::vector<Rational>& x) const {
  if (x.size() != cols_.size()) throw InputError("dimension mismatch in matrix-vector product");
  std::vector<Rational> y(rows_);
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    if (x[j] == 0) continue;
    for (const auto& e : cols_[j]) y[e.index] += e.value * x[j];
  }
  return y;
}

SparseVector SparseMatrix::multiply(const SparseVector& x) const {
  std::map<int, Rational> acc;
  for (const auto& xe : x) {
    if (xe.index < 0 || static_cast<std::size_t>(xe.index) >= cols_.size())
      throw InputError("dimension mismatch in matrix-vector product");
    for (const auto& e : cols_[xe.index]) acc[e.index] += e.value * xe.value;
  }
  SparseVector y;
  for (auto& [i, v] : acc)
    if (v != 0) y.push_back({i, std::move(v)});
  return y;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
  if (rhs.rows_ != cols_.size()) throw InputError("dimension mismatch in matrix product");
  SparseMatrix out(rows_, 0);
  for (const auto& c : rhs.cols_) out.cols_.push_back(multiply(c));
  return out;
}

std::vector<std::vector<Rational>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Rational>> d(rows_, std::vector<Rational>(cols_.size()));
  for (std::size_t j = 0; j < cols_.size(); ++j)
    for (const auto& e : cols_[j]) d[e.index][j] = e.value;
  return d;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_;
}

}  // namespace pathhom
