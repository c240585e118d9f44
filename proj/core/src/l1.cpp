#include "pathhom/l1.hpp"

#include <cstddef>
#include <optional>

#include "pathhom/errors.hpp"

namespace pathhom {

namespace {

// Dense tableau for  min c.x  s.t.  T x = rhs, x >= 0, starting from a
// feasible basis of unit columns.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<int> basis, std::size_t nvars)
      : t_(std::move(rows)), basis_(std::move(basis)), banned_(nvars, false), n_(nvars) {}

  enum class Outcome { optimal, unbounded };

  Outcome optimize(const std::vector<Rational>& cost) {
    d_.assign(n_, 0);
    for (std::size_t j = 0; j < n_; ++j) {
      d_[j] = cost[j];
      for (std::size_t r = 0; r < t_.size(); ++r)
        if (cost[basis_[r]] != 0 && t_[r][j] != 0) d_[j] -= cost[basis_[r]] * t_[r][j];
    }
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < n_ && !enter; ++j)
        if (!banned_[j] && d_[j] < 0) enter = j;
      if (!enter) return Outcome::optimal;
      std::size_t j = *enter;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < t_.size(); ++r) {
        if (t_[r][j] <= 0) continue;
        Rational ratio = t_[r][n_] / t_[r][j];
        if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return Outcome::unbounded;
      pivot(*leave, j);
    }
  }

  // Keeps later phases on the optimal face of the current objective.
  void freeze_positive_reduced_costs() {
    for (std::size_t j = 0; j < n_; ++j)
      if (d_[j] > 0) banned_[j] = true;
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(n_);
    for (std::size_t r = 0; r < t_.size(); ++r) x[basis_[r]] = t_[r][n_];
    return x;
  }

 private:
  void pivot(std::size_t r, std::size_t j) {
    Rational inv = 1 / t_[r][j];
    for (auto& a : t_[r])
      if (a != 0) a *= inv;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || t_[i][j] == 0) continue;
      Rational f = t_[i][j];
      for (std::size_t k = 0; k <= n_; ++k)
        if (t_[r][k] != 0) t_[i][k] -= f * t_[r][k];
    }
    if (d_[j] != 0) {
      Rational f = d_[j];
      for (std::size_t k = 0; k < n_; ++k)
        if (t_[r][k] != 0) d_[k] -= f * t_[r][k];
    }
    basis_[r] = static_cast<int>(j);
  }

  std::vector<std::vector<Rational>> t_;
  std::vector<int> basis_;
  std::vector<bool> banned_;
  std::vector<Rational> d_;
  std::size_t n_;
};

}  // namespace

L1Solution minimize_l1(const L1Problem& problem) {
  const SparseMatrix& a = problem.constraint_matrix;
  if (problem.offset.size() != a.rows()) throw InputError("l1 problem: offset length differs from row count");
  const std::size_t k = a.cols();

  auto dense = a.to_dense();
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    bool empty = problem.offset[i] == 0;
    for (std::size_t j = 0; empty && j < k; ++j) empty = dense[i][j] == 0;
    if (!empty) kept.push_back(i);
  }
  const std::size_t m = kept.size();
  // Variables: w+_j = 2j, w-_j = 2j+1, then p_i = 2k+2i, n_i = 2k+2i+1 with
  // residual_i = p_i - n_i.
  const std::size_t nvars = 2 * k + 2 * m;
  std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(nvars + 1));
  std::vector<int> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    std::size_t i = kept[r];
    bool flip = problem.offset[i] < 0;
    Rational s = flip ? -1 : 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (dense[i][j] == 0) continue;
      rows[r][2 * j] = s * dense[i][j];
      rows[r][2 * j + 1] = -s * dense[i][j];
    }
    rows[r][2 * k + 2 * r] = s;
    rows[r][2 * k + 2 * r + 1] = -s;
    rows[r][nvars] = s * problem.offset[i];
    basis[r] = static_cast<int>(2 * k + 2 * r + (flip ? 1 : 0));
  }

  Tableau tab(std::move(rows), std::move(basis), nvars);
  std::vector<Rational> cost(nvars);
  for (std::size_t v = 2 * k; v < nvars; ++v) cost[v] = 1;
  tab.optimize(cost);  // bounded below by zero

  for (std::size_t j = 0; j < k; ++j) {
    tab.freeze_positive_reduced_costs();
    std::fill(cost.begin(), cost.end(), Rational(0));
    cost[2 * j] = 1;
    cost[2 * j + 1] = -1;
    if (tab.optimize(cost) == Tableau::Outcome::unbounded) break;
  }

  auto x = tab.solution();
  L1Solution sol;
  sol.w.resize(k);
  for (std::size_t j = 0; j < k; ++j) sol.w[j] = x[2 * j] - x[2 * j + 1];
  sol.residual = problem.offset;
  auto aw = a.multiply(sol.w);
  sol.objective = 0;
  for (std::size_t i = 0; i < sol.residual.size(); ++i) {
    sol.residual[i] -= aw[i];
    sol.objective += abs(sol.residual[i]);
  }
  return sol;
}

}  // namespace pathhom
