#include "pathhom/linalg.hpp"

#include <map>

#include "pathhom/errors.hpp"

namespace pathhom {

namespace {

using Accumulator = std::map<int, Rational>;

void axpy(Accumulator& acc, const Rational& c, const SparseVector& v) {
  for (const auto& e : v) {
    auto [it, fresh] = acc.try_emplace(e.index);
    it->second -= c * e.value;
    if (it->second == 0) acc.erase(it);
  }
}

SparseVector drain(Accumulator& acc) {
  SparseVector out;
  out.reserve(acc.size());
  for (auto& [i, v] : acc) out.push_back({i, std::move(v)});
  return out;
}

}  // namespace

EchelonBasis::EchelonBasis(std::size_t dimension, bool track)
    : pivot_of_row_(dimension, -1), track_(track) {}

bool EchelonBasis::insert(const SparseVector& v, SparseVector* relation) {
  if (relation && !track_) throw InputError("kernel relations need a tracking basis");
  Accumulator acc;
  for (const auto& e : v) {
    if (e.index < 0 || static_cast<std::size_t>(e.index) >= pivot_of_row_.size())
      throw InputError("vector entry out of range");
    acc[e.index] += e.value;
  }
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
  Accumulator combo;
  if (track_) combo[static_cast<int>(inserted_)] = 1;
  ++inserted_;

  while (!acc.empty()) {
    auto lead = acc.begin();
    int p = pivot_of_row_[lead->first];
    if (p < 0) {
      Rational scale = 1 / lead->second;
      Pivot piv;
      piv.vec = drain(acc);
      for (auto& e : piv.vec) e.value *= scale;
      if (track_) {
        piv.combo = drain(combo);
        for (auto& e : piv.combo) e.value *= scale;
      }
      pivot_of_row_[piv.vec.front().index] = static_cast<int>(pivots_.size());
      pivots_.push_back(std::move(piv));
      return true;
    }
    Rational c = lead->second;
    const Pivot& piv = pivots_[p];
    acc.erase(lead);
    for (std::size_t k = 1; k < piv.vec.size(); ++k) {
      auto [it, fresh] = acc.try_emplace(piv.vec[k].index);
      it->second -= c * piv.vec[k].value;
      if (it->second == 0) acc.erase(it);
    }
    if (track_) axpy(combo, c, piv.combo);
  }
  if (relation) *relation = drain(combo);
  return false;
}

bool EchelonBasis::contains(const SparseVector& v) const {
  Accumulator acc;
  for (const auto& e : v) acc[e.index] += e.value;
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
  while (!acc.empty()) {
    auto lead = acc.begin();
    int p = pivot_of_row_.at(lead->first);
    if (p < 0) return false;
    Rational c = lead->second;
    axpy(acc, c, pivots_[p].vec);
  }
  return true;
}

std::optional<SparseVector> EchelonBasis::express(const SparseVector& v) const {
  if (!track_) throw InputError("express needs a tracking basis");
  Accumulator acc, combo;
  for (const auto& e : v) acc[e.index] += e.value;
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
  while (!acc.empty()) {
    auto lead = acc.begin();
    int p = pivot_of_row_.at(lead->first);
    if (p < 0) return std::nullopt;
    Rational c = lead->second;
    axpy(acc, c, pivots_[p].vec);
    axpy(combo, -c, pivots_[p].combo);
  }
  return drain(combo);
}

std::size_t rank(const SparseMatrix& m) {
  EchelonBasis eb(m.rows());
  for (const auto& c : m.columns()) eb.insert(c);
  return eb.rank();
}

Nullspace nullspace(const SparseMatrix& m) {
  EchelonBasis eb(m.rows(), true);
  Nullspace ns;
  ns.basis = SparseMatrix(m.cols(), 0);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    SparseVector rel;
    if (!eb.insert(m.column(j), &rel)) {
      ns.basis.append_column(std::move(rel));
      ns.free_columns.push_back(static_cast<int>(j));
    }
  }
  return ns;
}

SparseMatrix nullspace_basis(const SparseMatrix& m) { return nullspace(m).basis; }

std::optional<std::vector<Rational>> membership(const SparseMatrix& m, const std::vector<Rational>& b) {
  if (b.size() != m.rows()) throw InputError("membership: right-hand side has wrong length");
  EchelonBasis eb(m.rows(), true);
  for (const auto& c : m.columns()) eb.insert(c);
  auto w = eb.express(to_sparse(b));
  if (!w) return std::nullopt;
  return to_dense(*w, m.cols());
}

}  // namespace pathhom
