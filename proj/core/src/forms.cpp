#include "pathhom/forms.hpp"

#include "pathhom/errors.hpp"

namespace pathhom {

Rational pairing(const Chain& omega, const Chain& v) {
  if (omega.grade() != v.grade()) throw InputError("pairing of a form and a chain of different grades");
  const auto& small = omega.size() <= v.size() ? omega : v;
  const auto& big = omega.size() <= v.size() ? v : omega;
  Rational s = 0;
  for (const auto& [p, c] : small.terms()) {
    auto it = big.terms().find(p);
    if (it != big.terms().end()) s += c * it->second;
  }
  return s;
}

Chain exterior_differential(const Chain& omega, std::span<const Vertex> vertex_set, Regularity r) {
  Chain out(omega.grade() + 1);
  Path z;
  for (const auto& [w, c] : omega.terms()) {
    if (r == Regularity::regular && !is_regular(w)) continue;
    for (std::size_t q = 0; q <= w.size(); ++q) {
      Rational coef = q % 2 == 0 ? c : Rational(-c);
      for (Vertex k : vertex_set) {
        z.assign(w.begin(), w.end());
        z.insert(z.begin() + static_cast<std::ptrdiff_t>(q), k);
        if (r == Regularity::regular && !is_regular(z)) continue;
        out.add(z, coef);
      }
    }
  }
  return out;
}

Chain concatenate_forms(const Chain& phi, const Chain& psi) {
  if (phi.grade() < 0 || psi.grade() < 0) throw InputError("concatenation needs forms of grade >= 0");
  Chain out(phi.grade() + psi.grade());
  Path z;
  for (const auto& [x, a] : phi.terms()) {
    for (const auto& [y, b] : psi.terms()) {
      if (x.back() != y.front()) continue;
      z.assign(x.begin(), x.end());
      z.insert(z.end(), y.begin() + 1, y.end());
      out.add(z, a * b);
    }
  }
  return out;
}

Chain unit_form(std::span<const Vertex> vertex_set) {
  Chain one(0);
  for (Vertex k : vertex_set) one.add({k}, 1);
  return one;
}

}  // namespace pathhom
