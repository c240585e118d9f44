#include "pathhom/cross.hpp"

#include "pathhom/errors.hpp"

namespace pathhom {

bool is_step_like(std::span<const Vertex> z, ProductIndex idx) {
  for (std::size_t k = 1; k < z.size(); ++k) {
    bool same_x = idx.x(z[k - 1]) == idx.x(z[k]);
    bool same_y = idx.y(z[k - 1]) == idx.y(z[k]);
    if (same_x == same_y) return false;
  }
  return true;
}

namespace {

Path project(std::span<const Vertex> z, bool want_x, ProductIndex idx) {
  Path out;
  for (Vertex v : z) {
    Vertex c = want_x ? idx.x(v) : idx.y(v);
    if (out.empty() || out.back() != c) out.push_back(c);
  }
  return out;
}

}  // namespace

Path project_x(std::span<const Vertex> z, ProductIndex idx) { return project(z, true, idx); }
Path project_y(std::span<const Vertex> z, ProductIndex idx) { return project(z, false, idx); }

int elevation(std::span<const Vertex> z, ProductIndex idx) {
  if (!is_step_like(z, idx)) throw InputError("elevation of a path that is not step-like");
  int verticals = 0, cells = 0;
  for (std::size_t k = 1; k < z.size(); ++k) {
    if (idx.x(z[k - 1]) == idx.x(z[k]))
      ++verticals;
    else
      cells += verticals;
  }
  return cells;
}

Chain cross_product(const Chain& u, const Chain& v, int ny) {
  if (u.grade() < 0 || v.grade() < 0) throw InputError("cross product needs grades >= 0");
  const int p = u.grade(), q = v.grade();
  ProductIndex idx{ny};
  Chain out(p + q);
  Path z(static_cast<std::size_t>(p + q + 1));
  for (const auto& [x, a] : u.terms()) {
    if (!is_regular(x)) throw InputError("cross product of a non-regular path");
    for (const auto& [y, b] : v.terms()) {
      if (!is_regular(y)) throw InputError("cross product of a non-regular path");
      for (Vertex w : y)
        if (w < 0 || w >= ny) throw InputError("vertex outside the second factor");
      Rational ab = a * b;
      // Step words with p zeros (horizontal) and q ones (vertical), in
      // lexicographic order; word bit k is step k.
      std::vector<int> word(static_cast<std::size_t>(p + q));
      std::fill(word.begin() + p, word.end(), 1);
      do {
        int i = 0, j = 0, verticals = 0, cells = 0;
        z[0] = idx.pair(x[0], y[0]);
        for (std::size_t k = 0; k < word.size(); ++k) {
          if (word[k]) {
            ++j;
            ++verticals;
          } else {
            ++i;
            cells += verticals;
          }
          z[k + 1] = idx.pair(x[i], y[j]);
        }
        out.add(z, cells % 2 == 0 ? ab : Rational(-ab));
      } while (std::next_permutation(word.begin(), word.end()));
    }
  }
  return out;
}

}  // namespace pathhom
