#pragma once

#include <span>

#include "pathhom/chain.hpp"

namespace pathhom {

// Vertices of X x Y are numbered x * ny + y, which is lexicographic order
// on pairs.
struct ProductIndex {
  int ny;
  Vertex pair(Vertex x, Vertex y) const { return x * ny + y; }
  Vertex x(Vertex z) const { return z / ny; }
  Vertex y(Vertex z) const { return z % ny; }
};

// Every step changes exactly one coordinate.
bool is_step_like(std::span<const Vertex> z, ProductIndex idx);

// Coordinate sequences with repeats collapsed.
Path project_x(std::span<const Vertex> z, ProductIndex idx);
Path project_y(std::span<const Vertex> z, ProductIndex idx);

// Number of (vertical, later horizontal) step pairs: the cell count under
// the staircase. Throws InputError if z is not step-like.
int elevation(std::span<const Vertex> z, ProductIndex idx);

// u x v = sum over step-like interleavings z of e_x, e_y of
// (-1)^elevation(z) u^x v^y e_z. Needs regular u, v of grade >= 0.
Chain cross_product(const Chain& u, const Chain& v, int ny);

}  // namespace pathhom
