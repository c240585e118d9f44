#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathhom/chain.hpp"
#include "pathhom/digraph.hpp"
#include "pathhom/path_complex.hpp"

namespace pathhom {

// Generated graphs use vertex labels 0..k-1.

// Undirected cycle 0-1-...-(n-1)-0 with n >= 3. orientation[i] is +1 for
// the edge i -> i+1 and -1 for i+1 -> i (indices mod n).
DiGraph make_cycle(int n, const std::vector<int>& orientation);
// Vertices 0..n, edges i -> j for all i < j.
DiGraph make_simplex(int n);
// Vertices 0..n, edges i -> i+1 and i -> i+2.
DiGraph make_snake(int n);
// Cube_0 is a point, Cube_n the cylinder over Cube_(n-1).
DiGraph make_cube(int n);
// S_1 is the directed cycle of base_len vertices, S_n the suspension of S_(n-1).
DiGraph make_sphere(int n, int base_len = 5);

enum class StarDirection { outward, inward };
// Center 0 joined to 1..n.
DiGraph make_star(int n, StarDirection dir);

// Vertices of x keep their positions, those of y are shifted by |x|; all
// edges x -> y are added.
DiGraph join_graphs(const DiGraph& x, const DiGraph& y);
// Allowed paths uv with u allowed in p (or empty) and v allowed in q (or empty).
PathComplex join_complexes(const PathComplex& p, const PathComplex& q);

// New last vertex with an edge from every other vertex.
DiGraph cone(const DiGraph& x);
// Two new vertices a = |x|, b = |x| + 1 with edges c -> a, c -> b.
DiGraph suspension(const DiGraph& x);
DiGraph disjoint_union(const DiGraph& x, const DiGraph& y);

// Vertices "x,y" numbered x * |y| + y; horizontal and vertical edges.
DiGraph cartesian_product(const DiGraph& x, const DiGraph& y);
// Step-like paths whose projections are allowed.
PathComplex product_complexes(const PathComplex& p, const PathComplex& q);

// x times a single edge, with (v, 0) labeled v and (v, 1) labeled v + |x|.
DiGraph cylinder(const DiGraph& x);
// v times e_01, as a chain on cylinder(x) where x has n vertices.
Chain lift(const Chain& v, int n);

// Top simplices of a pseudomanifold; signs[k] is the orientation of the
// ordered facet k relative to the ambient orientation.
struct OrientedTriangulation {
  std::vector<std::vector<std::string>> facets;
  std::vector<int> signs;
};

struct SurfacePath {
  DiGraph graph;  // edges from the smaller to the larger vertex of each facet
  Chain sigma;
};

// Throws InputError unless every codimension 1 face lies on exactly two facets.
SurfacePath surface_path(const OrientedTriangulation& t);

// Some w in the invariant space one grade up with boundary sigma, if any.
std::optional<Chain> solid_path(const DiGraph& g, const Chain& sigma);

}  // namespace pathhom
