#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "pathhom/pathhom.hpp"

using namespace pathhom;
using fixtures::graph;

namespace {

std::vector<Edge> edge_list(const DiGraph& g) { return g.edges(); }

HomologySummary reduced(const DiGraph& g, int max_dim) {
  return homology(PathComplex::from_digraph(g), max_dim, {}, true, {true, false});
}

std::vector<std::size_t> omega_dims(const PathComplex& p, int max_dim, bool augmented = false) {
  std::vector<std::size_t> out;
  BoundaryMode m{Regularity::regular, augmented ? Augmentation::augmented : Augmentation::truncated};
  OmegaEngine eng(p, m);
  for (int n = augmented ? -1 : 0; n <= max_dim; ++n) out.push_back(eng.omega(n).dim());
  return out;
}

bool in_omega(OmegaEngine& eng, int n, const Chain& c) {
  auto coords = eng.allowed_coordinates(n, c);
  if (!coords) return false;
  const auto& cols = eng.omega(n).columns;
  return membership(cols, to_dense(*coords, cols.rows())).has_value();
}

// c is closed, invariant and not a boundary.
bool nontrivial_cycle(OmegaEngine& eng, int n, const Chain& c) {
  if (!boundary(c).is_zero() || !in_omega(eng, n, c)) return false;
  const SparseMatrix& d = eng.boundary(n + 1);
  return !membership(d, to_dense(eng.coordinates(n, c), d.rows())).has_value();
}

Chain shift(const Chain& c, int by) {
  Chain out(c.grade());
  for (const auto& [p, x] : c.terms()) {
    Path q = p;
    for (auto& v : q) v += by;
    out.add(q, x);
  }
  return out;
}

OrientedTriangulation boundary_of_simplex(int n) {
  OrientedTriangulation t;
  for (int skip = 0; skip <= n + 1; ++skip) {
    std::vector<std::string> f;
    for (int v = 0; v <= n + 1; ++v)
      if (v != skip) f.push_back(std::to_string(v));
    t.facets.push_back(f);
    t.signs.push_back(skip % 2 == 0 ? 1 : -1);
  }
  return t;
}

}  // namespace

TEST_CASE("generated graphs") {
  CHECK(edge_list(make_simplex(3)) == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(make_cube(2) == fixtures::square());
  CHECK(make_cube(0).size() == 1);
  CHECK(make_snake(2) == fixtures::triangle());
  CHECK(make_cycle(4, {1, 1, -1, -1}) == fixtures::square().relabeled({"0", "1", "3", "2"}));
  CHECK(make_star(3, StarDirection::inward).in(0).size() == 3);
  CHECK(make_sphere(1, 5).num_edges() == 5);
  CHECK(make_sphere(2, 5).size() == 7);
  CHECK_THROWS_AS(make_cycle(4, {1, 1, -1}), InputError);
  CHECK_THROWS_AS(make_cycle(3, {1, 0, 1}), InputError);
  CHECK_THROWS_AS(make_cycle(2, {1, 1}), InputError);
  CHECK_THROWS_AS(make_cube(17), InputError);
  CHECK_THROWS_AS(make_sphere(2, 2), InputError);
}

TEST_CASE("cone over the square") {
  DiGraph pyramid = cone(fixtures::square());
  CHECK(pyramid == join_graphs(fixtures::square(), graph(1, {})));
  auto p = PathComplex::from_digraph(pyramid);
  auto om3 = omega_basis(p, 3);
  REQUIRE(om3.dim() == 1);
  Chain expected = Chain::of({0, 1, 3, 4}) - Chain::of({0, 2, 3, 4});
  Chain got = om3.column_chain(0);
  CHECK((got == expected || got == -expected));
  for (const auto& g : reduced(pyramid, 4).grades) CHECK(g.dim_H == 0);
}

TEST_CASE("suspensions of two points") {
  DiGraph once = suspension(fixtures::two_points());
  CHECK(homology(PathComplex::from_digraph(once), 3).at(1).dim_H == 1);
  DiGraph oct = suspension(once);
  CHECK(oct.size() == 6);
  CHECK(oct.num_edges() == 12);
  CHECK(homology(PathComplex::from_digraph(oct), 3).betti() == std::vector<std::size_t>{1, 0, 1, 0});
}

TEST_CASE("lifting paths to the cylinder") {
  CHECK(lift(Chain::of({0, 1}), 2) == Chain::of({0, 1, 3}) - Chain::of({0, 2, 3}));
  CHECK(lift(Chain::of({0, 1, 2}), 3) == Chain::of({0, 3, 4, 5}) - Chain::of({0, 1, 4, 5}) + Chain::of({0, 1, 2, 5}));
  CHECK(lift(Chain::of({2}), 5) == Chain::of({2, 7}));

  CHECK(cylinder(fixtures::square()) == make_cube(3));
  Chain lifted = lift(Chain::of({0, 1, 3}) - Chain::of({0, 2, 3}), 4);
  Chain expected = Chain::of({0, 4, 5, 7}) - Chain::of({0, 1, 5, 7}) + Chain::of({0, 1, 3, 7}) -
                   Chain::of({0, 4, 6, 7}) + Chain::of({0, 2, 6, 7}) - Chain::of({0, 2, 3, 7});
  CHECK(lifted == expected);
  OmegaEngine eng(PathComplex::from_digraph(make_cube(3)), {});
  CHECK(in_omega(eng, 3, lifted));
}

TEST_CASE("triangle times two-cycle") {
  DiGraph prod = cartesian_product(fixtures::triangle(), fixtures::two_cycle());
  CHECK(prod.labels()[3] == "1,1");
  Chain w = cross_product(Chain::of({0, 1, 2}), Chain::of({0, 1}) + Chain::of({1, 0}), 2);
  CHECK(w.size() == 6);
  OmegaEngine eng(PathComplex::from_digraph(prod), {});
  CHECK(in_omega(eng, 3, w));
  OmegaEngine same(product_complexes(PathComplex::from_digraph(fixtures::triangle()),
                                     PathComplex::from_digraph(fixtures::two_cycle())),
                   {});
  CHECK(in_omega(same, 3, w));
}

TEST_CASE("surface paths") {
  auto oct = surface_path(fixtures::octahedron_triangulation());
  CHECK(oct.graph == fixtures::octahedron());
  CHECK(boundary(oct.sigma).is_zero());
  CHECK((oct.sigma == fixtures::octahedron_cycle() || oct.sigma == -fixtures::octahedron_cycle()));
  CHECK_FALSE(solid_path(oct.graph, oct.sigma));

  auto tet = surface_path(boundary_of_simplex(2));
  CHECK(tet.graph == make_simplex(3));
  CHECK(tet.sigma == boundary(Chain::of({0, 1, 2, 3})));
  auto w = solid_path(tet.graph, tet.sigma);
  REQUIRE(w);
  CHECK(boundary(*w) == tet.sigma);

  auto tri = surface_path(boundary_of_simplex(1));
  CHECK(tri.graph == fixtures::triangle());
  CHECK(solid_path(tri.graph, tri.sigma));

  OrientedTriangulation sq{{{"0", "1"}, {"1", "3"}, {"2", "3"}, {"0", "2"}}, {1, 1, -1, -1}};
  auto s = surface_path(sq);
  CHECK(s.graph == fixtures::square());
  CHECK(boundary(s.sigma).is_zero());
  auto ws = solid_path(s.graph, s.sigma);
  REQUIRE(ws);
  CHECK(boundary(*ws) == s.sigma);

  // A pentagon is a circle whose surface path is a hole.
  OrientedTriangulation pent;
  for (int i = 0; i < 5; ++i) {
    pent.facets.push_back({std::to_string(i), std::to_string((i + 1) % 5)});
    pent.signs.push_back(1);
  }
  auto ps = surface_path(pent);
  CHECK(boundary(ps.sigma).is_zero());
  CHECK_FALSE(solid_path(ps.graph, ps.sigma));

  OrientedTriangulation open{{{"0", "1"}, {"1", "2"}}, {1, 1}};
  CHECK_THROWS_AS(surface_path(open), InputError);
  // Reversing the listed order of a facet is compensated by its sign.
  OrientedTriangulation flipped = boundary_of_simplex(1);
  flipped.facets[0] = {"2", "1"};
  flipped.signs[0] = -1;
  CHECK(surface_path(flipped).sigma == tri.sigma);
}

TEST_CASE("disjoint unions") {
  DiGraph u = disjoint_union(fixtures::triangle(), fixtures::square());
  CHECK(u.size() == 7);
  CHECK(u.num_edges() == 7);
  CHECK(disjoint_union(fixtures::square(), DiGraph()) == fixtures::square());
  DiGraph c5 = make_cycle(5, {1, 1, 1, 1, -1});
  CHECK(homology(PathComplex::from_digraph(disjoint_union(c5, c5)), 3).at(1).dim_H == 2);
}

TEST_CASE("join of a triangle and a square") {
  auto x = PathComplex::from_digraph(fixtures::join_left_triangle());
  auto y = PathComplex::from_digraph(fixtures::join_right_square());
  CHECK(omega_dims(x, 2, true) == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(omega_dims(y, 2, true) == std::vector<std::size_t>{1, 4, 4, 1});
  auto z = PathComplex::from_digraph(join_graphs(fixtures::join_left_triangle(), fixtures::join_right_square()));
  auto dims = omega_dims(z, 6);
  CHECK(dims[1] == 19);
  CHECK(dims[3] == 19);
  CHECK(dims[4] == 7);
  CHECK(dims[5] == 1);
  CHECK(dims[6] == 0);
  // The convolution of the factor dimensions gives 26 at grade 2.
  CHECK(dims[2] == 26);
  CHECK(omega_dims(join_complexes(x, y), 6) == dims);
}

TEST_CASE("join of a directed 3-cycle and an alternating 4-cycle") {
  DiGraph x = fixtures::join_left_cycle(), y = fixtures::join_right_bowtie();
  auto h = reduced(join_graphs(x, y), 5);
  CHECK(h.betti() == std::vector<std::size_t>{0, 0, 0, 0, 1, 0, 0});
  Chain u = Chain::of({0, 1}) + Chain::of({1, 2}) + Chain::of({2, 0});
  Chain v = Chain::of({0, 2}) - Chain::of({3, 2}) + Chain::of({3, 1}) - Chain::of({0, 1});
  Chain uv = join_paths(u, shift(v, 3));
  CHECK(uv.size() == 12);
  OmegaEngine eng(PathComplex::from_digraph(join_graphs(x, y)), {});
  CHECK(nontrivial_cycle(eng, 3, uv));
}

TEST_CASE("join complexes agree with joined digraphs") {
  std::mt19937 rng(61);
  for (int t = 0; t < 40; ++t) {
    DiGraph x = fixtures::random_digraph(rng, fixtures::uniform(rng, 1, 3), 0.4);
    DiGraph y = fixtures::random_digraph(rng, fixtures::uniform(rng, 1, 3), 0.4);
    auto a = PathComplex::from_digraph(join_graphs(x, y));
    auto b = join_complexes(PathComplex::from_digraph(x), PathComplex::from_digraph(y));
    for (int n = 0; n <= 3; ++n) CHECK(a.allowed(n).to_vector() == b.allowed(n).to_vector());
  }
}

TEST_CASE("join dimensions convolve") {
  std::mt19937 rng(62);
  for (int t = 0; t < 60; ++t) {
    DiGraph x = fixtures::random_digraph(rng, fixtures::uniform(rng, 1, 4), 0.35);
    DiGraph y = fixtures::random_digraph(rng, fixtures::uniform(rng, 1, 4), 0.35);
    constexpr int R = 4;
    auto ox = omega_dims(PathComplex::from_digraph(x), R, true);
    auto oy = omega_dims(PathComplex::from_digraph(y), R, true);
    auto hx = reduced(x, R), hy = reduced(y, R);
    auto hz = reduced(join_graphs(x, y), R);
    auto oz = omega_dims(PathComplex::from_digraph(join_graphs(x, y)), R, true);
    for (int r = 0; r <= R; ++r) {
      std::size_t om = 0, hom = 0;
      for (int p = -1; p <= r; ++p) {
        const int q = r - 1 - p;
        if (q < -1) continue;
        om += ox[static_cast<std::size_t>(p + 1)] * oy[static_cast<std::size_t>(q + 1)];
        hom += hx.at(p).dim_H * hy.at(q).dim_H;
      }
      CHECK(oz[static_cast<std::size_t>(r + 1)] == om);
      CHECK(hz.at(r).dim_H == hom);
    }
  }
}

TEST_CASE("product invariant spaces are spanned by cross products") {
  std::mt19937 rng(63);
  for (int t = 0; t < 40; ++t) {
    DiGraph x = fixtures::random_digraph(rng, fixtures::uniform(rng, 1, 3), 0.5);
    DiGraph y = fixtures::random_digraph(rng, fixtures::uniform(rng, 1, 3), 0.5);
    const int ny = static_cast<int>(y.size());
    auto px = PathComplex::from_digraph(x), py = PathComplex::from_digraph(y);
    OmegaEngine eng(PathComplex::from_digraph(cartesian_product(x, y)), {});
    for (int r = 0; r <= 3; ++r) {
      std::vector<SparseVector> cols;
      for (int p = 0; p <= r; ++p)
        for (const auto& u : omega_basis(px, p).chains())
          for (const auto& v : omega_basis(py, r - p).chains()) {
            auto c = eng.allowed_coordinates(r, cross_product(u, v, ny));
            REQUIRE(c);
            cols.push_back(*c);
          }
      const auto& om = eng.omega(r);
      SparseMatrix span = SparseMatrix::from_columns(om.allowed.size(), cols);
      CHECK(rank(span) == om.dim());
      for (std::size_t k = 0; k < om.dim(); ++k)
        CHECK(membership(span, to_dense(om.columns.column(k), span.rows())).has_value());
    }
  }
}

TEST_CASE("cones and suspensions shift reduced homology") {
  std::mt19937 rng(64);
  for (int t = 0; t < 60; ++t) {
    DiGraph x = fixtures::random_digraph(rng, fixtures::uniform(rng, 1, 5), 0.35, true);
    auto hx = reduced(x, 4);
    auto hc = reduced(cone(x), 4);
    for (const auto& g : hc.grades) CHECK(g.dim_H == 0);
    auto ox = omega_dims(PathComplex::from_digraph(x), 4, true);
    auto oc = omega_dims(PathComplex::from_digraph(cone(x)), 4, true);
    for (int r = 0; r <= 4; ++r) CHECK(oc[static_cast<std::size_t>(r + 1)] == ox[static_cast<std::size_t>(r + 1)] + ox[static_cast<std::size_t>(r)]);

    auto hs = reduced(suspension(x), 5);
    for (int r = 0; r <= 5; ++r) CHECK(hs.at(r).dim_H == hx.at(r - 1).dim_H);
    auto ex = homology(PathComplex::from_digraph(x), static_cast<int>(x.size()));
    auto es = homology(PathComplex::from_digraph(suspension(x)), static_cast<int>(x.size()) + 1);
    if (ex.euler_status == EulerStatus::exact && es.euler_status == EulerStatus::exact) CHECK(es.euler == 2 - ex.euler);
  }
}

TEST_CASE("spheres") {
  for (int n = 1; n <= 3; ++n) {
    auto h = homology(PathComplex::from_digraph(make_sphere(n, 5)), n + 1);
    for (int k = 1; k <= n + 1; ++k) CHECK(h.at(k).dim_H == (k == n ? 1u : 0u));
  }
}

TEST_CASE("surface paths of random sphere-like triangulations are closed") {
  // Boundaries of simplices with shuffled facet orders.
  std::mt19937 rng(65);
  for (int t = 0; t < 30; ++t) {
    const int n = fixtures::uniform(rng, 1, 3);
    auto tri = boundary_of_simplex(n);
    for (std::size_t k = 0; k < tri.facets.size(); ++k) {
      auto& f = tri.facets[k];
      std::vector<int> perm(f.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<std::string> g;
      for (int i : perm) g.push_back(f[static_cast<std::size_t>(i)]);
      int inversions = 0;
      for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
          if (perm[i] > perm[j]) ++inversions;
      f = g;
      if (inversions % 2) tri.signs[k] = -tri.signs[k];
    }
    auto s = surface_path(tri);
    CHECK(boundary(s.sigma).is_zero());
    CHECK(s.sigma == boundary(Chain::of([&] {
            Path p;
            for (int v = 0; v <= n + 1; ++v) p.push_back(v);
            return p;
          }())));
  }
}
