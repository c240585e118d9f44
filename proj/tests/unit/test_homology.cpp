#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "pathhom/pathhom.hpp"

using namespace pathhom;
using fixtures::graph;

namespace {

constexpr BoundaryMode kNonregular{Regularity::nonregular, Augmentation::truncated};

std::vector<std::size_t> omega_dims(const HomologySummary& h) {
  std::vector<std::size_t> out;
  for (const auto& g : h.grades) out.push_back(g.dim_Omega);
  return out;
}

HomologySummary hom(const DiGraph& g, int max_dim, BoundaryMode m = {}, bool reduced = false) {
  return homology(PathComplex::from_digraph(g), max_dim, m, reduced);
}

// Membership of c - target in the boundary image of grade n + 1.
bool homologous(OmegaEngine& eng, int n, const Chain& c, const Chain& target) {
  SparseVector diff = eng.coordinates(n, c - target);
  const SparseMatrix& d = eng.boundary(n + 1);
  return membership(d, to_dense(diff, d.rows())).has_value();
}

}  // namespace

TEST_CASE("invariant bases") {
  auto chain_graph = PathComplex::from_digraph(graph(3, {{0, 1}, {1, 2}}));
  CHECK(omega_basis(chain_graph, 2).dim() == 0);

  auto sq = omega_basis(PathComplex::from_digraph(fixtures::square()), 2);
  REQUIRE(sq.dim() == 1);
  Chain expected = Chain::of({0, 1, 3}) - Chain::of({0, 2, 3});
  CHECK((sq.column_chain(0) == expected || sq.column_chain(0) == -expected));

  auto tc = PathComplex::from_digraph(fixtures::two_cycle());
  CHECK(omega_basis(tc, 2).dim() == 2);
  CHECK(omega_basis(tc, 2, kNonregular).dim() == 0);

  auto ann = omega_basis(PathComplex::from_digraph(fixtures::annulus_graph()), 2);
  REQUIRE(ann.dim() == 2);
  CHECK(ann.column_chain(0) == Chain::of({0, 2, 3}) - Chain::of({0, 1, 3}));
  CHECK(ann.column_chain(1) == Chain::of({0, 2, 4}) - Chain::of({0, 1, 4}));
}

TEST_CASE("homology of the annulus graph") {
  auto h = hom(fixtures::annulus_graph(), 4);
  CHECK(h.betti() == std::vector<std::size_t>{1, 1, 0, 0, 0});
  CHECK(omega_dims(h) == std::vector<std::size_t>{6, 8, 2, 0, 0});
  CHECK(h.euler == 0);
  CHECK(h.euler_status == EulerStatus::exact);
  REQUIRE(h.at(1).generators.size() == 1);
  CHECK(h.at(1).generators[0] == Chain::of({1, 3}) - Chain::of({1, 4}) - Chain::of({5, 3}) + Chain::of({5, 4}));
  CHECK(homology_via_allowed(PathComplex::from_digraph(fixtures::annulus_graph()), 1) == 1);
}

TEST_CASE("homology of the octahedron") {
  auto h = hom(fixtures::octahedron(), 4);
  CHECK(h.betti() == std::vector<std::size_t>{1, 0, 1, 0, 0});
  CHECK(h.euler == 2);
  CHECK(h.at(2).dim_Omega == 8);
  REQUIRE(h.at(2).generators.size() == 1);
  Chain g = h.at(2).generators[0];
  Chain c = fixtures::octahedron_cycle();
  CHECK((g == c || g == -c));
}

TEST_CASE("two-cycle in both regularity modes") {
  auto reg = hom(fixtures::two_cycle(), 8);
  auto non = hom(fixtures::two_cycle(), 8, kNonregular);
  CHECK(reg.betti() == std::vector<std::size_t>{1, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK(non.betti() == std::vector<std::size_t>{1, 1, 0, 0, 0, 0, 0, 0, 0});
  for (auto d : omega_dims(reg)) CHECK(d == 2);
  CHECK(reg.euler_status == EulerStatus::truncated_at_max_dim);
  CHECK(non.euler_status == EulerStatus::exact);
  CHECK(non.euler == 0);
  CHECK_FALSE(reg.vanishes_from);
}

TEST_CASE("reduced homology") {
  auto h = hom(fixtures::triangle(), 3, {}, true);
  CHECK(h.grades.front().n == -1);
  for (const auto& g : h.grades) CHECK(g.dim_H == 0);
  auto two = hom(disjoint_union(fixtures::triangle(), fixtures::triangle()), 2, {}, true);
  CHECK(two.at(0).dim_H == 1);
  CHECK(hom(fixtures::two_points(), 1).at(0).dim_H == 2);
}

TEST_CASE("star-shaped graphs have trivial reduced homology") {
  for (auto dir : {StarDirection::outward, StarDirection::inward}) {
    auto h = hom(make_star(4, dir), 4, {}, true);
    for (const auto& g : h.grades) CHECK(g.dim_H == 0);
  }
  auto simplex = hom(make_simplex(3), 4, {}, true);
  for (const auto& g : simplex.grades) CHECK(g.dim_H == 0);
}

TEST_CASE("cycle graphs") {
  auto five = hom(make_cycle(5, {1, 1, -1, 1, -1}), 4);
  CHECK(five.at(1).dim_H == 1);
  CHECK(five.euler == 0);
  CHECK(homology_via_allowed(PathComplex::from_digraph(fixtures::triangle()), 1) == 0);
  CHECK(homology_via_allowed(PathComplex::from_digraph(fixtures::triangle()), 9) == 0);
}

TEST_CASE("cohomology oracle matches invariant dimensions") {
  CHECK(cohomology_dims_oracle(PathComplex::from_digraph(fixtures::square()), 2)[2] == 1);
  CHECK(cohomology_dims_oracle(PathComplex::from_digraph(fixtures::annulus_graph()), 3) ==
        std::vector<std::size_t>{6, 8, 2, 0});
  CHECK(cohomology_dims_oracle(PathComplex::from_digraph(graph(3, {})), 1)[1] == 0);
}

TEST_CASE("dimension of invariant 2-paths from semi-edges") {
  CHECK(dim_omega2_formula(fixtures::annulus_graph()) == 2);
  CHECK(dim_omega2_formula(fixtures::octahedron()) == 8);
  // Three 2-paths 0->1->3, 0->2->3, 0->2->4 and one semi-edge 03.
  DiGraph three = graph(5, {{0, 1}, {1, 3}, {0, 2}, {2, 3}, {2, 4}, {0, 4}});
  CHECK(dim_omega2_formula(three) == 2);
}

TEST_CASE("no-squares shortcut") {
  DiGraph tree = graph(6, {{0, 1}, {0, 2}, {3, 2}, {2, 4}, {5, 4}});
  auto t = no_squares_shortcut(tree);
  REQUIRE(t);
  CHECK(t->dim_omega2 == 0);
  CHECK(hom(tree, 4).at(2).dim_Omega == 0);
  DiGraph bowtie = graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  auto b = no_squares_shortcut(bowtie);
  REQUIRE(b);
  CHECK(b->dim_omega2 == 2);
  CHECK(hom(bowtie, 4).at(2).dim_Omega == 2);
  CHECK(hom(bowtie, 4).at(3).dim_Omega == 0);
  CHECK_FALSE(no_squares_shortcut(make_snake(5)));
  auto six = hom(make_cycle(6, {1, 1, 1, 1, 1, 1}), 4);
  for (int n = 2; n <= 4; ++n) CHECK(six.at(n).dim_Omega == 0);
  CHECK_FALSE(no_squares_shortcut(fixtures::square()));
  CHECK_FALSE(no_squares_shortcut(fixtures::two_cycle()));
}

TEST_CASE("early termination rule") {
  CHECK(early_termination_check({6, 8, 2, 0}, Regularity::regular) == 3);
  CHECK(early_termination_check({3, 3, 1}, Regularity::regular) == 2);
  CHECK_FALSE(early_termination_check({2, 2, 2, 2}, Regularity::regular));
  CHECK(early_termination_check({3, 3, 1}, Regularity::nonregular) == std::nullopt);
  auto h = hom(make_cube(3), 6);
  CHECK(h.early_terminated);
  CHECK(h.vanishes_from == 4);
  auto full = homology(PathComplex::from_digraph(make_cube(3)), 6, {}, false, {false, true});
  CHECK(full.betti() == h.betti());
  CHECK(omega_dims(full) == omega_dims(h));
}

TEST_CASE("connected components count H0") {
  CHECK(h0_equals_components(PathComplex::from_digraph(fixtures::decorated_hexagon())));
  CHECK(h0_equals_components(PathComplex::from_digraph(disjoint_union(fixtures::triangle(), fixtures::square()))));
  CHECK(h0_equals_components(PathComplex::from_digraph(graph(4, {}))));
}

TEST_CASE("generators are closed, non-trivial and normalized") {
  std::mt19937 rng(41);
  for (int t = 0; t < 60; ++t) {
    DiGraph g = fixtures::random_digraph(rng, fixtures::uniform(rng, 2, 6), 0.35);
    auto p = PathComplex::from_digraph(g);
    auto h = homology(p, 3);
    OmegaEngine eng(p, {});
    for (const auto& gr : h.grades) {
      CHECK(gr.generators.size() == gr.dim_H);
      for (const auto& c : gr.generators) {
        CHECK(c.leading_coefficient() == 1);
        CHECK(boundary(c).is_zero());
        CHECK_FALSE(homologous(eng, gr.n, c, Chain(gr.n)));
      }
    }
  }
}

TEST_CASE("homology agrees with the brute-force oracle") {
  std::mt19937 rng(42);
  for (int t = 0; t < 120; ++t) {
    const int n = fixtures::uniform(rng, 1, 6);
    DiGraph g = fixtures::random_digraph(rng, n, 0.3);
    for (bool regular : {true, false}) {
      BoundaryMode m{regular ? Regularity::regular : Regularity::nonregular, Augmentation::truncated};
      auto h = homology(PathComplex::from_digraph(g), 3, m, false, {false, false});
      auto o = oracle::path_homology(g, 3, regular);
      for (int k = 0; k <= 3; ++k) {
        CHECK(h.at(k).dim_Omega == o.omega[static_cast<std::size_t>(k)]);
        CHECK(static_cast<long long>(h.at(k).dim_H) == o.homology[static_cast<std::size_t>(k)]);
      }
    }
  }
}

TEST_CASE("two routes to homology dimensions and the cohomology oracle agree") {
  std::mt19937 rng(43);
  for (int t = 0; t < 100; ++t) {
    DiGraph g = fixtures::random_digraph(rng, fixtures::uniform(rng, 1, 6), 0.35);
    auto p = PathComplex::from_digraph(g);
    for (Regularity r : {Regularity::regular, Regularity::nonregular}) {
      for (Augmentation a : {Augmentation::truncated, Augmentation::augmented}) {
        BoundaryMode m{r, a};
        auto h = homology(p, 3, m, a == Augmentation::augmented, {false, false});
        for (const auto& gr : h.grades) CHECK(gr.dim_H == homology_via_allowed(p, gr.n, m));
      }
      auto co = cohomology_dims_oracle(p, 3, r);
      for (int k = 0; k <= 3; ++k) CHECK(co[static_cast<std::size_t>(k)] == omega_basis(p, k, {r, Augmentation::truncated}).dim());
    }
  }
}

TEST_CASE("invariant basis columns have allowed boundaries") {
  std::mt19937 rng(44);
  for (int t = 0; t < 60; ++t) {
    DiGraph g = fixtures::random_digraph(rng, fixtures::uniform(rng, 2, 6), 0.4);
    auto p = PathComplex::from_digraph(g);
    for (int n = 1; n <= 3; ++n)
      for (const auto& c : omega_basis(p, n).chains()) {
        const Chain d = boundary(c);
        for (const auto& [path, x] : d.terms()) CHECK(p.is_allowed(path));
      }
  }
}

TEST_CASE("strictly regular complexes have equal regular and non-regular spaces") {
  std::mt19937 rng(45);
  for (int t = 0; t < 60; ++t) {
    DiGraph g = fixtures::random_digraph(rng, fixtures::uniform(rng, 2, 6), 0.4, true);
    auto p = PathComplex::from_digraph(g);
    REQUIRE(structural_report(p, 2).strictly_regular);
    for (int n = 0; n <= 3; ++n) CHECK(omega_basis(p, n).dim() == omega_basis(p, n, kNonregular).dim());
  }
  auto tc = PathComplex::from_digraph(fixtures::two_cycle());
  CHECK(omega_basis(tc, 2).dim() == 2);
  CHECK(omega_basis(tc, 2, kNonregular).dim() == 0);
}

TEST_CASE("disjoint unions add dimensions") {
  std::mt19937 rng(46);
  for (int t = 0; t < 40; ++t) {
    DiGraph a = fixtures::random_digraph(rng, fixtures::uniform(rng, 1, 4), 0.4);
    DiGraph b = fixtures::random_digraph(rng, fixtures::uniform(rng, 1, 4), 0.4);
    auto ha = hom(a, 3), hb = hom(b, 3), hu = hom(disjoint_union(a, b), 3);
    for (int n = 0; n <= 3; ++n) {
      CHECK(hu.at(n).dim_A == ha.at(n).dim_A + hb.at(n).dim_A);
      CHECK(hu.at(n).dim_Omega == ha.at(n).dim_Omega + hb.at(n).dim_Omega);
      CHECK(hu.at(n).dim_H == ha.at(n).dim_H + hb.at(n).dim_H);
    }
  }
}

TEST_CASE("Euler characteristic from invariant spaces") {
  std::mt19937 rng(47);
  for (int t = 0; t < 60; ++t) {
    DiGraph g = fixtures::random_digraph(rng, fixtures::uniform(rng, 1, 6), 0.3, true);
    auto h = hom(g, static_cast<int>(g.size()));
    if (h.euler_status != EulerStatus::exact) continue;
    long long chi = 0;
    for (const auto& gr : h.grades) chi += (gr.n % 2 == 0 ? 1 : -1) * static_cast<long long>(gr.dim_Omega);
    CHECK(chi == h.euler);
  }
}

TEST_CASE("resource cap surfaces as a resource error") {
  auto p = PathComplex::from_digraph(make_simplex(7));
  p.set_path_cap(50);
  CHECK_THROWS_AS(homology(p, 5), ResourceError);
}
