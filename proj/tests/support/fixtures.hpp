#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "pathhom/pathhom.hpp"

namespace fixtures {

using namespace pathhom;

inline DiGraph graph(int n, std::vector<Edge> e) { return DiGraph::numbered(n, e); }

// Two sources 0, 5 and a middle layer, forming two squares glued into an
// annulus: one H_1 class.
inline DiGraph annulus_graph() {
  return graph(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {5, 3}, {5, 4}});
}

inline DiGraph two_points() { return graph(2, {}); }
inline DiGraph octahedron() { return suspension(suspension(two_points())); }

inline Chain octahedron_cycle() {
  Chain c(2);
  c.add({0, 2, 4}, 1);
  c.add({0, 2, 5}, -1);
  c.add({0, 3, 4}, -1);
  c.add({0, 3, 5}, 1);
  c.add({1, 2, 4}, -1);
  c.add({1, 2, 5}, 1);
  c.add({1, 3, 4}, 1);
  c.add({1, 3, 5}, -1);
  return c;
}

// Facets {a, b, c} with a in {0,1}, b in {2,3}, c in {4,5}.
inline OrientedTriangulation octahedron_triangulation() {
  OrientedTriangulation t;
  for (int a = 0; a < 2; ++a)
    for (int b = 2; b < 4; ++b)
      for (int c = 4; c < 6; ++c) {
        t.facets.push_back({std::to_string(a), std::to_string(b), std::to_string(c)});
        t.signs.push_back(((a + (b - 2) + (c - 4)) % 2 == 0) ? 1 : -1);
      }
  return t;
}

inline DiGraph two_cycle() { return graph(2, {{0, 1}, {1, 0}}); }
inline DiGraph triangle() { return graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline DiGraph square() { return graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

// Source 0 pointing everywhere, with a triangle 012 hanging off it and two
// more triangles 345, 678 joined to it.
inline DiGraph hub_with_fans() {
  return graph(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}, {0, 8}, {1, 2}, {3, 4}, {3, 5},
                   {4, 5}, {6, 7}, {6, 8}, {7, 8}});
}

// Maximal simplices {0,1,2}, {0,3,4,5}, {6,7,8} and the edges 06, 07, 08.
inline SimplicialComplex hub_simplicial() {
  std::vector<std::string> labels;
  for (int i = 0; i < 9; ++i) labels.push_back(std::to_string(i));
  return SimplicialComplex(labels, {{0, 1, 2}, {0, 3, 4, 5}, {6, 7, 8}, {0, 6}, {0, 7}, {0, 8}});
}

// Hexagon 0..5 decorated so that homology-preserving moves strip it back:
// transit vertices 6, 7, 8 over hexagon edges, plus removable vertices
// 9, A, B, C, D hanging off them.
inline DiGraph decorated_hexagon() {
  std::vector<std::string> labels{"0", "1", "2", "3", "4", "5", "6", "7", "8", "9", "A", "B", "C", "D"};
  auto at = [&](const std::string& s) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == s) return static_cast<Vertex>(i);
    return -1;
  };
  std::vector<std::pair<std::string, std::string>> e{
      {"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "0"}, {"0", "6"}, {"6", "1"},
      {"2", "7"}, {"7", "3"}, {"4", "8"}, {"8", "5"}, {"9", "6"}, {"9", "1"}, {"B", "8"}, {"B", "5"},
      {"C", "0"}, {"C", "6"}, {"C", "1"}, {"7", "A"}, {"3", "A"}, {"2", "D"}, {"7", "D"}};
  std::vector<Edge> edges;
  for (auto& [a, b] : e) edges.emplace_back(at(a), at(b));
  return DiGraph(labels, edges);
}

inline Chain hexagon_cycle() {
  Chain c(1);
  for (int i = 0; i < 6; ++i) c.add({i, (i + 1) % 6}, 1);
  return c;
}

// Octahedron on 0..5 with six extra vertices, each removable as a
// dominated vertex once the later ones are gone.
inline DiGraph decorated_octahedron() {
  std::vector<std::string> labels{"0", "1", "2", "3", "4", "5", "6", "7", "8", "9", "A", "B"};
  std::vector<Edge> e{{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}};
  for (Vertex t : {0, 2, 4}) e.emplace_back(6, t);
  for (Vertex s : {0, 2, 4}) e.emplace_back(s, 7);
  for (Vertex t : {6, 0, 2}) e.emplace_back(8, t);
  for (Vertex s : {7, 4, 2}) e.emplace_back(s, 9);
  for (Vertex t : {8, 6, 0, 2}) e.emplace_back(10, t);
  for (Vertex s : {7, 2, 4, 0}) e.emplace_back(s, 11);
  return DiGraph(labels, e);
}

// b -> c, m sources a_k -> b, c and n sinks b, c -> d_k. Vertex b is 0,
// c is 1, then the sources, then the sinks.
inline DiGraph fan_graph(int m, int n) {
  std::vector<Edge> e{{0, 1}};
  for (int k = 0; k < m; ++k) {
    e.emplace_back(2 + k, 0);
    e.emplace_back(2 + k, 1);
  }
  for (int k = 0; k < n; ++k) {
    e.emplace_back(0, 2 + m + k);
    e.emplace_back(1, 2 + m + k);
  }
  return graph(2 + m + n, e);
}

// Grown from the edge 1 -> 2 by alternately attaching a 2-path backwards
// over the current edge (adds an H_1 class) and a 2-path parallel to an
// existing edge (keeps homology). Each round adds two vertices and one H_1
// class. steps[i] lists the three vertices of the i-th attached path.
struct AntiSnake {
  DiGraph graph;
  std::vector<std::array<Vertex, 3>> steps;  // tail, new vertex, head
};

inline AntiSnake anti_snake(int rounds) {
  const int n = 2 + 2 * rounds;
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  // Vertex i is label i + 1.
  std::vector<Edge> e{{0, 1}};
  std::vector<std::array<Vertex, 3>> steps;
  Vertex u = 0, w = 1, next = 2;  // current edge u -> w
  for (int r = 0; r < rounds; ++r) {
    const Vertex c = next++, d = next++;
    steps.push_back({w, c, u});
    e.emplace_back(w, c);
    e.emplace_back(c, u);
    if (r % 2 == 0) {
      steps.push_back({w, d, c});
      e.emplace_back(w, d);
      e.emplace_back(d, c);
      u = d, w = c;
    } else {
      steps.push_back({c, d, u});
      e.emplace_back(c, d);
      e.emplace_back(d, u);
      w = u, u = d;
    }
  }
  return {DiGraph(labels, e), steps};
}

// X = {01, 02, 12} and Y = {01, 02, 13, 23} on four vertices.
inline DiGraph join_left_triangle() { return triangle(); }
inline DiGraph join_right_square() { return graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

// X = directed 3-cycle, Y = four vertices 0..3 with 0->2, 3->2, 3->1, 0->1.
inline DiGraph join_left_cycle() { return graph(3, {{0, 1}, {1, 2}, {2, 0}}); }
inline DiGraph join_right_bowtie() { return graph(4, {{0, 2}, {3, 2}, {3, 1}, {0, 1}}); }

// Random loopless digraph; each ordered pair is an edge with probability p.
// With oriented set, at most one of a -> b, b -> a is present.
inline DiGraph random_digraph(std::mt19937& rng, int n, double p, bool oriented = false) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (oriented && a > b) continue;
      if (!coin(rng)) continue;
      if (oriented && std::bernoulli_distribution(0.5)(rng))
        e.emplace_back(b, a);
      else
        e.emplace_back(a, b);
    }
  return graph(n, e);
}

inline int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Path random_path(std::mt19937& rng, int grade, int alphabet, bool regular) {
  Path p;
  while (static_cast<int>(p.size()) < grade + 1) {
    Vertex v = uniform(rng, 0, alphabet - 1);
    if (regular && !p.empty() && p.back() == v) continue;
    p.push_back(v);
  }
  return p;
}

inline Chain random_chain(std::mt19937& rng, int grade, int alphabet, bool regular, int terms = 4) {
  Chain c(grade);
  for (int t = 0; t < terms; ++t) c.add(random_path(rng, grade, alphabet, regular), uniform(rng, -3, 3));
  return c;
}

}  // namespace fixtures
