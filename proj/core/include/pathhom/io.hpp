#pragma once

#include <string>
#include <string_view>

#include "pathhom/constructions.hpp"
#include "pathhom/digraph.hpp"
#include "pathhom/path_complex.hpp"

namespace pathhom {

// "u -> v" per line, "vertex u" for isolated vertices, '#' starts a comment.
DiGraph parse_digraph(std::string_view text);
std::string format_digraph(const DiGraph& g);

// One maximal simplex per line, vertex ids separated by spaces.
SimplicialComplex parse_simplicial(std::string_view text);

// One facet per line: ordered vertex ids, then '+' or '-' (U+2212 accepted).
OrientedTriangulation parse_triangulation(std::string_view text);

}  // namespace pathhom
