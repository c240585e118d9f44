#include "pathhom/io.hpp"

#include <map>
#include <sstream>
#include <vector>

#include "pathhom/errors.hpp"

namespace pathhom {

namespace {

// Non-empty lines with comments stripped, each split on whitespace.
std::vector<std::pair<int, std::vector<std::string>>> tokenized_lines(std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (!tokens.empty()) out.emplace_back(number, std::move(tokens));
  }
  return out;
}

[[noreturn]] void bad_line(int number, const std::string& what) {
  throw InputError("line " + std::to_string(number) + ": " + what);
}

struct LabelTable {
  std::vector<std::string> labels;
  std::map<std::string, Vertex> index;
  Vertex operator()(const std::string& l) {
    auto [it, fresh] = index.emplace(l, static_cast<Vertex>(labels.size()));
    if (fresh) labels.push_back(l);
    return it->second;
  }
};

}  // namespace

DiGraph parse_digraph(std::string_view text) {
  LabelTable table;
  std::vector<Edge> edges;
  for (auto& [number, t] : tokenized_lines(text)) {
    // Also accept "u->v" without spaces.
    if (t.size() == 1) {
      auto arrow = t[0].find("->");
      if (arrow != std::string::npos) t = {t[0].substr(0, arrow), "->", t[0].substr(arrow + 2)};
    }
    if (t.size() == 2 && t[0] == "vertex") {
      table(t[1]);
    } else if (t.size() == 3 && t[1] == "->") {
      if (t[0].empty() || t[2].empty()) bad_line(number, "empty vertex name");
      if (t[0] == t[2]) bad_line(number, "loop " + t[0] + " -> " + t[2]);
      Vertex a = table(t[0]);
      edges.emplace_back(a, table(t[2]));
    } else {
      bad_line(number, "expected 'u -> v' or 'vertex u'");
    }
  }
  return DiGraph(std::move(table.labels), edges);
}

std::string format_digraph(const DiGraph& g) {
  std::string out;
  const auto& lab = g.labels();
  for (Vertex v : g.vertices())
    if (g.out(v).empty() && g.in(v).empty()) out += "vertex " + lab[v] + "\n";
  for (auto [a, b] : g.edges()) out += lab[a] + " -> " + lab[b] + "\n";
  return out;
}

SimplicialComplex parse_simplicial(std::string_view text) {
  LabelTable table;
  std::vector<std::vector<Vertex>> maximal;
  for (auto& [number, t] : tokenized_lines(text)) {
    std::vector<Vertex> s;
    for (const auto& l : t) s.push_back(table(l));
    maximal.push_back(std::move(s));
  }
  return SimplicialComplex(std::move(table.labels), maximal);
}

OrientedTriangulation parse_triangulation(std::string_view text) {
  OrientedTriangulation t;
  for (auto& [number, tokens] : tokenized_lines(text)) {
    if (tokens.size() < 2) bad_line(number, "expected vertex ids followed by a sign");
    const std::string sign = tokens.back();
    tokens.pop_back();
    if (sign == "+")
      t.signs.push_back(1);
    else if (sign == "-" || sign == "−")
      t.signs.push_back(-1);
    else
      bad_line(number, "facet sign must be '+' or '-'");
    t.facets.push_back(std::move(tokens));
  }
  return t;
}

}  // namespace pathhom
