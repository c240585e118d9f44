#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "pathhom/pathhom.hpp"

namespace pathhom::cli {

namespace {

using nlohmann::json;

std::string slurp(const std::string& file, std::istream& in) {
  std::ostringstream ss;
  if (file == "-") {
    ss << in.rdbuf();
  } else {
    std::ifstream f(file);
    if (!f) throw InputError("cannot open " + file);
    ss << f.rdbuf();
  }
  return ss.str();
}

struct Input {
  PathComplex complex;
  std::optional<DiGraph> graph;
};

Input load(const std::string& file, bool simplicial, std::istream& in) {
  const std::string text = slurp(file, in);
  if (simplicial) return {PathComplex::from_simplicial(parse_simplicial(text)), std::nullopt};
  DiGraph g = parse_digraph(text);
  return {PathComplex::from_digraph(g), g};
}

std::string mode_name(BoundaryMode m) {
  std::string s = m.regularity == Regularity::regular ? "regular" : "nonregular";
  return s + (m.augmentation == Augmentation::augmented ? "+augmented" : "+truncated");
}

std::string status_name(EulerStatus s) {
  return s == EulerStatus::exact ? "exact" : "truncated-at-max-dim";
}

// Columns right-aligned to the widest cell.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (width.size() <= k) width.push_back(0);
      width[k] = std::max(width[k], r[k].size());
    }
  for (const auto& r : rows) {
    for (std::size_t k = 0; k < r.size(); ++k)
      out << (k ? "  " : "") << std::setw(static_cast<int>(width[k])) << r[k];
    out << "\n";
  }
}

struct ComplexOptions {
  std::string file;
  std::optional<int> max_dim;
  bool reduced = false;
  bool augmented = false;
  bool non_regular = false;
  bool simplicial = false;
  bool json = false;

  void attach(CLI::App* sub) {
    sub->add_option("file", file, "digraph or simplicial complex file, '-' for stdin")->required();
    sub->add_option("--max-dim", max_dim, "highest grade (default: number of vertices)")->check(CLI::NonNegativeNumber);
    sub->add_flag("--reduced", reduced, "reduced homology");
    sub->add_flag("--augmented", augmented, "reduced homology, also listing grade -1");
    sub->add_flag("--non-regular", non_regular, "keep non-regular boundary terms");
    sub->add_flag("--simplicial", simplicial, "input lists maximal simplices");
    sub->add_flag("--json", json, "machine readable output");
  }
  BoundaryMode mode() const {
    return {non_regular ? Regularity::nonregular : Regularity::regular,
            (reduced || augmented) ? Augmentation::augmented : Augmentation::truncated};
  }
};

HomologySummary compute(const ComplexOptions& o, const PathComplex& p, bool generators) {
  const int max_dim = o.max_dim.value_or(static_cast<int>(p.num_vertices()));
  HomologyOptions opts;
  opts.generators = generators;
  HomologySummary h = homology(p, max_dim, o.mode(), o.reduced || o.augmented, opts);
  if (!o.augmented)
    std::erase_if(h.grades, [](const GradeSummary& g) { return g.n < 0; });
  return h;
}

json homology_json(const HomologySummary& h, std::span<const std::string> labels, bool with_generators) {
  json grades = json::array();
  for (const auto& g : h.grades) {
    json row = {{"n", g.n}, {"dim_A", g.dim_A}, {"dim_Omega", g.dim_Omega}, {"rank_boundary", g.rank_boundary}};
    if (with_generators) {
      row["dim_H"] = g.dim_H;
      json gens = json::array();
      for (const auto& c : g.generators) gens.push_back(format_chain(c, labels));
      row["generators"] = gens;
    }
    grades.push_back(row);
  }
  json j = {{"mode", mode_name(h.mode)},
            {"reduced", h.reduced},
            {"max_dim", h.max_dim},
            {"grades", grades},
            {"euler", {{"value", h.euler}, {"status", status_name(h.euler_status)}}},
            {"early_termination",
             {{"vanishes_from", h.vanishes_from ? json(*h.vanishes_from) : json(nullptr)},
              {"triggered", h.early_terminated}}}};
  return j;
}

void print_euler(std::ostream& out, const HomologySummary& h) {
  out << "euler " << h.euler << " (" << status_name(h.euler_status) << ")\n";
  if (h.early_terminated) out << "early termination: invariant spaces vanish from grade " << *h.vanishes_from << "\n";
}

int cmd_homology(const ComplexOptions& o, std::istream& in, std::ostream& out) {
  Input input = load(o.file, o.simplicial, in);
  HomologySummary h = compute(o, input.complex, true);
  const auto& labels = input.complex.labels();
  if (o.json) {
    out << homology_json(h, labels, true).dump(2) << "\n";
    return 0;
  }
  std::vector<std::vector<std::string>> rows{{"n", "dim_A", "dim_Omega", "rank_d", "dim_H"}};
  for (const auto& g : h.grades)
    rows.push_back({std::to_string(g.n), std::to_string(g.dim_A), std::to_string(g.dim_Omega),
                    std::to_string(g.rank_boundary), std::to_string(g.dim_H)});
  out << "mode " << mode_name(h.mode) << (h.reduced ? ", reduced" : "") << "\n";
  print_table(out, rows);
  print_euler(out, h);
  for (const auto& g : h.grades)
    for (const auto& c : g.generators) out << "H" << g.n << " generator: " << format_chain(c, labels) << "\n";
  return 0;
}

int cmd_omega(const ComplexOptions& o, std::istream& in, std::ostream& out) {
  Input input = load(o.file, o.simplicial, in);
  HomologySummary h = compute(o, input.complex, false);
  if (o.json) {
    json j = homology_json(h, input.complex.labels(), false);
    j.erase("euler");
    out << j.dump(2) << "\n";
    return 0;
  }
  std::vector<std::vector<std::string>> rows{{"n", "dim_A", "dim_Omega", "rank_d"}};
  for (const auto& g : h.grades)
    rows.push_back(
        {std::to_string(g.n), std::to_string(g.dim_A), std::to_string(g.dim_Omega), std::to_string(g.rank_boundary)});
  print_table(out, rows);
  return 0;
}

int cmd_euler(const ComplexOptions& o, std::istream& in, std::ostream& out) {
  Input input = load(o.file, o.simplicial, in);
  HomologySummary h = compute(o, input.complex, false);
  if (o.json) {
    json j = {{"euler", {{"value", h.euler}, {"status", status_name(h.euler_status)}}}, {"max_dim", h.max_dim}};
    out << j.dump(2) << "\n";
    return 0;
  }
  print_euler(out, h);
  return 0;
}

json move_json(const ReductionMove& m) {
  json j = {{"kind", std::string(to_string(m.kind))}, {"removed_vertex", m.removed_vertex}, {"witnesses", m.witnesses}};
  if (m.case_tag) j["case"] = std::string(to_string(*m.case_tag));
  return j;
}

int cmd_reduce(const std::string& file, bool emit_graph, bool preserving, std::istream& in, std::ostream& out) {
  DiGraph g = parse_digraph(slurp(file, in));
  ReductionResult r = reduce_fully(g, true, preserving);
  if (emit_graph) {
    out << format_digraph(r.reduced);
    return 0;
  }
  json moves = json::array();
  for (const auto& m : r.ledger.moves) moves.push_back(move_json(m));
  json j = {{"moves", moves},
            {"ledger", {{"delta_h0", r.ledger.delta_h0}, {"delta_h1", r.ledger.delta_h1}}},
            {"reduced", {{"vertices", r.reduced.labels()}, {"edges", r.reduced.num_edges()}}}};
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_op(const std::string& op, const std::vector<std::string>& files, std::istream& in, std::ostream& out) {
  const bool binary = op == "join" || op == "product" || op == "union";
  if (files.size() != (binary ? 2u : 1u))
    throw InputError("op " + op + " takes " + (binary ? "two graph files" : "one graph file"));
  DiGraph a = parse_digraph(slurp(files[0], in));
  DiGraph result;
  if (binary) {
    DiGraph b = parse_digraph(slurp(files[1], in));
    if (op == "join")
      result = join_graphs(a, b);
    else if (op == "product")
      result = cartesian_product(a, b);
    else
      result = disjoint_union(a, b);
  } else if (op == "cone") {
    result = cone(a);
  } else if (op == "sus") {
    result = suspension(a);
  } else {
    result = cylinder(a);
  }
  out << format_digraph(result);
  return 0;
}

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError(std::string("expected an integer for ") + what + ", got '" + s + "'");
}

int cmd_gen(const std::string& kind, const std::vector<std::string>& params, std::ostream& out) {
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi) throw InputError("wrong number of parameters for gen " + kind);
  };
  DiGraph g;
  if (kind == "cycle") {
    // Optional orientation word over {+,-}, one symbol per edge i -> i+1.
    need(1, 2);
    const int n = parse_int(params[0], "cycle length");
    std::vector<int> orient(static_cast<std::size_t>(std::max(n, 0)), 1);
    if (params.size() == 2) {
      if (params[1].size() != orient.size()) throw InputError("orientation word needs one symbol per edge");
      for (std::size_t k = 0; k < orient.size(); ++k) {
        if (params[1][k] != '+' && params[1][k] != '-') throw InputError("orientation symbols are '+' or '-'");
        orient[k] = params[1][k] == '+' ? 1 : -1;
      }
    }
    g = make_cycle(n, orient);
  } else if (kind == "simplex") {
    need(1, 1);
    g = make_simplex(parse_int(params[0], "simplex dimension"));
  } else if (kind == "snake") {
    need(1, 1);
    g = make_snake(parse_int(params[0], "snake length"));
  } else if (kind == "cube") {
    need(1, 1);
    g = make_cube(parse_int(params[0], "cube dimension"));
  } else if (kind == "sphere") {
    need(1, 2);
    g = make_sphere(parse_int(params[0], "sphere dimension"), params.size() == 2 ? parse_int(params[1], "base length") : 5);
  } else {
    need(1, 2);
    StarDirection dir = StarDirection::outward;
    if (params.size() == 2) {
      if (params[1] == "in")
        dir = StarDirection::inward;
      else if (params[1] != "out")
        throw InputError("star direction is 'out' or 'in'");
    }
    g = make_star(parse_int(params[0], "star size"), dir);
  }
  out << format_digraph(g);
  return 0;
}

int cmd_holes(const ComplexOptions& o, int dim, std::istream& in, std::ostream& out) {
  Input input = load(o.file, o.simplicial, in);
  const auto& labels = input.complex.labels();
  auto grades = minimized_generators(input.complex, dim, o.mode());
  std::vector<Chain> chains;
  for (auto& g : grades)
    if (g.n == dim) chains = g.chains;
  if (o.json) {
    json reps = json::array();
    for (const auto& c : chains) reps.push_back({{"chain", format_chain(c, labels)}, {"length", to_string(c.l1_norm())}});
    out << json{{"dim", dim}, {"representatives", reps}}.dump(2) << "\n";
    return 0;
  }
  out << chains.size() << " minimal representative" << (chains.size() == 1 ? "" : "s") << " in grade " << dim << "\n";
  for (const auto& c : chains) out << "length " << to_string(c.l1_norm()) << ": " << format_chain(c, labels) << "\n";
  return 0;
}

int cmd_check(const ComplexOptions& o, int depth, std::istream& in, std::ostream& out) {
  Input input = load(o.file, o.simplicial, in);
  StructuralReport r = structural_report(input.complex, depth);
  auto components = connected_components(input.complex);
  if (o.json) {
    json j = {{"regular", r.regular},      {"strictly_regular", r.strictly_regular},
              {"perfect", r.perfect},      {"perfect_depth", depth},
              {"monotone", r.monotone},    {"triangles", r.triangles},
              {"squares", r.squares},      {"components", components.size()},
              {"vertices", input.complex.num_vertices()}};
    out << j.dump(2) << "\n";
    return 0;
  }
  auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  print_table(out, {{"vertices", std::to_string(input.complex.num_vertices())},
                    {"components", std::to_string(components.size())},
                    {"regular", yn(r.regular)},
                    {"strictly regular", yn(r.strictly_regular)},
                    {"perfect (depth " + std::to_string(depth) + ")", yn(r.perfect)},
                    {"monotone", yn(r.monotone)},
                    {"triangles", std::to_string(r.triangles)},
                    {"squares", std::to_string(r.squares)}});
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Path homology of digraphs and path complexes over the rationals", "pathhom"};
  app.require_subcommand(1);

  ComplexOptions hom, omg, eul, hol, chk;
  auto* s_hom = app.add_subcommand("homology", "homology dimensions and generators");
  hom.attach(s_hom);
  auto* s_omg = app.add_subcommand("omega", "dimensions of the invariant path spaces");
  omg.attach(s_omg);
  auto* s_eul = app.add_subcommand("euler", "Euler characteristic");
  eul.attach(s_eul);

  std::string red_file;
  bool emit_graph = false, preserving = false;
  auto* s_red = app.add_subcommand("reduce", "simplify a digraph, tracking homology changes");
  s_red->add_option("file", red_file, "digraph file, '-' for stdin")->required();
  s_red->add_flag("--emit-graph", emit_graph, "print the reduced digraph instead of the move list");
  s_red->add_flag("--preserving", preserving, "only moves that keep every homology group");

  std::string op;
  std::vector<std::string> op_files;
  auto* s_op = app.add_subcommand("op", "graph operations");
  s_op->add_option("operation", op)->required()->check(CLI::IsMember({"join", "product", "cone", "sus", "cyl", "union"}));
  s_op->add_option("files", op_files, "one or two digraph files")->required();

  std::string gen_kind;
  std::vector<std::string> gen_params;
  auto* s_gen = app.add_subcommand("gen", "generate a standard digraph");
  s_gen->add_option("kind", gen_kind)->required()->check(CLI::IsMember({"cycle", "simplex", "snake", "cube", "sphere", "star"}));
  s_gen->add_option("params", gen_params, "size parameters")->required();

  int hole_dim = 1;
  auto* s_hol = app.add_subcommand("holes", "l1-minimal homology representatives");
  hol.attach(s_hol);
  s_hol->add_option("--dim", hole_dim, "grade")->required()->check(CLI::NonNegativeNumber);

  int depth = 3;
  auto* s_chk = app.add_subcommand("check", "structural report");
  chk.attach(s_chk);
  s_chk->add_option("--depth", depth, "highest grade checked for perfectness")->check(CLI::Range(2, 16));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*s_hom) return cmd_homology(hom, in, out);
    if (*s_omg) return cmd_omega(omg, in, out);
    if (*s_eul) return cmd_euler(eul, in, out);
    if (*s_red) return cmd_reduce(red_file, emit_graph, preserving, in, out);
    if (*s_op) return cmd_op(op, op_files, in, out);
    if (*s_gen) return cmd_gen(gen_kind, gen_params, out);
    if (*s_hol) return cmd_holes(hol, hole_dim, in, out);
    if (*s_chk) return cmd_check(chk, depth, in, out);
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace pathhom::cli
