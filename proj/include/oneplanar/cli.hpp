#pragma once

// Command-line front end. parse_args builds a CommandConfig, run executes it.
// Exit codes: 0 success, 1 usage, 2 validation, 3 precondition, 4 budget.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oneplanar/connectivity.hpp"
#include "oneplanar/generators.hpp"
#include "oneplanar/io.hpp"
#include "oneplanar/pipeline.hpp"
#include "oneplanar/planarity.hpp"

namespace oneplanar {

struct CommandConfig {
  std::string subcommand;
  std::string target;  // family for gen, theorem for pipeline
  std::string in, out, report, constraints;
  std::string format = "json";
  std::string mode = "cycle";
  std::string host = "octahedron";
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultBudget;
  bool budget_given = false;
  bool verify = false;
  bool connectivity = false;
  int k = 3, n = 12, depth = 2, s = 1, index = 1, max_index = 2, max_gadgets = 3;
  std::string help;  // set when --help was requested
};

inline Error usage_error(const std::string& what) { return Error(ErrorKind::usage, what); }

/// Accepts plain integers and forms like 1e7.
inline std::uint64_t parse_budget(const std::string& text) {
  double v = 0;
  std::size_t used = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw usage_error("budget: not a number: " + text);
  }
  if (used != text.size() || !std::isfinite(v) || v < 1 || v > 1e18 || v != std::floor(v))
    throw usage_error("budget: expected a positive integer, got " + text);
  return static_cast<std::uint64_t>(v);
}

inline std::uint64_t env_budget() {
  if (const char* e = std::getenv("ONEPLANAR_BUDGET"); e && *e) return parse_budget(e);
  return kDefaultBudget;
}

inline CommandConfig parse_args(int argc, const char* const* argv) {
  CommandConfig c;
  std::string budget_text;
  CLI::App app{"Locally maximal 1-planar drawings: generators, transforms and cycle solvers", kToolName};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", kToolVersion);

  auto in_opt = [&](CLI::App* a, bool required) {
    auto* o = a->add_option("--in", c.in, "input JSON file");
    if (required) o->required();
  };
  auto budget_opt = [&](CLI::App* a) { a->add_option("--budget", budget_text, "search node budget, e.g. 1e7"); };

  auto* gen = app.add_subcommand("gen", "generate a drawing or graph");
  gen->add_option("family", c.target, "family")
      ->required()
      ->check(CLI::IsMember({"theorem1", "figure1", "figure1-weak", "structure-h", "theorem2", "theorem2-family", "kleetope",
                             "random-mp", "almost-full-fixture", "locally-maximal-fixture"}));
  gen->add_option("--k", c.k, "size parameter (default 3, or 5 for the pole/ring families)")->check(CLI::Range(1, 1000));
  gen->add_option("--n", c.n, "vertex count")->check(CLI::Range(3, 100000));
  gen->add_option("--depth", c.depth, "kleetope depth")->check(CLI::Range(0, 8));
  gen->add_option("--s", c.s, "almost-full crossings in the fixture")->check(CLI::Range(1, 8));
  gen->add_option("--index", c.index, "family index")->check(CLI::Range(0, 3));
  gen->add_option("--max-gadgets", c.max_gadgets, "gadgets in the random fixture")->check(CLI::Range(0, 16));
  gen->add_option("--seed", c.seed, "random seed");
  gen->add_option("--host", c.host, "host for theorem1")->check(CLI::IsMember({"tetrahedron", "octahedron", "icosahedron"}));
  in_opt(gen, false);
  gen->add_option("--out", c.out, "output file (default stdout)");

  auto* check = app.add_subcommand("check", "validate a drawing and classify its crossings");
  in_opt(check, true);
  check->add_flag("--connectivity", c.connectivity, "report vertex connectivity and 3-cuts");

  for (const char* name : {"planarize", "extract"}) {
    auto* a = app.add_subcommand(name, std::string(name) == "planarize" ? "planarize every crossing"
                                                                        : "find a planar spanning subgraph");
    in_opt(a, true);
    a->add_option("--out", c.out, "output drawing file");
    a->add_flag("--verify", c.verify, "re-check all invariants");
    budget_opt(a);
  }

  for (const char* name : {"ham", "trace", "circ"}) {
    auto* a = app.add_subcommand(name, std::string(name) == "ham"     ? "hamiltonian cycle"
                                       : std::string(name) == "trace" ? "hamiltonian path"
                                                                      : "longest cycle");
    in_opt(a, true);
    budget_opt(a);
    a->add_option("--constraints", c.constraints, "constraints JSON file");
  }

  auto* pipe = app.add_subcommand("pipeline", "run a verified construction end to end");
  pipe->add_option("theorem", c.target, "which pipeline")
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem3", "theorem4", "theorem5", "shortness"}));
  in_opt(pipe, false);
  pipe->add_option("--mode", c.mode, "cycle or path")->check(CLI::IsMember({"cycle", "path"}));
  budget_opt(pipe);
  pipe->add_option("--report", c.report, "report file (default stdout)");
  pipe->add_option("--max-index", c.max_index, "largest family index")->check(CLI::Range(0, 3));

  auto* exp = app.add_subcommand("export", "write the planarization as DOT, GraphML or JSON");
  in_opt(exp, true);
  exp->add_option("--format", c.format, "json, dot or graphml")->check(CLI::IsMember({"json", "dot", "graphml"}));
  exp->add_option("--out", c.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    std::ostringstream o, err;
    app.exit(e, o, err);
    c.help = o.str();
    return c;
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, err;
    app.exit(e, o, err);
    throw usage_error(err.str().empty() ? e.what() : err.str());
  }

  c.subcommand = app.get_subcommands().front()->get_name();
  if (c.subcommand == "gen" && gen->count("--k") == 0 && (c.target == "theorem2" || c.target == "structure-h")) c.k = 5;
  c.budget = env_budget();
  if (!budget_text.empty()) {
    c.budget = parse_budget(budget_text);
    c.budget_given = true;
  }
  if (c.subcommand == "pipeline" && c.target != "shortness" && c.in.empty())
    throw usage_error("pipeline " + c.target + " needs --in");
  if (c.subcommand == "pipeline" && c.target == "shortness" && !c.in.empty())
    throw usage_error("pipeline shortness takes no --in");
  if (c.subcommand == "gen" && c.target == "theorem1" && !c.in.empty() && gen->count("--host") > 0)
    throw usage_error("gen theorem1: --in and --host conflict");
  return c;
}

inline CommandConfig parse_args(const std::vector<std::string>& args) {
  std::vector<const char*> argv{kToolName};
  for (const auto& a : args) argv.push_back(a.c_str());
  return parse_args(static_cast<int>(argv.size()), argv.data());
}

namespace detail {

inline int exit_for(const std::string& status) {
  if (status == "verified") return 0;
  if (status == "precondition_failed") return static_cast<int>(ErrorKind::precondition);
  if (status == "budget_exhausted") return static_cast<int>(ErrorKind::budget);
  return static_cast<int>(ErrorKind::validation);
}

inline void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text(path, text);
  }
}

inline Drawing generate(const CommandConfig& c, json& extra) {
  const std::string& f = c.target;
  if (f == "theorem1") {
    Graph h = !c.in.empty()            ? graph_from_any(parse_json(read_text(c.in)))
              : c.host == "tetrahedron" ? complete_graph(4)
              : c.host == "icosahedron" ? icosahedron()
                                        : octahedron();
    return theorem1_expand(h);
  }
  if (f == "figure1") return figure1_family(c.k);
  if (f == "figure1-weak") return figure1_weak_variant(c.k);
  if (f == "theorem2") return theorem2_graph(c.k);
  if (f == "structure-h") {
    auto h = structure_h(c.k);
    extra["stubs"] = h.stubs;
    return h.drawing;
  }
  if (f == "almost-full-fixture") return almost_full_test_instance(c.s);
  if (f == "locally-maximal-fixture") return random_locally_maximal(c.seed, c.max_gadgets);
  throw usage_error("gen: unknown drawing family " + f);
}

inline json check_graph(const Graph& g, bool connectivity) {
  json j;
  j["vertices"] = g.order();
  j["edges"] = g.size();
  if (g.order() >= 3) {
    const auto b = edge_bound_check(g);
    j["edge_bound"] = {{"bound", b.bound}, {"holds", b.holds}, {"optimal", b.optimal}};
  }
  if (connectivity) {
    const auto r = vertex_connectivity(g);
    j["connectivity"] = r.connectivity;
    j["witness"] = r.witness_cut ? json(*r.witness_cut) : json(nullptr);
    j["three_cuts"] = r.connectivity == 3 ? json(enumerate_3cuts(g).size()) : json(nullptr);
  }
  return j;
}

inline int run_gen(const CommandConfig& c, std::ostream& out) {
  const std::string& f = c.target;
  if (f == "kleetope" || f == "random-mp" || f == "theorem2-family") {
    json j;
    if (f == "kleetope") j = to_json(moon_moser_kleetope(c.depth));
    if (f == "random-mp") j = to_json(random_maximal_planar(c.n, c.seed));
    if (f == "theorem2-family") {
      auto fam = theorem2_family(c.index);
      const auto& m = fam.back();
      j["graph"] = to_json(m.graph);
      j["stats"] = {{"index", m.stats.index},
                    {"black", m.stats.black},
                    {"white", m.stats.white},
                    {"vertices", m.stats.vertex_count},
                    {"recurrences_hold", m.stats.recurrences_hold}};
    }
    emit(c.out, dump(j), out);
    return 0;
  }
  json extra;
  json j = to_json(generate(c, extra));
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  emit(c.out, dump(j), out);
  return 0;
}

inline int run_check(const CommandConfig& c, std::ostream& out) {
  const std::string bytes = read_text(c.in);
  const json in = parse_json(bytes);
  json j;
  if (in.is_object() && in.contains("rotation")) {
    const Drawing d = drawing_from_json(in);
    j = check_graph(d.base(), c.connectivity);
    j["valid"] = true;
    j["crossings"] = d.crossing_count();
    const auto m = maximality_class(d);
    j["maximality"] = {{"class", to_string(m.cls)}, {"full", m.full}, {"almost_full", m.almost_full}, {"other", m.other}};
  } else {
    const Graph g = graph_from_any(in);
    j = check_graph(g, c.connectivity);
    j["planar"] = is_planar(g);
  }
  out << dump(with_provenance(j, bytes));
  return 0;
}

inline int run_planarize(const CommandConfig& c, std::ostream& out) {
  const std::string bytes = read_text(c.in);
  const Drawing d = drawing_from_json(parse_json(bytes));
  const auto p = planarize_all(d, PlanarizeOrder::almost_full_first, c.verify);
  json j;
  json recs = json::array();
  for (const auto& r : p.records) recs.push_back(to_json(r));
  j["records"] = recs;
  j["vertices"] = p.plane.vertex_count();
  bool ok = true;
  if (c.verify) {
    json checks = json::array();
    const bool valid = validate_drawing(p.plane).empty() && p.plane.crossing_count() == 0;
    checks.push_back({{"name", "plane drawing valid"}, {"pass", valid}});
    ok = valid;
    Graph after = p.plane.base();
    for (std::size_t i = 0; i < p.records.size(); ++i) {
      const Graph& next = i + 1 < p.before.size() ? p.before[i + 1] : after;
      const auto bad = check_planarize_step(p.before[i], next, p.records[i]);
      checks.push_back({{"name", "step " + std::to_string(i)}, {"pass", bad.empty()}, {"violations", bad}});
      ok = ok && bad.empty();
    }
    j["checks"] = checks;
  }
  j["status"] = ok ? "verified" : "failed";
  if (!c.out.empty()) write_drawing(c.out, p.plane);
  out << dump(with_provenance(j, bytes));
  return ok ? 0 : static_cast<int>(ErrorKind::validation);
}

inline int run_extract(const CommandConfig& c, std::ostream& out) {
  const std::string bytes = read_text(c.in);
  const Drawing d = drawing_from_json(parse_json(bytes));
  const auto e = c.budget_given ? extract_planar_spanning(d, c.budget) : extract_planar_spanning(d);
  json j;
  j["found"] = e.found;
  j["tried"] = e.tried;
  j["normalized"] = e.normalized;
  j["choice"] = e.choice;
  int code = static_cast<int>(ErrorKind::precondition);
  if (e.found && e.plane) {
    const Graph& g = e.plane->base();
    const bool planar = is_planar(g), spanning = g.order() == d.vertex_count(), three = is_three_connected(g);
    j["checks"] = {{"planar", planar}, {"spanning", spanning}, {"three_connected", three}};
    if (c.verify) j["checks"]["drawing_valid"] = validate_drawing(*e.plane).empty();
    code = planar && spanning && three ? 0 : static_cast<int>(ErrorKind::validation);
    if (!c.out.empty()) write_drawing(c.out, *e.plane);
  }
  out << dump(with_provenance(j, bytes));
  return code;
}

inline int run_solver(const CommandConfig& c, std::ostream& out) {
  const std::string bytes = read_text(c.in);
  const Graph g = graph_from_any(parse_json(bytes));
  json j;
  int code = 0;
  if (c.subcommand == "circ") {
    if (!c.constraints.empty()) throw usage_error("circ: --constraints is not supported");
    const auto r = longest_cycle(g, c.budget);
    j = to_json(r, true);
    if (!r.cycle.empty()) j["verified"] = verify_certificate(g, Certificate::cycle(r.cycle));
    if (!r.optimal) code = static_cast<int>(ErrorKind::budget);
  } else {
    SolveConstraints sc;
    if (!c.constraints.empty()) sc = constraints_from_json(parse_json(read_text(c.constraints)));
    sc.budget = c.budget;
    const auto r = c.subcommand == "ham" ? hamiltonian_cycle(g, sc) : hamiltonian_path(g, sc);
    j = to_json(r);
    if (r.certificate) j["verified"] = verify_certificate(g, *r.certificate);
    if (r.status == SolveStatus::budget_exhausted) code = static_cast<int>(ErrorKind::budget);
  }
  out << dump(with_provenance(j, bytes));
  return code;
}

inline int run_pipeline(const CommandConfig& c, std::ostream& out) {
  if (c.target == "shortness") {
    json rows = json::array();
    for (const auto& r : run_shortness_table(c.max_index)) {
      rows.push_back({{"index", r.index},
                      {"vertices", r.vertices},
                      {"white", r.white},
                      {"circ_upper_bound", r.circ_bound},
                      {"log_ratio", r.log_ratio}});
    }
    emit(c.report, dump(with_provenance({{"table", "circumference upper bounds"}, {"rows", rows}}, "")), out);
    return 0;
  }
  const std::string bytes = read_text(c.in);
  const json in = parse_json(bytes);
  const WalkMode mode = c.mode == "path" ? WalkMode::path : WalkMode::cycle;
  TheoremReport r;
  if (c.target == "theorem1") {
    r = run_theorem1_report(graph_from_any(in), c.budget, c.in);
  } else {
    const Drawing d = drawing_from_json(in);
    if (c.target == "theorem3") r = run_theorem3(d, mode, c.budget, c.in);
    if (c.target == "theorem4") r = run_theorem4(d, mode, c.budget, c.in);
    if (c.target == "theorem5") r = run_theorem5(d, c.in);
  }
  emit(c.report, dump(with_provenance(to_json(r), bytes)), out);
  return exit_for(r.status);
}

inline int run_export(const CommandConfig& c, std::ostream& out) {
  const Drawing d = read_drawing(c.in);
  const std::string text = c.format == "dot" ? to_dot(d) : c.format == "graphml" ? to_graphml(d) : serialize(d);
  emit(c.out, text, out);
  return 0;
}

}  // namespace detail

/// Executes a parsed command; errors become their exit codes.
inline int run(const CommandConfig& c, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  if (!c.help.empty()) {
    out << c.help;
    return 0;
  }
  try {
    if (c.subcommand == "gen") return detail::run_gen(c, out);
    if (c.subcommand == "check") return detail::run_check(c, out);
    if (c.subcommand == "planarize") return detail::run_planarize(c, out);
    if (c.subcommand == "extract") return detail::run_extract(c, out);
    if (c.subcommand == "ham" || c.subcommand == "trace" || c.subcommand == "circ") return detail::run_solver(c, out);
    if (c.subcommand == "pipeline") return detail::run_pipeline(c, out);
    if (c.subcommand == "export") return detail::run_export(c, out);
    throw usage_error("unknown subcommand " + c.subcommand);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::validation);
  }
}

inline int main_entry(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CommandConfig c;
  try {
    c = parse_args(argc, argv);
  } catch (const Error& e) {
    err << e.what();
    if (std::string(e.what()).back() != '\n') err << "\n";
    return static_cast<int>(e.kind());
  }
  return run(c, out, err);
}

}  // namespace oneplanar
