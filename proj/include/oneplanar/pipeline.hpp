#pragma once

// End-to-end drivers. Each one checks its preconditions, runs the chain of
// transforms and solvers, and re-verifies the final certificate against the
// input graph. Failed preconditions are reported, not thrown.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oneplanar/connectivity.hpp"
#include "oneplanar/drawing.hpp"
#include "oneplanar/generators.hpp"
#include "oneplanar/graph.hpp"
#include "oneplanar/solve.hpp"
#include "oneplanar/transform.hpp"

namespace oneplanar {

enum class WalkMode { cycle, path };

inline const char* to_string(WalkMode m) { return m == WalkMode::cycle ? "cycle" : "path"; }

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct TheoremReport {
  std::string theorem;
  std::string input;
  /// verified, precondition_failed, budget_exhausted, not_found, failed
  std::string status = "failed";
  std::vector<Check> checks;
  std::optional<Certificate> certificate;
  std::optional<Drawing> subgraph;
  std::map<std::string, long long> values;
  bool reconstructed = false;
  std::uint64_t explored = 0;
  double millis = 0;

  bool ok() const { return status == "verified"; }

  bool check(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
    return pass;
  }

  bool all_checks_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
};

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s;
}

/// Planarizes the remaining (full) crossings of d, solves on the plane graph
/// and lifts back to d's graph. Returns nothing when the solver does not find a walk.
inline std::optional<std::vector<Vertex>> solve_through_planarization(const Drawing& d, WalkMode mode,
                                                                      const SolveConstraints& constraints,
                                                                      TheoremReport& report) {
  const auto pa = planarize_all(d, PlanarizeOrder::almost_full_first, true);
  report.values["plane_vertices"] = pa.plane.vertex_count();
  const Graph& plane = pa.plane.base();
  const bool closed = mode == WalkMode::cycle;
  const SolveResult r = closed ? hamiltonian_cycle(plane, constraints) : hamiltonian_path(plane, constraints);
  report.explored += r.explored;
  report.check("solver", r.status == SolveStatus::found, to_string(r.status));
  if (r.status == SolveStatus::budget_exhausted) report.status = "budget_exhausted";
  if (!r.certificate) return std::nullopt;
  std::vector<Vertex> walk = r.certificate->vertices;
  for (std::size_t j = pa.records.size(); j-- > 0;) {
    walk = closed ? lift_cycle(pa.before[j], walk, pa.records[j]) : lift_path(pa.before[j], walk, pa.records[j]);
  }
  return walk;
}

inline bool certify(TheoremReport& report, const Graph& g, const std::vector<Vertex>& walk, WalkMode mode) {
  Certificate c = mode == WalkMode::cycle ? Certificate::cycle(walk) : Certificate::path(walk);
  const bool ok = mode == WalkMode::cycle ? is_hamiltonian_cycle(g, walk) : is_hamiltonian_path(g, walk);
  report.check("certificate verifies in input graph", ok && verify_certificate(g, c));
  if (ok) {
    report.certificate = std::move(c);
    report.status = "verified";
  } else {
    report.status = "failed";
  }
  return ok;
}

}  // namespace detail

/// Locally maximal input with few 3-cuts: planarize everything, solve, lift.
inline TheoremReport run_theorem3(const Drawing& d, WalkMode mode = WalkMode::cycle, std::uint64_t budget = kDefaultBudget,
                                  std::string input = "drawing") {
  detail::Stopwatch clock;
  TheoremReport rep;
  rep.theorem = "theorem3";
  rep.input = std::move(input);
  rep.values["vertices"] = d.vertex_count();
  rep.values["crossings"] = d.crossing_count();
  const auto problems = validate_drawing(d);
  bool pre = rep.check("valid drawing", problems.empty(), problems.empty() ? "" : problems.front());
  if (pre) {
    const auto m = maximality_class(d);
    pre &= rep.check("locally maximal", m.cls == Maximality::locally_maximal, to_string(m.cls));
    const auto kc = d.vertex_count() > 3 ? vertex_connectivity(d.base()).connectivity : 0;
    rep.values["connectivity"] = kc;
    pre &= rep.check("3-connected", kc >= 3, std::to_string(kc));
    if (pre) {
      const auto cuts = enumerate_3cuts(d.base());
      const int limit = mode == WalkMode::cycle ? 3 : 4;
      rep.values["three_cuts"] = static_cast<long long>(cuts.size());
      pre &= rep.check("3-cut count within limit", static_cast<int>(cuts.size()) <= limit,
                       std::to_string(cuts.size()) + " <= " + std::to_string(limit));
    }
  }
  if (!pre) {
    rep.status = "precondition_failed";
    rep.millis = clock.millis();
    return rep;
  }
  SolveConstraints c;
  c.budget = budget;
  if (auto walk = detail::solve_through_planarization(d, mode, c, rep)) {
    detail::certify(rep, d.base(), *walk, mode);
  } else if (rep.status != "budget_exhausted") {
    rep.status = "not_found";
  }
  rep.millis = clock.millis();
  return rep;
}

/// Weakly locally maximal, 4-connected input with few almost-full crossings.
/// Each almost-full crossing becomes a vertex v with a helper u on N(v)'s
/// middle edge; the result is solved with property (*) as hit sets, then the
/// helpers are stripped and every v resolved.
inline TheoremReport run_theorem4(const Drawing& d, WalkMode mode = WalkMode::cycle, std::uint64_t budget = kDefaultBudget,
                                  std::string input = "drawing") {
  detail::Stopwatch clock;
  TheoremReport rep;
  rep.theorem = "theorem4";
  rep.input = input;
  rep.reconstructed = mode == WalkMode::path;
  rep.values["vertices"] = d.vertex_count();
  rep.values["crossings"] = d.crossing_count();
  const auto problems = validate_drawing(d);
  bool pre = rep.check("valid drawing", problems.empty(), problems.empty() ? "" : problems.front());
  MaximalityClass m;
  if (pre) {
    m = maximality_class(d);
    pre &= rep.check("weakly locally maximal", m.cls != Maximality::neither, to_string(m.cls));
    const auto kc = d.vertex_count() > 4 ? vertex_connectivity(d.base()).connectivity : 0;
    rep.values["connectivity"] = kc;
    pre &= rep.check("4-connected", kc >= 4, std::to_string(kc));
    const int limit = mode == WalkMode::cycle ? 3 : 4;
    rep.values["almost_full"] = m.almost_full;
    pre &= rep.check("almost-full count within limit", m.almost_full <= limit,
                     std::to_string(m.almost_full) + " <= " + std::to_string(limit));
  }
  if (!pre) {
    rep.status = "precondition_failed";
    rep.millis = clock.millis();
    return rep;
  }
  if (m.almost_full == 0) {
    TheoremReport inner = run_theorem3(d, mode, budget, input);
    inner.theorem = "theorem4";
    inner.reconstructed = rep.reconstructed;
    inner.checks.insert(inner.checks.begin(), rep.checks.begin(), rep.checks.end());
    inner.millis = clock.millis();
    return inner;
  }

  // Almost-full crossings become vertices first, so every helper u comes
  // after every v and the graphs in `before` carry no helpers.
  Drawing cur = d;
  std::vector<PlanarizationRecord> records;
  std::vector<Graph> before;
  while (true) {
    const auto infos = classify_all(cur);
    auto it = std::find_if(infos.begin(), infos.end(), [](const CrossingInfo& i) { return i.cls == CrossingClass::almost_full; });
    if (it == infos.end()) break;
    before.push_back(cur.base());
    auto step = planarize_crossing(cur, it->node);
    records.push_back(step.record);
    cur = std::move(step.drawing);
  }
  std::vector<GadgetRecord> gadgets;
  for (const auto& r : records) {
    auto g = add_u_gadget(cur, r);
    gadgets.push_back(g.gadget);
    cur = std::move(g.drawing);
  }
  const int s = static_cast<int>(gadgets.size());
  rep.values["gadgets"] = s;
  rep.check("H locally maximal", maximality_class(cur).cls == Maximality::locally_maximal);
  const auto cuts = enumerate_3cuts(cur.base());
  std::vector<std::array<Vertex, 3>> expected;
  for (const auto& g : gadgets) {
    std::array<Vertex, 3> t{g.v, g.b, g.c};
    std::sort(t.begin(), t.end());
    expected.push_back(t);
  }
  std::sort(expected.begin(), expected.end());
  std::vector<std::array<Vertex, 3>> found;
  for (const auto& c : cuts) found.push_back(c.cut);
  rep.values["H_three_cuts"] = static_cast<long long>(cuts.size());
  rep.check("H has exactly the gadget neighbourhoods as 3-cuts", found == expected,
            std::to_string(found.size()) + " cuts, " + std::to_string(s) + " gadgets");

  SolveConstraints c;
  c.budget = budget;
  for (const auto& g : gadgets) c.required_hit_sets.push_back(gadget_triangle(g));
  for (const auto& e : c.required_hit_sets)
    for (const auto& x : e)
      if (auto id = cur.base().edge_id(x.u, x.v); !id || cur.crossing_of(*id)) {
        rep.check("property (*) edges uncrossed", false);
        rep.status = "failed";
        rep.millis = clock.millis();
        return rep;
      }
  auto walk = detail::solve_through_planarization(cur, mode, c, rep);
  if (!walk) {
    if (rep.status != "budget_exhausted") rep.status = "not_found";
    rep.millis = clock.millis();
    return rep;
  }
  const bool closed = mode == WalkMode::cycle;
  rep.check("walk of H verifies", closed ? is_hamiltonian_cycle(cur.base(), *walk) : is_hamiltonian_path(cur.base(), *walk));
  const auto back = strip_u_and_resolve(*walk, gadgets, records, before, closed);
  detail::certify(rep, d.base(), back, mode);
  rep.millis = clock.millis();
  return rep;
}

/// 3-connected planar spanning subgraph of a locally maximal drawing. For
/// inputs that are only weakly locally maximal, reports the precondition
/// failure and counts how many per-crossing choices would still work.
inline TheoremReport run_theorem5(const Drawing& d, std::string input = "drawing") {
  detail::Stopwatch clock;
  TheoremReport rep;
  rep.theorem = "theorem5";
  rep.input = std::move(input);
  rep.values["vertices"] = d.vertex_count();
  rep.values["crossings"] = d.crossing_count();
  const auto problems = validate_drawing(d);
  bool pre = rep.check("valid drawing", problems.empty(), problems.empty() ? "" : problems.front());
  if (!pre) {
    rep.status = "precondition_failed";
    return rep;
  }
  const auto m = maximality_class(d);
  const auto kc = d.vertex_count() > 3 ? vertex_connectivity(d.base()).connectivity : 0;
  rep.values["connectivity"] = kc;
  pre &= rep.check("3-connected", kc >= 3, std::to_string(kc));
  pre &= rep.check("locally maximal", m.cls == Maximality::locally_maximal, to_string(m.cls));
  if (!pre) {
    rep.status = "precondition_failed";
    if (d.crossing_count() <= 16 && m.cls != Maximality::locally_maximal) {
      // Tightness scan: every choice vector, counted.
      long long good = 0;
      const int c = d.crossing_count();
      for (long long mask = 0; mask < (1LL << c); ++mask) {
        std::vector<int> choice(static_cast<std::size_t>(c));
        for (int i = 0; i < c; ++i) choice[static_cast<std::size_t>(i)] = static_cast<int>((mask >> (c - 1 - i)) & 1);
        const Drawing p = remove_one_edge_per_crossing(d, choice);
        if (is_valid(p) && is_three_connected(p.base())) ++good;
      }
      rep.values["choices"] = 1LL << c;
      rep.values["good_choices"] = good;
    }
    rep.millis = clock.millis();
    return rep;
  }
  const Extraction ex = extract_planar_spanning(d);
  rep.values["choices_tried"] = static_cast<long long>(ex.tried);
  if (!ex.found) {
    rep.check("spanning 3-connected plane subgraph found", false, "exhausted every choice");
    rep.status = "not_found";
    rep.millis = clock.millis();
    return rep;
  }
  const Drawing& p = *ex.plane;
  const Graph& g = p.base();
  const auto out_k = vertex_connectivity(g).connectivity;
  rep.values["output_connectivity"] = out_k;
  rep.values["output_edges"] = g.size();
  bool ok = rep.check("spanning", g.order() == d.vertex_count());
  ok &= rep.check("plane, Euler face count", p.crossing_count() == 0 && is_valid(p));
  ok &= rep.check("3-connected", out_k >= 3, std::to_string(out_k));
  const Drawing& src = ex.normalized ? normalize(d) : d;
  ok &= rep.check("one edge lost per crossing", g.size() == d.base().size() - src.crossing_count());
  bool subgraph = true;
  for (const auto& e : g.edges()) subgraph = subgraph && d.base().adjacent(e.u, e.v);
  ok &= rep.check("subgraph of input", subgraph);
  rep.subgraph = p;
  rep.status = ok ? "verified" : "failed";
  rep.millis = clock.millis();
  return rep;
}

// ---------------------------------------------------------------------------
// Circumference of the gadget expansion

/// Old vertices of a cycle of the expansion, in cycle order. Between two
/// consecutive old vertices the cycle runs inside one gadget, so they share a face.
inline std::vector<Vertex> shrink_to_host(const std::vector<Vertex>& cycle, int host_order) {
  std::vector<Vertex> out;
  for (Vertex v : cycle)
    if (v < host_order) out.push_back(v);
  return out;
}

/// Whether shrinking `cycle` gives a host cycle (or edge) with at least a
/// quarter of its length.
inline bool shrink_check(const Graph& host, const std::vector<Vertex>& cycle) {
  const auto old = shrink_to_host(cycle, host.order());
  if (4 * old.size() < cycle.size()) return false;
  if (old.size() >= 3) return verify_certificate(host, Certificate::cycle(old));
  if (old.size() == 2) return host.adjacent(old[0], old[1]);
  return true;
}

inline TheoremReport run_theorem1_report(const Graph& h, std::uint64_t budget = kDefaultBudget, std::string input = "graph") {
  detail::Stopwatch clock;
  TheoremReport rep;
  rep.theorem = "theorem1";
  rep.input = std::move(input);
  const int n = h.order();
  if (!rep.check("maximal planar host", detail::is_maximal_planar(h))) {
    rep.status = "precondition_failed";
    return rep;
  }
  const Drawing d = theorem1_expand(h);
  const Graph& g = d.base();
  rep.values["host_vertices"] = n;
  rep.values["vertices"] = g.order();
  rep.values["edges"] = g.size();
  bool ok = rep.check("7n-12 vertices", g.order() == 7 * n - 12);
  ok &= rep.check("27n-54 edges", g.size() == 27 * n - 54);
  const auto kc = vertex_connectivity(g).connectivity;
  ok &= rep.check("connectivity 3", kc == 3, std::to_string(kc));
  ok &= rep.check("locally maximal", maximality_class(d).cls == Maximality::locally_maximal);
  ok &= rep.check("edge bound", edge_bound_check(g).holds);

  LongestOptions ho;
  ho.budget = budget;
  const auto hc = longest_cycle(h, ho);
  rep.explored += hc.explored;
  ok &= rep.check("circ(H) exact", hc.optimal, std::to_string(hc.length));
  rep.values["circ_host"] = hc.length;
  const int target = 4 * hc.length + 1;
  rep.values["bound"] = 4 * hc.length;

  std::vector<Vertex> old(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) old[static_cast<std::size_t>(v)] = v;
  bool exact_done = false;
  if (target > g.order()) {
    rep.check("bound is vacuous (4 circ(H) >= |V(G)|)", true);
    exact_done = true;
  } else if (separator_cycle_bound(g, old) < target || g.order() <= 30) {
    LongestOptions o;
    o.budget = budget;
    o.separator = old;
    const auto r = cycle_at_least(g, target, o);
    rep.explored += r.explored;
    rep.check("no cycle longer than 4 circ(H)", r.status == SolveStatus::proven_absent, to_string(r.status));
    ok &= r.status != SolveStatus::found;
    exact_done = r.status == SolveStatus::proven_absent;
  }
  // Independent check: shrink long cycles found by a budgeted search.
  LongestOptions lo;
  lo.budget = std::min<std::uint64_t>(budget, 2'000'000);
  lo.separator = old;
  const auto lc = longest_cycle(g, lo);
  rep.explored += lc.explored;
  std::vector<std::vector<Vertex>> cycles = lc.improvements;
  if (cycles.size() > 50) cycles.erase(cycles.begin(), cycles.end() - 50);
  bool shrink_ok = true;
  for (const auto& cyc : cycles) shrink_ok = shrink_ok && shrink_check(h, cyc);
  rep.values["shrunk_cycles"] = static_cast<long long>(cycles.size());
  rep.values["longest_found"] = lc.length;
  ok &= rep.check("every shrunk cycle keeps a quarter of its length", shrink_ok && !cycles.empty());
  if (!lc.cycle.empty()) rep.certificate = Certificate::cycle(lc.cycle);
  rep.values["exact"] = exact_done ? 1 : 0;
  rep.status = ok ? "verified" : "failed";
  rep.millis = clock.millis();
  return rep;
}

// ---------------------------------------------------------------------------
// Upper-bound table for the recursive family

struct ShortnessRow {
  int index = 0;
  long vertices = 0;
  long white = 0;
  long circ_bound = 0;
  double log_ratio = 0;  // log(circ_bound) / log(vertices)
};

/// Circumference upper bounds 2(n - |white|) for G_0..G_max. An upper-bound
/// table only; it says nothing about the limit.
inline std::vector<ShortnessRow> run_shortness_table(int max_index) {
  if (max_index < 0 || max_index > 3) throw precondition_error("run_shortness_table: index must be in 0..3");
  std::vector<ShortnessRow> rows;
  for (const auto& m : theorem2_family(max_index)) {
    const auto whites = m.graph.vertices_with(Color::white);
    const auto b = independence_bounds(m.graph, whites);
    ShortnessRow r;
    r.index = m.stats.index;
    r.vertices = m.stats.vertex_count;
    r.white = m.stats.white;
    r.circ_bound = b.circ_upper;
    r.log_ratio = std::log(static_cast<double>(r.circ_bound)) / std::log(static_cast<double>(r.vertices));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace oneplanar
