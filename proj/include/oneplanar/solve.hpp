#pragma once

// Exact desk-scale cycle and path search.
//
// Hamiltonian search extends a path from a fixed start vertex over adjacency
// lists, lowest remaining degree first, and prunes when an unvisited vertex
// can no longer receive two path edges or the unvisited part stops being
// reachable from the path end. Longest-cycle search is branch and bound with
// a reachability bound and a separator bound: if the remaining path has to
// pass through k vertices of a set X, it splits into at most k + 1 pieces
// outside X, each inside one component of the rest.
//
// Budgets count search nodes, so results are reproducible.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "oneplanar/graph.hpp"

namespace oneplanar {

inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

enum class SolveStatus { found, proven_absent, budget_exhausted };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::found: return "found";
    case SolveStatus::proven_absent: return "proven_absent";
    case SolveStatus::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

struct SolveConstraints {
  /// At most one edge of each pair may be used.
  std::vector<std::pair<Edge, Edge>> forbidden_pairs;
  /// Every set must share at least one edge with the solution.
  std::vector<std::vector<Edge>> required_hit_sets;
  /// Path mode only: allowed end vertices (empty = any).
  std::vector<Vertex> endpoints;
  std::uint64_t budget = kDefaultBudget;
};

struct SolveResult {
  SolveStatus status = SolveStatus::budget_exhausted;
  std::optional<Certificate> certificate;
  std::uint64_t explored = 0;
};

/// Checks a cycle or path against the side constraints.
inline bool satisfies(const std::vector<Vertex>& walk, bool closed, const SolveConstraints& c) {
  auto used = walk_edges(walk, closed);
  std::sort(used.begin(), used.end());
  auto has = [&](const Edge& e) { return std::binary_search(used.begin(), used.end(), make_edge(e.u, e.v)); };
  for (const auto& [a, b] : c.forbidden_pairs)
    if (has(a) && has(b)) return false;
  for (const auto& set : c.required_hit_sets)
    if (std::none_of(set.begin(), set.end(), has)) return false;
  if (!closed && !c.endpoints.empty() && !walk.empty()) {
    auto allowed = [&](Vertex v) { return std::find(c.endpoints.begin(), c.endpoints.end(), v) != c.endpoints.end(); };
    if (!allowed(walk.front()) || !allowed(walk.back())) return false;
  }
  return true;
}

namespace detail {

struct BudgetExhausted {};

class HamiltonSearch {
 public:
  HamiltonSearch(const Graph& g, const SolveConstraints& c) : g_(g), budget_(c.budget) {
    const int n = g.order();
    on_path_.assign(static_cast<std::size_t>(n), 0);
    edge_used_.assign(static_cast<std::size_t>(g.size()), 0);
    partner_.assign(static_cast<std::size_t>(g.size()), {});
    banned_.assign(static_cast<std::size_t>(g.size()), 0);
    for (const auto& [a, b] : c.forbidden_pairs) {
      const EdgeId ea = require_edge(a);
      const EdgeId eb = require_edge(b);
      if (ea == eb) {
        banned_[static_cast<std::size_t>(ea)] = 1;  // a pair of one edge forbids it outright
        continue;
      }
      partner_[static_cast<std::size_t>(ea)].push_back(eb);
      partner_[static_cast<std::size_t>(eb)].push_back(ea);
    }
    for (const auto& set : c.required_hit_sets) {
      std::vector<EdgeId> ids;
      for (const auto& e : set) ids.push_back(require_edge(e));
      hit_sets_.push_back(std::move(ids));
    }
  }

  SolveResult run() {
    SolveResult r;
    const int n = g_.order();
    if (n < 3) {
      r.status = SolveStatus::proven_absent;
      return r;
    }
    Vertex s = 0;
    for (Vertex v = 1; v < n; ++v)
      if (g_.degree(v) < g_.degree(s)) s = v;
    start_ = s;
    path_ = {s};
    on_path_[static_cast<std::size_t>(s)] = 1;
    try {
      const bool ok = extend();
      r.status = ok ? SolveStatus::found : SolveStatus::proven_absent;
      if (ok) r.certificate = Certificate::cycle(path_);
    } catch (const BudgetExhausted&) {
      r.status = SolveStatus::budget_exhausted;
    }
    r.explored = nodes_;
    return r;
  }

 private:
  EdgeId require_edge(const Edge& e) const {
    auto id = g_.edge_id(e.u, e.v);
    if (!id) throw precondition_error("solve constraint references a missing edge");
    return *id;
  }

  EdgeId id_of(Vertex a, Vertex b) const { return *g_.edge_id(a, b); }

  bool conflicts(EdgeId e) const {
    if (banned_[static_cast<std::size_t>(e)]) return true;
    for (EdgeId p : partner_[static_cast<std::size_t>(e)])
      if (edge_used_[static_cast<std::size_t>(p)]) return true;
    return false;
  }

  bool is_free(Vertex x, Vertex end) const { return !on_path_[static_cast<std::size_t>(x)] || x == end || x == start_; }

  bool hit_sets_alive(Vertex end) const {
    for (const auto& set : hit_sets_) {
      bool alive = false;
      for (EdgeId e : set) {
        const Edge& ed = g_.edge(e);
        if (edge_used_[static_cast<std::size_t>(e)] || (is_free(ed.u, end) && is_free(ed.v, end))) {
          alive = true;
          break;
        }
      }
      if (!alive) return false;
    }
    return true;
  }

  bool hit_sets_done() const {
    for (const auto& set : hit_sets_) {
      if (std::none_of(set.begin(), set.end(), [&](EdgeId e) { return edge_used_[static_cast<std::size_t>(e)] != 0; }))
        return false;
    }
    return true;
  }

  bool feasible(Vertex end) const {
    const int n = g_.order();
    const int remaining = n - static_cast<int>(path_.size());
    if (remaining == 0) return true;
    for (Vertex x = 0; x < n; ++x) {
      if (on_path_[static_cast<std::size_t>(x)]) continue;
      int avail = 0;
      for (Vertex y : g_.neighbors(x))
        if (!on_path_[static_cast<std::size_t>(y)] || y == end || y == start_) ++avail;
      if (avail < 2) return false;
    }
    // The unvisited vertices must hang together behind the path end and
    // reach back to the start.
    std::vector<Vertex> stack{end};
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    seen[static_cast<std::size_t>(end)] = 1;
    int reached = 0;
    bool touches_start = false;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g_.neighbors(x)) {
        if (y == start_ && x != end) touches_start = true;
        if (on_path_[static_cast<std::size_t>(y)] || seen[static_cast<std::size_t>(y)]) continue;
        seen[static_cast<std::size_t>(y)] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
    return reached == remaining && touches_start && hit_sets_alive(end);
  }

  bool extend() {
    if (++nodes_ > budget_) throw BudgetExhausted{};
    const Vertex end = path_.back();
    const int n = g_.order();
    if (static_cast<int>(path_.size()) == n) {
      if (!g_.adjacent(end, start_)) return false;
      const EdgeId close = id_of(end, start_);
      if (conflicts(close)) return false;
      edge_used_[static_cast<std::size_t>(close)] = 1;
      const bool ok = hit_sets_done();
      edge_used_[static_cast<std::size_t>(close)] = 0;
      return ok;
    }
    if (!feasible(end)) return false;

    std::vector<std::pair<int, Vertex>> next;
    for (Vertex y : g_.neighbors(end)) {
      if (on_path_[static_cast<std::size_t>(y)]) continue;
      int free_deg = 0;
      for (Vertex z : g_.neighbors(y)) free_deg += on_path_[static_cast<std::size_t>(z)] ? 0 : 1;
      next.emplace_back(free_deg, y);
    }
    std::sort(next.begin(), next.end());
    for (auto [deg, y] : next) {
      (void)deg;
      const EdgeId e = id_of(end, y);
      if (conflicts(e)) continue;
      edge_used_[static_cast<std::size_t>(e)] = 1;
      on_path_[static_cast<std::size_t>(y)] = 1;
      path_.push_back(y);
      if (extend()) return true;
      path_.pop_back();
      on_path_[static_cast<std::size_t>(y)] = 0;
      edge_used_[static_cast<std::size_t>(e)] = 0;
    }
    return false;
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
  std::vector<char> on_path_;
  std::vector<char> edge_used_;
  std::vector<std::vector<EdgeId>> partner_;
  std::vector<char> banned_;
  std::vector<std::vector<EdgeId>> hit_sets_;
};

/// g plus one vertex (id n) joined to `attach` (all vertices when empty).
inline Graph with_apex(const Graph& g, const std::vector<Vertex>& attach) {
  std::vector<Edge> es = g.edges();
  const Vertex apex = g.order();
  if (attach.empty()) {
    for (Vertex v = 0; v < g.order(); ++v) es.push_back({v, apex});
  } else {
    for (Vertex v : attach) es.push_back({v, apex});
  }
  return Graph::build(g.order() + 1, es);
}

/// Opens a cycle through `apex` into the path it leaves behind.
inline std::vector<Vertex> open_at(const std::vector<Vertex>& cycle, Vertex apex) {
  auto it = std::find(cycle.begin(), cycle.end(), apex);
  std::vector<Vertex> out(it + 1, cycle.end());
  out.insert(out.end(), cycle.begin(), it);
  return out;
}

}  // namespace detail

inline SolveResult hamiltonian_cycle(const Graph& g, const SolveConstraints& c = {}) {
  SolveResult r = detail::HamiltonSearch(g, c).run();
  if (r.certificate && !(is_hamiltonian_cycle(g, r.certificate->vertices) && satisfies(r.certificate->vertices, true, c))) {
    throw std::logic_error("hamiltonian_cycle produced an invalid certificate");
  }
  return r;
}

/// Hamiltonian path, found as a hamiltonian cycle through an added apex
/// joined to every allowed end vertex.
inline SolveResult hamiltonian_path(const Graph& g, const SolveConstraints& c = {}) {
  SolveResult r;
  if (g.order() == 0) {
    r.status = SolveStatus::proven_absent;
    return r;
  }
  if (g.order() == 1) {
    r.status = SolveStatus::found;
    r.certificate = Certificate::path({0});
    return r;
  }
  const Graph h = detail::with_apex(g, c.endpoints);
  SolveConstraints hc = c;
  hc.endpoints.clear();
  r = detail::HamiltonSearch(h, hc).run();
  if (r.certificate) {
    r.certificate = Certificate::path(detail::open_at(r.certificate->vertices, g.order()));
    if (!(is_hamiltonian_path(g, r.certificate->vertices) && satisfies(r.certificate->vertices, false, c))) {
      throw std::logic_error("hamiltonian_path produced an invalid certificate");
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Longest cycles

struct LongestResult {
  int length = 0;
  std::vector<Vertex> cycle;  // or path, for longest_path
  bool optimal = false;
  std::uint64_t explored = 0;
  /// Every cycle that improved on the previous best, in the order found.
  std::vector<std::vector<Vertex>> improvements;
};

struct LongestOptions {
  std::uint64_t budget = kDefaultBudget;
  /// Stop as soon as a cycle of at least this length is found; prune
  /// anything that cannot reach it. 0 = plain maximisation.
  int target = 0;
  /// Separator set for the bound; empty = complement of a greedy maximal
  /// independent set.
  std::vector<Vertex> separator;
};

/// Complement of a greedy (minimum degree first) maximal independent set.
inline std::vector<Vertex> default_separator(const Graph& g) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  std::vector<char> blocked(static_cast<std::size_t>(g.order()), 0);
  std::vector<char> chosen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : order) {
    if (blocked[static_cast<std::size_t>(v)]) continue;
    chosen[static_cast<std::size_t>(v)] = 1;
    for (Vertex w : g.neighbors(v)) blocked[static_cast<std::size_t>(w)] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!chosen[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

/// Upper bound on the length of any cycle of g, from a separator set:
/// |X| + the sizes of the |X| largest components of g - X.
inline int separator_cycle_bound(const Graph& g, const std::vector<Vertex>& separator) {
  auto comps = components_without(g, separator);
  std::vector<int> sizes;
  for (const auto& c : comps) sizes.push_back(static_cast<int>(c.size()));
  std::sort(sizes.rbegin(), sizes.rend());
  const int k = static_cast<int>(separator.size());
  int total = k;
  for (int i = 0; i < std::min<int>(k, static_cast<int>(sizes.size())); ++i) total += sizes[static_cast<std::size_t>(i)];
  if (k == 0 && !sizes.empty()) total = sizes[0];
  return std::min(total, g.order());
}

namespace detail {

class LongestCycleSearch {
 public:
  LongestCycleSearch(const Graph& g, const LongestOptions& o) : g_(g), opt_(o) {
    const int n = g.order();
    in_sep_.assign(static_cast<std::size_t>(n), 0);
    for (Vertex v : (o.separator.empty() ? default_separator(g) : o.separator)) in_sep_.at(static_cast<std::size_t>(v)) = 1;
    on_path_.assign(static_cast<std::size_t>(n), 0);
  }

  LongestResult run() {
    LongestResult r;
    const int n = g_.order();
    try {
      for (Vertex s = 0; s < n && !done(); ++s) {
        start_ = s;
        path_ = {s};
        on_path_[static_cast<std::size_t>(s)] = 1;
        extend();
        on_path_[static_cast<std::size_t>(s)] = 0;
      }
      r.optimal = true;
    } catch (const BudgetExhausted&) {
      r.optimal = false;
    }
    r.length = static_cast<int>(best_.size());
    r.cycle = best_;
    r.improvements = history_;
    r.explored = nodes_;
    return r;
  }

 private:
  bool done() const {
    return (opt_.target > 0 && static_cast<int>(best_.size()) >= opt_.target) ||
           static_cast<int>(best_.size()) == g_.order();
  }

  int goal() const { return std::max(static_cast<int>(best_.size()) + 1, opt_.target > 0 ? opt_.target : 3); }

  /// Largest cycle length still reachable from the current path, which may
  /// only use vertices above start_.
  int bound(Vertex end) const {
    const int n = g_.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> reach;
    std::vector<Vertex> stack{end};
    seen[static_cast<std::size_t>(end)] = 1;
    bool back = false;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g_.neighbors(x)) {
        if (y == start_ && (x != end || path_.size() >= 3)) back = true;
        if (y <= start_ || on_path_[static_cast<std::size_t>(y)] || seen[static_cast<std::size_t>(y)]) continue;
        seen[static_cast<std::size_t>(y)] = 1;
        reach.push_back(y);
        stack.push_back(y);
      }
    }
    if (!back) return 0;
    const int base = static_cast<int>(path_.size());
    int simple = base + static_cast<int>(reach.size());

    // Separator bound on the reachable region.
    int k = 0;
    std::vector<char> other(static_cast<std::size_t>(n), 0);
    for (Vertex x : reach) {
      if (in_sep_[static_cast<std::size_t>(x)]) {
        ++k;
      } else {
        other[static_cast<std::size_t>(x)] = 1;
      }
    }
    std::vector<int> sizes;
    for (Vertex x : reach) {
      if (!other[static_cast<std::size_t>(x)]) continue;
      int size = 0;
      std::vector<Vertex> st{x};
      other[static_cast<std::size_t>(x)] = 0;
      while (!st.empty()) {
        const Vertex a = st.back();
        st.pop_back();
        ++size;
        for (Vertex b : g_.neighbors(a)) {
          if (other[static_cast<std::size_t>(b)]) {
            other[static_cast<std::size_t>(b)] = 0;
            st.push_back(b);
          }
        }
      }
      sizes.push_back(size);
    }
    std::sort(sizes.rbegin(), sizes.rend());
    int sep = base + k;
    for (int i = 0; i < std::min<int>(k + 1, static_cast<int>(sizes.size())); ++i) sep += sizes[static_cast<std::size_t>(i)];
    return std::min(simple, sep);
  }

  void extend() {
    if (++nodes_ > opt_.budget) throw BudgetExhausted{};
    const Vertex end = path_.back();
    if (path_.size() >= 3 && g_.adjacent(end, start_) && static_cast<int>(path_.size()) > static_cast<int>(best_.size())) {
      best_ = path_;
      history_.push_back(best_);
      if (done()) return;
    }
    if (bound(end) < goal()) return;
    for (Vertex y : g_.neighbors(end)) {
      if (y <= start_ || on_path_[static_cast<std::size_t>(y)]) continue;
      on_path_[static_cast<std::size_t>(y)] = 1;
      path_.push_back(y);
      extend();
      path_.pop_back();
      on_path_[static_cast<std::size_t>(y)] = 0;
      if (done()) return;
    }
  }

  const Graph& g_;
  LongestOptions opt_;
  std::uint64_t nodes_ = 0;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
  std::vector<Vertex> best_;
  std::vector<std::vector<Vertex>> history_;
  std::vector<char> on_path_;
  std::vector<char> in_sep_;
};

}  // namespace detail

/// Longest cycle (length = number of vertices; 0 for forests).
inline LongestResult longest_cycle(const Graph& g, const LongestOptions& o = {}) {
  LongestResult r = detail::LongestCycleSearch(g, o).run();
  if (!r.cycle.empty() && !verify_certificate(g, Certificate::cycle(r.cycle))) {
    throw std::logic_error("longest_cycle produced an invalid cycle");
  }
  return r;
}

inline LongestResult longest_cycle(const Graph& g, std::uint64_t budget) {
  LongestOptions o;
  o.budget = budget;
  return longest_cycle(g, o);
}

/// Decides whether a cycle with at least `length` vertices exists.
inline SolveResult cycle_at_least(const Graph& g, int length, const LongestOptions& base = {}) {
  LongestOptions o = base;
  o.target = length;
  const auto r = longest_cycle(g, o);
  SolveResult out;
  out.explored = r.explored;
  if (r.length >= length) {
    out.status = SolveStatus::found;
    out.certificate = Certificate::cycle(r.cycle);
  } else {
    out.status = r.optimal ? SolveStatus::proven_absent : SolveStatus::budget_exhausted;
  }
  return out;
}

/// Longest path, found as the longest cycle through an added universal apex.
inline LongestResult longest_path(const Graph& g, const LongestOptions& o = {}) {
  LongestResult r;
  if (g.order() == 0) {
    r.optimal = true;
    return r;
  }
  if (g.size() == 0) {
    r.length = 1;
    r.cycle = {0};
    r.optimal = true;
    return r;
  }
  const Graph h = detail::with_apex(g, {});
  LongestOptions ho = o;
  if (!ho.separator.empty()) ho.separator.push_back(g.order());
  if (ho.target > 0) ho.target += 1;
  const auto c = longest_cycle(h, ho);
  r.optimal = c.optimal;
  r.explored = c.explored;
  if (std::find(c.cycle.begin(), c.cycle.end(), g.order()) != c.cycle.end()) {
    r.cycle = detail::open_at(c.cycle, g.order());
  } else {
    r.cycle = c.cycle;  // a longer cycle avoiding the apex still contains this path
  }
  r.length = static_cast<int>(r.cycle.size());
  if (!verify_certificate(g, Certificate::path(r.cycle))) throw std::logic_error("longest_path produced an invalid path");
  return r;
}

inline LongestResult longest_path(const Graph& g, std::uint64_t budget) {
  LongestOptions o;
  o.budget = budget;
  return longest_path(g, o);
}

// ---------------------------------------------------------------------------
// Counting certificates

struct IndependenceBounds {
  int circ_upper = 0;
  bool traceable_possible = true;
  int set_size = 0;
};

/// A cycle alternates around an independent set I, so circ <= 2(|V| - |I|);
/// a path needs |I| <= ceil(|V| / 2).
inline IndependenceBounds independence_bounds(const Graph& g, const std::vector<Vertex>& iset) {
  if (!is_independent_set(g, iset)) throw precondition_error("independence_bounds: set is not independent");
  IndependenceBounds b;
  const int n = g.order();
  b.set_size = static_cast<int>(iset.size());
  b.circ_upper = 2 * (n - b.set_size);
  b.traceable_possible = b.set_size <= (n + 1) / 2;
  return b;
}

}  // namespace oneplanar
