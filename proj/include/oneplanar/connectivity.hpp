#pragma once

// Vertex connectivity by unit-capacity flows on the split graph, with cut
// witnesses, and exhaustive enumeration of 3-cuts.

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "oneplanar/graph.hpp"

namespace oneplanar {

namespace detail {

/// Max-flow network where every vertex v is split into v_in = 2v and
/// v_out = 2v + 1 joined by a unit arc.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : n_(g.order()), head_(static_cast<std::size_t>(2 * g.order()), -1) {
    for (Vertex v = 0; v < n_; ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (const auto& e : g.edges()) {
      add_arc(2 * e.u + 1, 2 * e.v, kInf);
      add_arc(2 * e.v + 1, 2 * e.u, kInf);
    }
  }

  /// Local connectivity between non-adjacent s and t, capped at `limit`.
  /// Fills `cut` with a minimum separating vertex set when the flow is below the cap.
  int separate(Vertex s, Vertex t, int limit, std::vector<Vertex>* cut) {
    reset();
    const int src = 2 * s + 1;
    const int dst = 2 * t;
    int flow = 0;
    while (flow < limit && augment(src, dst)) ++flow;
    if (cut != nullptr && flow < limit) {
      cut->clear();
      const auto reach = reachable(src);
      for (Vertex v = 0; v < n_; ++v) {
        if (v == s || v == t) continue;
        if (reach[static_cast<std::size_t>(2 * v)] && !reach[static_cast<std::size_t>(2 * v + 1)]) cut->push_back(v);
      }
    }
    return flow;
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max() / 4;

  struct Arc {
    int to;
    int cap;
    int next;
  };

  void add_arc(int a, int b, int cap) {
    arcs_.push_back({b, cap, head_[static_cast<std::size_t>(a)]});
    head_[static_cast<std::size_t>(a)] = static_cast<int>(arcs_.size()) - 1;
    original_.push_back(cap);
    arcs_.push_back({a, 0, head_[static_cast<std::size_t>(b)]});
    head_[static_cast<std::size_t>(b)] = static_cast<int>(arcs_.size()) - 1;
    original_.push_back(0);
  }

  void reset() {
    for (std::size_t i = 0; i < arcs_.size(); ++i) arcs_[i].cap = original_[i];
  }

  bool augment(int src, int dst) {
    std::vector<int> via(head_.size(), -1);
    std::vector<char> seen(head_.size(), 0);
    std::queue<int> q;
    q.push(src);
    seen[static_cast<std::size_t>(src)] = 1;
    while (!q.empty() && !seen[static_cast<std::size_t>(dst)]) {
      const int x = q.front();
      q.pop();
      for (int a = head_[static_cast<std::size_t>(x)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
        const auto& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap <= 0 || seen[static_cast<std::size_t>(arc.to)]) continue;
        seen[static_cast<std::size_t>(arc.to)] = 1;
        via[static_cast<std::size_t>(arc.to)] = a;
        q.push(arc.to);
      }
    }
    if (!seen[static_cast<std::size_t>(dst)]) return false;
    for (int x = dst; x != src;) {
      const int a = via[static_cast<std::size_t>(x)];
      arcs_[static_cast<std::size_t>(a)].cap -= 1;
      arcs_[static_cast<std::size_t>(a ^ 1)].cap += 1;
      x = arcs_[static_cast<std::size_t>(a ^ 1)].to;
    }
    return true;
  }

  std::vector<char> reachable(int src) const {
    std::vector<char> seen(head_.size(), 0);
    std::queue<int> q;
    q.push(src);
    seen[static_cast<std::size_t>(src)] = 1;
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int a = head_[static_cast<std::size_t>(x)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
        const auto& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap > 0 && !seen[static_cast<std::size_t>(arc.to)]) {
          seen[static_cast<std::size_t>(arc.to)] = 1;
          q.push(arc.to);
        }
      }
    }
    return seen;
  }

  int n_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> original_;
};

}  // namespace detail

struct ThreeCut {
  std::array<Vertex, 3> cut{};
  std::vector<std::vector<Vertex>> components;  // sorted by smallest vertex
};

struct CutReport {
  int connectivity = 0;
  std::optional<std::vector<Vertex>> witness_cut;  // absent for complete graphs
  std::optional<std::vector<ThreeCut>> three_cuts;
};

inline bool is_complete(const Graph& g) {
  const long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

/// Exact vertex connectivity. Uses the minimum-degree vertex v: a minimum cut
/// either misses v (then it separates v from a non-neighbour) or contains v
/// (then it separates two non-adjacent neighbours of v).
inline CutReport vertex_connectivity(const Graph& g) {
  if (g.order() < 2) throw precondition_error("vertex_connectivity: needs at least 2 vertices");
  CutReport r;
  if (is_complete(g)) {
    r.connectivity = g.order() - 1;
    return r;
  }
  if (!is_connected(g)) {
    r.connectivity = 0;
    r.witness_cut = std::vector<Vertex>{};
    return r;
  }
  Vertex v = 0;
  for (Vertex x = 1; x < g.order(); ++x)
    if (g.degree(x) < g.degree(v)) v = x;

  detail::SplitNetwork net(g);
  int best = g.degree(v);
  std::vector<Vertex> witness(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<Vertex> cut;
  auto consider = [&](Vertex s, Vertex t) {
    const int f = net.separate(s, t, best, &cut);
    if (f < best) {
      best = f;
      witness = cut;
    }
  };
  for (Vertex w = 0; w < g.order(); ++w)
    if (w != v && !g.adjacent(v, w)) consider(v, w);
  const auto nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (!g.adjacent(nb[i], nb[j])) consider(nb[i], nb[j]);

  std::sort(witness.begin(), witness.end());
  r.connectivity = best;
  r.witness_cut = witness;
  return r;
}

struct KConnected {
  bool connected = false;
  std::vector<Vertex> witness;  // a cut smaller than k when `connected` is false
};

inline KConnected is_k_connected(const Graph& g, int k) {
  if (g.order() <= k) throw precondition_error("is_k_connected: needs more than k vertices");
  const auto r = vertex_connectivity(g);
  if (r.connectivity >= k) return {true, {}};
  return {false, r.witness_cut.value_or(std::vector<Vertex>{})};
}

/// Every vertex triple whose removal disconnects g, in lexicographic order.
inline std::vector<ThreeCut> enumerate_3cuts(const Graph& g) {
  if (g.order() <= 3) return {};
  if (vertex_connectivity(g).connectivity < 3) throw precondition_error("enumerate_3cuts: graph is not 3-connected");
  std::vector<ThreeCut> out;
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) {
        auto comps = components_without(g, {a, b, c});
        if (comps.size() >= 2) out.push_back({{a, b, c}, std::move(comps)});
      }
  return out;
}

}  // namespace oneplanar
