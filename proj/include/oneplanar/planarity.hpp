#pragma once

// Planarity with both outcomes certified: a crossing-free drawing whose faces
// satisfy Euler's formula, or a K5 / K3,3 subdivision.

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

#include <cstdint>
#include <iterator>
#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

#include "oneplanar/drawing.hpp"
#include "oneplanar/graph.hpp"

namespace oneplanar {

namespace detail {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

inline BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(static_cast<std::size_t>(g.order()));
  int idx = 0;
  for (const auto& e : g.edges()) {
    auto [ed, ok] = boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
    (void)ok;
    boost::put(boost::edge_index, bg, ed, idx++);
  }
  return bg;
}

inline bool planar_edges(int n, const std::vector<Edge>& edges) {
  return boost::boyer_myrvold_planarity_test(to_boost(Graph::build(n, edges)));
}

/// Boost's isolated subgraph can carry extra edges; drop edges while the
/// rest stays non-planar. A minimal non-planar edge set is a subdivision.
inline std::vector<Edge> minimal_nonplanar(int n, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (std::size_t i = 0; i < edges.size();) {
    auto rest = edges;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (!planar_edges(n, rest)) {
      edges = std::move(rest);
    } else {
      ++i;
    }
  }
  return edges;
}

/// Reads branch vertices and branch paths off a Kuratowski edge set.
inline Certificate decode_kuratowski(const Graph& g, const std::vector<Edge>& kuratowski) {
  const auto edges = minimal_nonplanar(g.order(), kuratowski);
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<Vertex> branch;
  for (const auto& [v, nb] : adj)
    if (nb.size() >= 3) branch.push_back(v);
  auto is_branch = [&](Vertex v) { return std::find(branch.begin(), branch.end(), v) != branch.end(); };

  std::vector<std::vector<Vertex>> paths;
  std::set<std::pair<Vertex, Vertex>> seen_start;
  for (Vertex b : branch) {
    for (Vertex first : adj[b]) {
      if (seen_start.count({b, first})) continue;
      std::vector<Vertex> p{b, first};
      Vertex prev = b;
      Vertex cur = first;
      while (!is_branch(cur)) {
        const auto& nb = adj[cur];
        if (nb.size() != 2) throw std::logic_error("kuratowski subgraph is not a subdivision");
        const Vertex nxt = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = nxt;
        p.push_back(cur);
      }
      seen_start.insert({b, first});
      seen_start.insert({cur, prev});
      paths.push_back(std::move(p));
    }
  }

  if (branch.size() == 6) {
    // Two-colour the branch pattern to list the K3,3 sides.
    std::map<Vertex, int> side{{branch[0], 0}};
    bool progress = true;
    while (progress) {
      progress = false;
      for (const auto& p : paths) {
        auto a = side.find(p.front());
        auto b = side.find(p.back());
        if (a != side.end() && b == side.end()) {
          side[p.back()] = 1 - a->second;
          progress = true;
        } else if (b != side.end() && a == side.end()) {
          side[p.front()] = 1 - b->second;
          progress = true;
        }
      }
    }
    std::vector<Vertex> ordered;
    for (int s = 0; s < 2; ++s)
      for (Vertex v : branch)
        if (side[v] == s) ordered.push_back(v);
    branch = ordered;
  }
  Certificate cert = Certificate::subdivision(branch, paths);
  if (!verify_certificate(g, cert)) throw std::logic_error("decoded Kuratowski subdivision does not verify");
  return cert;
}

}  // namespace detail

using PlanarityResult = std::variant<Drawing, Certificate>;

/// Crossing-free drawing of g, or a Kuratowski subdivision inside g.
inline PlanarityResult planarity_certificate(const Graph& g) {
  auto bg = detail::to_boost(g);
  using Storage = std::vector<std::vector<detail::BoostEdge>>;
  Storage storage(static_cast<std::size_t>(g.order()));
  auto embedding = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg));
  std::vector<detail::BoostEdge> kuratowski;
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg, boost::boyer_myrvold_params::embedding = embedding,
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
  if (planar) {
    Rotation rot(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
      for (const auto& e : storage[static_cast<std::size_t>(v)]) {
        const int s = static_cast<int>(boost::source(e, bg));
        const int t = static_cast<int>(boost::target(e, bg));
        rot[static_cast<std::size_t>(v)].push_back(s == v ? t : s);
      }
    }
    return Drawing::from_plane_map(g.order(), rot, g.colors());
  }
  std::vector<Edge> edges;
  for (const auto& e : kuratowski) {
    edges.push_back(make_edge(static_cast<int>(boost::source(e, bg)), static_cast<int>(boost::target(e, bg))));
  }
  return detail::decode_kuratowski(g, edges);
}

inline bool is_planar(const Graph& g) { return std::holds_alternative<Drawing>(planarity_certificate(g)); }

/// Face-count certificate for a crossing-free drawing.
inline Certificate face_count_certificate(const Drawing& plane) {
  if (plane.crossing_count() != 0) throw precondition_error("face_count_certificate: drawing has crossings");
  const Rotation rot = plane.plane_map();
  return Certificate::face_count(rot, static_cast<int>(rotation_face_count(rot)));
}

/// Searches for a subdivision of K5 (5 branch vertices) or K3,3 (6 branch
/// vertices, two sides of three) on prescribed branch vertices.
inline std::optional<Certificate> find_subdivision(const Graph& g, const std::vector<Vertex>& branch,
                                                   std::uint64_t budget = 10'000'000) {
  if (branch.size() != 5 && branch.size() != 6) throw precondition_error("find_subdivision: need 5 or 6 branch vertices");
  std::vector<std::pair<Vertex, Vertex>> links;
  if (branch.size() == 5) {
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j) links.emplace_back(branch[i], branch[j]);
  } else {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 3; j < 6; ++j) links.emplace_back(branch[i], branch[j]);
  }
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  for (Vertex b : branch) used.at(static_cast<std::size_t>(b)) = 2;
  std::vector<std::vector<Vertex>> paths;
  std::uint64_t nodes = 0;

  auto link = [&](auto&& self, std::size_t k) -> bool {
    if (k == links.size()) return true;
    const auto [s, t] = links[k];
    std::vector<Vertex> path{s};
    auto walk = [&](auto&& rec, Vertex cur) -> bool {
      if (++nodes > budget) throw Error(ErrorKind::budget, "find_subdivision: budget exhausted");
      for (Vertex y : g.neighbors(cur)) {
        if (y == t) {
          if (cur == s && std::find_if(paths.begin(), paths.end(), [&](const auto& p) {
                            return p.size() == 2 && ((p[0] == s && p[1] == t) || (p[0] == t && p[1] == s));
                          }) != paths.end())
            continue;
          path.push_back(t);
          paths.push_back(path);
          if (self(self, k + 1)) return true;
          paths.pop_back();
          path.pop_back();
          continue;
        }
        if (used[static_cast<std::size_t>(y)]) continue;
        used[static_cast<std::size_t>(y)] = 1;
        path.push_back(y);
        if (rec(rec, y)) return true;
        path.pop_back();
        used[static_cast<std::size_t>(y)] = 0;
      }
      return false;
    };
    return walk(walk, s);
  };
  if (!link(link, 0)) return std::nullopt;
  Certificate cert = Certificate::subdivision(branch, paths);
  if (!verify_certificate(g, cert)) throw std::logic_error("find_subdivision produced an invalid certificate");
  return cert;
}

}  // namespace oneplanar
