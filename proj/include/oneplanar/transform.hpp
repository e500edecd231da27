#pragma once

// Turning crossings into vertices and carrying cycles back.
//
// planarize_crossing replaces one crossing by a new 4-valent vertex v (label
// n, so every older label survives). A cycle through v in the new graph comes
// back by shortcutting v; that only fails when v sits between the two ends of
// the missing chord of an almost-full crossing, which is reported as an error.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "oneplanar/connectivity.hpp"
#include "oneplanar/drawing.hpp"
#include "oneplanar/graph.hpp"
#include "oneplanar/rotation.hpp"

namespace oneplanar {

struct PlanarizationRecord {
  Vertex v = -1;
  Edge edge_a{};
  Edge edge_b{};
  CrossingClass cls = CrossingClass::other;
  std::array<Vertex, 4> endpoints{};  // rotation order around v
  /// a, b, c, d for almost-full crossings: N(v) induces the path a-b-c-d.
  std::optional<std::array<Vertex, 4>> path_order;
  std::optional<Edge> missing_chord;
};

struct Planarized {
  Drawing drawing;
  PlanarizationRecord record;
};

/// Replaces the crossing at `node` by a vertex.
inline Planarized planarize_crossing(const Drawing& d, int node) {
  require_valid(d, "planarize_crossing");
  const CrossingInfo info = classify_crossing(d, node);
  const int n = d.vertex_count();
  Rotation map = d.plane_map();
  std::vector<int> id(map.size());
  for (int x = 0; x < static_cast<int>(map.size()); ++x) {
    if (x < n || x > node) {
      id[static_cast<std::size_t>(x)] = x;
    } else if (x == node) {
      id[static_cast<std::size_t>(x)] = n;
    } else {
      id[static_cast<std::size_t>(x)] = x + 1;
    }
  }
  Rotation out(map.size());
  for (std::size_t x = 0; x < map.size(); ++x)
    for (int y : map[x]) out[static_cast<std::size_t>(id[x])].push_back(id[static_cast<std::size_t>(y)]);
  auto colors = d.base().colors();
  if (!colors.empty()) colors.push_back(Color::none);

  Planarized p{Drawing::from_plane_map(n + 1, out, std::move(colors)), {}};
  require_valid(p.drawing, "planarize_crossing (output)");
  auto& r = p.record;
  r.v = n;
  r.edge_a = info.edge_a;
  r.edge_b = info.edge_b;
  r.cls = info.cls;
  r.endpoints = info.endpoints;
  r.path_order = info.path_order;
  if (info.cls == CrossingClass::almost_full) r.missing_chord = info.missing_chords.front();
  return p;
}

enum class PlanarizeOrder { almost_full_first, by_index };

struct PlanarizeAll {
  Drawing plane;
  std::vector<PlanarizationRecord> records;  // in application order
  std::vector<Graph> before;                 // graph each record was applied to
};

/// Planarizes every crossing. With `verify`, checks that 3-connectivity of
/// the input survives every step.
inline PlanarizeAll planarize_all(const Drawing& d, PlanarizeOrder order = PlanarizeOrder::almost_full_first,
                                  bool verify = false) {
  require_valid(d, "planarize_all");
  PlanarizeAll out{d, {}, {}};
  const bool three = verify && d.vertex_count() > 3 && vertex_connectivity(d.base()).connectivity >= 3;
  while (out.plane.crossing_count() > 0) {
    int node = out.plane.crossing_node(0);
    if (order == PlanarizeOrder::almost_full_first) {
      for (const auto& info : classify_all(out.plane)) {
        if (info.cls == CrossingClass::almost_full) {
          node = info.node;
          break;
        }
      }
    }
    out.before.push_back(out.plane.base());
    auto step = planarize_crossing(out.plane, node);
    out.records.push_back(step.record);
    out.plane = std::move(step.drawing);
    if (three && vertex_connectivity(out.plane.base()).connectivity < 3) {
      throw std::logic_error("planarize_all: 3-connectivity lost");
    }
  }
  return out;
}

/// Checks one planarization step against the 3-cut transfer rule: a 3-cut of
/// the new graph avoiding v is a 3-cut of the old one; a 3-cut through v only
/// happens at an almost-full crossing a-b-c-d, where the old graph has a 3-cut
/// {b, c, z} separating a from d. Returns violations.
inline std::vector<std::string> check_planarize_step(const Graph& before, const Graph& after, const PlanarizationRecord& r) {
  std::vector<std::string> bad;
  if (before.order() > 3 && vertex_connectivity(before).connectivity >= 3) {
    if (vertex_connectivity(after).connectivity < 3) {
      bad.push_back("3-connectivity lost at v=" + std::to_string(r.v));
      return bad;
    }
  } else {
    return bad;
  }
  for (const auto& cut : enumerate_3cuts(after)) {
    const auto& s = cut.cut;
    if (std::find(s.begin(), s.end(), r.v) == s.end()) {
      if (!disconnects(before, {s[0], s[1], s[2]})) {
        bad.push_back("3-cut {" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]) +
                      "} is not a cut before planarizing");
      }
      continue;
    }
    bool ok = false;
    if (r.cls == CrossingClass::almost_full && r.path_order) {
      const auto [a, b, c, dd] = *r.path_order;
      for (Vertex z = 0; z < before.order() && !ok; ++z) {
        if (z == a || z == b || z == c || z == dd) continue;
        for (const auto& comp : components_without(before, {b, c, z})) {
          const bool has_a = std::binary_search(comp.begin(), comp.end(), a);
          const bool has_d = std::binary_search(comp.begin(), comp.end(), dd);
          if (has_a != has_d) {
            ok = true;
            break;
          }
        }
      }
    }
    if (!ok) bad.push_back("3-cut through v=" + std::to_string(r.v) + " has no matching {b,c,z} cut");
  }
  return bad;
}

// ---------------------------------------------------------------------------
// Lifting

namespace detail {

inline void lift_through(const Graph& g, std::vector<Vertex>& walk, const PlanarizationRecord& r, bool closed) {
  auto it = std::find(walk.begin(), walk.end(), r.v);
  if (it == walk.end()) throw precondition_error("lift: v=" + std::to_string(r.v) + " is not on the walk");
  const std::size_t i = static_cast<std::size_t>(it - walk.begin());
  const std::size_t m = walk.size();
  if (!closed && (i == 0 || i + 1 == m)) {
    walk.erase(it);
    return;
  }
  const Vertex p = walk[(i + m - 1) % m];
  const Vertex q = walk[(i + 1) % m];
  if (r.missing_chord && make_edge(p, q) == *r.missing_chord) {
    throw precondition_error("lift: walk uses both v-" + std::to_string(p) + " and v-" + std::to_string(q) +
                             " around the missing chord");
  }
  if (!g.adjacent(p, q)) throw std::logic_error("lift: shortcut edge missing");
  walk.erase(it);
}

}  // namespace detail

/// Hamiltonian cycle of the graph before planarization `r`, from one after it.
inline std::vector<Vertex> lift_cycle(const Graph& before, std::vector<Vertex> cycle, const PlanarizationRecord& r) {
  detail::lift_through(before, cycle, r, true);
  if (!is_hamiltonian_cycle(before, cycle)) throw std::logic_error("lift_cycle: result is not a hamiltonian cycle");
  return cycle;
}

inline std::vector<Vertex> lift_path(const Graph& before, std::vector<Vertex> path, const PlanarizationRecord& r) {
  detail::lift_through(before, path, r, false);
  if (!is_hamiltonian_path(before, path)) throw std::logic_error("lift_path: result is not a hamiltonian path");
  return path;
}

// ---------------------------------------------------------------------------
// Helper vertices at almost-full crossings

struct GadgetRecord {
  Vertex u = -1;
  Vertex v = -1;
  Vertex b = -1;
  Vertex c = -1;
};

struct Gadgeted {
  Drawing drawing;
  GadgetRecord gadget;
};

/// Adds u joined to v and to the inner path vertices b, c, inside a face
/// where b, v, c are consecutive. Other crossings may remain; u gets the
/// first free vertex label.
inline Gadgeted add_u_gadget(const Drawing& d, const PlanarizationRecord& r) {
  if (!r.path_order) throw precondition_error("add_u_gadget: record is not almost full");
  const Vertex b = (*r.path_order)[1];
  const Vertex c = (*r.path_order)[2];
  Rotation map = d.plane_map();
  std::vector<char> is_crossing(map.size(), 0);
  for (int x = d.vertex_count(); x < d.node_count(); ++x) is_crossing[static_cast<std::size_t>(x)] = 1;
  for (const auto& walk : trace_faces(map)) {
    const auto corners = face_corners(walk);
    const std::size_t m = corners.size();
    for (std::size_t k = 0; k < m; ++k) {
      const auto& mid = corners[k];
      if (mid.at != r.v) continue;
      if (!((mid.prev == b && mid.next == c) || (mid.prev == c && mid.next == b))) continue;
      const Corner& before = corners[(k + m - 1) % m];
      const Corner& after = corners[(k + 1) % m];
      insert_node_in_face(map, {before, mid, after});
      is_crossing.push_back(0);
      auto colors = d.base().colors();
      if (!colors.empty()) colors.push_back(Color::none);
      Gadgeted out{detail::finish_map(map, is_crossing, std::move(colors)), {d.vertex_count(), r.v, b, c}};
      require_valid(out.drawing, "add_u_gadget (output)");
      return out;
    }
  }
  throw precondition_error("add_u_gadget: no face with b, v, c consecutive");
}

/// The triangle on N(u): its edges are the property (*) hit set.
inline std::vector<Edge> gadget_triangle(const GadgetRecord& g) {
  return {make_edge(g.v, g.b), make_edge(g.v, g.c), make_edge(g.b, g.c)};
}

namespace detail {

/// Vertex sequence of a hamiltonian cycle or path given by its edges, or
/// nothing when the edges are not one.
inline std::optional<std::vector<Vertex>> walk_from_edges(const std::vector<Vertex>& vertices, const std::vector<Edge>& edges,
                                                          bool closed) {
  const std::size_t n = vertices.size();
  if (edges.size() != (closed ? n : n - 1)) return std::nullopt;
  std::map<Vertex, std::vector<Vertex>> adj;
  for (Vertex v : vertices) adj[v];
  for (const auto& e : edges) {
    if (!adj.count(e.u) || !adj.count(e.v)) return std::nullopt;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  Vertex start = -1;
  for (auto& [v, nb] : adj) {
    std::sort(nb.begin(), nb.end());
    if (nb.size() > 2 || nb.empty()) return std::nullopt;
    if (!closed && nb.size() == 1 && start < 0) start = v;
  }
  if (closed) start = adj.begin()->first;
  if (start < 0) return std::nullopt;
  std::vector<Vertex> walk{start};
  std::set<Vertex> seen{start};
  Vertex prev = -1;
  Vertex cur = start;
  while (walk.size() < n) {
    Vertex nxt = -1;
    for (Vertex y : adj[cur])
      if (y != prev) {
        nxt = y;
        break;
      }
    if (nxt < 0 || !seen.insert(nxt).second) return std::nullopt;
    walk.push_back(nxt);
    prev = cur;
    cur = nxt;
  }
  return walk;
}

/// Removes v from a hamiltonian cycle or path and repairs it with edges of
/// `before` among v's neighbours, dropping at most one walk edge among them.
/// Prefers a plain shortcut; next, swapping out the edge b-c.
inline std::vector<Vertex> resolve_v(const Graph& before, const std::vector<Vertex>& walk, const PlanarizationRecord& r,
                                     bool closed) {
  std::vector<Edge> kept;
  for (const auto& e : walk_edges(walk, closed))
    if (e.u != r.v && e.v != r.v) kept.push_back(e);
  std::vector<Vertex> vertices;
  for (Vertex x : walk)
    if (x != r.v) vertices.push_back(x);

  std::vector<Vertex> s(r.endpoints.begin(), r.endpoints.end());
  std::vector<Edge> inside;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (before.adjacent(s[i], s[j])) inside.push_back(make_edge(s[i], s[j]));
  std::sort(inside.begin(), inside.end());

  auto in_kept = [&](const Edge& e) { return std::find(kept.begin(), kept.end(), e) != kept.end(); };
  std::vector<std::optional<Edge>> removals{std::nullopt};
  if (r.path_order) {
    const Edge bc = make_edge((*r.path_order)[1], (*r.path_order)[2]);
    if (in_kept(bc)) removals.push_back(bc);
  }
  for (const auto& e : inside)
    if (in_kept(e) && std::find(removals.begin(), removals.end(), std::optional<Edge>(e)) == removals.end()) removals.push_back(e);

  for (const auto& rem : removals) {
    std::vector<Edge> base = kept;
    if (rem) base.erase(std::find(base.begin(), base.end(), *rem));
    std::vector<Edge> options;
    for (const auto& e : inside)
      if (std::find(base.begin(), base.end(), e) == base.end() && (!rem || e != *rem)) options.push_back(e);
    const std::size_t need = (closed ? vertices.size() : vertices.size() - 1) - base.size();
    if (need > 2) continue;
    std::vector<std::vector<Edge>> picks;
    if (need == 0) picks.push_back({});
    if (need == 1)
      for (const auto& e : options) picks.push_back({e});
    if (need == 2)
      for (std::size_t i = 0; i < options.size(); ++i)
        for (std::size_t j = i + 1; j < options.size(); ++j) picks.push_back({options[i], options[j]});
    for (const auto& add : picks) {
      std::vector<Edge> trial = base;
      trial.insert(trial.end(), add.begin(), add.end());
      if (auto w = walk_from_edges(vertices, trial, closed)) {
        if (closed ? is_hamiltonian_cycle(before, *w) : is_hamiltonian_path(before, *w)) return *w;
      }
    }
  }
  throw std::logic_error("strip_u_and_resolve: no reconnection around v=" + std::to_string(r.v));
}

}  // namespace detail

/// From a hamiltonian cycle (or path) of the gadgeted graph to one of the
/// original graph. `before[j]` is the graph record j was applied to; labels
/// of v's and u's are above every original label.
inline std::vector<Vertex> strip_u_and_resolve(std::vector<Vertex> walk, const std::vector<GadgetRecord>& gadgets,
                                               const std::vector<PlanarizationRecord>& records,
                                               const std::vector<Graph>& before, bool closed = true) {
  if (records.size() != before.size()) throw precondition_error("strip_u_and_resolve: one graph per record expected");
  auto used = walk_edges(walk, closed);
  std::sort(used.begin(), used.end());
  for (const auto& g : gadgets) {
    const auto tri = gadget_triangle(g);
    if (std::none_of(tri.begin(), tri.end(), [&](const Edge& e) { return std::binary_search(used.begin(), used.end(), e); })) {
      throw precondition_error("strip_u_and_resolve: property (*) fails at u=" + std::to_string(g.u));
    }
  }
  for (const auto& g : gadgets) {
    auto it = std::find(walk.begin(), walk.end(), g.u);
    if (it == walk.end()) throw precondition_error("strip_u_and_resolve: u not on the walk");
    walk.erase(it);  // N(u) is a triangle, so the neighbours of u on the walk are adjacent
  }
  for (std::size_t j = records.size(); j-- > 0;) walk = detail::resolve_v(before[j], walk, records[j], closed);
  return walk;
}

// ---------------------------------------------------------------------------
// Spanning plane subgraphs

/// Removes, at crossing i, edge `crossings()[i].a` when choice[i] == 0 and
/// `.b` otherwise. The result inherits the embedding.
inline Drawing remove_one_edge_per_crossing(const Drawing& d, const std::vector<int>& choice) {
  if (static_cast<int>(choice.size()) != d.crossing_count()) throw precondition_error("one choice per crossing expected");
  Rotation map = d.plane_map();
  const int n = d.vertex_count();
  for (int i = 0; i < d.crossing_count(); ++i) {
    const int c = d.crossing_node(i);
    const auto& pair = d.crossings()[static_cast<std::size_t>(i)];
    const EdgeId drop = choice[static_cast<std::size_t>(i)] == 0 ? pair.a : pair.b;
    const auto& darts = d.rotation()[static_cast<std::size_t>(c)];
    int pos = 0;
    while (darts[static_cast<std::size_t>(pos)].edge != drop) ++pos;
    detail::remove_crossing_edge(map, c, pos % 2);
  }
  return Drawing::from_plane_map(n, detail::compact(map, n), d.base().colors());
}

struct Extraction {
  bool found = false;
  std::optional<Drawing> plane;
  std::vector<int> choice;
  std::uint64_t tried = 0;
  bool normalized = false;
};

inline bool is_three_connected(const Graph& g) { return g.order() > 3 && vertex_connectivity(g).connectivity >= 3; }

/// Spanning plane subgraph, keeping one edge of every crossing, that is
/// 3-connected. Choice vectors are tried in lexicographic order; after a
/// fruitless pass the drawing is normalized and searched once more.
inline Extraction extract_planar_spanning(const Drawing& d, std::uint64_t budget = 1u << 16) {
  require_valid(d, "extract_planar_spanning");
  Extraction out;
  auto search = [&](const Drawing& dd) {
    const int c = dd.crossing_count();
    std::vector<int> choice(static_cast<std::size_t>(c), 0);
    while (true) {
      if (++out.tried > budget) throw Error(ErrorKind::budget, "extract_planar_spanning: budget exhausted");
      Drawing plane = remove_one_edge_per_crossing(dd, choice);
      if (is_valid(plane) && is_three_connected(plane.base())) {
        out.found = true;
        out.plane = std::move(plane);
        out.choice = choice;
        return true;
      }
      int i = c - 1;
      while (i >= 0 && choice[static_cast<std::size_t>(i)] == 1) choice[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) return false;
      choice[static_cast<std::size_t>(i)] = 1;
    }
  };
  if (search(d)) return out;
  const Drawing nd = normalize(d);
  if (nd == d) return out;
  out.normalized = true;
  search(nd);
  return out;
}

}  // namespace oneplanar
