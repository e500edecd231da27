#pragma once

// 1-planar drawings stored as their planarization: a sphere rotation system
// whose nodes are the vertices of the base graph followed by one node per
// crossing.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oneplanar/graph.hpp"
#include "oneplanar/rotation.hpp"

namespace oneplanar {

/// End of an edge segment at a node. An uncrossed edge has the single segment
/// 0; a crossed edge u-v (u < v) has segment 0 from u to the crossing and
/// segment 1 from the crossing to v.
struct Dart {
  EdgeId edge;
  int segment;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

struct CrossingPair {
  EdgeId a;
  EdgeId b;
  friend auto operator<=>(const CrossingPair&, const CrossingPair&) = default;
};

class Drawing {
 public:
  Drawing() = default;

  /// Stores the parts as given; call validate_drawing before relying on them.
  Drawing(Graph base, std::vector<CrossingPair> crossings, std::vector<std::vector<Dart>> rotation)
      : base_(std::move(base)), crossings_(std::move(crossings)), rotation_(std::move(rotation)) {
    index_crossings();
  }

  /// Builds a drawing from the rotation system of its planarization.
  /// Nodes below `real_count` are vertices; every other node is a crossing
  /// whose opposite neighbours form the two crossing edges.
  static Drawing from_plane_map(int real_count, const Rotation& map, std::vector<Color> colors = {}) {
    const int total = static_cast<int>(map.size());
    if (real_count < 0 || real_count > total) throw validation_error("from_plane_map: bad real count");
    if (!rotation_is_simple(map)) throw validation_error("from_plane_map: rotation is not a simple graph");
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < real_count; ++x)
      for (int y : map[static_cast<std::size_t>(x)])
        if (y < real_count && x < y) pairs.emplace_back(x, y);
    for (int c = real_count; c < total; ++c) {
      const auto& r = map[static_cast<std::size_t>(c)];
      if (r.size() != 4) throw validation_error("from_plane_map: crossing node " + std::to_string(c) + " is not 4-valent");
      for (int y : r)
        if (y >= real_count) throw validation_error("from_plane_map: crossing nodes adjacent");
      pairs.emplace_back(r[0], r[2]);
      pairs.emplace_back(r[1], r[3]);
    }
    Graph base = Graph::build(real_count, pairs, std::move(colors));

    std::vector<std::pair<CrossingPair, int>> order;
    for (int c = real_count; c < total; ++c) {
      const auto& r = map[static_cast<std::size_t>(c)];
      EdgeId a = *base.edge_id(r[0], r[2]);
      EdgeId b = *base.edge_id(r[1], r[3]);
      if (a > b) std::swap(a, b);
      order.push_back({{a, b}, c});
    }
    std::sort(order.begin(), order.end());
    std::vector<CrossingPair> crossings;
    std::vector<int> node_of(static_cast<std::size_t>(total), -1);
    for (int x = 0; x < real_count; ++x) node_of[static_cast<std::size_t>(x)] = x;
    for (std::size_t i = 0; i < order.size(); ++i) {
      crossings.push_back(order[i].first);
      node_of[static_cast<std::size_t>(order[i].second)] = real_count + static_cast<int>(i);
    }

    auto edge_through = [&](int c, int p) {
      const auto& r = map[static_cast<std::size_t>(c)];
      const int i = rotation_index(map, c, p);
      return *base.edge_id(p, r[static_cast<std::size_t>((i + 2) % 4)]);
    };
    std::vector<std::vector<Dart>> rotation(static_cast<std::size_t>(total));
    for (int x = 0; x < total; ++x) {
      auto& out = rotation[static_cast<std::size_t>(node_of[static_cast<std::size_t>(x)])];
      for (int y : map[static_cast<std::size_t>(x)]) {
        if (x < real_count && y < real_count) {
          out.push_back({*base.edge_id(x, y), 0});
        } else {
          const int real = x < real_count ? x : y;
          const int cross = x < real_count ? y : x;
          const EdgeId e = edge_through(cross, real);
          out.push_back({e, base.edge(e).u == real ? 0 : 1});
        }
      }
    }
    return Drawing(std::move(base), std::move(crossings), std::move(rotation));
  }

  const Graph& base() const noexcept { return base_; }
  const std::vector<CrossingPair>& crossings() const noexcept { return crossings_; }
  const std::vector<std::vector<Dart>>& rotation() const noexcept { return rotation_; }

  int vertex_count() const noexcept { return base_.order(); }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int node_count() const noexcept { return vertex_count() + crossing_count(); }
  bool is_crossing_node(int node) const noexcept { return node >= vertex_count() && node < node_count(); }
  int crossing_node(int index) const noexcept { return vertex_count() + index; }

  /// Crossing index of an edge, if it is crossed.
  std::optional<int> crossing_of(EdgeId e) const {
    auto it = crossing_of_edge_.find(e);
    if (it == crossing_of_edge_.end()) return std::nullopt;
    return it->second;
  }

  /// The node at the far end of the segment behind `d` when seen from `node`.
  int dart_target(int node, const Dart& d) const {
    const Edge& e = base_.edge(d.edge);
    const auto c = crossing_of(d.edge);
    if (!c) return node == e.u ? e.v : e.u;
    if (is_crossing_node(node)) return d.segment == 0 ? e.u : e.v;
    return crossing_node(*c);
  }

  /// Rotation system of the planarization by neighbouring node ids.
  Rotation plane_map() const {
    Rotation rot(static_cast<std::size_t>(node_count()));
    for (int x = 0; x < node_count(); ++x)
      for (const auto& d : rotation_[static_cast<std::size_t>(x)]) rot[static_cast<std::size_t>(x)].push_back(dart_target(x, d));
    return rot;
  }

  /// Same drawing with every cyclic dart list started at its smallest dart.
  Drawing canonical() const {
    auto rot = rotation_;
    for (auto& r : rot) {
      if (r.empty()) continue;
      std::rotate(r.begin(), std::min_element(r.begin(), r.end()), r.end());
    }
    return Drawing(base_, crossings_, std::move(rot));
  }

  friend bool operator==(const Drawing& a, const Drawing& b) {
    const Drawing ca = a.canonical();
    const Drawing cb = b.canonical();
    return ca.base_ == cb.base_ && ca.crossings_ == cb.crossings_ && ca.rotation_ == cb.rotation_;
  }

 private:
  void index_crossings() {
    crossing_of_edge_.clear();
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
      crossing_of_edge_.emplace(crossings_[i].a, static_cast<int>(i));
      crossing_of_edge_.emplace(crossings_[i].b, static_cast<int>(i));
    }
  }

  Graph base_;
  std::vector<CrossingPair> crossings_;
  std::vector<std::vector<Dart>> rotation_;
  std::map<EdgeId, int> crossing_of_edge_;
};

// ---------------------------------------------------------------------------
// Validation

inline std::vector<std::string> validate_drawing(const Drawing& d) {
  std::vector<std::string> bad;
  const Graph& g = d.base();
  const int n = g.order();
  const int k = d.crossing_count();
  if (static_cast<int>(d.rotation().size()) != n + k) {
    bad.push_back("rotation has " + std::to_string(d.rotation().size()) + " nodes, expected " + std::to_string(n + k));
    return bad;
  }

  std::map<EdgeId, int> times_crossed;
  for (int i = 0; i < k; ++i) {
    const auto& c = d.crossings()[static_cast<std::size_t>(i)];
    if (c.a < 0 || c.b < 0 || c.a >= g.size() || c.b >= g.size()) {
      bad.push_back("crossing " + std::to_string(i) + " references an unknown edge");
      return bad;
    }
    if (c.a == c.b) bad.push_back("crossing " + std::to_string(i) + " crosses an edge with itself");
    ++times_crossed[c.a];
    ++times_crossed[c.b];
    const Edge& ea = g.edge(c.a);
    const Edge& eb = g.edge(c.b);
    if (ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v) {
      bad.push_back("crossing " + std::to_string(i) + ": crossing edges share an endpoint");
    }
  }
  for (auto [e, t] : times_crossed) {
    if (t > 1) bad.push_back("edge crossed twice: edge " + std::to_string(e));
  }
  if (!bad.empty()) return bad;

  // Expected dart sets follow from the base graph and the crossing table.
  std::vector<std::vector<Dart>> expected(static_cast<std::size_t>(n + k));
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    const auto c = d.crossing_of(e);
    if (!c) {
      expected[static_cast<std::size_t>(ed.u)].push_back({e, 0});
      expected[static_cast<std::size_t>(ed.v)].push_back({e, 0});
    } else {
      expected[static_cast<std::size_t>(ed.u)].push_back({e, 0});
      expected[static_cast<std::size_t>(ed.v)].push_back({e, 1});
      expected[static_cast<std::size_t>(n + *c)].push_back({e, 0});
      expected[static_cast<std::size_t>(n + *c)].push_back({e, 1});
    }
  }
  for (int x = 0; x < n + k; ++x) {
    auto have = d.rotation()[static_cast<std::size_t>(x)];
    auto want = expected[static_cast<std::size_t>(x)];
    std::sort(have.begin(), have.end());
    std::sort(want.begin(), want.end());
    if (have != want) {
      bad.push_back("node " + std::to_string(x) + ": rotation does not match the incident edge segments");
      continue;
    }
    if (x >= n) {
      const auto& r = d.rotation()[static_cast<std::size_t>(x)];
      for (std::size_t i = 0; i < 4; ++i) {
        if (r[i].edge == r[(i + 1) % 4].edge) {
          bad.push_back("crossing node " + std::to_string(x) + ": segments of one edge are adjacent (touching, not crossing)");
          break;
        }
      }
    }
  }
  if (!bad.empty()) return bad;

  const Rotation map = d.plane_map();
  if (!rotation_is_simple(map)) {
    bad.push_back("planarization is not a simple graph");
    return bad;
  }
  if (rotation_components(map) > 1) bad.push_back("planarization is disconnected");
  if (!rotation_is_spherical(map)) {
    const long v = static_cast<long>(map.size());
    const long e = static_cast<long>(rotation_edge_count(map));
    const long f = static_cast<long>(rotation_face_count(map));
    bad.push_back("Euler check failed: V - E + F = " + std::to_string(v - e + f));
  }
  return bad;
}

inline bool is_valid(const Drawing& d) { return validate_drawing(d).empty(); }

inline void require_valid(const Drawing& d, const char* where) {
  auto bad = validate_drawing(d);
  if (!bad.empty()) throw validation_error(std::string(where) + ": invalid drawing: " + bad.front());
}

/// Facial walks of the planarization, as node sequences.
inline std::vector<std::vector<int>> faces(const Drawing& d) {
  require_valid(d, "faces");
  return trace_faces(d.plane_map());
}

// ---------------------------------------------------------------------------
// Crossing classes

enum class CrossingClass { full, almost_full, other };

inline const char* to_string(CrossingClass c) {
  switch (c) {
    case CrossingClass::full: return "full";
    case CrossingClass::almost_full: return "almost_full";
    case CrossingClass::other: return "other";
  }
  return "?";
}

struct CrossingInfo {
  int node = -1;
  int index = -1;
  Edge edge_a{};
  Edge edge_b{};
  std::array<Vertex, 4> endpoints{};  // in rotation order around the crossing
  CrossingClass cls = CrossingClass::other;
  std::vector<Edge> missing_chords;
  /// For almost-full crossings: induced path a-b-c-d left on the endpoints
  /// once the crossing becomes a vertex; a and d are the missing chord, a < d.
  std::optional<std::array<Vertex, 4>> path_order;
};

inline Vertex crossing_partner(const CrossingInfo& info, Vertex x) {
  if (info.edge_a.u == x) return info.edge_a.v;
  if (info.edge_a.v == x) return info.edge_a.u;
  if (info.edge_b.u == x) return info.edge_b.v;
  return info.edge_b.u;
}

inline CrossingInfo classify_crossing(const Drawing& d, int node) {
  if (!d.is_crossing_node(node)) throw precondition_error("classify_crossing: node " + std::to_string(node) + " is not a crossing");
  const Graph& g = d.base();
  CrossingInfo info;
  info.node = node;
  info.index = node - d.vertex_count();
  const auto& c = d.crossings()[static_cast<std::size_t>(info.index)];
  info.edge_a = g.edge(c.a);
  info.edge_b = g.edge(c.b);
  const auto& r = d.rotation()[static_cast<std::size_t>(node)];
  for (std::size_t i = 0; i < 4; ++i) info.endpoints[i] = d.dart_target(node, r[i]);

  // Chords join endpoints of different crossing edges; the four sides of the
  // crossing are exactly these pairs.
  for (Vertex p : {info.edge_a.u, info.edge_a.v})
    for (Vertex q : {info.edge_b.u, info.edge_b.v})
      if (!g.adjacent(p, q)) info.missing_chords.push_back(make_edge(p, q));
  if (info.missing_chords.empty()) {
    info.cls = CrossingClass::full;
  } else if (info.missing_chords.size() == 1) {
    info.cls = CrossingClass::almost_full;
    const Vertex a = info.missing_chords[0].u;
    const Vertex dd = info.missing_chords[0].v;
    info.path_order = std::array<Vertex, 4>{a, crossing_partner(info, dd), crossing_partner(info, a), dd};
  } else {
    info.cls = CrossingClass::other;
  }
  return info;
}

inline std::vector<CrossingInfo> classify_all(const Drawing& d) {
  std::vector<CrossingInfo> out;
  for (int i = 0; i < d.crossing_count(); ++i) out.push_back(classify_crossing(d, d.crossing_node(i)));
  return out;
}

enum class Maximality { locally_maximal, weakly_locally_maximal, neither };

inline const char* to_string(Maximality m) {
  switch (m) {
    case Maximality::locally_maximal: return "locally_maximal";
    case Maximality::weakly_locally_maximal: return "weakly_locally_maximal";
    case Maximality::neither: return "neither";
  }
  return "?";
}

struct MaximalityClass {
  Maximality cls = Maximality::locally_maximal;
  int full = 0;
  int almost_full = 0;
  int other = 0;
};

inline MaximalityClass maximality_class(const Drawing& d) {
  require_valid(d, "maximality_class");
  MaximalityClass m;
  for (const auto& info : classify_all(d)) {
    switch (info.cls) {
      case CrossingClass::full: ++m.full; break;
      case CrossingClass::almost_full: ++m.almost_full; break;
      case CrossingClass::other: ++m.other; break;
    }
  }
  if (m.other > 0) {
    m.cls = Maximality::neither;
  } else if (m.almost_full > 0) {
    m.cls = Maximality::weakly_locally_maximal;
  } else {
    m.cls = Maximality::locally_maximal;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Normalization

namespace detail {

/// Splices a crossing node out of the map after one of its edges has been
/// removed: the surviving edge p-c-q becomes p-q.
inline void dissolve_crossing_node(Rotation& map, int c, int p, int q) {
  rotation_replace(map, p, c, q);
  rotation_replace(map, q, c, p);
  map[static_cast<std::size_t>(c)].clear();
}

/// Relabels a map whose crossing nodes are interleaved with vertices so that
/// vertices come first, each group keeping its relative order.
inline Drawing finish_map(const Rotation& rot, const std::vector<char>& is_crossing, std::vector<Color> colors = {}) {
  std::vector<int> id(rot.size(), -1);
  int next = 0;
  for (std::size_t x = 0; x < rot.size(); ++x)
    if (!is_crossing[x]) id[x] = next++;
  const int real = next;
  for (std::size_t x = 0; x < rot.size(); ++x)
    if (is_crossing[x]) id[x] = next++;
  Rotation out(rot.size());
  for (std::size_t x = 0; x < rot.size(); ++x)
    for (int y : rot[x]) out[static_cast<std::size_t>(id[x])].push_back(id[static_cast<std::size_t>(y)]);
  return Drawing::from_plane_map(real, out, std::move(colors));
}

/// Drops isolated placeholder nodes at or above `real_count`, keeping ids below.
inline Rotation compact(const Rotation& map, int real_count) {
  std::vector<int> id(map.size(), -1);
  int next = 0;
  for (std::size_t x = 0; x < map.size(); ++x) {
    if (static_cast<int>(x) < real_count || !map[x].empty()) id[x] = next++;
  }
  Rotation out(static_cast<std::size_t>(next));
  for (std::size_t x = 0; x < map.size(); ++x) {
    if (id[x] < 0) continue;
    for (int y : map[x]) out[static_cast<std::size_t>(id[x])].push_back(id[static_cast<std::size_t>(y)]);
  }
  return out;
}

/// Removes the crossing edge running through crossing node c between its
/// opposite neighbours at positions i and i+2, leaving the other edge uncrossed.
inline void remove_crossing_edge(Rotation& map, int c, int i) {
  const auto r = map[static_cast<std::size_t>(c)];
  const int p = r[static_cast<std::size_t>(i)];
  const int q = r[static_cast<std::size_t>((i + 2) % 4)];
  const int s = r[static_cast<std::size_t>((i + 1) % 4)];
  const int t = r[static_cast<std::size_t>((i + 3) % 4)];
  rotation_erase(map, p, c);
  rotation_erase(map, q, c);
  dissolve_crossing_node(map, c, s, t);
}

/// First face corner pair joining x and y inside one face, if any.
inline std::optional<std::pair<Corner, Corner>> common_face_corners(const Rotation& map, int x, int y) {
  for (const auto& walk : trace_faces(map)) {
    std::optional<Corner> cx;
    std::optional<Corner> cy;
    for (const auto& c : face_corners(walk)) {
      if (c.at == x && !cx) cx = c;
      if (c.at == y && !cy) cy = c;
    }
    if (cx && cy) return std::make_pair(*cx, *cy);
  }
  return std::nullopt;
}

/// Rewrite (a): a side u-x of crossing node c that is itself crossed elsewhere
/// is redrawn uncrossed next to c.
inline bool redraw_crossed_side(Rotation& map, int real_count) {
  const int total = static_cast<int>(map.size());
  for (int c = real_count; c < total; ++c) {
    if (map[static_cast<std::size_t>(c)].size() != 4) continue;
    for (int i = 0; i < 4; ++i) {
      const auto& r = map[static_cast<std::size_t>(c)];
      const int u = r[static_cast<std::size_t>(i)];
      const int x = r[static_cast<std::size_t>((i + 1) % 4)];
      // Is u-x an edge drawn through another crossing node c2?
      int c2 = -1;
      int pos = -1;
      for (int cand : map[static_cast<std::size_t>(u)]) {
        if (cand < real_count || cand == c || map[static_cast<std::size_t>(cand)].size() != 4) continue;
        const int j = rotation_index(map, cand, u);
        if (map[static_cast<std::size_t>(cand)][static_cast<std::size_t>((j + 2) % 4)] == x) {
          c2 = cand;
          pos = j;
        }
      }
      if (c2 < 0) continue;
      remove_crossing_edge(map, c2, pos);
      // The corner u -> c -> x (or its reverse) survives; the chord goes there.
      for (const auto& walk : trace_faces(map)) {
        const auto corners = face_corners(walk);
        for (std::size_t k = 0; k < corners.size(); ++k) {
          const auto& mid = corners[k];
          if (mid.at != c) continue;
          if (!((mid.prev == u && mid.next == x) || (mid.prev == x && mid.next == u))) continue;
          const Corner& before = corners[(k + corners.size() - 1) % corners.size()];
          const Corner& after = corners[(k + 1) % corners.size()];
          insert_chord_in_face(map, before, after);
          return true;
        }
      }
      throw std::logic_error("normalize: corner around crossing vanished");
    }
  }
  return false;
}

/// Rewrite (b): a crossing edge whose endpoints share a face once the edge is
/// lifted out is redrawn through that face, deleting the crossing.
inline bool reroute_crossing_edge(Rotation& map, int real_count) {
  const int total = static_cast<int>(map.size());
  for (int c = real_count; c < total; ++c) {
    if (map[static_cast<std::size_t>(c)].size() != 4) continue;
    for (int i = 0; i < 2; ++i) {
      Rotation trial = map;
      const int p = trial[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)];
      const int q = trial[static_cast<std::size_t>(c)][static_cast<std::size_t>(i + 2)];
      remove_crossing_edge(trial, c, i);
      auto& rp = trial[static_cast<std::size_t>(p)];
      auto& rq = trial[static_cast<std::size_t>(q)];
      if (rp.empty() != rq.empty()) {
        // A lone endpoint can sit in any face; hang it off the other one.
        const int lone = rp.empty() ? p : q;
        const int other = lone == p ? q : p;
        trial[static_cast<std::size_t>(other)].push_back(lone);
        trial[static_cast<std::size_t>(lone)] = {other};
        map = std::move(trial);
        return true;
      }
      if (rp.empty()) continue;
      if (auto corners = common_face_corners(trial, p, q)) {
        insert_chord_in_face(trial, corners->first, corners->second);
        map = std::move(trial);
        return true;
      }
    }
  }
  return false;
}

}  // namespace detail

/// Applies both local redraw rules until neither fires. Every rewrite removes
/// one crossing, so the loop terminates and the crossing count never grows.
inline Drawing normalize(const Drawing& d) {
  require_valid(d, "normalize");
  Rotation map = d.plane_map();
  const int n = d.vertex_count();
  bool changed = false;
  while (detail::redraw_crossed_side(map, n) || detail::reroute_crossing_edge(map, n)) {
    map = detail::compact(map, n);
    changed = true;
  }
  if (!changed) return d;
  Drawing out = Drawing::from_plane_map(n, map, d.base().colors());
  require_valid(out, "normalize (output)");
  return out;
}

// ---------------------------------------------------------------------------
// Edge bound and the K5 sharing property

struct EdgeBound {
  bool holds = false;
  bool optimal = false;
  int bound = 0;
  int edges = 0;
};

inline EdgeBound edge_bound_check(const Graph& g) {
  if (g.order() < 3) throw precondition_error("edge_bound_check: needs at least 3 vertices");
  EdgeBound r;
  r.bound = 4 * g.order() - 8;
  r.edges = g.size();
  r.holds = r.edges <= r.bound;
  r.optimal = r.edges == r.bound;
  return r;
}

/// All 5-cliques of g, each sorted; throws when more than `budget` exist.
inline std::vector<std::array<Vertex, 5>> k5_subgraphs(const Graph& g, std::size_t budget) {
  std::vector<std::array<Vertex, 5>> out;
  std::array<Vertex, 5> cur{};
  auto extend = [&](auto&& self, int depth, std::vector<Vertex> cand) -> void {
    if (depth == 5) {
      out.push_back(cur);
      if (out.size() > budget) throw Error(ErrorKind::budget, "K5 enumeration exceeded budget");
      return;
    }
    for (std::size_t i = 0; i < cand.size(); ++i) {
      cur[static_cast<std::size_t>(depth)] = cand[i];
      std::vector<Vertex> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (g.adjacent(cand[i], cand[j])) next.push_back(cand[j]);
      if (static_cast<int>(next.size()) >= 4 - depth) self(self, depth + 1, std::move(next));
    }
  };
  for (Vertex v = 0; v < g.order(); ++v) {
    cur[0] = v;
    std::vector<Vertex> cand;
    for (Vertex w : g.neighbors(v))
      if (w > v) cand.push_back(w);
    if (cand.size() >= 4) extend(extend, 1, std::move(cand));
  }
  return out;
}

struct K5Violation {
  std::array<Vertex, 5> first;
  std::array<Vertex, 5> second;
};

/// Pairs of K5 subgraphs that share a crossing but fewer than three vertices.
inline std::vector<K5Violation> check_lemma1(const Drawing& d, std::size_t budget = 100000) {
  require_valid(d, "check_lemma1");
  const Graph& g = d.base();
  const auto k5s = k5_subgraphs(g, budget);
  std::vector<K5Violation> bad;
  auto contains_edge = [](const std::array<Vertex, 5>& k, const Edge& e) {
    return std::find(k.begin(), k.end(), e.u) != k.end() && std::find(k.begin(), k.end(), e.v) != k.end();
  };
  for (std::size_t i = 0; i < k5s.size(); ++i) {
    for (std::size_t j = i + 1; j < k5s.size(); ++j) {
      bool share = false;
      for (const auto& c : d.crossings()) {
        const Edge& ea = g.edge(c.a);
        const Edge& eb = g.edge(c.b);
        if ((contains_edge(k5s[i], ea) && contains_edge(k5s[j], eb)) ||
            (contains_edge(k5s[i], eb) && contains_edge(k5s[j], ea))) {
          share = true;
          break;
        }
      }
      if (!share) continue;
      int common = 0;
      for (Vertex v : k5s[i]) common += std::find(k5s[j].begin(), k5s[j].end(), v) != k5s[j].end() ? 1 : 0;
      if (common < 3) bad.push_back({k5s[i], k5s[j]});
    }
  }
  return bad;
}

}  // namespace oneplanar
