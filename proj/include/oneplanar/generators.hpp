#pragma once

// Graph families and test fixtures. Every constructor checks the properties
// its family is supposed to have and refuses to return anything else.
//
// Hand-drawn families are written down as straight-line layouts on a plane
// or on a cylinder (x periodic, optional poles above and below everything);
// crossings and rotations are then read off the geometry.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "oneplanar/connectivity.hpp"
#include "oneplanar/drawing.hpp"
#include "oneplanar/graph.hpp"
#include "oneplanar/planarity.hpp"
#include "oneplanar/rotation.hpp"

namespace oneplanar {

inline void self_check(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("generator self-check failed: " + what);
}

// ---------------------------------------------------------------------------
// Layouts

struct Layout {
  std::vector<double> x;
  std::vector<double> y;
  double period = 0;  // 0 = plane
  Vertex top = -1;    // pole above every other vertex
  Vertex bottom = -1; // pole below every other vertex
};

namespace detail {

inline double wrap(double dx, double period) {
  if (period <= 0) return dx;
  while (dx > period / 2) dx -= period;
  while (dx <= -period / 2) dx += period;
  return dx;
}

struct Seg {
  Edge e;
  double x0, y0, dx, dy;
};

inline std::optional<std::pair<double, double>> cross_point(double ax, double ay, double adx, double ady, double bx, double by,
                                                            double bdx, double bdy) {
  auto cross = [](double px, double py, double qx, double qy) { return px * qy - py * qx; };
  const double den = cross(adx, ady, bdx, bdy);
  if (std::abs(den) < 1e-12) return std::nullopt;
  const double qx = bx - ax;
  const double qy = by - ay;
  const double t = cross(qx, qy, bdx, bdy) / den;
  const double u = cross(qx, qy, adx, ady) / den;
  constexpr double eps = 1e-9;
  if (t <= eps || t >= 1 - eps || u <= eps || u >= 1 - eps) return std::nullopt;
  return std::make_pair(ax + t * adx, ay + t * ady);
}

}  // namespace detail

/// Straight-line drawing of `edges` on the layout. Each edge may be crossed
/// at most once; edges at a pole are never crossed.
inline Drawing drawing_from_layout(const Layout& l, const std::vector<Edge>& edges, std::vector<Color> colors = {}) {
  const int n = static_cast<int>(l.x.size());
  auto is_pole = [&](Vertex v) { return v == l.top || v == l.bottom; };
  std::vector<detail::Seg> segs;
  std::vector<Edge> pole_edges;
  for (const auto& e : edges) {
    if (is_pole(e.u) || is_pole(e.v)) {
      pole_edges.push_back(e);
      continue;
    }
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    segs.push_back({e, l.x[u], l.y[u], detail::wrap(l.x[v] - l.x[u], l.period), l.y[v] - l.y[u]});
  }

  struct Hit {
    std::size_t a, b;
    double shift;  // applied to segment b
    double px, py;
  };
  std::vector<Hit> hits;
  std::vector<int> hit_of(segs.size(), -1);
  const std::vector<double> shifts = l.period > 0 ? std::vector<double>{0, -l.period, l.period} : std::vector<double>{0};
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const auto& a = segs[i];
      const auto& b = segs[j];
      if (a.e.u == b.e.u || a.e.u == b.e.v || a.e.v == b.e.u || a.e.v == b.e.v) continue;
      for (double s : shifts) {
        const double bx = a.x0 + detail::wrap(b.x0 - a.x0, l.period) + s;
        if (auto p = detail::cross_point(a.x0, a.y0, a.dx, a.dy, bx, b.y0, b.dx, b.dy)) {
          if (hit_of[i] >= 0 || hit_of[j] >= 0) throw std::logic_error("layout crosses an edge twice");
          hit_of[i] = hit_of[j] = static_cast<int>(hits.size());
          hits.push_back({i, j, bx - b.x0, p->first, p->second});
          break;
        }
      }
    }
  }

  const std::size_t total = static_cast<std::size_t>(n) + hits.size();
  std::vector<std::vector<std::pair<double, int>>> around(total);
  auto add = [&](int node, double dx, double dy, int nb) {
    around[static_cast<std::size_t>(node)].emplace_back(std::atan2(dy, dx), nb);
  };
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const auto& s = segs[i];
    if (hit_of[i] < 0) {
      add(s.e.u, s.dx, s.dy, s.e.v);
      add(s.e.v, -s.dx, -s.dy, s.e.u);
      continue;
    }
    const Hit& h = hits[static_cast<std::size_t>(hit_of[i])];
    const int c = n + hit_of[i];
    const double x0 = h.b == i ? s.x0 + h.shift : s.x0;
    add(s.e.u, s.dx, s.dy, c);
    add(s.e.v, -s.dx, -s.dy, c);
    add(c, x0 - h.px, s.y0 - h.py, s.e.u);
    add(c, x0 + s.dx - h.px, s.y0 + s.dy - h.py, s.e.v);
  }
  for (const auto& e : pole_edges) {
    const Vertex pole = is_pole(e.u) ? e.u : e.v;
    const Vertex w = pole == e.u ? e.v : e.u;
    const double key = l.period > 0 ? std::fmod(l.x[static_cast<std::size_t>(w)] + 10 * l.period, l.period) : l.x[static_cast<std::size_t>(w)];
    if (pole == l.top) {
      add(w, 0, 1, pole);
      around[static_cast<std::size_t>(pole)].emplace_back(key, w);
    } else {
      add(w, 0, -1, pole);
      around[static_cast<std::size_t>(pole)].emplace_back(-key, w);
    }
  }
  Rotation map(total);
  for (std::size_t x = 0; x < total; ++x) {
    auto& a = around[x];
    std::sort(a.begin(), a.end());
    for (const auto& [angle, y] : a) map[x].push_back(y);
  }
  Drawing d = Drawing::from_plane_map(n, map, std::move(colors));
  require_valid(d, "drawing_from_layout");
  return d;
}

// ---------------------------------------------------------------------------
// Small named graphs

inline Graph octahedron() {
  return build_graph(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
}

/// Apex 0, upper ring 1..5, lower ring 6..10, apex 11.
inline Graph icosahedron() {
  std::vector<Edge> es;
  for (int j = 0; j < 5; ++j) {
    es.push_back({0, 1 + j});
    es.push_back(make_edge(1 + j, 1 + (j + 1) % 5));
    es.push_back(make_edge(6 + j, 6 + (j + 1) % 5));
    es.push_back({1 + j, 6 + j});
    es.push_back(make_edge(1 + j, 6 + (j + 1) % 5));
    es.push_back({6 + j, 11});
  }
  return Graph::build(12, es);
}

inline Graph petersen_graph() {
  std::vector<Edge> es;
  for (int j = 0; j < 5; ++j) {
    es.push_back(make_edge(j, (j + 1) % 5));
    es.push_back({j, 5 + j});
    es.push_back(make_edge(5 + j, 5 + (j + 2) % 5));
  }
  return Graph::build(10, es);
}

/// Rotation system of the unique embedding of a 3-connected planar graph.
inline Rotation plane_map_of(const Graph& g) {
  auto r = planarity_certificate(g);
  if (!std::holds_alternative<Drawing>(r)) throw precondition_error("graph is not planar");
  return std::get<Drawing>(r).plane_map();
}

inline Graph graph_of_map(const Rotation& rot) { return Drawing::from_plane_map(static_cast<int>(rot.size()), rot).base(); }

// ---------------------------------------------------------------------------
// Triangulations

/// Tetrahedron with a degree-3 vertex stacked into every face, `depth` times.
inline Graph moon_moser_kleetope(int depth) {
  if (depth < 0) throw precondition_error("moon_moser_kleetope: depth must be >= 0");
  Rotation rot = plane_map_of(complete_graph(4));
  for (int t = 0; t < depth; ++t) {
    for (const auto& walk : trace_faces(rot)) insert_node_in_face(rot, face_corners(walk));
  }
  Graph g = graph_of_map(rot);
  self_check(g.size() == 3 * g.order() - 6, "kleetope edge count");
  return g;
}

namespace detail {

inline Rotation random_stacked_map(int n, std::mt19937_64& rng) {
  Rotation rot = plane_map_of(complete_graph(4));
  for (int i = 4; i < n; ++i) {
    const auto fs = trace_faces(rot);
    std::uniform_int_distribution<std::size_t> pick(0, fs.size() - 1);
    insert_node_in_face(rot, face_corners(fs[pick(rng)]));
  }
  return rot;
}

}  // namespace detail

/// Seeded random face stacking.
inline Graph random_maximal_planar(int n, std::uint64_t seed) {
  if (n < 4) throw precondition_error("random_maximal_planar: n must be >= 4");
  std::mt19937_64 rng(seed);
  Graph g = graph_of_map(detail::random_stacked_map(n, rng));
  self_check(g.size() == 3 * n - 6 && is_planar(g), "random_maximal_planar is maximal planar");
  return g;
}

// ---------------------------------------------------------------------------
// Local edits on maps of triangulated regions

namespace detail {

inline bool map_adjacent(const Rotation& rot, int a, int b) {
  const auto& r = rot[static_cast<std::size_t>(a)];
  return std::find(r.begin(), r.end(), b) != r.end();
}

/// Adjacency of two vertices, also through a crossing node.
inline bool drawn_adjacent(const Rotation& rot, const std::vector<char>& is_crossing, int a, int b) {
  for (int y : rot[static_cast<std::size_t>(a)]) {
    if (y == b) return true;
    if (!is_crossing[static_cast<std::size_t>(y)]) continue;
    const auto& r = rot[static_cast<std::size_t>(y)];
    const int i = rotation_index(rot, y, a);
    if (r[static_cast<std::size_t>((i + 2) % 4)] == b) return true;
  }
  return false;
}

/// Apexes of the two triangles on either side of x-y, if both sides are
/// triangles of vertices.
inline std::optional<std::pair<int, int>> edge_apexes(const Rotation& rot, const std::vector<char>& is_crossing, int x, int y) {
  const int r = rotation_successor(rot, y, x);
  const int t = rotation_successor(rot, x, y);
  if (r == t || is_crossing[static_cast<std::size_t>(r)] || is_crossing[static_cast<std::size_t>(t)]) return std::nullopt;
  if (rotation_successor(rot, r, y) != x || rotation_successor(rot, t, x) != y) return std::nullopt;
  return std::make_pair(r, t);
}

/// Replaces edge x-y by the other diagonal of its quadrilateral.
inline bool flip_edge(Rotation& rot, int x, int y) {
  std::vector<char> none(rot.size(), 0);
  const auto ap = edge_apexes(rot, none, x, y);
  if (!ap) return false;
  const auto [r, t] = *ap;
  if (map_adjacent(rot, r, t) || rot[static_cast<std::size_t>(x)].size() <= 3 || rot[static_cast<std::size_t>(y)].size() <= 3) return false;
  rotation_erase(rot, x, y);
  rotation_erase(rot, y, x);
  rotation_insert_after(rot, r, y, t);
  rotation_insert_after(rot, t, x, r);
  return true;
}

/// Draws the second diagonal r-t of the quadrilateral around x-y through a
/// new crossing node. Returns the node.
inline int add_crossing_diagonal(Rotation& rot, std::vector<char>& is_crossing, int x, int y) {
  const auto ap = edge_apexes(rot, is_crossing, x, y);
  if (!ap) throw std::logic_error("add_crossing_diagonal: edge is not between two vertex triangles");
  const auto [r, t] = *ap;
  const int c = static_cast<int>(rot.size());
  rot.push_back({x, r, y, t});
  is_crossing.push_back(1);
  rotation_replace(rot, x, y, c);
  rotation_replace(rot, y, x, c);
  rotation_insert_after(rot, r, y, c);
  rotation_insert_after(rot, t, x, c);
  return c;
}

/// Faces of the map bounded by three vertices.
inline std::vector<std::vector<int>> vertex_triangles(const Rotation& rot, const std::vector<char>& is_crossing) {
  std::vector<std::vector<int>> out;
  for (auto& walk : trace_faces(rot)) {
    if (walk.size() != 3) continue;
    if (std::any_of(walk.begin(), walk.end(), [&](int x) { return is_crossing[static_cast<std::size_t>(x)] != 0; })) continue;
    out.push_back(std::move(walk));
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The K6 gadget and the circumference expansion

/// K6 on u=0, v=1, w=2 (outer triangle) and a=3, b=4, c=5 (inner triangle),
/// crossings av x bu, bw x cv, cu x aw.
inline Drawing k6_gadget() {
  Layout l;
  l.x = {0, -8.66, 8.66, 0, -2.6, 2.6};
  l.y = {10, -5, -5, 3, -1.5, -1.5};
  Drawing d = drawing_from_layout(l, complete_graph(6).edges());
  self_check(d.crossing_count() == 3, "k6 gadget has three crossings");
  for (const auto& info : classify_all(d)) self_check(info.cls == CrossingClass::full, "k6 gadget crossings are full");
  return d;
}

namespace detail {

/// Drops a copy of the K6 gadget into the triangular face `walk`.
inline void insert_k6(Rotation& rot, std::vector<char>& is_crossing, const std::vector<int>& walk, const Rotation& gadget,
                      int gadget_real) {
  const auto corners = face_corners(walk);
  // Orientation: at gadget node 0, the inner part has to follow node 2.
  Rotation gm = gadget;
  if (rotation_successor(gm, 0, 2) == 1) {
    for (auto& r : gm) std::reverse(r.begin(), r.end());
  }
  std::vector<int> id(gm.size());
  for (int i = 0; i < 3; ++i) id[static_cast<std::size_t>(i)] = walk[static_cast<std::size_t>(i)];
  for (std::size_t x = 3; x < gm.size(); ++x) {
    id[x] = static_cast<int>(rot.size());
    rot.emplace_back();
    is_crossing.push_back(static_cast<int>(x) >= gadget_real ? 1 : 0);
  }
  for (int i = 0; i < 3; ++i) {
    const int before = (i + 2) % 3;
    const int after = (i + 1) % 3;
    int prev = corners[static_cast<std::size_t>(i)].prev;
    for (int y = rotation_successor(gm, i, before); y != after; y = rotation_successor(gm, i, y)) {
      rotation_insert_after(rot, walk[static_cast<std::size_t>(i)], prev, id[static_cast<std::size_t>(y)]);
      prev = id[static_cast<std::size_t>(y)];
    }
  }
  for (std::size_t x = 3; x < gm.size(); ++x)
    for (int y : gm[x]) rot[static_cast<std::size_t>(id[x])].push_back(id[static_cast<std::size_t>(y)]);
}

inline bool is_maximal_planar(const Graph& g) { return g.order() >= 4 && g.size() == 3 * g.order() - 6 && is_planar(g); }

}  // namespace detail

/// A K6 gadget in every face of the maximal planar graph h. The old vertices
/// keep their labels 0..n-1; gadget vertices follow face by face.
inline Drawing theorem1_expand(const Graph& h) {
  if (!detail::is_maximal_planar(h)) throw precondition_error("theorem1_expand: input is not maximal planar with n >= 4");
  const Drawing gadget = k6_gadget();
  const Rotation gmap = gadget.plane_map();
  Rotation rot = plane_map_of(h);
  std::vector<char> is_crossing(rot.size(), 0);
  for (const auto& walk : trace_faces(Rotation(rot))) {
    self_check(walk.size() == 3, "faces of a maximal planar graph are triangles");
    detail::insert_k6(rot, is_crossing, walk, gmap, gadget.vertex_count());
  }
  Drawing d = detail::finish_map(rot, is_crossing);
  const int n = h.order();
  require_valid(d, "theorem1_expand");
  self_check(d.vertex_count() == 7 * n - 12, "7n-12 vertices");
  self_check(d.base().size() == 27 * n - 54, "27n-54 edges");
  self_check(maximality_class(d).cls == Maximality::locally_maximal, "expansion is locally maximal");
  return d;
}

// ---------------------------------------------------------------------------
// The ring of K4 blocks

/// Labels of block i: u = 4i, x = 4i+1, y = 4i+2, z = 4i+3.
struct Figure1Labels {
  static Vertex u(int i) { return 4 * i; }
  static Vertex x(int i) { return 4 * i + 1; }
  static Vertex y(int i) { return 4 * i + 2; }
  static Vertex z(int i) { return 4 * i + 3; }
};

namespace detail {

inline Drawing ring_of_blocks(int k, bool weak) {
  using L = Figure1Labels;
  Layout l;
  l.period = 3.0 * k;
  l.x.resize(static_cast<std::size_t>(4 * k));
  l.y.resize(static_cast<std::size_t>(4 * k));
  std::vector<Edge> es;
  for (int i = 0; i < k; ++i) {
    const int j = (i + 1) % k;
    auto put = [&](Vertex v, double x, double y) {
      l.x[static_cast<std::size_t>(v)] = x;
      l.y[static_cast<std::size_t>(v)] = y;
    };
    put(L::u(i), 3.0 * i, 1);
    put(L::x(i), 3.0 * i + 1, 1);
    put(L::y(i), 3.0 * i + 1, 0);
    put(L::z(i), 3.0 * i, 0);
    for (auto [a, b] : {std::pair{L::u(i), L::x(i)}, {L::y(i), L::z(i)}, {L::z(i), L::u(i)}, {L::u(i), L::y(i)},
                        {L::x(i), L::z(i)}, {L::x(i), L::u(j)}, {L::y(i), L::z(j)}})
      es.push_back(make_edge(a, b));
    if (!weak) es.push_back(make_edge(L::x(i), L::y(i)));
  }
  return drawing_from_layout(l, es);
}

}  // namespace detail

/// Branch vertices of the K5 subdivision: u1, x1, y1, z1, xk.
inline std::vector<Vertex> figure1_k5_branches(int k) {
  using L = Figure1Labels;
  return {L::u(0), L::x(0), L::y(0), L::z(0), L::x(k - 1)};
}

/// Sides {x1, y1, xk} and {u1, z1, x2} of the K3,3 in the forced subgraph.
inline std::vector<Vertex> figure1_k33_branches(int k) {
  using L = Figure1Labels;
  return {L::x(0), L::y(0), L::x(k - 1), L::u(0), L::z(0), L::x(1)};
}

/// 4k-vertex 4-regular locally maximal ring of K4 blocks.
inline Drawing figure1_family(int k) {
  if (k < 2) throw precondition_error("figure1_family: k must be >= 2");
  Drawing d = detail::ring_of_blocks(k, false);
  const Graph& g = d.base();
  self_check(d.crossing_count() == k, "one crossing per block");
  for (Vertex v = 0; v < g.order(); ++v) self_check(g.degree(v) == 4, "4-regular");
  self_check(maximality_class(d).cls == Maximality::locally_maximal, "locally maximal");
  self_check(vertex_connectivity(g).connectivity == 4, "4-connected");
  self_check(find_subdivision(g, figure1_k5_branches(k)).has_value(), "K5 subdivision on u1, x1, y1, z1, xk");
  return d;
}

/// The ring without the edges x_i y_i.
inline Drawing figure1_weak_variant(int k) {
  if (k < 2) throw precondition_error("figure1_weak_variant: k must be >= 2");
  Drawing d = detail::ring_of_blocks(k, true);
  const auto m = maximality_class(d);
  self_check(m.cls == Maximality::weakly_locally_maximal && m.almost_full == k, "every crossing almost full");
  return d;
}

/// The weak ring minus every u_i z_i: what is left once each crossing loses
/// one of its edges and the graph must stay 3-connected.
inline Graph figure1_forced_subgraph(int k) {
  using L = Figure1Labels;
  const Drawing d = figure1_weak_variant(k);
  std::vector<Edge> drop;
  for (int i = 0; i < k; ++i) drop.push_back(make_edge(L::u(i), L::z(i)));
  return remove_edges(d.base(), drop);
}

// ---------------------------------------------------------------------------
// The 5-connected weak construction

/// Vertex labels for the construction with ring size k (k = 5 by default):
/// rings R1 (k), R2 (2k), R3 (k) are black; the two poles and two bands of
/// 2k vertices each are white.
struct PoleRings {
  int k;
  Vertex r1(int i) const { return ((i % k) + k) % k; }
  Vertex r2(int j) const { return k + ((j % (2 * k)) + 2 * k) % (2 * k); }
  Vertex r3(int i) const { return 3 * k + ((i % k) + k) % k; }
  Vertex top() const { return 4 * k; }
  Vertex upper(int j) const { return 4 * k + 1 + ((j % (2 * k)) + 2 * k) % (2 * k); }
  Vertex lower(int j) const { return 6 * k + 1 + ((j % (2 * k)) + 2 * k) % (2 * k); }
  Vertex bottom() const { return 8 * k + 1; }
  int order() const { return 8 * k + 2; }
};

/// Whole construction: 4k black, 4k+2 white vertices, all crossings almost full.
inline Drawing theorem2_graph(int k = 5) {
  if (k < 5) throw precondition_error("theorem2_graph: ring size must be >= 5");
  const PoleRings p{k};
  Layout l;
  l.period = 2.0 * k;
  l.x.assign(static_cast<std::size_t>(p.order()), 0);
  l.y.assign(static_cast<std::size_t>(p.order()), 0);
  l.top = p.top();
  l.bottom = p.bottom();
  auto put = [&](Vertex v, double x, double y) {
    l.x[static_cast<std::size_t>(v)] = x;
    l.y[static_cast<std::size_t>(v)] = y;
  };
  std::vector<Edge> es;
  auto edge = [&](Vertex a, Vertex b) { es.push_back(make_edge(a, b)); };
  for (int i = 0; i < k; ++i) {
    put(p.r1(i), 2 * i + 0.5, 2);
    put(p.r3(i), 2 * i + 0.5, -2);
    edge(p.r1(i), p.r1(i + 1));
    edge(p.r3(i), p.r3(i + 1));
    edge(p.top(), p.r1(i));
    edge(p.bottom(), p.r3(i));
  }
  for (int j = 0; j < 2 * k; ++j) {
    put(p.r2(j), j, 0);
    put(p.upper(j), j + 1, 1);
    put(p.lower(j), j + 1, -1);
    edge(p.r2(j), p.r2(j + 1));
    for (int t = 0; t < 3; ++t) {
      edge(p.upper(j), p.r2(j + t));
      edge(p.lower(j), p.r2(j + t));
    }
    // Pair i = (2i, 2i+1) sits between r_i and r_{i+1}.
    const int i = j / 2;
    edge(p.upper(j), p.r1(i));
    edge(p.upper(j), p.r1(i + 1));
    edge(p.lower(j), p.r3(i));
    edge(p.lower(j), p.r3(i + 1));
  }
  std::vector<Color> colors(static_cast<std::size_t>(p.order()), Color::white);
  for (Vertex v = 0; v < 4 * k; ++v) colors[static_cast<std::size_t>(v)] = Color::black;
  Drawing d = drawing_from_layout(l, es, colors);
  const Graph& g = d.base();
  const auto m = maximality_class(d);
  self_check(m.cls == Maximality::weakly_locally_maximal && m.full == 0, "all crossings almost full");
  self_check(is_independent_set(g, g.vertices_with(Color::white)), "white vertices independent");
  self_check(static_cast<int>(g.vertices_with(Color::white).size()) == 4 * k + 2, "4k+2 white vertices");
  self_check(vertex_connectivity(g).connectivity == 5, "5-connected");
  return d;
}

struct StructureH {
  Drawing drawing;
  /// Black vertices that carried the edges to the removed pole, in the
  /// pole's rotation order.
  std::vector<Vertex> stubs;
};

/// The construction minus its bottom pole; the pole's edges become stubs.
inline StructureH structure_h(int k = 5) {
  const Drawing full = theorem2_graph(k);
  const PoleRings p{k};
  Rotation rot = full.plane_map();
  const int pole = p.bottom();
  StructureH out;
  out.stubs = rot[static_cast<std::size_t>(pole)];
  for (int y : out.stubs) rotation_erase(rot, y, pole);
  rot[static_cast<std::size_t>(pole)].clear();
  std::vector<char> is_crossing(rot.size(), 0);
  for (std::size_t x = 0; x < rot.size(); ++x) is_crossing[x] = static_cast<int>(x) >= full.vertex_count() ? 1 : 0;
  // The pole is the last vertex, so dropping it keeps every other label.
  rot.erase(rot.begin() + pole);
  is_crossing.erase(is_crossing.begin() + pole);
  for (auto& r : rot)
    for (int& y : r)
      if (y > pole) --y;
  auto colors = full.base().colors();
  colors.pop_back();
  out.drawing = detail::finish_map(rot, is_crossing, colors);
  const Graph& g = out.drawing.base();
  self_check(g.vertices_with(Color::black).size() == static_cast<std::size_t>(4 * k), "black count");
  self_check(g.vertices_with(Color::white).size() == static_cast<std::size_t>(4 * k + 1), "white count");
  for (Vertex s : out.stubs) self_check(g.color(s) == Color::black, "stubs are black");
  return out;
}

struct FamilyStats {
  int index = 0;
  long black = 0;
  long white = 0;
  long vertex_count = 0;
  bool recurrences_hold = false;
};

struct FamilyMember {
  Graph graph;
  FamilyStats stats;
};

/// G_0 = structure H without stubs; G_{i+1} replaces every white vertex of
/// G_i by a copy of H whose stubs take over the white vertex's edges.
inline std::vector<FamilyMember> theorem2_family(int max_index) {
  if (max_index < 0 || max_index > 3) throw precondition_error("theorem2_family: index must be in 0..3");
  const Drawing full = theorem2_graph(5);
  const PoleRings p{5};
  const Graph& fg = full.base();
  const int pole = p.bottom();
  const int h_order = fg.order() - 1;

  // Cyclic order of real neighbours around each vertex of the full construction.
  auto around_of = [&](Vertex v) {
    std::vector<Vertex> out;
    for (const auto& dart : full.rotation()[static_cast<std::size_t>(v)]) {
      const Edge& e = fg.edge(dart.edge);
      out.push_back(e.u == v ? e.v : e.u);
    }
    return out;
  };
  std::vector<std::vector<Vertex>> h_around(static_cast<std::size_t>(h_order));
  for (Vertex v = 0; v < h_order; ++v) h_around[static_cast<std::size_t>(v)] = around_of(v);
  const std::vector<Vertex> stubs = around_of(pole);

  std::vector<std::vector<Vertex>> around = h_around;
  for (auto& a : around) a.erase(std::remove(a.begin(), a.end(), pole), a.end());
  std::vector<Color> colors(fg.colors().begin(), fg.colors().end() - 1);
  const std::vector<Color> h_colors = colors;

  auto stats_of = [](int i, const std::vector<Color>& cs) {
    FamilyStats s;
    s.index = i;
    for (Color c : cs) (c == Color::black ? s.black : s.white) += 1;
    s.vertex_count = static_cast<long>(cs.size());
    return s;
  };
  auto to_graph = [](const std::vector<std::vector<Vertex>>& adj, std::vector<Color> cs) {
    std::vector<Edge> es;
    for (std::size_t v = 0; v < adj.size(); ++v)
      for (Vertex w : adj[v])
        if (static_cast<Vertex>(v) < w) es.push_back({static_cast<Vertex>(v), w});
    return Graph::build(static_cast<int>(adj.size()), es, std::move(cs));
  };

  std::vector<FamilyMember> out;
  FamilyStats prev = stats_of(0, colors);
  prev.recurrences_hold = prev.white == 21 && prev.vertex_count > 21;
  out.push_back({to_graph(around, colors), prev});
  for (int i = 1; i <= max_index; ++i) {
    const int n = static_cast<int>(around.size());
    std::vector<int> id(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (Vertex v = 0; v < n; ++v)
      if (colors[static_cast<std::size_t>(v)] == Color::black) id[static_cast<std::size_t>(v)] = next++;
    std::vector<int> base_of(static_cast<std::size_t>(n), -1);  // first label of the copy replacing a white vertex
    for (Vertex v = 0; v < n; ++v) {
      if (colors[static_cast<std::size_t>(v)] != Color::white) continue;
      base_of[static_cast<std::size_t>(v)] = next;
      next += h_order;
    }
    std::vector<std::vector<Vertex>> nxt(static_cast<std::size_t>(next));
    std::vector<Color> ncol(static_cast<std::size_t>(next), Color::black);
    // Which stub of the copy replacing white w faces black neighbour x.
    auto stub_for = [&](Vertex w, Vertex x) {
      const auto& a = around[static_cast<std::size_t>(w)];
      const auto j = static_cast<std::size_t>(std::find(a.begin(), a.end(), x) - a.begin());
      const std::size_t m = stubs.size();
      return base_of[static_cast<std::size_t>(w)] + stubs[(m - j) % m];
    };
    for (Vertex v = 0; v < n; ++v) {
      if (colors[static_cast<std::size_t>(v)] == Color::black) {
        auto& out_v = nxt[static_cast<std::size_t>(id[static_cast<std::size_t>(v)])];
        for (Vertex w : around[static_cast<std::size_t>(v)])
          out_v.push_back(colors[static_cast<std::size_t>(w)] == Color::black ? id[static_cast<std::size_t>(w)] : stub_for(w, v));
        continue;
      }
      const int b = base_of[static_cast<std::size_t>(v)];
      const auto& a = around[static_cast<std::size_t>(v)];
      for (Vertex x = 0; x < h_order; ++x) {
        auto& out_x = nxt[static_cast<std::size_t>(b + x)];
        ncol[static_cast<std::size_t>(b + x)] = h_colors[static_cast<std::size_t>(x)];
        for (Vertex y : h_around[static_cast<std::size_t>(x)]) {
          if (y != pole) {
            out_x.push_back(b + y);
            continue;
          }
          const std::size_t m = stubs.size();
          const auto s = static_cast<std::size_t>(std::find(stubs.begin(), stubs.end(), x) - stubs.begin());
          out_x.push_back(id[static_cast<std::size_t>(a[(m - s) % m])]);
        }
      }
    }
    around = std::move(nxt);
    colors = std::move(ncol);
    FamilyStats s = stats_of(i, colors);
    s.recurrences_hold = s.white == 21 * prev.white && s.black == prev.black + 20 * prev.white && s.vertex_count > s.white;
    Graph g = to_graph(around, colors);
    self_check(is_independent_set(g, g.vertices_with(Color::white)), "white vertices stay independent");
    out.push_back({std::move(g), s});
    prev = s;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fixtures

/// Icosahedron with s + 1 crossing diagonals added, s of which lose one side
/// and become almost full. 4-connected and weakly locally maximal.
inline Drawing almost_full_test_instance(int s) {
  if (s < 1 || s > 4) throw precondition_error("almost_full_test_instance: s must be in 1..4");
  const Rotation base = plane_map_of(icosahedron());
  const Graph ico = icosahedron();

  struct Pick {
    Edge crossed;
    int r, t;
  };
  // Candidate quadrilaterals in edge order.
  std::vector<Pick> cand;
  std::vector<char> none(base.size(), 0);
  for (const auto& e : ico.edges()) {
    if (auto ap = detail::edge_apexes(base, none, e.u, e.v)) cand.push_back({e, ap->first, ap->second});
  }
  auto faces_of = [](const Pick& p) {
    auto tri = [](int a, int b, int c) {
      std::array<int, 3> t{a, b, c};
      std::sort(t.begin(), t.end());
      return t;
    };
    return std::array<std::array<int, 3>, 2>{tri(p.crossed.u, p.crossed.v, p.r), tri(p.crossed.u, p.crossed.v, p.t)};
  };

  std::vector<Pick> chosen;
  std::optional<Drawing> result;
  auto attempt = [&]() -> std::optional<Drawing> {
    Rotation rot = base;
    std::vector<char> is_crossing(rot.size(), 0);
    for (const auto& p : chosen) detail::add_crossing_diagonal(rot, is_crossing, p.crossed.u, p.crossed.v);
    for (int i = 0; i < s; ++i) {
      const auto& p = chosen[static_cast<std::size_t>(i)];
      if (!detail::map_adjacent(rot, p.crossed.u, p.r)) return std::nullopt;
      rotation_erase(rot, p.crossed.u, p.r);
      rotation_erase(rot, p.r, p.crossed.u);
    }
    Drawing d = detail::finish_map(rot, is_crossing);
    if (!is_valid(d)) return std::nullopt;
    const auto m = maximality_class(d);
    if (m.almost_full != s || m.other != 0) return std::nullopt;
    if (vertex_connectivity(d.base()).connectivity < 4) return std::nullopt;
    return d;
  };
  auto search = [&](auto&& self, std::size_t from) -> bool {
    if (static_cast<int>(chosen.size()) == s + 1) {
      result = attempt();
      return result.has_value();
    }
    for (std::size_t i = from; i < cand.size(); ++i) {
      const auto fi = faces_of(cand[i]);
      bool clash = false;
      for (const auto& p : chosen) {
        const auto fp = faces_of(p);
        for (const auto& a : fi)
          for (const auto& b : fp) clash = clash || a == b;
        clash = clash || make_edge(p.r, p.t) == make_edge(cand[i].r, cand[i].t);
      }
      if (clash) continue;
      chosen.push_back(cand[i]);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  self_check(search(search, 0), "almost-full fixture found");
  return *result;
}

namespace detail {

/// Seeded random 4-connected triangulation on n vertices: stacking followed by
/// random flips until no separating triangle is left.
inline Rotation random_four_connected_map(int n, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Rotation rot = random_stacked_map(n, rng);
    for (int round = 0; round < 40; ++round) {
      for (int f = 0; f < 4 * n; ++f) {
        std::uniform_int_distribution<int> pick(0, n - 1);
        const int x = pick(rng);
        const auto& r = rot[static_cast<std::size_t>(x)];
        std::uniform_int_distribution<std::size_t> which(0, r.size() - 1);
        flip_edge(rot, x, r[which(rng)]);
      }
      if (vertex_connectivity(graph_of_map(rot)).connectivity >= 4) return rot;
    }
  }
  throw std::logic_error("random_four_connected_map: no 4-connected triangulation found");
}

}  // namespace detail

/// Seeded locally maximal fixture: a random 4-connected triangulation with a
/// few full crossing diagonals and between 1 and `max_gadgets` K6 gadgets.
/// It has exactly as many 3-cuts as gadgets.
inline Drawing random_locally_maximal(std::uint64_t seed, int max_gadgets = 3) {
  if (max_gadgets < 1) throw precondition_error("random_locally_maximal: need at least one gadget");
  std::mt19937_64 rng(seed);
  const Drawing gadget = k6_gadget();
  const Rotation gmap = gadget.plane_map();
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::uniform_int_distribution<int> size(6, 10);
    const int n = size(rng);
    Rotation rot = detail::random_four_connected_map(n, rng);
    std::vector<char> is_crossing(rot.size(), 0);

    std::uniform_int_distribution<int> diag_count(0, 2);
    for (int c = diag_count(rng); c > 0; --c) {
      std::vector<Edge> options;
      for (int x = 0; x < n; ++x)
        for (int y : rot[static_cast<std::size_t>(x)]) {
          if (y >= n || x > y) continue;
          auto ap = detail::edge_apexes(rot, is_crossing, x, y);
          if (ap && !detail::drawn_adjacent(rot, is_crossing, ap->first, ap->second)) options.push_back({x, y});
        }
      if (options.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
      const Edge e = options[pick(rng)];
      detail::add_crossing_diagonal(rot, is_crossing, e.u, e.v);
    }

    std::uniform_int_distribution<int> gadget_count(1, max_gadgets);
    const int want = gadget_count(rng);
    for (int g = 0; g < want; ++g) {
      auto tris = detail::vertex_triangles(rot, is_crossing);
      // Old vertices only, so gadgets never nest.
      tris.erase(std::remove_if(tris.begin(), tris.end(),
                                [&](const std::vector<int>& t) { return std::any_of(t.begin(), t.end(), [&](int v) { return v >= n; }); }),
                 tris.end());
      if (tris.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, tris.size() - 1);
      detail::insert_k6(rot, is_crossing, tris[pick(rng)], gmap, gadget.vertex_count());
    }
    Drawing d = detail::finish_map(rot, is_crossing);
    if (!is_valid(d) || maximality_class(d).cls != Maximality::locally_maximal) continue;
    if (vertex_connectivity(d.base()).connectivity < 3) continue;
    const auto cuts = enumerate_3cuts(d.base());
    if (cuts.empty() || static_cast<int>(cuts.size()) > max_gadgets) continue;
    return d;
  }
  throw std::logic_error("random_locally_maximal: no fixture found");
}

}  // namespace oneplanar
