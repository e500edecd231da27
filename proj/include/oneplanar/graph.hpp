#pragma once

// Simple undirected graphs with optional black/white vertex roles, plus the
// certificate type that every search in the library emits.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "oneplanar/rotation.hpp"

namespace oneplanar {

using Vertex = int;
using EdgeId = int;

/// Failure classes; the CLI maps these onto exit codes.
enum class ErrorKind { usage = 1, validation = 2, precondition = 3, budget = 4 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error validation_error(const std::string& what) { return Error(ErrorKind::validation, what); }
inline Error precondition_error(const std::string& what) { return Error(ErrorKind::precondition, what); }

enum class Color : std::uint8_t { none, black, white };

struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

class Graph {
 public:
  Graph() = default;

  /// Builds a simple graph. Edges are stored sorted with u < v; the edge id is
  /// the position in that order.
  static Graph build(int n, std::span<const std::pair<int, int>> edge_list, std::vector<Color> colors = {}) {
    if (n < 0) throw validation_error("negative vertex count");
    Graph g;
    g.n_ = n;
    g.edges_.reserve(edge_list.size());
    for (auto [a, b] : edge_list) {
      if (a < 0 || b < 0 || a >= n || b >= n) {
        throw validation_error("dangling endpoint in edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
      if (a == b) throw validation_error("loop edge at vertex " + std::to_string(a));
      g.edges_.push_back(make_edge(a, b));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end()) {
      throw validation_error("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
    }
    if (!colors.empty() && static_cast<int>(colors.size()) != n) throw validation_error("color vector size mismatch");
    g.colors_ = colors.empty() ? std::vector<Color>(static_cast<std::size_t>(n), Color::none) : std::move(colors);
    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (const auto& e : g.edges_) {
      g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
      g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    return g;
  }

  static Graph build(int n, const std::vector<Edge>& edges, std::vector<Color> colors = {}) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges.size());
    for (const auto& e : edges) pairs.emplace_back(e.u, e.v);
    return build(n, pairs, std::move(colors));
  }

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(static_cast<std::size_t>(v)).size()); }
  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  bool adjacent(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b)) return false;
    const auto& r = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(r.begin(), r.end(), b);
  }

  std::optional<EdgeId> edge_id(Vertex a, Vertex b) const {
    const Edge key = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<EdgeId>(it - edges_.begin());
  }

  Color color(Vertex v) const { return colors_.at(static_cast<std::size_t>(v)); }
  const std::vector<Color>& colors() const noexcept { return colors_; }
  bool has_colors() const {
    return std::any_of(colors_.begin(), colors_.end(), [](Color c) { return c != Color::none; });
  }

  int min_degree() const {
    int best = n_ == 0 ? 0 : degree(0);
    for (Vertex v = 1; v < n_; ++v) best = std::min(best, degree(v));
    return best;
  }

  std::vector<Vertex> vertices_with(Color c) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v) {
      if (colors_[static_cast<std::size_t>(v)] == c) out.push_back(v);
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.colors_ == b.colors_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Color> colors_;
};

inline Graph build_graph(int n, std::span<const std::pair<int, int>> edge_list) { return Graph::build(n, edge_list); }

inline Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edge_list) {
  return Graph::build(n, std::span<const std::pair<int, int>>(edge_list.begin(), edge_list.size()));
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) es.emplace_back(a, b);
  return Graph::build(n, es);
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph::build(n, es);
}

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph::build(n, es);
}

/// Graph on a vertex subset, relabelled 0..|s|-1 in increasing id order.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> labels;  // labels[i] = original id of vertex i
};

inline Subgraph induced_subgraph(const Graph& g, std::vector<Vertex> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (Vertex v : s) {
    if (!g.contains(v)) throw precondition_error("induced_subgraph: vertex " + std::to_string(v) + " not in graph");
  }
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < s.size(); ++i) index[static_cast<std::size_t>(s[i])] = static_cast<int>(i);
  std::vector<std::pair<int, int>> es;
  std::vector<Color> colors;
  for (Vertex v : s) colors.push_back(g.color(v));
  for (const auto& e : g.edges()) {
    const int a = index[static_cast<std::size_t>(e.u)];
    const int b = index[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) es.emplace_back(a, b);
  }
  return {Graph::build(static_cast<int>(s.size()), es, std::move(colors)), std::move(s)};
}

/// Graph with the listed vertices removed, relabelled like induced_subgraph.
inline Subgraph remove_vertices(const Graph& g, const std::vector<Vertex>& removed) {
  std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : removed) gone.at(static_cast<std::size_t>(v)) = 1;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!gone[static_cast<std::size_t>(v)]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

inline Graph remove_edges(const Graph& g, const std::vector<Edge>& removed) {
  std::set<Edge> drop;
  for (const auto& e : removed) drop.insert(make_edge(e.u, e.v));
  std::vector<Edge> keep;
  for (const auto& e : g.edges())
    if (!drop.count(e)) keep.push_back(e);
  return Graph::build(g.order(), keep, g.colors());
}

inline Graph add_edges(const Graph& g, const std::vector<Edge>& added) {
  std::vector<Edge> all = g.edges();
  all.insert(all.end(), added.begin(), added.end());
  return Graph::build(g.order(), all, g.colors());
}

inline bool is_independent_set(const Graph& g, const std::vector<Vertex>& s) {
  for (Vertex v : s) {
    if (!g.contains(v)) throw precondition_error("is_independent_set: vertex " + std::to_string(v) + " not in graph");
  }
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

/// Components of g - removed, each sorted; the list is sorted by smallest id.
inline std::vector<std::vector<Vertex>> components_without(const Graph& g, const std::vector<Vertex>& removed) {
  std::vector<char> mark(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : removed) mark.at(static_cast<std::size_t>(v)) = 2;
  std::vector<std::vector<Vertex>> comps;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (mark[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> comp{s};
    mark[static_cast<std::size_t>(s)] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex y : g.neighbors(comp[head])) {
        if (!mark[static_cast<std::size_t>(y)]) {
          mark[static_cast<std::size_t>(y)] = 1;
          comp.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Graph& g) { return components_without(g, {}).size() <= 1; }

/// True when g - s has at least two components.
inline bool disconnects(const Graph& g, const std::vector<Vertex>& s) { return components_without(g, s).size() >= 2; }

// ---------------------------------------------------------------------------
// Certificates

enum class CertificateKind { cycle, path, cut, independent_set, subdivision, face_count };

inline const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::cycle: return "cycle";
    case CertificateKind::path: return "path";
    case CertificateKind::cut: return "cut";
    case CertificateKind::independent_set: return "independent_set";
    case CertificateKind::subdivision: return "subdivision";
    case CertificateKind::face_count: return "face_count";
  }
  return "?";
}

/// A verification artifact checked against a graph without re-running the
/// search that produced it.
///
/// - cycle / path: `vertices` in visiting order (a cycle does not repeat its first vertex)
/// - cut / independent_set: `vertices` as a set
/// - subdivision: `branch` holds 5 vertices (K5) or 6 vertices listed as two
///   sides of three (K3,3); `paths` hold the subdivided edges, endpoints first and last
/// - face_count: `rotation` is an embedding of the whole graph, `faces` the claimed face count
struct Certificate {
  CertificateKind kind = CertificateKind::cycle;
  std::vector<Vertex> vertices;
  std::vector<Vertex> branch;
  std::vector<std::vector<Vertex>> paths;
  Rotation rotation;
  int faces = 0;

  static Certificate cycle(std::vector<Vertex> vs) { return {CertificateKind::cycle, std::move(vs), {}, {}, {}, 0}; }
  static Certificate path(std::vector<Vertex> vs) { return {CertificateKind::path, std::move(vs), {}, {}, {}, 0}; }
  static Certificate cut(std::vector<Vertex> vs) { return {CertificateKind::cut, std::move(vs), {}, {}, {}, 0}; }
  static Certificate independent_set(std::vector<Vertex> vs) {
    return {CertificateKind::independent_set, std::move(vs), {}, {}, {}, 0};
  }
  static Certificate subdivision(std::vector<Vertex> branch, std::vector<std::vector<Vertex>> paths) {
    return {CertificateKind::subdivision, {}, std::move(branch), std::move(paths), {}, 0};
  }
  static Certificate face_count(Rotation rot, int faces) {
    return {CertificateKind::face_count, {}, {}, {}, std::move(rot), faces};
  }

  bool is_k5() const { return kind == CertificateKind::subdivision && branch.size() == 5; }
  bool is_k33() const { return kind == CertificateKind::subdivision && branch.size() == 6; }
};

namespace detail {

inline bool distinct(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

inline bool walk_uses_edges(const Graph& g, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i + 1 < vs.size(); ++i)
    if (!g.adjacent(vs[i], vs[i + 1])) return false;
  return true;
}

inline bool verify_subdivision(const Graph& g, const Certificate& c) {
  const std::size_t b = c.branch.size();
  if (b != 5 && b != 6) return false;
  if (!distinct(c.branch)) return false;
  const std::size_t expected = b == 5 ? 10 : 9;
  if (c.paths.size() != expected) return false;
  auto branch_index = [&](Vertex v) -> int {
    auto it = std::find(c.branch.begin(), c.branch.end(), v);
    return it == c.branch.end() ? -1 : static_cast<int>(it - c.branch.begin());
  };
  std::set<std::pair<int, int>> pairs;
  std::vector<Vertex> interior;
  for (const auto& p : c.paths) {
    if (p.size() < 2) return false;
    for (Vertex v : p)
      if (!g.contains(v)) return false;
    if (!walk_uses_edges(g, p)) return false;
    const int i = branch_index(p.front());
    const int j = branch_index(p.back());
    if (i < 0 || j < 0 || i == j) return false;
    if (b == 6 && (i < 3) == (j < 3)) return false;  // K3,3 paths join opposite sides
    pairs.insert({std::min(i, j), std::max(i, j)});
    for (std::size_t k = 1; k + 1 < p.size(); ++k) {
      if (branch_index(p[k]) >= 0) return false;
      interior.push_back(p[k]);
    }
  }
  return pairs.size() == expected && distinct(interior);
}

inline bool verify_face_count(const Graph& g, const Certificate& c) {
  if (static_cast<int>(c.rotation.size()) != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto r = c.rotation[static_cast<std::size_t>(v)];
    std::sort(r.begin(), r.end());
    const auto nb = g.neighbors(v);
    if (!std::equal(r.begin(), r.end(), nb.begin(), nb.end())) return false;
  }
  if (static_cast<int>(rotation_face_count(c.rotation)) != c.faces) return false;
  return rotation_is_spherical(c.rotation);
}

}  // namespace detail

/// Kind-specific check of a certificate against g.
inline bool verify_certificate(const Graph& g, const Certificate& c) {
  for (Vertex v : c.vertices)
    if (!g.contains(v)) throw validation_error("certificate: vertex id " + std::to_string(v) + " out of range");
  switch (c.kind) {
    case CertificateKind::cycle:
      return c.vertices.size() >= 3 && detail::distinct(c.vertices) && detail::walk_uses_edges(g, c.vertices) &&
             g.adjacent(c.vertices.back(), c.vertices.front());
    case CertificateKind::path:
      return !c.vertices.empty() && detail::distinct(c.vertices) && detail::walk_uses_edges(g, c.vertices);
    case CertificateKind::cut:
      return detail::distinct(c.vertices) && disconnects(g, c.vertices);
    case CertificateKind::independent_set:
      return detail::distinct(c.vertices) && is_independent_set(g, c.vertices);
    case CertificateKind::subdivision:
      return detail::verify_subdivision(g, c);
    case CertificateKind::face_count:
      return detail::verify_face_count(g, c);
  }
  return false;
}

/// Edges traversed by a cycle (closing edge included) or a path.
inline std::vector<Edge> walk_edges(const std::vector<Vertex>& vs, bool closed) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) out.push_back(make_edge(vs[i], vs[i + 1]));
  if (closed && vs.size() >= 3) out.push_back(make_edge(vs.back(), vs.front()));
  return out;
}

inline bool is_hamiltonian_cycle(const Graph& g, const std::vector<Vertex>& vs) {
  return static_cast<int>(vs.size()) == g.order() && verify_certificate(g, Certificate::cycle(vs));
}

inline bool is_hamiltonian_path(const Graph& g, const std::vector<Vertex>& vs) {
  return static_cast<int>(vs.size()) == g.order() && verify_certificate(g, Certificate::path(vs));
}

}  // namespace oneplanar
