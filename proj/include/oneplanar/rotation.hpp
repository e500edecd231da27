#pragma once

// Combinatorial maps of simple plane graphs.
//
// A rotation system lists, for every node, its neighbours in cyclic order.
// Faces are traced with the rule "arrive at y from x, leave along the
// neighbour that follows x in the rotation of y"; every directed edge lies on
// exactly one facial walk.

#include <algorithm>
#include <cstddef>
#include <queue>
#include <stdexcept>
#include <vector>

namespace oneplanar {

using Rotation = std::vector<std::vector<int>>;

/// Position of `y` in the rotation of `x`, or -1.
inline int rotation_index(const Rotation& rot, int x, int y) {
  const auto& r = rot[static_cast<std::size_t>(x)];
  auto it = std::find(r.begin(), r.end(), y);
  return it == r.end() ? -1 : static_cast<int>(it - r.begin());
}

/// Neighbour following `x` in the cyclic rotation around `y`.
inline int rotation_successor(const Rotation& rot, int y, int x) {
  const auto& r = rot[static_cast<std::size_t>(y)];
  const int i = rotation_index(rot, y, x);
  if (i < 0) throw std::logic_error("rotation_successor: not adjacent");
  return r[static_cast<std::size_t>((i + 1) % static_cast<int>(r.size()))];
}

/// Inserts `y` into the rotation of `x` directly after `after`.
inline void rotation_insert_after(Rotation& rot, int x, int after, int y) {
  auto& r = rot[static_cast<std::size_t>(x)];
  auto it = std::find(r.begin(), r.end(), after);
  if (it == r.end()) throw std::logic_error("rotation_insert_after: anchor missing");
  r.insert(it + 1, y);
}

inline void rotation_erase(Rotation& rot, int x, int y) {
  auto& r = rot[static_cast<std::size_t>(x)];
  auto it = std::find(r.begin(), r.end(), y);
  if (it == r.end()) throw std::logic_error("rotation_erase: not adjacent");
  r.erase(it);
}

inline void rotation_replace(Rotation& rot, int x, int old_y, int new_y) {
  auto& r = rot[static_cast<std::size_t>(x)];
  auto it = std::find(r.begin(), r.end(), old_y);
  if (it == r.end()) throw std::logic_error("rotation_replace: not adjacent");
  *it = new_y;
}

/// True when the rotation describes a simple undirected graph: no loops,
/// no repeated neighbours, and y appears around x iff x appears around y.
inline bool rotation_is_simple(const Rotation& rot) {
  const int n = static_cast<int>(rot.size());
  for (int x = 0; x < n; ++x) {
    auto r = rot[static_cast<std::size_t>(x)];
    std::sort(r.begin(), r.end());
    if (std::adjacent_find(r.begin(), r.end()) != r.end()) return false;
    for (int y : r) {
      if (y < 0 || y >= n || y == x) return false;
      if (rotation_index(rot, y, x) < 0) return false;
    }
  }
  return true;
}

inline std::size_t rotation_edge_count(const Rotation& rot) {
  std::size_t darts = 0;
  for (const auto& r : rot) darts += r.size();
  return darts / 2;
}

/// Facial walks as node sequences; walk i visits faces[i][0] -> faces[i][1] -> ...
/// and closes back to faces[i][0]. Isolated nodes contribute no walk.
inline std::vector<std::vector<int>> trace_faces(const Rotation& rot) {
  const int n = static_cast<int>(rot.size());
  std::vector<std::size_t> offset(static_cast<std::size_t>(n) + 1, 0);
  for (int x = 0; x < n; ++x) offset[static_cast<std::size_t>(x) + 1] = offset[static_cast<std::size_t>(x)] + rot[static_cast<std::size_t>(x)].size();
  std::vector<char> seen(offset.back(), 0);
  std::vector<std::vector<int>> faces;
  for (int x0 = 0; x0 < n; ++x0) {
    for (std::size_t i0 = 0; i0 < rot[static_cast<std::size_t>(x0)].size(); ++i0) {
      if (seen[offset[static_cast<std::size_t>(x0)] + i0]) continue;
      std::vector<int> walk;
      int x = x0;
      std::size_t i = i0;
      while (!seen[offset[static_cast<std::size_t>(x)] + i]) {
        seen[offset[static_cast<std::size_t>(x)] + i] = 1;
        walk.push_back(x);
        const int y = rot[static_cast<std::size_t>(x)][i];
        const auto& ry = rot[static_cast<std::size_t>(y)];
        const int back = rotation_index(rot, y, x);
        if (back < 0) throw std::invalid_argument("trace_faces: asymmetric rotation");
        i = static_cast<std::size_t>((back + 1) % static_cast<int>(ry.size()));
        x = y;
      }
      faces.push_back(std::move(walk));
    }
  }
  return faces;
}

inline int rotation_components(const Rotation& rot) {
  const int n = static_cast<int>(rot.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++comps;
    std::queue<int> q;
    q.push(s);
    seen[static_cast<std::size_t>(s)] = 1;
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y : rot[static_cast<std::size_t>(x)]) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          q.push(y);
        }
      }
    }
  }
  return comps;
}

/// Number of faces of the map, counting one face for every isolated node.
inline std::size_t rotation_face_count(const Rotation& rot) {
  std::size_t isolated = 0;
  for (const auto& r : rot) isolated += r.empty() ? 1 : 0;
  return trace_faces(rot).size() + isolated;
}

/// Euler's formula on the sphere, applied per component: V - E + F = 1 + C.
inline bool rotation_is_spherical(const Rotation& rot) {
  if (rot.empty()) return true;
  const long v = static_cast<long>(rot.size());
  const long e = static_cast<long>(rotation_edge_count(rot));
  const long f = static_cast<long>(rotation_face_count(rot));
  return v - e + f == 1 + rotation_components(rot);
}

/// Locates a corner (prev -> at -> next) on a facial walk.
struct Corner {
  int prev;
  int at;
  int next;
};

inline std::vector<Corner> face_corners(const std::vector<int>& walk) {
  std::vector<Corner> out;
  const std::size_t m = walk.size();
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    out.push_back({walk[(i + m - 1) % m], walk[i], walk[(i + 1) % m]});
  }
  return out;
}

/// Inserts a new node inside the face `walk`, joined to the nodes at the given
/// corners. Corners must be listed in walk order. Returns the new node id.
inline int insert_node_in_face(Rotation& rot, const std::vector<Corner>& corners) {
  const int u = static_cast<int>(rot.size());
  rot.emplace_back();
  // The walk leaves the corner along `next`, so the new neighbour goes right
  // after `prev` in the rotation of the corner node.
  for (const auto& c : corners) rotation_insert_after(rot, c.at, c.prev, u);
  // Arriving at u from corner k, the walk must continue to corner k-1.
  std::vector<int> around;
  around.reserve(corners.size());
  for (auto it = corners.rbegin(); it != corners.rend(); ++it) around.push_back(it->at);
  rot[static_cast<std::size_t>(u)] = std::move(around);
  return u;
}

/// Adds the chord x-y inside a face at corners cx (node x) and cy (node y).
inline void insert_chord_in_face(Rotation& rot, const Corner& cx, const Corner& cy) {
  rotation_insert_after(rot, cx.at, cx.prev, cy.at);
  rotation_insert_after(rot, cy.at, cy.prev, cx.at);
}

}  // namespace oneplanar
