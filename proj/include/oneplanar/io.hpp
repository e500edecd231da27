#pragma once

// File formats. JSON output is canonical: object keys sorted, edges as
// [u, v] with u < v in id order, crossings sorted, every rotation list
// started at its smallest dart. Equal drawings serialize to equal bytes.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oneplanar/drawing.hpp"
#include "oneplanar/graph.hpp"
#include "oneplanar/pipeline.hpp"
#include "oneplanar/solve.hpp"
#include "oneplanar/transform.hpp"

namespace oneplanar {

using json = nlohmann::json;

inline constexpr const char* kToolName = "oneplanar";
inline constexpr const char* kToolVersion = "0.1.0";

inline Error schema_error(const std::string& what) { return validation_error("schema error: " + what); }

// ---------------------------------------------------------------------------
// Hashing and text files

inline std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string hash_tag(const std::string& bytes) {
  std::ostringstream s;
  s << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(bytes);
  return s.str();
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::usage, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::usage, "cannot write " + path);
  out << text;
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw schema_error(std::string("malformed JSON: ") + e.what());
  }
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Graphs

inline const char* color_name(Color c) {
  switch (c) {
    case Color::black: return "black";
    case Color::white: return "white";
    case Color::none: return "none";
  }
  return "none";
}

inline Color color_from(const std::string& s) {
  if (s == "black") return Color::black;
  if (s == "white") return Color::white;
  if (s == "none") return Color::none;
  throw schema_error("graph.colors: unknown colour '" + s + "'");
}

inline json to_json(const Graph& g) {
  json j;
  j["n"] = g.order();
  json es = json::array();
  for (const auto& e : g.edges()) es.push_back({e.u, e.v});
  j["edges"] = es;
  if (g.has_colors()) {
    json cs = json::array();
    for (Color c : g.colors()) cs.push_back(color_name(c));
    j["colors"] = cs;
  }
  return j;
}

namespace detail {

inline const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw schema_error(where + ": missing field '" + key + "'");
  return j.at(key);
}

inline int int_field(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw schema_error(where + ": expected an integer");
  return j.get<int>();
}

}  // namespace detail

inline Graph graph_from_json(const json& j, const std::string& where = "graph") {
  const int n = detail::int_field(detail::field(j, "n", where), where + ".n");
  if (n < 0) throw schema_error(where + ".n: negative");
  const json& es = detail::field(j, "edges", where);
  if (!es.is_array()) throw schema_error(where + ".edges: expected an array");
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string w = where + ".edges[" + std::to_string(i) + "]";
    if (!es[i].is_array() || es[i].size() != 2) throw schema_error(w + ": expected [u, v]");
    pairs.emplace_back(detail::int_field(es[i][0], w), detail::int_field(es[i][1], w));
  }
  std::vector<Color> colors;
  if (j.contains("colors")) {
    const json& cs = j.at("colors");
    if (!cs.is_array() || static_cast<int>(cs.size()) != n) throw schema_error(where + ".colors: expected n entries");
    for (const auto& c : cs) {
      if (!c.is_string()) throw schema_error(where + ".colors: expected strings");
      colors.push_back(color_from(c.get<std::string>()));
    }
  }
  return Graph::build(n, pairs, colors);
}

// ---------------------------------------------------------------------------
// Drawings

inline json to_json(const Drawing& d) {
  const Drawing c = Drawing::from_plane_map(d.vertex_count(), d.plane_map(), d.base().colors()).canonical();
  json j;
  j["graph"] = to_json(c.base());
  json cr = json::array();
  for (const auto& p : c.crossings()) cr.push_back({{"edge_a", p.a}, {"edge_b", p.b}});
  j["crossings"] = cr;
  json rot = json::array();
  for (const auto& darts : c.rotation()) {
    json r = json::array();
    for (const auto& dart : darts) r.push_back({{"edge", dart.edge}, {"segment", dart.segment}});
    rot.push_back(r);
  }
  j["rotation"] = rot;
  return j;
}

/// Parses a drawing; schema problems and drawing violations both raise
/// validation errors, with different messages.
inline Drawing drawing_from_json(const json& j) {
  Graph g = graph_from_json(detail::field(j, "graph", "drawing"), "graph");
  const json& cr = detail::field(j, "crossings", "drawing");
  if (!cr.is_array()) throw schema_error("crossings: expected an array");
  std::vector<CrossingPair> crossings;
  for (std::size_t i = 0; i < cr.size(); ++i) {
    const std::string w = "crossings[" + std::to_string(i) + "]";
    crossings.push_back({detail::int_field(detail::field(cr[i], "edge_a", w), w + ".edge_a"),
                         detail::int_field(detail::field(cr[i], "edge_b", w), w + ".edge_b")});
  }
  const json& rot = detail::field(j, "rotation", "drawing");
  if (!rot.is_array()) throw schema_error("rotation: expected an array of node lists");
  const std::size_t nodes = static_cast<std::size_t>(g.order()) + crossings.size();
  if (rot.size() != nodes) {
    throw schema_error("rotation: expected " + std::to_string(nodes) + " node lists (vertices then crossings), got " +
                       std::to_string(rot.size()));
  }
  std::vector<std::vector<Dart>> rotation;
  for (std::size_t x = 0; x < rot.size(); ++x) {
    const std::string w = "rotation[" + std::to_string(x) + "]";
    if (!rot[x].is_array()) throw schema_error(w + ": expected an array");
    std::vector<Dart> darts;
    for (std::size_t k = 0; k < rot[x].size(); ++k) {
      const std::string wk = w + "[" + std::to_string(k) + "]";
      darts.push_back({detail::int_field(detail::field(rot[x][k], "edge", wk), wk + ".edge"),
                       detail::int_field(detail::field(rot[x][k], "segment", wk), wk + ".segment")});
    }
    rotation.push_back(std::move(darts));
  }
  Drawing d(std::move(g), std::move(crossings), std::move(rotation));
  const auto bad = validate_drawing(d);
  if (!bad.empty()) {
    std::string msg = "invalid drawing:";
    for (const auto& b : bad) msg += " " + b + ";";
    throw validation_error(msg);
  }
  return d;
}

inline std::string serialize(const Drawing& d) { return dump(to_json(d)); }
inline std::string serialize(const Graph& g) { return dump(to_json(g)); }

inline Drawing read_drawing(const std::string& path) { return drawing_from_json(parse_json(read_text(path))); }
inline void write_drawing(const std::string& path, const Drawing& d) { write_text(path, serialize(d)); }

/// A graph from either a graph file or a drawing file.
inline Graph graph_from_any(const json& j) {
  if (j.is_object() && j.contains("rotation")) return drawing_from_json(j).base();
  if (j.is_object() && j.contains("graph")) return graph_from_json(j.at("graph"));
  return graph_from_json(j);
}

// ---------------------------------------------------------------------------
// Certificates, constraints, reports

inline json to_json(const Certificate& c) {
  json j;
  j["kind"] = to_string(c.kind);
  if (!c.vertices.empty() || c.kind != CertificateKind::subdivision) j["vertices"] = c.vertices;
  if (c.kind == CertificateKind::subdivision) {
    j["branch"] = c.branch;
    j["paths"] = c.paths;
    j["shape"] = c.is_k5() ? "K5" : "K3,3";
  }
  if (c.kind == CertificateKind::face_count) {
    j["rotation"] = c.rotation;
    j["faces"] = c.faces;
  }
  return j;
}

inline SolveConstraints constraints_from_json(const json& j) {
  SolveConstraints c;
  auto edge = [](const json& e, const std::string& w) {
    if (!e.is_array() || e.size() != 2) throw schema_error(w + ": expected [u, v]");
    return make_edge(detail::int_field(e[0], w), detail::int_field(e[1], w));
  };
  if (j.contains("forbidden_pairs")) {
    for (const auto& p : j.at("forbidden_pairs")) {
      if (!p.is_array() || p.size() != 2) throw schema_error("forbidden_pairs: expected pairs of edges");
      c.forbidden_pairs.emplace_back(edge(p[0], "forbidden_pairs"), edge(p[1], "forbidden_pairs"));
    }
  }
  if (j.contains("required_hit_sets")) {
    for (const auto& s : j.at("required_hit_sets")) {
      std::vector<Edge> set;
      for (const auto& e : s) set.push_back(edge(e, "required_hit_sets"));
      c.required_hit_sets.push_back(std::move(set));
    }
  }
  if (j.contains("endpoints")) c.endpoints = j.at("endpoints").get<std::vector<Vertex>>();
  return c;
}

inline json tool_json() { return {{"name", kToolName}, {"version", kToolVersion}}; }

inline json to_json(const SolveResult& r) {
  json j;
  j["status"] = to_string(r.status);
  j["explored"] = r.explored;
  j["certificate"] = r.certificate ? to_json(*r.certificate) : json(nullptr);
  return j;
}

inline json to_json(const LongestResult& r, bool cycle) {
  json j;
  j["length"] = r.length;
  j["optimal"] = r.optimal;
  j["explored"] = r.explored;
  j[cycle ? "cycle" : "path"] = r.cycle;
  return j;
}

inline json to_json(const PlanarizationRecord& r) {
  json j;
  j["v"] = r.v;
  j["crossing_edges"] = {{r.edge_a.u, r.edge_a.v}, {r.edge_b.u, r.edge_b.v}};
  j["class"] = to_string(r.cls);
  j["endpoints"] = r.endpoints;
  if (r.path_order) j["path_order"] = *r.path_order;
  if (r.missing_chord) j["missing_chord"] = {r.missing_chord->u, r.missing_chord->v};
  return j;
}

inline json to_json(const TheoremReport& r) {
  json j;
  j["theorem"] = r.theorem;
  j["input"] = r.input;
  j["status"] = r.status;
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = checks;
  j["certificate"] = r.certificate ? to_json(*r.certificate) : json(nullptr);
  if (r.subgraph) j["subgraph"] = to_json(*r.subgraph);
  j["values"] = r.values;
  j["reconstructed"] = r.reconstructed;
  j["explored"] = r.explored;
  j["millis"] = r.millis;
  return j;
}

/// Wraps a payload with tool version and input hash.
inline json with_provenance(json payload, const std::string& input_bytes) {
  payload["tool"] = tool_json();
  if (!input_bytes.empty()) payload["input_hash"] = hash_tag(input_bytes);
  return payload;
}

// ---------------------------------------------------------------------------
// DOT and GraphML, both of the planarization

namespace detail {

struct Segment {
  int from, to;
  EdgeId edge;
  int segment;
};

inline std::vector<Segment> segments(const Drawing& d) {
  std::vector<Segment> out;
  for (int x = 0; x < d.node_count(); ++x) {
    for (const auto& dart : d.rotation()[static_cast<std::size_t>(x)]) {
      const int y = d.dart_target(x, dart);
      if (x < y) out.push_back({x, y, dart.edge, dart.segment});
    }
  }
  return out;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

inline std::string to_dot(const Drawing& d) {
  require_valid(d, "to_dot");
  std::ostringstream s;
  s << "graph planarization {\n";
  for (int x = 0; x < d.node_count(); ++x) {
    if (d.is_crossing_node(x)) {
      s << "  " << x << " [kind=crossing, shape=point];\n";
    } else {
      s << "  " << x << " [kind=vertex";
      if (d.base().has_colors()) s << ", color=" << color_name(d.base().color(x));
      s << "];\n";
    }
  }
  for (const auto& g : detail::segments(d)) {
    s << "  " << g.from << " -- " << g.to << " [edge=" << g.edge << ", segment=" << g.segment << "];\n";
  }
  s << "}\n";
  return s.str();
}

inline std::string to_graphml(const Drawing& d) {
  require_valid(d, "to_graphml");
  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\"\n"
    << "         xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\"\n"
    << "         xsi:schemaLocation=\"http://graphml.graphdrawing.org/xmlns "
       "http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd\">\n"
    << "  <key id=\"kind\" for=\"node\" attr.name=\"kind\" attr.type=\"string\"/>\n"
    << "  <key id=\"color\" for=\"node\" attr.name=\"color\" attr.type=\"string\"/>\n"
    << "  <key id=\"edge\" for=\"edge\" attr.name=\"edge\" attr.type=\"int\"/>\n"
    << "  <key id=\"segment\" for=\"edge\" attr.name=\"segment\" attr.type=\"int\"/>\n"
    << "  <graph id=\"planarization\" edgedefault=\"undirected\">\n";
  for (int x = 0; x < d.node_count(); ++x) {
    s << "    <node id=\"n" << x << "\"><data key=\"kind\">" << (d.is_crossing_node(x) ? "crossing" : "vertex") << "</data>";
    if (!d.is_crossing_node(x) && d.base().has_colors())
      s << "<data key=\"color\">" << detail::xml_escape(color_name(d.base().color(x))) << "</data>";
    s << "</node>\n";
  }
  int k = 0;
  for (const auto& g : detail::segments(d)) {
    s << "    <edge id=\"e" << k++ << "\" source=\"n" << g.from << "\" target=\"n" << g.to << "\"><data key=\"edge\">" << g.edge
      << "</data><data key=\"segment\">" << g.segment << "</data></edge>\n";
  }
  s << "  </graph>\n</graphml>\n";
  return s.str();
}

}  // namespace oneplanar
