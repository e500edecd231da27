#include <gtest/gtest.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "oneplanar/cli.hpp"

using namespace oneplanar;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "oneplanar_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

int run_args(const std::vector<std::string>& args, std::string* out = nullptr, std::string* err = nullptr) {
  std::vector<const char*> argv{"oneplanar"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), o, e);
  if (out) *out = o.str();
  if (err) *err = e.str();
  return code;
}

Drawing planar_k4() {
  return Drawing::from_plane_map(4, {{1, 3, 2}, {0, 2, 3}, {1, 0, 3}, {2, 0, 1}});
}

}  // namespace

TEST(ParseArgs, Examples) {
  auto g = parse_args({"gen", "figure1", "--k", "3", "--out", "g.json"});
  EXPECT_EQ(g.subcommand, "gen");
  EXPECT_EQ(g.target, "figure1");
  EXPECT_EQ(g.k, 3);
  EXPECT_EQ(g.out, "g.json");
  auto p = parse_args({"pipeline", "theorem3", "--in", "g.json", "--mode", "cycle"});
  EXPECT_EQ(p.subcommand, "pipeline");
  EXPECT_EQ(p.target, "theorem3");
  EXPECT_EQ(p.mode, "cycle");
  auto c = parse_args({"circ", "--in", "g.json", "--budget", "1e7"});
  EXPECT_EQ(c.budget, 10'000'000u);
  EXPECT_TRUE(c.budget_given);
}

TEST(ParseArgs, UsageErrors) {
  const std::vector<std::vector<std::string>> bad{
      {"circ", "--in", "g.json", "--bogus"},
      {"circ", "--in", "g.json", "--budget", "0.5"},
      {"gen", "nonsense"},
      {"pipeline", "theorem3"},
      {"pipeline", "shortness", "--in", "g.json"},
      {"gen", "theorem1", "--in", "h.json", "--host", "octahedron"},
      {},
  };
  for (const auto& args : bad) {
    try {
      parse_args(args);
      ADD_FAILURE() << "accepted bad arguments";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::usage);
    }
  }
}

TEST(ParseArgs, EnvironmentBudget) {
  ::setenv("ONEPLANAR_BUDGET", "12345", 1);
  EXPECT_EQ(parse_args({"ham", "--in", "g.json"}).budget, 12345u);
  EXPECT_EQ(parse_args({"ham", "--in", "g.json", "--budget", "99"}).budget, 99u);
  ::unsetenv("ONEPLANAR_BUDGET");
  EXPECT_EQ(parse_args({"ham", "--in", "g.json"}).budget, kDefaultBudget);
}

TEST(Json, RoundTripIsByteIdentical) {
  for (const auto& d : {k6_gadget(), figure1_weak_variant(3), theorem1_expand(octahedron()), theorem2_graph()}) {
    const std::string a = serialize(d);
    const Drawing back = drawing_from_json(parse_json(a));
    EXPECT_EQ(serialize(back), a);
    EXPECT_EQ(back.base().edges(), d.base().edges());
    EXPECT_EQ(back.base().colors(), d.base().colors());
  }
}

TEST(Json, StructurallyEqualDrawingsSerializeEqually) {
  // Same map, rotation lists started at different darts.
  Rotation m = k6_gadget().plane_map();
  Rotation r = m;
  for (auto& l : r) std::rotate(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(l.size() / 2), l.end());
  EXPECT_EQ(serialize(Drawing::from_plane_map(6, m)), serialize(Drawing::from_plane_map(6, r)));
}

TEST(Json, EdgeCrossedTwiceIsValidationError) {
  json j = to_json(k6_gadget());
  j["crossings"][1]["edge_a"] = j["crossings"][0]["edge_a"];
  try {
    drawing_from_json(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::validation);
    EXPECT_NE(std::string(e.what()).find("edge crossed twice"), std::string::npos);
    EXPECT_EQ(std::string(e.what()).find("schema error"), std::string::npos);
  }
}

TEST(Json, MissingCrossingNodeIsSchemaError) {
  json j = to_json(k6_gadget());
  j["rotation"].erase(j["rotation"].size() - 1);
  try {
    drawing_from_json(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::validation);
    EXPECT_NE(std::string(e.what()).find("schema error: rotation"), std::string::npos);
  }
  json k = to_json(k6_gadget());
  k["graph"].erase("n");
  try {
    drawing_from_json(k);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("'n'"), std::string::npos);
  }
  EXPECT_THROW(parse_json("{\"graph\": [1, 2"), Error);
}

TEST(Json, Constraints) {
  auto c = constraints_from_json(parse_json(R"({"forbidden_pairs": [[[0,1],[2,1]]], "required_hit_sets": [[[3,0]]], "endpoints": [4]})"));
  ASSERT_EQ(c.forbidden_pairs.size(), 1u);
  EXPECT_EQ(c.forbidden_pairs[0].second, make_edge(1, 2));
  EXPECT_EQ(c.required_hit_sets[0][0], make_edge(0, 3));
  EXPECT_EQ(c.endpoints, (std::vector<Vertex>{4}));
}

TEST(Export, Dot) {
  const std::string k4 = to_dot(planar_k4());
  EXPECT_EQ(k4.find("kind=crossing"), std::string::npos);
  std::size_t nodes = 0;
  for (std::size_t p = k4.find("kind=vertex"); p != std::string::npos; p = k4.find("kind=vertex", p + 1)) ++nodes;
  EXPECT_EQ(nodes, 4u);
  const std::string k6 = to_dot(k6_gadget());
  std::size_t crossings = 0;
  for (std::size_t p = k6.find("kind=crossing"); p != std::string::npos; p = k6.find("kind=crossing", p + 1)) ++crossings;
  EXPECT_EQ(crossings, 3u);
  EXPECT_NE(k6.find("edge="), std::string::npos);
}

TEST(Export, GraphMLParses) {
  namespace pt = boost::property_tree;
  std::istringstream in(to_graphml(k6_gadget()));
  pt::ptree tree;
  ASSERT_NO_THROW(pt::read_xml(in, tree));
  const auto& graph = tree.get_child("graphml.graph");
  EXPECT_EQ(graph.get<std::string>("<xmlattr>.edgedefault"), "undirected");
  int nodes = 0, crossing = 0, segments = 0;
  for (const auto& [tag, child] : graph) {
    if (tag == "node") {
      ++nodes;
      for (const auto& [dt, data] : child)
        if (dt == "data" && data.get<std::string>("<xmlattr>.key") == "kind" && data.data() == "crossing") ++crossing;
    }
    if (tag == "edge") ++segments;
  }
  EXPECT_EQ(nodes, 9);
  EXPECT_EQ(crossing, 3);
  EXPECT_EQ(segments, 15 + 6);
}

TEST(Commands, GenCheckExport) {
  const auto f = scratch("ring.json").string();
  ASSERT_EQ(run_args({"gen", "figure1", "--k", "3", "--out", f}), 0);
  std::string out;
  ASSERT_EQ(run_args({"check", "--in", f, "--connectivity"}, &out), 0);
  auto j = parse_json(out);
  EXPECT_EQ(j["connectivity"], 4);
  EXPECT_EQ(j["maximality"]["class"], "locally_maximal");
  EXPECT_EQ(j["tool"]["name"], kToolName);
  EXPECT_EQ(j["input_hash"], hash_tag(read_text(f)));
  ASSERT_EQ(run_args({"export", "--in", f, "--format", "json"}, &out), 0);
  EXPECT_EQ(out, read_text(f));
  ASSERT_EQ(run_args({"export", "--in", f, "--format", "graphml"}, &out), 0);
  EXPECT_NE(out.find("<graphml"), std::string::npos);
}

TEST(Commands, ExitCodes) {
  const auto bad = scratch("bad.json").string();
  json j = to_json(k6_gadget());
  j["crossings"][1]["edge_a"] = j["crossings"][0]["edge_a"];
  write_text(bad, dump(j));
  std::string err;
  EXPECT_EQ(run_args({"check", "--in", bad}, nullptr, &err), 2);
  EXPECT_NE(err.find("edge crossed twice"), std::string::npos);
  EXPECT_EQ(run_args({"check", "--in", scratch("missing.json").string()}), 1);
  EXPECT_EQ(run_args({"circ", "--in", bad, "--budget", "x"}), 1);

  const auto weak = scratch("weak.json").string();
  ASSERT_EQ(run_args({"gen", "theorem2", "--out", weak}), 0);
  EXPECT_EQ(run_args({"pipeline", "theorem4", "--in", weak}), 3);
  EXPECT_EQ(run_args({"ham", "--in", weak, "--budget", "10"}), 4);

  const auto af = scratch("af1.json").string();
  ASSERT_EQ(run_args({"gen", "almost-full-fixture", "--s", "1", "--out", af}), 0);
  const auto rep = scratch("af1_report.json").string();
  EXPECT_EQ(run_args({"pipeline", "theorem4", "--in", af, "--report", rep}), 0);
  EXPECT_EQ(parse_json(read_text(rep))["status"], "verified");
}

TEST(Commands, PlanarizeExtractSolvers) {
  const auto f = scratch("ring2.json").string();
  const auto plane = scratch("ring2_plane.json").string();
  ASSERT_EQ(run_args({"gen", "figure1", "--k", "2", "--out", f}), 0);
  std::string out;
  ASSERT_EQ(run_args({"planarize", "--in", f, "--out", plane, "--verify"}, &out), 0);
  EXPECT_EQ(parse_json(out)["status"], "verified");
  EXPECT_EQ(read_drawing(plane).vertex_count(), 10);
  ASSERT_EQ(run_args({"extract", "--in", f, "--out", scratch("ring2_span.json").string(), "--verify"}, &out), 0);
  EXPECT_EQ(parse_json(out)["checks"]["three_connected"], true);
  ASSERT_EQ(run_args({"ham", "--in", f}, &out), 0);
  EXPECT_EQ(parse_json(out)["verified"], true);
  ASSERT_EQ(run_args({"trace", "--in", f}, &out), 0);
  EXPECT_EQ(parse_json(out)["status"], "found");
  ASSERT_EQ(run_args({"circ", "--in", f}, &out), 0);
  EXPECT_EQ(parse_json(out)["length"], 8);
  ASSERT_EQ(run_args({"pipeline", "shortness", "--max-index", "1"}, &out), 0);
  EXPECT_EQ(parse_json(out)["rows"][1]["circ_upper_bound"], 880);
}

TEST(Commands, ConstraintsFile) {
  const auto g = scratch("c6.json").string();
  write_text(g, serialize(cycle_graph(6)));
  const auto c = scratch("c6_constraints.json").string();
  write_text(c, R"({"endpoints": [2, 3]})");
  std::string out;
  ASSERT_EQ(run_args({"trace", "--in", g, "--constraints", c}, &out), 0);
  auto vs = parse_json(out)["certificate"]["vertices"].get<std::vector<int>>();
  EXPECT_EQ(std::min(vs.front(), vs.back()), 2);
}

TEST(Binary, RunsWhenBuilt) {
  const char* exe = std::getenv("ONEPLANAR_CLI");
  if (!exe) GTEST_SKIP() << "ONEPLANAR_CLI not set";
  const std::string out = scratch("bin_k6.json").string();
  const std::string cmd = std::string(exe) + " gen structure-h --out " + out;
  EXPECT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_EQ(parse_json(read_text(out))["stubs"].size(), 5u);
  const std::string bad = std::string(exe) + " frobnicate > /dev/null 2>&1";
  const int status = std::system(bad.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 1);
}
