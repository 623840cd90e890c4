#include <gtest/gtest.h>

#include <cstdio>
#include <sstream>
#include <sys/wait.h>

#include "lieprobe/graph_io.hpp"
#include "lieprobe/json_io.hpp"
#include "oracles.hpp"

using namespace lieprobe;

namespace {

struct CliRun {
  int code;
  std::string out;
};

// Runs the CLI through the shell; stderr is appended to stdout when merge is set.
CliRun cli(const std::string& args, bool merge = false) {
  std::string cmd = std::string(LIEPROBE_CLI) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, f)) out.append(buf, n);
  int status = pclose(f);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string scratch(const std::string& name) { return std::string(LIEPROBE_SCRATCH_DIR) + "/cli_" + name; }

std::string save(const std::string& name, const Graph& g) {
  std::string path = scratch(name);
  write_text_file(path, to_graph6(g) + "\n");
  return path;
}

}  // namespace

TEST(Cli, GenWritesPointGraph) {
  CliRun r = cli("gen --family w --dim 5 --q 2");
  ASSERT_EQ(r.code, 0);
  Graph g = parse_graph(r.out);
  EXPECT_EQ(g.size(), 63u);
  for (int v = 0; v < 63; ++v) EXPECT_EQ(g.degree(v), 30);
}

TEST(Cli, GenGeometryThenVerify) {
  std::string geo = scratch("a42.json"), graph = scratch("a42.g6");
  ASSERT_EQ(cli("gen --family grassmann --n 4 --q 2 --graph " + graph + " --geometry " + geo).code, 0);
  EXPECT_EQ(parse_graph(read_text_file(graph)).size(), 155u);
  EXPECT_EQ(geometry_from_json(read_text_file(geo)).lines().size(), 1085u);
  // The degenerate item holds when no point is collinear with all others.
  CliRun good = cli("verify --axioms partial_linear,gamma,degenerate,parapolar:3 " + geo);
  EXPECT_EQ(good.code, 0) << good.out;
  CliRun shult = cli("verify --axioms shult " + geo);
  EXPECT_EQ(shult.code, 3);
  EXPECT_NE(shult.out.find("fails"), std::string::npos);
}

TEST(Cli, RecognizeSymplectic) {
  std::string graph = scratch("w52.g6"), report = scratch("w52.json");
  ASSERT_EQ(cli("gen --family w --dim 5 --q 2 --graph " + graph).code, 0);
  CliRun r = cli("recognize " + graph + " --report " + report + " --seed 19");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PolarSpace(3,2)"), std::string::npos);
  auto j = nlohmann::json::parse(read_text_file(report));
  EXPECT_EQ(j["seed"], 19);
  EXPECT_EQ(j["outcome"], "PolarSpace(3,2)");
}

TEST(Cli, RecognizeUnknownExitsThree) {
  CliRun r = cli("recognize " + save("petersen.g6", oracle::petersen()), true);
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("Unknown"), std::string::npos);
  EXPECT_NE(r.out.find("HeightTooSmall"), std::string::npos);
}

TEST(Cli, LocalGraphAndQuotient) {
  std::string graph = scratch("w52b.g6"), local = scratch("w52_local.g6");
  ASSERT_EQ(cli("gen --family w --dim 5 --q 2 --graph " + graph).code, 0);
  ASSERT_EQ(cli("localgraph " + graph + " --vertex 0 --out " + local).code, 0);
  EXPECT_EQ(parse_graph(read_text_file(local)).size(), 30u);
  CliRun q = cli("quotient " + local);
  ASSERT_EQ(q.code, 0);
  EXPECT_EQ(parse_graph(q.out).size(), 15u);
}

TEST(Cli, CliqueExtensionOfPetersen) {
  CliRun r = cli("cliqueext " + save("pet2.g6", oracle::petersen()) + " --q 3 --format sparse6");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind(":", 0), 0u);
  EXPECT_EQ(parse_graph(r.out).size(), 30u);
}

TEST(Cli, ReconstructWritesGeometry) {
  std::string graph = save("a32.g6", oracle::from_matrix(oracle::collinearity(oracle::grassmann2(3))));
  CliRun r = cli("reconstruct " + graph);
  ASSERT_EQ(r.code, 0);
  Geometry d = geometry_from_json(r.out);
  EXPECT_EQ(d.n_points(), 35);
  EXPECT_EQ(d.lines().size(), 105u);
}

TEST(Cli, IsoPrintsVerifiableMapping) {
  Graph a = oracle::petersen();
  std::vector<int> perm = {3, 7, 1, 9, 0, 4, 8, 2, 6, 5};
  Graph b(10);
  for (auto [u, v] : a.edges()) b.add_edge(perm[u], perm[v]);
  CliRun r = cli("iso " + save("iso_a.g6", a) + " " + save("iso_b.g6", b));
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string word;
  in >> word;
  EXPECT_EQ(word, "isomorphic");
  std::vector<int> mapping(10, -1);
  int v, w;
  while (in >> v >> w) mapping[v] = w;
  EXPECT_TRUE(oracle::is_isomorphism(a, b, mapping));
  CliRun no = cli("iso " + save("iso_c.g6", oracle::cycle(10)) + " " + save("iso_a2.g6", a));
  EXPECT_EQ(no.code, 3);
  EXPECT_NE(no.out.find("not isomorphic"), std::string::npos);
}

TEST(Cli, Params) {
  CliRun r = cli("params " + save("shrik.g6", oracle::shrikhande()));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(16,6,2,2)"), std::string::npos);
  EXPECT_EQ(cli("params " + save("p4.g6", oracle::path(4))).code, 3);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("").code, 1);
  EXPECT_EQ(cli("gen --family w --dim 4 --q 2").code, 1);
  EXPECT_EQ(cli("gen --family w --dim 5 --q 6").code, 1);
  std::string bad = scratch("bad.g6");
  write_text_file(bad, "not a graph\n");
  EXPECT_EQ(cli("params " + bad).code, 2);
  EXPECT_EQ(cli("gen --family halfspin --n 5 --q 3").code, 4);
  EXPECT_EQ(cli("localgraph " + save("c5.g6", oracle::cycle(5)) + " --vertex 9").code, 1);
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
  std::string graph = scratch("a42t.g6");
  ASSERT_EQ(cli("gen --family grassmann --n 4 --q 2 --graph " + graph).code, 0);
  std::string r1 = scratch("t1.json"), r3 = scratch("t3.json"), re = scratch("te.json");
  ASSERT_EQ(cli("recognize " + graph + " --threads 1 --report " + r1).code, 0);
  ASSERT_EQ(cli("recognize " + graph + " --threads 3 --report " + r3).code, 0);
  std::string env = "LIEPROBE_THREADS=2 " + std::string(LIEPROBE_CLI) + " recognize " + graph + " --report " + re + " >/dev/null";
  ASSERT_EQ(std::system(env.c_str()), 0);
  EXPECT_EQ(read_text_file(r1), read_text_file(r3));
  EXPECT_EQ(read_text_file(r1), read_text_file(re));
  EXPECT_EQ(cli("reconstruct " + graph + " --threads 1").out, cli("reconstruct " + graph + " --threads 4").out);
}
