#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

#include "stablejones/cache.hpp"
#include "stablejones/config.hpp"
#include "stablejones/errors.hpp"
#include "stablejones/stablejones.h"

namespace fs = std::filesystem;
using namespace stablejones;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("sj_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

struct CliRun {
  int status = -1;
  std::string out;
};

// Runs the CLI with stderr folded into stdout when `merge` is set.
CliRun cli(const std::string& args, bool merge = false) {
  const std::string cmd = std::string(STABLEJONES_CLI) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  CliRun r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  sj_string_free(s);
  return out;
}

}  // namespace

TEST(Cache, PutGetAndVersionedKey) {
  const auto dir = scratch("cache");
  const ResultCache cache(dir.string());
  EXPECT_FALSE(cache.get("phi", "abc", 5));
  cache.put("phi", "abc", 5, R"({"x":1})");
  EXPECT_EQ(cache.get("phi", "abc", 5), std::optional<std::string>(R"({"x":1})"));
  EXPECT_FALSE(cache.get("phi", "abc", 6));
  EXPECT_NE(ResultCache::key("phi", "abc", 5).find(STABLEJONES_VERSION), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cache, CorruptRecordIsDeleted) {
  const auto dir = scratch("corrupt");
  const ResultCache cache(dir.string());
  cache.put("phi", "abc", 5, "payload");
  const std::string path = cache.path_for(ResultCache::key("phi", "abc", 5));
  ASSERT_TRUE(fs::exists(path));
  std::ofstream(path) << "{\"key\": \"truncated";
  EXPECT_FALSE(cache.get("phi", "abc", 5));
  EXPECT_FALSE(fs::exists(path));
  cache.put("phi", "abc", 5, "payload");
  auto j = nlohmann::json::parse(std::ifstream(path));
  j["value"] = "tampered";
  std::ofstream(path) << j.dump();
  EXPECT_FALSE(cache.get("phi", "abc", 5));
  fs::remove_all(dir);
}

TEST(Config, FileAndEnvironment) {
  const auto dir = scratch("config");
  const std::string path = (dir / "c.json").string();
  std::ofstream(path) << R"({"node_budget": 1000, "max_order": 12, "threads": 2, "cache_dir": "/tmp/x"})";
  Config cfg = load_config(path);
  EXPECT_EQ(cfg.node_budget, 1000u);
  EXPECT_EQ(cfg.max_order, 12);
  EXPECT_EQ(cfg.threads, 2);
  ::setenv("STABLE_JONES_THREADS", "3", 1);
  ::setenv("STABLE_JONES_CACHE", "/tmp/y", 1);
  apply_environment(cfg);
  EXPECT_EQ(cfg.threads, 3);
  EXPECT_EQ(cfg.cache_dir, "/tmp/y");
  ::setenv("STABLE_JONES_THREADS", "zero", 1);
  EXPECT_THROW(apply_environment(cfg), InputError);
  ::unsetenv("STABLE_JONES_THREADS");
  ::unsetenv("STABLE_JONES_CACHE");
  std::ofstream(path) << R"({"bogus": 1})";
  EXPECT_THROW(load_config(path), ParseError);
  EXPECT_THROW(load_config((dir / "missing.json").string()), IoError);
  fs::remove_all(dir);
}

TEST(CApi, GraphAndSeries) {
  sj_graph* g = nullptr;
  ASSERT_EQ(sj_graph_load("k4", &g), SJ_OK);
  EXPECT_EQ(sj_graph_vertex_count(g), 4);
  EXPECT_EQ(sj_graph_edge_count(g), 6);
  char* hex = nullptr;
  ASSERT_EQ(sj_graph_canonical_code(g, &hex), SJ_OK);
  EXPECT_EQ(take(hex), "04fc");
  sj_options opts;
  sj_options_default(&opts);
  sj_series* s = nullptr;
  ASSERT_EQ(sj_phi(g, 5, &opts, &s), SJ_OK);
  EXPECT_EQ(sj_series_order(s), 5);
  char* c = nullptr;
  ASSERT_EQ(sj_series_coeff(s, 3, &c), SJ_OK);
  EXPECT_EQ(take(c), "5");
  EXPECT_EQ(sj_series_coeff(s, 6, &c), SJ_ERR_INPUT);
  sj_series_free(s);
  sj_graph_free(g);
}

TEST(CApi, ErrorsMapToStatus) {
  sj_graph* g = nullptr;
  EXPECT_EQ(sj_graph_parse("n 5\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n", &g), SJ_OK);
  char* out = nullptr;
  sj_options opts;
  sj_options_default(&opts);
  EXPECT_EQ(sj_phi_json(g, 3, &opts, &out), SJ_ERR_NOT_PLANAR);
  EXPECT_NE(std::string(sj_last_error()).size(), 0u);
  sj_graph_free(g);
  EXPECT_EQ(sj_graph_parse("not a graph", &g), SJ_ERR_INPUT);
  EXPECT_EQ(sj_graph_load("octahedron", &g), SJ_OK);
  opts.node_budget = 3;
  EXPECT_EQ(sj_phi_json(g, 10, &opts, &out), SJ_ERR_BUDGET);
  sj_graph_free(g);
  int mismatches = 0;
  EXPECT_EQ(sj_verify_json("nothing", 0, &opts, &out, &mismatches), SJ_ERR_INPUT);
}

TEST(CApi, FitFromNamesAndGraphs) {
  sj_options opts;
  sj_options_default(&opts);
  char* out = nullptr;
  // C2 = c3 on any graph: the fit must be exactly 1 on c3.
  const char* patterns = R"({"patterns": ["c3", {"name": "square", "graph": "square"}]})";
  const char* data =
      R"({"data": [{"graph": "k4", "target": "C2"}, {"graph": "octahedron", "target": "C2"},
                  {"graph": "w5", "target": "C2"}, {"graph": "c5", "target": 0}]})";
  ASSERT_EQ(sj_fit_json(patterns, data, &opts, &out), SJ_OK) << sj_last_error();
  const auto j = nlohmann::json::parse(take(out));
  EXPECT_TRUE(j.at("unique").get<bool>());
  EXPECT_EQ(j.at("coefficients").at("c3"), "1");
  EXPECT_EQ(j.at("coefficients").at("square"), "0");
}

TEST(Cli, PhiTriangle) {
  const CliRun r = cli("--no-cache phi triangle --order 5");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find(R"("coeffs":[1,-1,-1,0,0,1])"), std::string::npos) << r.out;
}

TEST(Cli, ShippedEdgeListFiles) {
  const std::string data = STABLEJONES_DATA_DIR;
  const CliRun r = cli("--no-cache phi " + data + "/triangle.edges --order 5");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find(R"("coeffs":[1,-1,-1,0,0,1])"), std::string::npos) << r.out;
  const CliRun k5 = cli("--no-cache phi " + data + "/k5.edges", true);
  EXPECT_EQ(k5.status, 2);
  EXPECT_NE(k5.out.find("NotPlanar"), std::string::npos) << k5.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("--no-cache phi k5").status, 2);
  EXPECT_EQ(cli("--no-cache phi /nonexistent/graph").status, 2);
  EXPECT_EQ(cli("--no-cache phi triangle --order 999").status, 2);
  EXPECT_EQ(cli("--no-cache --node-budget 3 phi octahedron --order 10").status, 3);
  EXPECT_EQ(cli("--no-cache verify nonsense").status, 2);
  EXPECT_EQ(cli("--no-cache verify theorem1").status, 0);
  EXPECT_EQ(cli("--no-cache --data-dir /nonexistent verify tables").status, 2);
}

TEST(Cli, MismatchExitsOne) {
  const auto dir = scratch("altered");
  fs::copy(fs::path(STABLEJONES_DATA_DIR) / "atlas_keys.csv", dir / "atlas_keys.csv");
  std::ifstream in(fs::path(STABLEJONES_DATA_DIR) / "tables.csv");
  std::ofstream out(dir / "tables.csv");
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("G^6_1,", 0) == 0) line.replace(line.find("6^3_2"), 5, "6^2_2");
    out << line << "\n";
  }
  out.close();
  const CliRun r = cli("--no-cache --data-dir " + dir.string() + " verify tables");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("link_components"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, CacheHitAndDeterminism) {
  const auto dir = scratch("clicache");
  const std::string base = "--cache-dir " + dir.string() + " ";
  const CliRun first = cli(base + "cvec octahedron --k 6", true);
  const CliRun second = cli(base + "cvec octahedron --k 6", true);
  EXPECT_EQ(first.out.find("cache hit"), std::string::npos);
  EXPECT_NE(second.out.find("cache hit"), std::string::npos);
  const CliRun third = cli(base + "--threads 4 cvec octahedron --k 6");
  const CliRun fresh = cli("--no-cache cvec octahedron --k 6");
  EXPECT_EQ(third.out, fresh.out);
  fs::remove_all(dir);
}

TEST(Cli, OtherSubcommands) {
  EXPECT_NE(cli("--no-cache dtcode triangle --plain").out.find("4 6 2"), std::string::npos);
  EXPECT_NE(cli("--no-cache counts k4").out.find(R"("c42":1)"), std::string::npos);
  EXPECT_NE(cli("--no-cache enumerate --edges 6 --irreducible").out.find(R"("count":3)"), std::string::npos);
  EXPECT_NE(cli("--no-cache patterns --n 5").out.find(R"("pattern":"c55")"), std::string::npos);
  const CliRun states = cli("--no-cache states triangle --order 2 --trace-states");
  EXPECT_EQ(states.status, 0);
  EXPECT_NE(states.out.find(R"("states")"), std::string::npos);
  EXPECT_NE(cli("--no-cache --pretty phi k4").out.find("1 - 3q - q^2 + 5q^3"), std::string::npos);
  EXPECT_EQ(cli("--no-cache --seed 17 verify question1 --order 15").status, 0);
}
