#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "gen.hpp"
#include "rsl/io.hpp"

using namespace rsl;

TEST_CASE("json input") {
  Relation r = parse_relation_json(R"({"universe": ["a", "b"], "pairs": [[0, 1]]})");
  CHECK(r.size() == 2);
  CHECK(r.universe().name(1) == "b");
  CHECK(r.contains(0, 1));
  CHECK_FALSE(r.contains(1, 0));

  CHECK_THROWS_AS(parse_relation_json("not json"), parse_error);
  CHECK_THROWS_AS(parse_relation_json(R"({"universe": ["a"]})"), parse_error);
  CHECK_THROWS_AS(parse_relation_json(R"({"universe": ["a"], "pairs": [[0, 1]]})"),
                  parse_error);
  CHECK_THROWS_AS(parse_relation_json(R"({"universe": ["a"], "pairs": [[0]]})"), parse_error);
  CHECK_THROWS_AS(parse_relation_json(R"({"universe": [1], "pairs": []})"), parse_error);
}

TEST_CASE("edge list input") {
  Relation r = parse_relation_edgelist("# comment\n0 1\n\n2 0\n");
  CHECK(r.size() == 3);
  CHECK(r.contains(0, 1));
  CHECK(r.contains(2, 0));
  CHECK(r.universe().name(2) == "2");

  CHECK_THROWS_AS(parse_relation_edgelist(""), parse_error);
  CHECK_THROWS_AS(parse_relation_edgelist("0\n"), parse_error);
  CHECK_THROWS_AS(parse_relation_edgelist("0 1 2\n"), parse_error);
  CHECK_THROWS_AS(parse_relation_edgelist("a b\n"), parse_error);
}

TEST_CASE("set list parsing") {
  auto sets = parse_set_list("0,1;2", 3);
  REQUIRE(sets.size() == 2);
  CHECK(sets[0] == gen::mask_of(3, {0, 1}));
  CHECK(sets[1] == gen::mask_of(3, {2}));
  auto with_empty = parse_set_list(";2", 3);
  REQUIRE(with_empty.size() == 2);
  CHECK(with_empty[0].none());
  CHECK_THROWS_AS(parse_set_list("5", 3), parse_error);
  CHECK_THROWS_AS(parse_set_list("x", 3), parse_error);
}

TEST_CASE("relation json roundtrip") {
  Relation r = gen::worked_example();
  CHECK(parse_relation_json(relation_to_json(r).dump()) == r);
}

TEST_CASE("lattice serialization") {
  ApproxContext ctx(gen::worked_example());
  RsLattice l = enumerate_rs(ctx);
  json j = lattice_to_json(l);
  CHECK(j["elements"].size() == 6);
  CHECK(j["bottom"]["upper"].empty());
  CHECK(j["top"]["lower"].size() == 3);
  CHECK(j["cover_edges"].size() == 6);

  std::string dot = lattice_to_dot(l);
  CHECK(dot.find("digraph rs_lattice") != std::string::npos);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("({1}, {0,1})") != std::string::npos);
}

#ifdef RSL_CLI_PATH

namespace {

struct CliResult {
  int status;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(RSL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string golden_path(const std::string& name) {
  return std::string(RSL_GOLDEN_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_golden(const std::string& args, const std::string& golden) {
  CAPTURE(args);
  CliResult first = run_cli(args);
  CliResult second = run_cli(args);
  CHECK(first.status == 0);
  CHECK(first.out == second.out);
  CHECK(first.out == slurp(golden_path(golden)));
}

}  // namespace

TEST_CASE("cli golden outputs") {
  std::string input = golden_path("worked_example.json");
  check_golden("analyze " + input, "analyze.json");
  check_golden("lattice " + input, "lattice.json");
  check_golden("lattice -o dot " + input, "lattice.dot");
  check_golden("approx --set 1 " + input, "approx.json");
  check_golden("irreducibles " + input, "irreducibles.json");
  check_golden("complements " + input, "complements.json");
  check_golden("topology --kind up " + input, "topology_up.json");
  check_golden("witness --meet --sets '1;2' " + input, "witness_meet.json");
  check_golden("witness --join --sets '1;2' -o text " + input, "witness_join.txt");
  check_golden("stone " + input, "stone.json");
  check_golden("analyze --closure close " + golden_path("chain.edges"), "analyze_chain.json");
}

TEST_CASE("cli lattice json is parseable and consistent") {
  CliResult res = run_cli("lattice " + golden_path("worked_example.json"));
  REQUIRE(res.status == 0);
  json j = json::parse(res.out);
  ApproxContext ctx(parse_relation_file(golden_path("worked_example.json"), InputFormat::JSON));
  RsLattice l = enumerate_rs(ctx);
  CHECK(j == lattice_to_json(l));
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli(golden_path("missing_subcommand.json")).status == 2);
  CHECK(run_cli("analyze " + golden_path("no_such_file.json")).status == 2);
  CHECK(run_cli("analyze " + golden_path("bad.json")).status == 2);
  // Not a quasiorder without --closure close.
  CHECK(run_cli("analyze " + golden_path("chain.edges")).status == 1);
  CHECK(run_cli("analyze --closure close " + golden_path("chain.edges")).status == 0);
}

#endif
