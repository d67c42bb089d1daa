#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "posetfano/catalog.hpp"
#include "posetfano/constructions.hpp"
#include "posetfano/io.hpp"

using namespace posetfano;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string out_path = "cli_test_stdout.txt";
  std::string cmd =
      std::string(POSETFANO_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  int status = std::system(cmd.c_str());
  std::ifstream in(out_path);
  std::ostringstream os;
  os << in.rdbuf();
  return {WEXITSTATUS(status), os.str()};
}

void write(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

}  // namespace

TEST_CASE("poset parsing") {
  Poset p = io::parse_poset(R"({"d":2,"covers":[[1,2]]})");
  CHECK(p.less(1, 2));
  Poset a = io::parse_poset(R"({"d":3,"covers":[]})");
  CHECK(a.size() == 3);
  CHECK(!a.comparable(1, 2));

  CHECK_THROWS_AS(io::parse_poset(R"({"d":2,"covers":[[1,2],[2,1]]})"),
                  CycleDetected);
  CHECK_THROWS_AS(io::parse_poset("not json"), ParseError);
  CHECK_THROWS_AS(io::parse_poset(R"({"covers":[]})"), ParseError);
  CHECK_THROWS_AS(io::parse_poset(R"({"d":2,"covers":[[0,1]]})"), ParseError);
  CHECK_THROWS_AS(io::parse_poset(R"({"d":0,"covers":[]})"), ParseError);
}

TEST_CASE("poset round trip") {
  for (int d = 1; d <= 4; ++d)
    for (const Poset& p : catalog::all_posets(d))
      CHECK(io::parse_poset(io::serialize_poset(p)) == p);
}

TEST_CASE("polytope parsing and round trip") {
  LatticePolytope sq = io::parse_polytope(
      R"({"ambient_dim":2,"vertices":[[0,0],[1,0],[0,1],[1,1],[0,0]]})");
  CHECK(sq.vertices().size() == 4);
  CHECK(io::parse_polytope(io::serialize_polytope(sq)) == sq);

  CHECK_THROWS_AS(io::parse_polytope(R"({"ambient_dim":2,"vertices":[]})"),
                  ParseError);
  CHECK_THROWS_AS(io::parse_polytope(R"({"ambient_dim":2,"vertices":[[1]]})"),
                  ParseError);
  CHECK_THROWS_AS(
      io::parse_polytope(R"({"ambient_dim":2,"vertices":[[0.5,1]]})"),
      ParseError);
}

TEST_CASE("report serialization") {
  AnalysisReport rep = reflexivity_report(
      LatticePolytope::hull({{-1, -1}, {1, -1}, {-1, 1}, {1, 1}}));
  std::string text = io::serialize_report(rep);
  CHECK(text.find("\"reflexive\": true") != std::string::npos);
  CHECK(text.find("\"normalized_volume\": 8") != std::string::npos);
  // Stable key order: reflexive before normal before f_vector.
  CHECK(text.find("\"reflexive\"") < text.find("\"normal\""));
  CHECK(text.find("\"normal\"") < text.find("\"f_vector\""));
  CHECK(text.find("\"f_vector\"") < text.find("\"ehrhart\""));
  // Rationals as num/den pairs.
  CHECK(text.find("\"num\"") != std::string::npos);
  CHECK(text.find("\"den\"") != std::string::npos);
}

TEST_CASE("cli: build then analyze round trip") {
  write("p_chain.json", R"({"d":2,"covers":[[1,2]]})");
  RunResult built =
      run_cli("build --kind omega-oc p_chain.json p_chain.json -o built.json");
  REQUIRE(built.exit_code == 0);

  LatticePolytope file_poly = io::parse_polytope(io::read_file("built.json"));
  Poset c2 = io::parse_poset(io::read_file("p_chain.json"));
  CHECK(file_poly == build_pair(PairKind::OmegaOC, c2, c2));

  RunResult analyzed = run_cli("analyze --reflexive --normal built.json");
  CHECK(analyzed.exit_code == 0);
  CHECK(analyzed.out.find("\"reflexive\": true") != std::string::npos);
  CHECK(analyzed.out.find("\"normal\": true") != std::string::npos);
}

TEST_CASE("cli: volume cross check") {
  write("p_anti.json", R"({"d":2,"covers":[]})");
  RunResult r = run_cli("volume --method linext --method ehrhart p_anti.json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"match\": true") != std::string::npos);
  CHECK(r.out.find("\"num\": \"2\"") != std::string::npos);
}

TEST_CASE("cli: groebner verification") {
  write("p_chain.json", R"({"d":2,"covers":[[1,2]]})");
  RunResult r = run_cli("groebner --family cc --degree 3 p_chain.json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"verified\": true") != std::string::npos);
}

TEST_CASE("cli: exit codes for bad input") {
  write("bad.json", "{");
  CHECK(run_cli("analyze bad.json").exit_code == 2);
  write("cycle.json", R"({"d":2,"covers":[[1,2],[2,1]]})");
  CHECK(run_cli("build --kind order cycle.json").exit_code == 2);
  CHECK(run_cli("nonsense-subcommand").exit_code == 2);
  // No common linear extension: domain failure, not a parse failure.
  write("p_chain.json", R"({"d":2,"covers":[[1,2]]})");
  write("p_rev.json", R"({"d":2,"covers":[[2,1]]})");
  CHECK(run_cli("volume --method linext p_chain.json p_rev.json").exit_code ==
        1);
}
