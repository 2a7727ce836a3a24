#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cubecomb/cli.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = cubecomb::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("validate reports pass and fail with exit codes") {
  const auto ok = call({"validate", "--generator", "grid:3,3"});
  CHECK(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["status"] == "PASS");
  CHECK(j["result"]["pass"] == true);
  CHECK(j["input"]["digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
  CHECK(j["bounds"]["ramsey"] == "unused");
  CHECK(j.contains("version"));
  const auto bad = call({"validate", "--generator", "complete:4"});
  CHECK(bad.code == 2);
  CHECK(nlohmann::json::parse(bad.out)["result"]["witness"].size() == 3);
}

TEST_CASE("non-median input fails every analysis command") {
  const auto r = call({"walls", "--generator", "cycle:6"});
  CHECK(r.code == 2);
  CHECK(nlohmann::json::parse(r.out)["result"]["error"]["code"] == "NOT_MEDIAN_GRAPH");
}

TEST_CASE("usage errors name the offending flag") {
  auto r = call({"chains", "--generator", "grid:2,2", "--orient", "sideways"});
  CHECK(r.code == 1);
  CHECK(r.err.find("--orient") != std::string::npos);
  r = call({"chains", "--generator", "grid:2,2", "--bogus"});
  CHECK(r.code == 1);
  CHECK(r.err.find("--bogus") != std::string::npos);
  r = call({"validate"});
  CHECK(r.code == 1);
  r = call({"validate", "--generator", "grid:2", "--input", "x.json"});
  CHECK(r.code == 1);
  r = call({"validate", "--generator", "grid:2", "--format", "yaml"});
  CHECK(r.code == 1);
  CHECK(r.err.find("--format") != std::string::npos);
  r = call({"quarterspaces", "--generator", "grid:2,2", "--h", "0", "--v", "42"});
  CHECK(r.code == 1);
  CHECK(r.err.find("--v") != std::string::npos);
  r = call({"dynamics", "--generator", "tree", "--auto", "shift:9"});
  CHECK(r.code == 1);
  CHECK(r.err.find("--auto") != std::string::npos);
  r = call({});
  CHECK(r.code == 1);
}

TEST_CASE("help and version") {
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"--version"}).out.find('.') != std::string::npos);
}

TEST_CASE("input files and --out") {
  const std::string in = "cli_test_input.json";
  const std::string out = "cli_test_output.json";
  {
    std::ofstream f(in);
    f << R"({"vertices":["a","b","c","d"],"edges":[["a","b"],["b","c"],["c","d"],["d","a"]]})";
  }
  const auto r = call({"walls", "--input", in, "--out", out});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(out);
  const auto j = nlohmann::json::parse(f);
  CHECK(j["result"]["count"] == 2);
  CHECK(j["input"]["source"] == "file:" + in);
  std::remove(in.c_str());
  std::remove(out.c_str());
  CHECK(call({"walls", "--input", "does-not-exist.json"}).code == 1);
}

TEST_CASE("schema errors in input files are validation failures") {
  const std::string in = "cli_test_bad.json";
  {
    std::ofstream f(in);
    f << R"({"vertices":["a"],"edges":[],"colour":"red"})";
  }
  const auto r = call({"validate", "--input", in});
  CHECK(r.code == 2);
  CHECK(nlohmann::json::parse(r.out)["result"]["error"]["code"] == "SCHEMA_ERROR");
  std::remove(in.c_str());
}

TEST_CASE("chains report carries the guarantee line and Ramsey provenance") {
  const auto r = call({"chains", "--generator", "cyclic_squares:5", "--N", "2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["guarantee_line"] == "≥ 1 = ⌈5/5⌉");
  CHECK(j["result"]["max_chain"] == 2);
  CHECK(j["bounds"]["ramsey"] == "exact");
  CHECK(j["bounds"]["K"] == 5);
  const auto big = call({"chains", "--generator", "grid:1,1,1,1,1", "--N", "5"});
  REQUIRE(big.code == 0);
  CHECK(nlohmann::json::parse(big.out)["bounds"]["ramsey"] == "upper-bound");
}

TEST_CASE("every subcommand produces a report") {
  const std::vector<std::vector<std::string>> cases{
      {"contact", "--generator", "staircase:3"},
      {"hull", "--generator", "grid:2,2", "--set", "(0,0)", "--set", "(1,2)"},
      {"gate", "--generator", "grid:2,2", "--set", "(0,0)", "--vertex", "(2,2)"},
      {"geodesic", "--generator", "staircase:4"},
      {"embed", "--generator", "grid:3,3", "--basepoint", "(1,1)", "--R", "2"},
      {"quotient", "--generator", "tree:3,2", "--walls", "0", "2"},
      {"quarterspaces", "--generator", "staircase:8"},
      {"hierarchy", "--generator", "grid:2,2", "--x", "(0,0)", "--y", "(2,2)"},
      {"growth", "--generator", "grid:4,4", "--R", "2"},
      {"growth", "--generator", "line", "--R", "3"},
      {"dynamics", "--generator", "grid", "--auto", "shift:1,1", "--nmax", "3"},
  };
  for (const auto& args : cases) {
    CAPTURE(args[0]);
    const auto r = call(args);
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == args[0]);
    CHECK(j["status"] == "PASS");
    const auto text = call([&] {
      auto a = args;
      a.push_back("--format");
      a.push_back("text");
      return a;
    }());
    CHECK(text.code == 0);
    CHECK(text.out.rfind("cubecomb " + args[0], 0) == 0);
  }
}

TEST_CASE("dynamics verdicts through the CLI") {
  auto verdict = [](std::vector<std::string> args) {
    const auto r = call(args);
    REQUIRE(r.code == 0);
    return nlohmann::json::parse(r.out)["result"]["verdict"].get<std::string>();
  };
  CHECK(verdict({"dynamics", "--generator", "staircase", "--auto", "shift", "--nmax", "8"}) == "LOXODROMIC-CONSISTENT");
  CHECK(verdict({"dynamics", "--generator", "grid", "--auto", "shift:1,1", "--nmax", "4"}) == "BOUNDED-ORBIT");
  CHECK(verdict({"dynamics", "--generator", "line", "--auto", "identity", "--nmax", "2"}) == "STABILIZED-WALL");
  const auto small = call({"dynamics", "--generator", "line", "--nmax", "8", "--R", "4"});
  CHECK(small.code == 2);
  CHECK(nlohmann::json::parse(small.out)["result"]["error"]["code"] == "WINDOW_TOO_SMALL");
}

TEST_CASE("random orientation depends on the seed only") {
  const std::vector<std::string> a{"chains", "--generator", "staircase:6", "--orient", "random", "--seed", "3"};
  CHECK(call(a).out == call(a).out);
}
