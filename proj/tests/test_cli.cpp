#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = oubraid::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Outcome& o) { return nlohmann::json::parse(o.out); }

const std::string kWeaving77 =
    "1 -2 3 -4 5 -6 1 -2 3 -4 5 -6 1 -2 3 -4 5 -6 1 -2 3 -4 5 -6 1 -2 3 -4 5 -6 1 -2 3 -4 5 -6 1 -2 3 -4 5 -6";

}  // namespace

TEST_CASE("analyze") {
  const Outcome beta = run({"analyze", "--word", "1 2^4 1 2", "--format", "json"});
  REQUIRE(beta.code == 0);
  const auto j = json_of(beta);
  CHECK(j["n"] == 3);
  CHECK(j["det"] == "2");
  CHECK(j["rank"] == 3);
  CHECK(j["ou_matrix"] == nlohmann::json::parse("[[0,1,2],[1,0,0],[2,1,0]]"));
  CHECK(j["charpoly"] == nlohmann::json::parse(R"(["1","0","-5","-2"])"));
  CHECK(j["over_set"] == nlohmann::json::parse("[[0,0,1],[0,1,2],[0,1,2]]"));
  CHECK(j["under_set"] == nlohmann::json::parse("[[0,0,2],[0,1,1],[0,1,2]]"));
  CHECK(beta.err.empty());

  const auto empty = json_of(run({"analyze", "--word", "", "--strands", "3", "--format", "json"}));
  CHECK(empty["det"] == "0");
  CHECK(empty["ou_matrix"] == nlohmann::json::parse("[[0,0,0],[0,0,0],[0,0,0]]"));

  const auto rho = json_of(run({"analyze", "--word", "1 -2 3^2", "--format", "json"}));
  CHECK(rho["braid_permutation"] == nlohmann::json::parse("[3,1,2,4]"));

  const Outcome text = run({"analyze", "--word", "1 -2 3^2"});
  CHECK(text.out.find("braid permutation: (3,1,2,4)") != std::string::npos);

  const auto with_wd = json_of(run({"analyze", "--word", kWeaving77, "--wd", "--format", "json"}));
  CHECK(with_wd["wd"]["value"] == 12);
  CHECK(with_wd["wd"]["exact"] == true);
}

TEST_CASE("analyze output is byte-deterministic") {
  const auto a = run({"analyze", "--word", kWeaving77, "--format", "json"});
  const auto b = run({"analyze", "--word", kWeaving77, "--format", "json"});
  CHECK(a.out == b.out);
}

TEST_CASE("parse and usage errors exit with 2") {
  CHECK(run({"analyze", "--word", "1 0 2"}).code == 2);
  CHECK(run({"analyze", "--word", "3", "--strands", "3"}).code == 2);
  CHECK(run({"analyze"}).code == 2);
  CHECK(run({"analyze", "--word", "1", "--file", "x"}).code == 2);
  CHECK(run({"analyze", "--file", "/nonexistent/word.txt"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  const auto bad = run({"wd", "--word", "1 x"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("error") != std::string::npos);
}

TEST_CASE("words can come from a file") {
  const std::string path = "cli_test_word.txt";
  {
    std::ofstream f(path);
    f << "1 2^4\n1\n2\n";
  }
  const auto j = json_of(run({"analyze", "--file", path, "--format", "json"}));
  std::remove(path.c_str());
  CHECK(j["det"] == "2");
}

TEST_CASE("wd") {
  const Outcome w7 = run({"wd", "--exact", "--word", kWeaving77});
  REQUIRE(w7.code == 0);
  CHECK(w7.out.find("value: 12\n") != std::string::npos);
  CHECK(w7.out.find("exact: true") != std::string::npos);

  const auto w4 = json_of(run({"wd", "--exact", "--word", "1 -2 3 1 -2 3 1 -2 3 1 -2 3", "--format", "json"}));
  CHECK(w4["wd"]["value"] == 6);

  CHECK(run({"wd", "--exact", "--word", "", "--strands", "4"}).out.find("value: 0\n") != std::string::npos);

  const auto h = run({"wd", "--heuristic", "--seed", "5", "--word", kWeaving77, "--format", "json"});
  CHECK(h.code == 0);
  CHECK(json_of(h)["seed"] == 5);
  CHECK(json_of(h)["wd"]["exact"] == false);
  CHECK(h.err.find("seed: 5") != std::string::npos);

  CHECK(run({"wd", "--exact", "--heuristic", "--word", "1"}).code == 2);
}

TEST_CASE("exact wd refuses large diagrams without a budget") {
  const Outcome refused = run({"wd", "--exact", "--word", "1 2 3 4 5 6 7 8 9 10"});
  CHECK(refused.code == 3);
  CHECK(refused.out.empty());
  const Outcome budgeted = run({"wd", "--exact", "--budget", "1000", "--word", "1 2 3 4 5 6 7 8 9 10"});
  CHECK(budgeted.code == 0);
  CHECK(budgeted.out.find("value: 0") != std::string::npos);
}

TEST_CASE("thread cap from the environment") {
  setenv("OU_BRAID_THREADS", "2", 1);
  const auto capped = run({"wd", "--threads", "8", "--word", kWeaving77});
  setenv("OU_BRAID_THREADS", "zero", 1);
  const auto invalid = run({"wd", "--word", kWeaving77});
  unsetenv("OU_BRAID_THREADS");
  CHECK(capped.code == 0);
  CHECK(capped.out.find("value: 12") != std::string::npos);
  CHECK(invalid.code == 2);
}

TEST_CASE("layers") {
  const Outcome delta = run({"layers", "--word", "1 2 1 3 2 1"});
  REQUIRE(delta.code == 0);
  CHECK(delta.out.find("layers: 4") != std::string::npos);
  CHECK(delta.out.find("completely layered") != std::string::npos);

  const auto split = json_of(run({"layers", "--word", "1 3", "--strands", "4", "--format", "json"}));
  CHECK(split["layers"].size() == 4);
  CHECK(split["layers"][0]["strands"] == nlohmann::json::parse("[2]"));

  const Outcome twist = run({"layers", "--word", "1 1"});
  CHECK(twist.out.find("not layered") != std::string::npos);
  CHECK(run({"layers", "--word", "0"}).code == 2);
}

TEST_CASE("gen") {
  CHECK(run({"gen", "weaving", "3", "1"}).out == "1 -2\n");
  CHECK(run({"gen", "fundamental", "2"}).out == "1\n");
  CHECK(run({"gen", "fundamental", "4"}).out == "1 2 1 3 2 1\n");
  const std::string dp = run({"gen", "delta-power", "3", "2"}).out;
  const auto j = json_of(run({"analyze", "--word", dp, "--strands", "3", "--format", "json"}));
  CHECK(j["ou_matrix"] == nlohmann::json::parse("[[0,1,1],[1,0,1],[1,1,0]]"));
  CHECK(run({"gen", "permutation", "3", "1", "2"}).code == 0);

  const auto r1 = run({"gen", "random", "4", "10", "--seed", "3"});
  const auto r2 = run({"gen", "random", "4", "10", "--seed", "3"});
  CHECK(r1.out == r2.out);
  CHECK(r1.err.find("seed: 3") != std::string::npos);
  CHECK(run({"gen", "random-positive-pure", "4", "6"}).code == 0);

  CHECK(run({"gen", "weaving", "1", "1"}).code == 2);
  CHECK(run({"gen", "weaving", "3"}).code == 2);
  CHECK(run({"gen", "permutation", "1", "1"}).code == 2);
  CHECK(run({"gen", "spiral", "3"}).code == 2);
}

TEST_CASE("check") {
  const Outcome pos = run({"check", "positive-invariance", "--seed", "42", "--cases", "200"});
  CHECK(pos.code == 0);
  CHECK(pos.out.find("PASS") != std::string::npos);
  CHECK(run({"check", "theorem1", "--seed", "7"}).code == 0);
  const Outcome vacuous = run({"check", "similarity", "--cases", "0"});
  CHECK(vacuous.code == 0);
  CHECK(vacuous.out.find("0/0 passed") != std::string::npos);
  for (const char* suite : {"product-formula", "theorem2", "pure-symmetry"})
    CHECK(run({"check", suite, "--cases", "50"}).code == 0);
  CHECK(run({"check", "nonsense"}).code == 2);
  const auto j = json_of(run({"check", "similarity", "--cases", "5", "--seed", "9", "--format", "json"}));
  CHECK(j["ok"] == true);
  CHECK(j["seed"] == 9);
}
