#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "rdc/cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = rdc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  Outcome o = run(args);
  return json::parse(o.out);
}

}  // namespace

TEST_CASE("verify correspondence") {
  for (const char* n : {"1", "2"}) {
    Outcome o = run({"verify", "correspondence", "--n", n});
    CHECK(o.code == 0);
    CHECK(o.out.find("0 failed") != std::string::npos);
  }
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"residue"}).code == 2);                           // --n is required
  CHECK(run({"residue", "--n", "9"}).code == 2);               // out of range
  CHECK(run({"pair", "--n", "1", "--dist", "gamma"}).code == 2);
  CHECK(run({"residue", "--n", "1", "--nodes", "2"}).code == 2);
  CHECK(run({"residue", "--n", "1", "--config", "/nonexistent/rdc.json"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("residue report") {
  json j = run_json({"residue", "--n", "2", "--h", "3 + z1^2"});
  CHECK(j["status"] == "pass");
  REQUIRE(j["records"].size() == 1);
  CHECK(j["records"][0]["value"]["re"].get<double>() == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(j["records"][0]["kind"] == "numeric");
  CHECK_FALSE(j["records"][0].contains("runtime_s"));
}

TEST_CASE("pairings through the CLI") {
  CHECK(run({"pair", "--dist", "delta", "--n", "1", "--h", "x1 + 4"}).code == 0);
  CHECK(run({"pair", "--dist", "delta-form", "--n", "2", "--h", "2 - x1*x2"}).code == 0);
  json one = run_json({"pair", "--dist", "one", "--n", "2"});
  CHECK(one["status"] == "pass");
  for (const auto& r : one["records"]) CHECK(r["kind"] == "exact");
}

TEST_CASE("integrate with an expected value") {
  CHECK(run({"integrate", "--cycle", "torus", "--n", "2", "--form", "kappa(2)", "--expect", "1"}).code == 0);
  CHECK(run({"integrate", "--cycle", "torus", "--n", "2", "--form", "kappa(2)", "--expect", "2"}).code == 1);
  CHECK(run({"integrate", "--cycle", "real-sphere", "--n", "3", "--form", "psi(3)", "--expect", "1"}).code == 0);
  CHECK(run({"integrate", "--cycle", "ball", "--n", "1", "--form", "dzbar1 ^ dz1", "--expect", "2*pi*i",
             "--radius", "1"}).code == 0);
}

TEST_CASE("malformed forms become failed records") {
  Outcome o = run({"integrate", "--n", "2", "--form", "z1 +", "--json"});
  CHECK(o.code == 1);
  json j = json::parse(o.out);
  CHECK(j["status"] == "fail");
  CHECK(j["records"][0]["detail"].get<std::string>().find("position 4") != std::string::npos);
  CHECK(run({"integrate", "--n", "2", "--form", "z3*dz1"}).code == 1);
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::string> args = {"transfer", "--n", "2", "--h", "z1*z2", "--json"};
  Outcome a = run(args);
  Outcome b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const std::vector<std::string> props = {"verify", "cech-properties", "--n", "2", "--seed", "9", "--json"};
  CHECK(run(props).out == run(props).out);
}

TEST_CASE("config file, flag precedence and output file") {
  const std::string cfg = "rdc_test_config.json";
  const std::string outfile = "rdc_test_report.json";
  {
    std::ofstream f(cfg);
    f << R"({"nodes": 32, "radius": 0.5, "seed": 4})";
  }
  json j = run_json({"residue", "--n", "1", "--h", "z1 + 2", "--config", cfg, "--radius", "0.75", "--out", outfile});
  CHECK(j["config"]["nodes_periodic"] == 32);
  CHECK(j["config"]["nodes_polar"] == 16);
  CHECK(j["config"]["radius"].get<double>() == 0.75);
  CHECK(j["config"]["seed"] == 4);
  std::ifstream in(outfile);
  REQUIRE(in.good());
  CHECK(json::parse(in) == j);
  std::remove(cfg.c_str());
  std::remove(outfile.c_str());
}

TEST_CASE("timing is opt-in") {
  json j = run_json({"verify", "correspondence", "--n", "1", "--timing"});
  CHECK(j["records"][0].contains("runtime_s"));
}

TEST_CASE("stokes command") {
  json j = run_json({"stokes", "--n", "1"});
  CHECK(j["status"] == "pass");
  CHECK(j["summary"]["fail"] == 0);
}
