#include <fstream>
#include <sstream>

#include "bcoh/cli.hpp"
#include "bcoh/json_io.hpp"
#include "doctest.h"

using bcoh::io::Json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = bcoh::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(BCOH_DATA_DIR) + "/" + name; }

Json results(const Outcome& o) {
  REQUIRE(o.code == 0);
  return Json::parse(o.out).at("results");
}

}  // namespace

TEST_CASE("poincare from roots and degrees") {
  const Json r = results(run({"poincare", "--family", "B", "--rank", "2", "--check-oracle"}));
  CHECK(r.at("poly") == Json({1, 2, 2, 2, 1}));
  CHECK(r.at("oracle_agrees") == true);
  CHECK(r.at("value_at_one") == 8);
  const Json d = results(run({"poincare", "--degrees", "1,2,3"}));
  CHECK(d.at("poly") == Json({1, 1, 1, 1}));
  CHECK(run({"poincare", "--degrees", "1,3"}).code == bcoh::cli::kInvalidInput);
  CHECK(run({"poincare", "--family", "E", "--rank", "6"}).code == bcoh::cli::kInvalidInput);
}

TEST_CASE("action commands") {
  const Json v = results(run({"action", "validate", "--spec", data("p2_action.json")}));
  CHECK(v.at("regular") == true);
  CHECK(v.at("model").at("e_matrix").size() == 3);
  const Json c = results(run({"action", "curve", "--spec", data("p2_action.json")}));
  CHECK(c.at("components")[2].at("display") == Json({"2*v", "2*v^2"}));
  const Json s = results(run({"action", "sl2-checks"}));
  CHECK(s.at("mat_id") == true);
  CHECK(s.at("section") == true);
  const Outcome bad = run({"action", "validate", "--spec", data("p2_not_regular.json")});
  CHECK(bad.code == bcoh::cli::kInvalidInput);
  CHECK(bad.err.find("not regular: dim ker e = 3") != std::string::npos);
  CHECK(run({"action", "validate", "--spec", data("missing.json")}).code == bcoh::cli::kInvalidInput);
}

TEST_CASE("curve commands") {
  const Json b = results(run({"curve", "betti", "--spec", data("p2_action.json")}));
  CHECK(b.at("betti") == Json({1, 1, 1}));
  const Json ring = results(run({"curve", "ring", "--spec", data("p1_action.json"), "--max-degree", "3"}));
  CHECK(ring.at("hilbert") == Json({1, 2, 2, 2}));
  const Json ideal = results(run({"curve", "ideal", "--spec", data("p2_action.json"), "--components", "1"}));
  CHECK(ideal.at("ideal_hilbert").back() == 2);
  CHECK(ideal.at("expected_rank") == 2);
  CHECK(run({"curve", "ideal", "--spec", data("p2_action.json")}).code == bcoh::cli::kInvalidInput);
  CHECK(run({"curve", "restrict", "--spec", data("p2_action.json"), "--components", "1,5"}).code ==
        bcoh::cli::kInvalidInput);
}

TEST_CASE("principal and chern commands reproduce the worked example") {
  const Outcome p = run({"principal", "--spec", data("p2_action.json"), "--gkm", data("p2_bcurves_gkm.json")});
  const Json pr = results(p);
  CHECK(pr.at("status") == "NotPrincipal");
  CHECK(pr.at("witness_degree") == 1);
  const Json full = Json::parse(p.out);
  CHECK(full.at("exact_arithmetic") == true);
  CHECK(full.at("inputs").size() == 2);
  CHECK(full.at("inputs")[0].at("sha256").get<std::string>().size() == 64);

  const Json ch = results(run({"chern", "--spec", data("p2_action.json"), "--bundle", "tangent", "--k", "1",
                               "--test-membership"}));
  CHECK(ch.at("tuple").at("coeffs") == Json({"6", "0", "-6"}));
  CHECK(ch.at("membership") == true);

  const Json v = results(run({"chern", "--spec", data("p2_action.json"), "--generators",
                              data("p2_constraint_generators.json"), "--gkm", data("p2_bcurves_gkm.json")}));
  CHECK(v.at("verdict").at("status") == "ProperSubalgebra");
  CHECK(v.at("verdict").at("witness_degree") == 1);
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::vector<std::string>> commands{
      {"principal", "--spec", data("p2_action.json"), "--gkm", data("p2_bcurves_gkm.json")},
      {"curve", "ring", "--spec", data("p2_action.json")},
      {"chern", "--spec", data("p2_action.json"), "--bundle", data("p2_tangent_bundle.json"), "--k", "2"},
      {"--table", "curve", "betti", "--spec", data("p2_action.json")}};
  for (const auto& cmd : commands) {
    const Outcome a = run(cmd), b = run(cmd);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("table rendering and usage errors") {
  const Outcome t = run({"curve", "betti", "--spec", data("p2_action.json"), "--table"});
  CHECK(t.code == 0);
  CHECK(t.out.find("results.betti: [1,1,1]") != std::string::npos);
  CHECK(run({}).code == bcoh::cli::kInvalidInput);
  CHECK(run({"frobnicate"}).code == bcoh::cli::kInvalidInput);
  CHECK(run({"--help"}).code == bcoh::cli::kOk);
  CHECK(run({"chern", "--spec", data("p2_action.json")}).code == bcoh::cli::kInvalidInput);
}

TEST_CASE("malformed JSON is an input error") {
  const std::string path = "bcoh_test_malformed.json";
  {
    std::ofstream f(path);
    f << "{\"n\": 2, \"h_weights\": [2, 0";
  }
  CHECK(run({"action", "validate", "--spec", path}).code == bcoh::cli::kInvalidInput);
  {
    std::ofstream f(path);
    f << R"({"n": 1, "h_weights": [1, -1], "e_matrix": [["0", "1/0"], ["0", "0"]]})";
  }
  CHECK(run({"action", "validate", "--spec", path}).code == bcoh::cli::kInvalidInput);
  {
    std::ofstream f(path);
    f << R"({"n": 1, "h_weights": [1, -1], "e_matrix": [[0, 0.5], [0, 0]]})";
  }
  CHECK(run({"action", "validate", "--spec", path}).code == bcoh::cli::kInvalidInput);
  std::remove(path.c_str());
}
