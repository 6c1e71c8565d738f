// Copyright 2026 The twzeta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "exact/errors.hpp"
#include "report/config.hpp"
#include "report/pipeline.hpp"

using namespace twz;
using nlohmann::json;

namespace {

std::string read_file(const std::string& name) {
  std::ifstream in(std::string(TWZ_CONFIG_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ModelConfig load(const std::string& name) { return parse_config_text(read_file(name)); }

Rational rat(const json& j) { return parse_rational(j.get<std::string>()); }

struct Bounds {
  Rational lo, hi;
};
Bounds bounds(const json& j) { return {rat(j["lo"]), rat(j["hi"])}; }

}  // namespace

TEST_CASE("config round trip") {
  for (const char* name : {"torus_q2.json", "e3_example.json", "constant.json"}) {
    ModelConfig c = load(name);
    CHECK(parse_config(config_to_json(c)) == c);
  }
  ModelConfig g;
  g.kind = ModelKind::custom_graded;
  g.q = 9;
  g.dim = 1;
  g.proper = true;
  g.pieces = {{0, 0, {{Rational(1)}}, {{Rational(1)}}},
              {2, 2, {{Rational(3, 2)}}, {{Rational(9)}}}};
  g.terms = 6;
  g.iterate = 2;
  CHECK(parse_config(config_to_json(g)) == g);

  // Integers beyond 2^53 travel as strings.
  ModelConfig big = load("torus_q2.json");
  big.q = Integer("36028797018963968");  // 2^55
  json j = config_to_json(big);
  CHECK(j["q"].is_string());
  CHECK(parse_config(j) == big);
}

TEST_CASE("config validation is strict") {
  auto bad = [](const char* text) { CHECK_THROWS_AS(parse_config_text(text), ConfigError); };
  bad("not json");
  bad("[]");
  bad(R"({"kind":"torus","q":2})");
  bad(R"({"kind":"torus","matrix":[[2,3],[1,2]]})");
  bad(R"({"kind":"torus","q":2,"matrix":[[2,3],[1,2]],"colour":1})");
  bad(R"({"kind":"torus","q":1,"matrix":[[2,3],[1,2]]})");
  bad(R"({"kind":"torus","q":2,"matrix":[[2,3],[1,2]],"iterate":0})");
  bad(R"({"kind":"torus","q":2,"matrix":[[2,3],[1,2]],"frob_trace":1})");
  bad(R"({"kind":"abelian_product","q":5,"matrix":[[1]]})");
  bad(R"({"kind":"sphere","q":2})");
  bad(R"({"kind":"constant","q":2,"terms":"many"})");

  // Model-level failures surface as config errors too.
  auto unbuildable = [](const char* text) {
    CHECK_THROWS_AS(build_action(parse_config_text(text)), ConfigError);
  };
  unbuildable(R"({"kind":"torus","q":6,"matrix":[[2,3],[1,2]]})");
  unbuildable(R"({"kind":"torus","q":2,"matrix":[[1,2],[2,4]]})");
  unbuildable(R"({"kind":"torus","q":2,"matrix":[[1,0,0],[0,1,0],[0,0,1]]})");
  unbuildable(R"({"kind":"abelian_product","q":5,"frob_trace":5,"matrix":[[1]]})");
}

TEST_CASE("pipeline on the bundled torus") {
  Report r = run_pipeline(load("torus_q2.json"));
  const json& b = r.body;
  CHECK(b["spectral"]["ineq1"] == "fails");
  CHECK(b["n0"]["value"] == 2);
  CHECK(b["positivity"]["verdict"] == "fails");
  CHECK(b["positivity"]["first_violation"] == 1);
  CHECK(b["zeta"]["agreement"] == true);
  CHECK(b["trace_prefix"][0] == "-3/1");
  CHECK(r.contradictions.empty());
  CHECK(r.csv.rfind("n,trace,abs_zeta_coeff\n1,-3/1,3/1\n", 0) == 0);
}

TEST_CASE("pipeline on the bundled E^3 model") {
  Report r = run_pipeline(load("e3_example.json"));
  const json& s = r.body["spectral"];
  CHECK(s["ineq1"] == "holds");
  CHECK(s["ineq2"] == "holds");
  CHECK(s["k_even"] == 4);
  CHECK(s["k_odd"] == 3);
  CHECK(s["equality_certified"] == true);
  CHECK(r.body["disc_lemma"]["verdict"] == "holds");
  CHECK(r.body["weight_bound_violations"].empty());
  CHECK(r.contradictions.empty());
}

TEST_CASE("pipeline on the constant map") {
  Report r = run_pipeline(load("constant.json"));
  const json& z = r.body["zeta"]["reconstructed"];
  CHECK(z["numerator"] == json::array({"1/1"}));
  CHECK(z["denominator"] == json::array({"1/1", "-1/1"}));
  CHECK(r.body["terms"] == 8);
}

TEST_CASE("reports are deterministic") {
  for (const char* name : {"torus_q2.json", "constant.json"}) {
    ModelConfig c = load(name);
    Report a = run_pipeline(c), b = run_pipeline(c);
    CHECK(a.canonical() == b.canonical());
    CHECK(a.body["run_hash"] == b.body["run_hash"]);
    CHECK(a.body["run_hash"].get<std::string>().size() == 16);
    // The echoed config re-parses to the input.
    CHECK(parse_config(a.body["config"]) == c);
  }
  // The hash covers the content.
  ModelConfig c = load("constant.json");
  RunOptions o;
  o.terms = 9;
  CHECK(run_pipeline(c).body["run_hash"] != run_pipeline(c, o).body["run_hash"]);
}

TEST_CASE("iterate scan") {
  SUBCASE("E^3 up to r = 3") {
    auto reps = scan_iterates(load("e3_example.json"), 3);
    REQUIRE(reps.size() == 3);
    Bounds base = bounds(reps[0].body["spectral"]["lambda_even"]);
    Rational lo = 1, hi = 1;
    for (unsigned r = 1; r <= 3; ++r) {
      const json& s = reps[r - 1].body["spectral"];
      CHECK(reps[r - 1].body["config"]["iterate"] == r);
      CHECK(s["ineq1"] == "holds");
      lo *= base.lo;
      hi *= base.hi;
      // lambda(f^r) = lambda(f)^r: the enclosures must intersect.
      for (const char* key : {"lambda_even", "lambda_odd"}) {
        Bounds b = bounds(s[key]);
        CHECK(b.lo <= hi);
        CHECK(lo <= b.hi);
      }
    }
  }
  SUBCASE("torus up to r = 2") {
    auto reps = scan_iterates(load("torus_q2.json"), 2);
    REQUIRE(reps.size() == 2);
    for (const auto& r : reps) CHECK(r.body["spectral"]["ineq1"] == "fails");
  }
  SUBCASE("r_max = 1 is a plain run") {
    ModelConfig c = load("torus_q2.json");
    auto reps = scan_iterates(c, 1);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].canonical() == run_pipeline(c).canonical());
  }
}

TEST_CASE("oracle table") {
  json t = oracle_table(load("torus_q2.json"), 2);
  REQUIRE(t["twists"].size() == 2);
  CHECK(t["twists"][0]["fixed_count_formula"] == 3);
  CHECK(t["twists"][0]["fixed_count_bruteforce"] == 3);
  CHECK(t["twists"][0]["trace"] == "-3/1");
  CHECK(t["n0"] == 2);
  CHECK_THROWS_AS(oracle_table(load("torus_q2.json"), 0), PreconditionError);
}

TEST_CASE("bell table") {
  json t = bell_table(4);
  REQUIRE(t["polynomials"].size() == 4);
  CHECK(t["polynomials"][3]["value_at_ones"] == "15/1");
  CHECK(t["polynomials"][1]["text"] == "x2 + x1^2");
}
