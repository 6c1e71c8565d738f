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


#include <numeric>
#include <random>

#include "doctest.h"
#include "exact/errors.hpp"
#include "random_models.hpp"
#include "zeta/zeta.hpp"

using namespace twz;

namespace {

Polynomial poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(v);
}

const TorusModel kTorus{2, IntMatrix{{2, 3}, {1, 2}}};
const AbelianProductModel kCurve{5, -3, 1, IntMatrix{{1}}};

void check_parity_degrees(const ZetaResult& z) {
  const auto& num = z.reconstructed.numerator();
  const auto& den = z.reconstructed.denominator();
  REQUIRE(num.degree().value_or(0) <= z.odd_betti);
  REQUIRE(*den.degree() <= z.even_betti);
  if (z.cancelled.is_constant() && z.odd_degree_drop == 0 && z.even_degree_drop == 0) {
    REQUIRE(*num.degree() == z.odd_betti);
    REQUIRE(*den.degree() == z.even_betti);
  }
}

}  // namespace

TEST_CASE("zeta_series examples") {
  CHECK(zeta_series(std::vector<Rational>(5, 1), 5) == TruncatedSeries(std::vector<Rational>(6, 1)));
  CHECK(zeta_series(std::vector<Rational>(4, 0), 4) == TruncatedSeries::one(4));
  std::vector<Rational> tr = trace_sequence(torus_graded_action(kTorus), 12);
  RationalFunction expect = RationalFunction::make(poly({1, -8, 4}), poly({1, -5, 4}));
  CHECK(zeta_series(tr, 12) == expect.expand(12));
  CHECK_THROWS_AS(zeta_series(tr, 13), PreconditionError);
}

TEST_CASE("product_formula examples") {
  RationalFunction c = product_formula(constant_map_action(2));
  CHECK(c.numerator() == poly({1}));
  CHECK(c.denominator() == poly({1, -1}));
  RationalFunction t = product_formula(torus_graded_action(kTorus));
  CHECK(t.numerator() == poly({1, -8, 4}));
  CHECK(t.denominator() == poly({1, -5, 4}));
  RationalFunction e = product_formula(abelian_graded_action(kCurve));
  CHECK(e.numerator() == poly({1, 3, 5}));
  CHECK(e.denominator() == poly({1, -1}) * poly({1, -5}));
}

TEST_CASE("zeta examples") {
  ZetaResult c = zeta(constant_map_action(2), 8);
  CHECK(c.agreement);
  CHECK(c.reconstructed == RationalFunction::make(poly({1}), poly({1, -1})));
  CHECK(zeta(torus_graded_action(kTorus), 12).agreement);
  CHECK(zeta(abelian_graded_action(kCurve), 8).agreement);
  CHECK_THROWS_AS(zeta(torus_graded_action(kTorus), 4), PreconditionError);
  CHECK(default_terms(torus_graded_action(kTorus)) == 12);
}

TEST_CASE("n0_estimate examples") {
  CHECK(n0_estimate(kTorus, 5) == 2u);
  CHECK(n0_estimate(kCurve, 5) == 1u);
  CHECK(n0_estimate(TorusModel{2, IntMatrix::identity(2)}, 5) == 1u);
  CHECK_FALSE(n0_estimate(kTorus, 1).has_value());
  CHECK_THROWS_AS(n0_estimate(kTorus, 0), PreconditionError);
}

TEST_CASE("reconstruction agrees with the product formula") {
  std::mt19937_64 rng(2026);
  std::vector<GradedAction> actions{constant_map_action(3), torus_graded_action(kTorus),
                                    abelian_graded_action(kCurve)};
  for (int i = 0; i < 25; ++i) actions.push_back(torus_graded_action(testing::random_torus(rng)));
  for (int i = 0; i < 25; ++i) actions.push_back(abelian_graded_action(testing::random_abelian(rng)));
  for (const auto& a : actions) {
    ZetaResult z = zeta(a, default_terms(a));
    REQUIRE(z.agreement);
    check_parity_degrees(z);
    // Integer traces give integer Taylor coefficients here.
    for (const auto& c : z.series.coeffs()) REQUIRE(is_integer(c));
  }
}

TEST_CASE("cancellations are reported") {
  // f = 1 on H^0 and H^1 with identical combined action cancels completely.
  GradedAction a = make_graded_action({{0, 0, Matrix{{1}}, Matrix{{1}}}, {1, 0, Matrix{{1}}, Matrix{{1}}}}, 2, false, 1);
  ZetaResult z = zeta(a, 5);
  CHECK(z.agreement);
  CHECK(z.cancelled == poly({-1, 1}));
  CHECK(z.reconstructed == RationalFunction());
  // A nilpotent f drops degree.
  GradedAction b = make_graded_action({{0, 0, Matrix{{1}}, Matrix{{1}}}, {1, 0, Matrix{{0, 1}, {0, 0}}, Matrix::identity(2)}},
                                      2, false, 1);
  ZetaResult w = zeta(b, 8);
  CHECK(w.agreement);
  CHECK(w.odd_degree_drop == 2);
}

TEST_CASE("proper models have nonnegative integer traces") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 20; ++i) {
    GradedAction a = abelian_graded_action(testing::random_abelian(rng));
    for (const auto& t : trace_sequence(a, 8)) {
      REQUIRE(is_integer(t));
      REQUIRE(t >= 0);
    }
  }
}
