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


#include <cmath>
#include <random>

#include "doctest.h"
#include "exact/errors.hpp"
#include "positivity/positivity.hpp"
#include "zeta/zeta.hpp"

using namespace twz;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

using Terms = std::map<BellPolynomial::Exponents, Integer>;

// Oracle: sum over set partitions of {1..n} of prod_blocks x_{|block|},
// enumerated as restricted growth strings.
Terms partition_oracle(unsigned n) {
  Terms out;
  std::vector<unsigned> a(n, 0);
  while (true) {
    unsigned blocks = *std::max_element(a.begin(), a.end()) + 1;
    std::vector<unsigned> size(blocks, 0);
    for (unsigned v : a) ++size[v];
    BellPolynomial::Exponents e(n, 0);
    for (unsigned s : size) ++e[s - 1];
    out[e] += 1;
    // next restricted growth string
    int i = static_cast<int>(n) - 1;
    while (i > 0) {
      unsigned mx = 0;
      for (int j = 0; j < i; ++j) mx = std::max(mx, a[static_cast<std::size_t>(j)]);
      if (a[static_cast<std::size_t>(i)] <= mx) break;
      --i;
    }
    if (i <= 0) break;
    ++a[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < n; ++j) a[j] = 0;
  }
  return out;
}

TruncatedSeries random_nonneg(std::mt19937_64& rng, std::size_t order) {
  std::uniform_int_distribution<long> num(0, 10), den(1, 10);
  std::vector<Rational> c(order + 1);
  for (std::size_t i = 1; i <= order; ++i) c[i] = q(num(rng), den(rng));
  return TruncatedSeries(std::move(c));
}

// sum_j c_j (b_j t)^n / n
TruncatedSeries log_product(const std::vector<std::pair<long, Rational>>& parts, std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (const auto& [mult, b] : parts)
    for (std::size_t n = 1; n <= order; ++n) c[n] += Rational(mult) * rpow(b, n) / static_cast<unsigned long>(n);
  return TruncatedSeries(std::move(c));
}

}  // namespace

TEST_CASE("nonneg_check examples") {
  ZetaResult e = zeta(abelian_graded_action({5, -3, 1, IntMatrix{{1}}}), 10);
  CHECK_FALSE(nonneg_check(series_log(e.series)).has_value());
  ZetaResult t = zeta(torus_graded_action({2, IntMatrix{{2, 3}, {1, 2}}}), 12);
  CHECK(nonneg_check(series_log(t.series)) == 1u);
  CHECK_FALSE(nonneg_check(TruncatedSeries::zero(4)).has_value());
  CHECK_THROWS_AS(nonneg_check(TruncatedSeries::one(4)), PreconditionError);
}

TEST_CASE("bell_polynomials examples") {
  auto p = bell_polynomials(5);
  REQUIRE(p.size() == 5);
  CHECK(p[0].to_string() == "x1");
  CHECK(p[1].to_string() == "x2 + x1^2");
  CHECK(p[2].to_string() == "x3 + 3*x1*x2 + x1^3");
  const long sums[] = {1, 2, 5, 15, 52};
  for (unsigned n = 1; n <= 5; ++n) CHECK(p[n - 1].evaluate(std::vector<Rational>(n, 1)) == sums[n - 1]);
  CHECK_THROWS_AS(bell_polynomials(0), PreconditionError);
  CHECK_THROWS_AS(bell_polynomials(13), PreconditionError);
  CHECK(bell_polynomials(12).back().terms().size() == 77);  // partitions of 12
}

TEST_CASE("bell polynomials match set-partition enumeration") {
  auto p = bell_polynomials(8);
  for (unsigned n = 1; n <= 8; ++n) REQUIRE(p[n - 1].terms() == partition_oracle(n));
}

TEST_CASE("bell polynomial structure") {
  auto p = bell_polynomials(10);
  for (unsigned n = 1; n <= 10; ++n) {
    const auto& terms = p[n - 1].terms();
    BellPolynomial::Exponents xn(n, 0);
    xn[n - 1] = 1;
    REQUIRE(terms.at(xn) == 1);
    for (const auto& [e, c] : terms) {
      REQUIRE(c > 0);
      if (e != xn) REQUIRE(e[n - 1] == 0);
    }
  }
}

TEST_CASE("bell polynomials give the derivatives of exp(G)") {
  std::mt19937_64 rng(8);
  auto p = bell_polynomials(8);
  for (int iter = 0; iter < 100; ++iter) {
    TruncatedSeries g = random_nonneg(rng, 8);
    TruncatedSeries e = series_exp(g);
    std::vector<Rational> derivs(8);
    for (unsigned k = 1; k <= 8; ++k) derivs[k - 1] = Rational(factorial(k)) * g[k];
    for (unsigned n = 1; n <= 8; ++n) REQUIRE(Rational(factorial(n)) * e[n] == p[n - 1].evaluate(derivs));
  }
}

TEST_CASE("derivative domination") {
  CHECK_FALSE(derivative_domination_check(log_product({{1, q(1)}}, 6)).has_value());
  CHECK_FALSE(derivative_domination_check(TruncatedSeries(std::vector<Rational>{0, 1, 0, 0, 0})).has_value());
  CHECK_THROWS_AS(derivative_domination_check(TruncatedSeries(std::vector<Rational>{0, 1, -1})), PreconditionError);
  std::mt19937_64 rng(9);
  for (int iter = 0; iter < 500; ++iter) {
    TruncatedSeries g = random_nonneg(rng, 1 + rng() % 10);
    REQUIRE_FALSE(nonneg_check(g).has_value());
    REQUIRE_FALSE(derivative_domination_check(g).has_value());
  }
}

TEST_CASE("radius_estimate examples") {
  std::vector<Rational> geo(33);
  for (unsigned n = 0; n <= 32; ++n) geo[n] = rpow(q(4), n);
  RadiusEstimate r = radius_estimate(TruncatedSeries(geo), 8);
  CHECK_FALSE(r.unbounded);
  CHECK(std::fabs(r.radius - 0.25) <= 0.05 * 0.25);

  TruncatedSeries g = log_product({{1, q(2)}}, 32);
  RadiusEstimate rg = radius_estimate(g, 8), re = radius_estimate(series_exp(g), 8);
  CHECK(std::fabs(rg.radius - 0.5) <= 0.05 * 0.5);
  CHECK(std::fabs(re.radius - 0.5) <= 0.05 * 0.5);
  CHECK(std::fabs(rg.radius - re.radius) <= 0.05 * re.radius);

  std::vector<Rational> poly(33);
  poly[1] = 3;
  poly[2] = 1;
  CHECK(radius_estimate(TruncatedSeries(poly), 8).unbounded);
  CHECK_THROWS_AS(radius_estimate(TruncatedSeries(geo), 3), PreconditionError);
  CHECK_THROWS_AS(radius_estimate(TruncatedSeries(geo), 17), PreconditionError);
}

TEST_CASE("radius of G and exp(G) agree") {
  std::mt19937_64 rng(10);
  const Rational bs[] = {q(1, 2), q(1), q(3, 2), q(2), q(3)};
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<std::pair<long, Rational>> parts;
    std::size_t k = 1 + rng() % 3;
    for (std::size_t j = 0; j < k; ++j) parts.push_back({1 + static_cast<long>(rng() % 3), bs[rng() % 5]});
    TruncatedSeries g = log_product(parts, 64);
    RadiusEstimate a = radius_estimate(g, 16), b = radius_estimate(series_exp(g), 16);
    REQUIRE(std::fabs(a.radius - b.radius) <= 0.10 * b.radius);
  }
}
