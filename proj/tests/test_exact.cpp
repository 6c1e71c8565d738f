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

#include <random>
#include <vector>

#include "doctest.h"
#include "exact/errors.hpp"
#include "exact/matrix.hpp"
#include "exact/polynomial.hpp"
#include "exact/rational_function.hpp"
#include "exact/series.hpp"

using namespace twz;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

TruncatedSeries series(std::initializer_list<Rational> c) { return TruncatedSeries(std::vector<Rational>(c)); }

// sum_{n=1..N} t^n / n
TruncatedSeries neg_log_one_minus_t(std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t n = 1; n <= order; ++n) c[n] = q(1, static_cast<long>(n));
  return TruncatedSeries(std::move(c));
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-10, 10), den(1, 10);
  return q(num(rng), den(rng));
}

// Test-side oracle: power-series long division num/den, independent of
// RationalFunction::expand.
std::vector<Rational> long_divide(const std::vector<Rational>& num, const std::vector<Rational>& den, std::size_t count) {
  std::vector<Rational> rem(count + den.size());
  for (std::size_t i = 0; i < num.size() && i < rem.size(); ++i) rem[i] = num[i];
  std::vector<Rational> out(count);
  for (std::size_t n = 0; n < count; ++n) {
    out[n] = rem[n] / den[0];
    for (std::size_t j = 0; j < den.size(); ++j) rem[n + j] -= out[n] * den[j];
  }
  return out;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(q(-6, 4)) == "-3/2");
  CHECK(to_string(q(3)) == "3/1");
  CHECK(parse_rational("-3/2") == q(-3, 2));
  CHECK(parse_rational("1e-9") == q(1, 1000000000));
  CHECK(parse_rational("0.25") == q(1, 4));
  CHECK(parse_rational("12") == q(12));
  CHECK(parse_rational("2.5E2") == q(250));
  CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
  CHECK_THROWS_AS(parse_rational("abc"), PreconditionError);
  CHECK(is_prime_power(Integer(9)));
  CHECK(is_prime_power(Integer(2)));
  CHECK_FALSE(is_prime_power(Integer(12)));
  CHECK_FALSE(is_prime_power(Integer(1)));
}

TEST_CASE("polynomial degree of zero is a distinguished marker") {
  Polynomial z;
  CHECK(z.is_zero());
  CHECK_FALSE(z.degree().has_value());
  CHECK(Polynomial{q(0), q(0)}.is_zero());
  CHECK(*Polynomial{q(1), q(2), q(0)}.degree() == 1);
}

TEST_CASE("poly_gcd examples") {
  Polynomial t2m1{q(-1), q(0), q(1)}, tm1{q(-1), q(1)};
  CHECK(poly_gcd(t2m1, tm1) == tm1);
  Polynomial p{q(3), q(1), q(7)};
  CHECK(poly_gcd(p, Polynomial::constant(1)) == Polynomial::constant(1));
  Polynomial a = Polynomial{q(1), q(-2)} * Polynomial{q(1), q(-2)};
  Polynomial b = Polynomial{q(1), q(-2)} * Polynomial{q(1), q(-3)};
  CHECK(poly_gcd(a, b) == Polynomial{q(-1, 2), q(1)});
  CHECK_THROWS_AS(poly_gcd(Polynomial{}, Polynomial{}), PreconditionError);
}

TEST_CASE("squarefree part and real root counting") {
  Polynomial p = Polynomial{q(-1), q(1)} * Polynomial{q(-1), q(1)} * Polynomial{q(2), q(1)};
  CHECK(squarefree_part(p) == Polynomial{q(-2), q(1), q(1)});
  CHECK(count_real_roots(p, q(-3), q(3)) == 2);
  CHECK(count_real_roots(p, q(1), q(1)) == 1);
  CHECK(count_real_roots(p, q(-1), q(0)) == 0);
  CHECK(count_real_roots(Polynomial{q(1), q(0), q(1)}, q(-10), q(10)) == 0);
}

TEST_CASE("series_exp examples") {
  SUBCASE("exp(0) = 1") { CHECK(series_exp(TruncatedSeries::zero(5)) == TruncatedSeries::one(5)); }
  SUBCASE("exp(-log(1-t)) is the all-ones series") {
    TruncatedSeries e = series_exp(neg_log_one_minus_t(5));
    CHECK(e == series({1, 1, 1, 1, 1, 1}));
    // Multiplying by (1 - t) leaves 1.
    CHECK(e * series({1, -1, 0, 0, 0, 0}) == TruncatedSeries::one(5));
  }
  SUBCASE("exp(t)") { CHECK(series_exp(series({0, 1, 0, 0, 0})) == series({1, 1, q(1, 2), q(1, 6), q(1, 24)})); }
  CHECK_THROWS_AS(series_exp(series({1, 1})), PreconditionError);
}

TEST_CASE("series_log examples") {
  CHECK(series_log(TruncatedSeries::one(3)) == TruncatedSeries::zero(3));
  CHECK(series_log(series({1, 1, 1, 1, 1, 1})) == neg_log_one_minus_t(5));
  CHECK(series_log(series({1, 1, 0, 0})) == series({0, 1, q(-1, 2), q(1, 3)}));
  CHECK_THROWS_AS(series_log(series({2, 1})), PreconditionError);
}

TEST_CASE("series_derivative examples") {
  CHECK(series_derivative(series({0, 0, 1, 0})) == series({0, 2, 0}));
  CHECK(series_derivative(neg_log_one_minus_t(4)) == series({1, 1, 1, 1}));
  TruncatedSeries t3 = series({0, 0, 0, 1});
  TruncatedSeries d3 = series_derivative(series_derivative(series_derivative(t3)));
  CHECK(d3[0] == 6);
  CHECK_THROWS_AS(series_derivative(series({5})), PreconditionError);
}

TEST_CASE("mixed-order arithmetic truncates to the smaller order") {
  TruncatedSeries a = series({1, 2, 3, 4}), b = series({1, 1});
  CHECK((a + b).order() == 1);
  CHECK((a * b) == series({1, 3}));
}

TEST_CASE("log(exp(G)) = G on random series") {
  std::mt19937_64 rng(20261019);
  std::uniform_int_distribution<int> len(1, 8);
  for (int iter = 0; iter < 1000; ++iter) {
    std::vector<Rational> c(static_cast<std::size_t>(len(rng)) + 1);
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = random_rational(rng);
    TruncatedSeries g(std::move(c));
    REQUIRE(series_log(series_exp(g)) == g);
  }
}

TEST_CASE("exp(G1 + G2) = exp(G1) exp(G2)") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<Rational> c1(7), c2(9);
    for (std::size_t i = 1; i < c1.size(); ++i) c1[i] = random_rational(rng);
    for (std::size_t i = 1; i < c2.size(); ++i) c2[i] = random_rational(rng);
    TruncatedSeries g1(c1), g2(c2);
    REQUIRE(series_exp(g1 + g2) == series_exp(g1) * series_exp(g2));
  }
}

TEST_CASE("rational function normalization") {
  // (1 - t)(1 - 2t) / ((1 - t) * 3)
  Polynomial num = Polynomial{q(1), q(-1)} * Polynomial{q(1), q(-2)};
  Polynomial den = Polynomial{q(3), q(-3)};
  RationalFunction f = RationalFunction::make(num, den);
  CHECK(f.numerator() == Polynomial{q(1, 3), q(-2, 3)});
  CHECK(f.denominator() == Polynomial::constant(1));
  CHECK_THROWS_AS(RationalFunction::make(num, Polynomial{q(0), q(1)}), PreconditionError);
  CHECK_THROWS_AS(RationalFunction::make(num, Polynomial{}), PreconditionError);
}

TEST_CASE("reconstruct_rational examples") {
  SUBCASE("geometric series") {
    std::vector<Rational> a(6, q(1));
    RationalFunction f = reconstruct_rational(a, 0, 1);
    CHECK(f.numerator() == Polynomial::constant(1));
    CHECK(f.denominator() == Polynomial{q(1), q(-1)});
  }
  SUBCASE("powers of five") {
    std::vector<Rational> a;
    Integer p = 1;
    for (int i = 0; i < 6; ++i, p *= 5) a.emplace_back(p);
    RationalFunction f = reconstruct_rational(a, 0, 1);
    CHECK(f.denominator() == Polynomial{q(1), q(-5)});
  }
  SUBCASE("twisted torus zeta from its trace series") {
    // traces 1 + 4^n - 2^n tr(M^n), tr(M^n) from t_n = 4 t_{n-1} - t_{n-2}
    std::vector<Integer> tr{2, 4};
    for (int n = 2; n <= 12; ++n) tr.push_back(4 * tr[n - 1] - tr[n - 2]);
    std::vector<Rational> g(13);
    for (unsigned n = 1; n <= 12; ++n)
      g[n] = make_rational(1 + ipow(4, n) - ipow(2, n) * tr[n], n);
    TruncatedSeries z = series_exp(TruncatedSeries(g));
    // Oracle: long division of (1 - 8t + 4t^2) by (1 - 5t + 4t^2).
    std::vector<Rational> expect = long_divide({1, -8, 4}, {1, -5, 4}, 13);
    CHECK(z.coeffs() == expect);
    RationalFunction f = reconstruct_rational(z.coeffs(), 2, 2);
    CHECK(f.numerator() == Polynomial{q(1), q(-8), q(4)});
    CHECK(f.denominator() == Polynomial{q(1), q(-5), q(4)});
  }
  SUBCASE("failure carries the first mismatching index") {
    std::vector<Rational> a{1, 1, 1, 1, 2, 1};
    try {
      reconstruct_rational(a, 0, 1);
      FAIL("expected ReconstructionError");
    } catch (const ReconstructionError& e) {
      CHECK(e.mismatch_index() == 4);
    }
  }
  CHECK_THROWS_AS(reconstruct_rational(std::vector<Rational>{1, 1}, 1, 1), PreconditionError);
}

TEST_CASE("reconstruct_rational round trip on random normalized functions") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> deg(0, 4);
  int done = 0;
  while (done < 500) {
    std::vector<Rational> n(static_cast<std::size_t>(deg(rng)) + 1), d(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : n) x = random_rational(rng);
    for (auto& x : d) x = random_rational(rng);
    d[0] = 1;
    if (Polynomial(n).is_zero()) continue;
    RationalFunction f = RationalFunction::make(Polynomial(n), Polynomial(d));
    TruncatedSeries s = f.expand(4 + 4);
    REQUIRE(reconstruct_rational(s.coeffs(), 4, 4) == f);
    ++done;
  }
}

TEST_CASE("matrix characteristic polynomial against determinant evaluation") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> e(-5, 5);
  for (int iter = 0; iter < 50; ++iter) {
    Matrix a(4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = q(e(rng), 1 + (iter % 3));
    Polynomial cp = a.char_poly();
    for (long t = -3; t <= 3; ++t) {
      Matrix m = Matrix::scalar(4, q(t)) - a;
      REQUIRE(cp(q(t)) == m.det());
    }
    Polynomial rcp = a.reverse_char_poly();
    CHECK(rcp.coeff(0) == 1);
    CHECK(rcp(q(1, 2)) == (Matrix::identity(4) - q(1, 2) * a).det());
  }
}
