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

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "doctest.h"
#include "exact/errors.hpp"
#include "spectral/root_modulus.hpp"

using namespace twz;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }
const Rational kTol = q(1, 1000000000);

double to_double(const Rational& r) { return r.get_d(); }

// Low-precision oracle: eigenvalues of the companion matrix in double.
double companion_max_modulus(const Polynomial& p) {
  const std::size_t n = *p.degree();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  const double lead = to_double(p.leading());
  for (std::size_t i = 1; i < n; ++i) c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) = -to_double(p.coeff(i)) / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("max_root_modulus examples") {
  CHECK(max_root_modulus(Polynomial{q(-5), q(1)}, kTol) == ModulusInterval{q(5), q(5)});

  ModulusInterval m = max_root_modulus(Polynomial{q(1), q(-4), q(1)}, kTol);
  CHECK(m.width() <= kTol);
  // 2 + sqrt(3) is the unique x > 0 with x^2 - 4x + 1 = 0 and x > 2; bracket exactly.
  auto f = [](const Rational& x) -> Rational { return x * x - 4 * x + 1; };
  CHECK(f(m.lo) <= 0);
  CHECK(f(m.hi) >= 0);
  CHECK(m.lo > 2);

  ModulusInterval i = max_root_modulus(Polynomial{q(1), q(0), q(1)}, kTol);
  CHECK(i.contains(q(1)));
  CHECK(i.width() <= kTol);

  CHECK_THROWS_AS(max_root_modulus(Polynomial::constant(3), kTol), Error);
  try {
    max_root_modulus(Polynomial::constant(3), kTol);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_roots);
  }
}

TEST_CASE("min_root_modulus examples") {
  CHECK(min_root_modulus(Polynomial{q(1), q(-2)}, kTol) == ModulusInterval{q(1, 2), q(1, 2)});

  ModulusInterval m = min_root_modulus(Polynomial{q(1), q(-8), q(4)}, kTol);
  CHECK(m.width() <= kTol);
  // root r of 4r^2 - 8r + 1 with r < 1/2
  auto f = [](const Rational& r) -> Rational { return 4 * r * r - 8 * r + 1; };
  CHECK(f(m.lo) >= 0);
  CHECK(f(m.hi) <= 0);
  CHECK(std::abs(to_double(m.lo) - 0.1339746) < 1e-7);

  ModulusInterval d = min_root_modulus(Polynomial{q(1), q(-5), q(4)}, kTol);
  CHECK(d.contains(q(1, 4)));

  try {
    min_root_modulus(Polynomial{q(0), q(1)}, kTol);
    FAIL("expected zero-root error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::zero_root);
  }
}

TEST_CASE("roots at zero are stripped and repeated roots converge") {
  ModulusInterval m = max_root_modulus(Polynomial{q(0), q(0), q(-3), q(1)}, kTol);
  CHECK(m == ModulusInterval{q(3), q(3)});
  // (t - 2)^4
  Polynomial p{q(16), q(-32), q(24), q(-8), q(1)};
  ModulusInterval r = max_root_modulus(p, kTol);
  CHECK(r.contains(q(2)));
  CHECK(r.width() <= kTol);
}

TEST_CASE("a simple dominant root is enclosed far below the squaring budget") {
  const Rational tiny("1/1000000000000000000000000000000");  // 1e-30
  ModulusInterval m = max_root_modulus(Polynomial{q(1), q(-4), q(1)}, tiny);
  CHECK(m.width() <= tiny);
  auto f = [](const Rational& x) -> Rational { return x * x - 4 * x + 1; };
  CHECK(f(m.lo) <= 0);
  CHECK(f(m.hi) >= 0);

  // Dominant complex pair 3 +- 4i (modulus 5) next to a root at 1.
  Polynomial c = Polynomial{q(25), q(-6), q(1)} * Polynomial{q(-1), q(1)};
  ModulusInterval r = max_root_modulus(c, kTol);
  CHECK(r.contains(q(5)));

  // Equal-modulus clusters: the root-dominance test must never pass wrongly.
  // (t^2 + 4)(t - 2)(t + 2): four roots of modulus 2.
  Polynomial k = Polynomial{q(4), q(0), q(1)} * Polynomial{q(-4), q(0), q(1)};
  ModulusInterval e = max_root_modulus(k, kTol);
  CHECK(e.contains(q(2)));
  CHECK(e.width() <= kTol);
  // (t - 3)(t + 3)(t - 1)
  Polynomial h = Polynomial{q(-9), q(0), q(1)} * Polynomial{q(-1), q(1)};
  CHECK(max_root_modulus(h, kTol).contains(q(3)));
  CHECK(min_root_modulus(h, kTol).contains(q(1)));
}

TEST_CASE("enclosure soundness against a companion-matrix oracle") {
  std::mt19937_64 rng(314159);
  std::uniform_int_distribution<int> deg(1, 6);
  std::uniform_int_distribution<long> coef(-9, 9);
  int done = 0;
  while (done < 300) {
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    if (c.front() == 0 || c.back() == 0) continue;
    Polynomial p(c);
    ModulusInterval m = max_root_modulus(p, kTol);
    REQUIRE(m.width() <= kTol);
    double oracle = companion_max_modulus(p);
    double slack = 1e-6 * (1.0 + oracle);
    CAPTURE(p.to_string());
    REQUIRE(to_double(m.lo) - slack <= oracle);
    REQUIRE(oracle <= to_double(m.hi) + slack);
    ++done;
  }
}

TEST_CASE("reversal duality") {
  std::mt19937_64 rng(271828);
  std::uniform_int_distribution<int> deg(1, 6);
  std::uniform_int_distribution<long> coef(-9, 9);
  int done = 0;
  while (done < 100) {
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    if (c.front() == 0 || c.back() == 0) continue;
    Polynomial p(c);
    ModulusInterval a = min_root_modulus(p, kTol);
    ModulusInterval b = max_root_modulus(p.reversed(), kTol);
    REQUIRE(a.lo * b.lo <= 1);
    REQUIRE(1 <= a.hi * b.hi);
    ++done;
  }
}

TEST_CASE("sqrt enclosure") {
  ModulusInterval s = sqrt_enclosure(q(3), kTol);
  CHECK(s.lo * s.lo <= 3);
  CHECK(s.hi * s.hi >= 3);
  CHECK(sqrt_enclosure(q(9, 4), kTol).contains(q(3, 2)));
}
