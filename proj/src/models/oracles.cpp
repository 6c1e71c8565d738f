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


#include "models/oracles.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "exact/errors.hpp"
#include "models/finite_field.hpp"

namespace twz {

namespace {

IntMatrix twist_matrix(const TorusModel& t, unsigned n) {
  Integer qn = ipow(t.q, n);
  IntMatrix a(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) a(i, j) = qn * t.m(i, j) - (i == j ? 1 : 0);
  return a;
}

// Least s >= 1 with q^s = 1 mod e, or 0 if none up to limit.
unsigned multiplicative_order(const Integer& q, const Integer& e, unsigned limit) {
  if (e == 1) return 1;
  Integer x = q % e;
  Integer acc = x;
  for (unsigned s = 1; s <= limit; ++s) {
    if (acc == 1) return s;
    acc = (acc * x) % e;
  }
  return 0;
}

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw PreconditionError("exponent too large for enumeration");
  return z.get_si();
}

}  // namespace

Integer torus_fixed_count_formula(const TorusModel& t, unsigned n) {
  if (n == 0) throw PreconditionError("twist n must be >= 1");
  validate(t);
  Integer d = twist_matrix(t, n).det();
  if (d == 0) throw Error(Errc::non_isolated_fixed_points, "det(q^n M - I) = 0");
  return abs(d);
}

Integer smith_exponent(const IntMatrix& a) {
  if (a.size() != 2) throw Error(Errc::unsupported_rank, "smith_exponent is implemented for 2x2 matrices");
  Integer g = 0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a(i, j).get_mpz_t());
  Integer d = abs(a.det());
  if (d == 0) throw Error(Errc::non_isolated_fixed_points, "lattice quotient is infinite");
  return d / g;
}

Integer torus_fixed_count_bruteforce(const TorusModel& t, unsigned n, unsigned ext_bound) {
  if (n == 0) throw PreconditionError("twist n must be >= 1");
  validate(t);
  Integer p;
  unsigned k = 0;
  prime_power(t.q, p, k);
  IntMatrix a = twist_matrix(t, n);
  Integer e = smith_exponent(a);
  unsigned s = multiplicative_order(t.q, e, ext_bound);
  if (s == 0)
    throw Error(Errc::insufficient_extension, "solutions need F_{q^s} with s > " + std::to_string(ext_bound) +
                                                  " (solution group exponent " + e.get_str() + ")");
  if (ipow(t.q, s) > FiniteField::kMaxSize)
    throw PreconditionError("F_{q^" + std::to_string(s) + "} is too large to enumerate");
  FiniteField f(static_cast<std::uint32_t>(p.get_ui()), k * s);

  // mu_e = <g^((N-1)/e)>
  const std::uint64_t order = f.size() - 1;
  const std::uint64_t ee = e.get_ui();
  const std::uint64_t step = order / ee;
  std::vector<FiniteField::Elem> mu(ee);
  for (std::uint64_t i = 0; i < ee; ++i) mu[i] = f.exp(i * step);

  const long a11 = to_long(a(0, 0)), a12 = to_long(a(0, 1)), a21 = to_long(a(1, 0)), a22 = to_long(a(1, 1));
  // Powers of each candidate, computed once.
  std::vector<FiniteField::Elem> x11(ee), x21(ee), y12(ee), y22(ee);
  for (std::uint64_t i = 0; i < ee; ++i) {
    x11[i] = f.pow(mu[i], a11);
    x21[i] = f.pow(mu[i], a21);
    y12[i] = f.pow(mu[i], a12);
    y22[i] = f.pow(mu[i], a22);
  }
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < ee; ++i)
    for (std::uint64_t j = 0; j < ee; ++j)
      if (f.mul(x11[i], y12[j]) == f.one() && f.mul(x21[i], y22[j]) == f.one()) ++count;
  return Integer(static_cast<unsigned long>(count));
}

Integer elliptic_point_count_bruteforce(unsigned q, long a4, long a6, unsigned n) {
  if (q % 2 == 0) throw PreconditionError("q must be odd");
  if (n == 0) throw PreconditionError("extension degree must be >= 1");
  Integer size = ipow(Integer(q), n);
  if (size > 1000000) throw PreconditionError("q^n exceeds 10^6");
  Integer disc = 4 * ipow(Integer(a4), 3) + 27 * Integer(a6) * Integer(a6);
  if (disc % q == 0) throw PreconditionError("curve is singular mod q");
  FiniteField f(q, n);  // also rejects non-prime q
  const FiniteField::Elem c4 = f.from_int(a4), c6 = f.from_int(a6);
  std::uint64_t count = 1;
  for (FiniteField::Elem x = 0; x < f.size(); ++x) {
    FiniteField::Elem r = f.add(f.add(f.mul(f.mul(x, x), x), f.mul(c4, x)), c6);
    if (r == 0)
      count += 1;
    else if (f.log(r) % 2 == 0)
      count += 2;
  }
  return Integer(static_cast<unsigned long>(count));
}

Integer abelian_fixed_count(const AbelianProductModel& a, unsigned m) {
  validate(a);
  Matrix bf = kronecker(a.m.to_rational().transpose(), Matrix::identity(2));
  Matrix bF = kronecker(Matrix::identity(a.g), frobenius_companion(a.frob_trace, a.q)).pow(m);
  Rational d = (Matrix::identity(2 * a.g) - bf * bF).det();
  return d.get_num();
}

}  // namespace twz
