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

#include "spectral/root_modulus.hpp"

#include <functional>
#include <string>
#include <vector>

#include "exact/errors.hpp"
#include "spectral/dyadic.hpp"

namespace twz {

using spectral::Dyadic;
using spectral::Interval;
using spectral::Round;

namespace {

// Coefficients a_0..a_n of a_0 t^n + a_1 t^(n-1) + ... + a_n.
using Coeffs = std::vector<Interval>;

// One root-squaring step: the result has roots r_i^2.
//   b_k = (-1)^k [a_k^2 + 2 sum_{j>=1} (-1)^j a_{k-j} a_{k+j}]
Coeffs graeffe_step(const Coeffs& a) {
  const std::size_t n = a.size() - 1;
  Coeffs b(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Interval acc = square(a[k]);
    for (std::size_t j = 1; j <= k && k + j <= n; ++j) {
      Interval t = a[k - j] * a[k + j];
      t = {t.lo.times_pow2(1), t.hi.times_pow2(1)};
      acc = acc + (j % 2 ? -t : t);
    }
    b[k] = k % 2 ? -acc : acc;
  }
  return b;
}

struct Bounds {
  Dyadic lo, hi;
};

// Bounds on rho = max|root| from coefficient magnitudes:
//   max_k (|a_k| / (C(n,k)|a_0|))^(1/k) <= rho <= 2 max_k (|a_k|/|a_0|)^(1/k)
Bounds coefficient_bounds(const Coeffs& a) {
  const std::size_t n = a.size() - 1;
  Dyadic lead_lo = a[0].abs_lo(), lead_hi = a[0].abs_hi();
  if (lead_lo.is_zero()) throw Error(Errc::precision, "leading coefficient enclosure contains zero");
  Dyadic lo, hi;
  for (std::size_t k = 1; k <= n; ++k) {
    Dyadic u = spectral::root(div(a[k].abs_hi(), lead_lo, Round::up), k, Round::up);
    if (hi < u) hi = u;
    Dyadic x = a[k].abs_lo();
    if (x.is_zero()) continue;
    Dyadic binom(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)), 0);
    Dyadic l = spectral::root(div(div(x, lead_hi, Round::down), binom, Round::down), k, Round::down);
    if (lo < l) lo = l;
  }
  return {lo, hi.times_pow2(1)};
}

// sum_{k >= first} |a_k| y^(k - shift), rounded up; y = 1/x.
Dyadic tail(const Coeffs& a, std::size_t first, std::size_t shift, const Dyadic& y) {
  Dyadic acc, pw(1L);
  for (std::size_t k = shift; k < first; ++k) pw = mul(pw, y, Round::up);
  for (std::size_t k = first; k < a.size(); ++k) {
    acc = add(acc, mul(a[k].abs_hi(), pw, Round::up), Round::up);
    pw = mul(pw, y, Round::up);
  }
  return acc;
}

// Rouche on |w| = x against the term a_1 w^(n-1): if
//   |a_1| > |a_0| x + sum_{k>=2} |a_k| x^(1-k)
// exactly one root lies outside the disc, so max|root| > x. Likewise
//   |a_0| >= sum_{k>=1} |a_k| x^(-k)
// puts every root in the closed disc. Both only bite when one root dominates,
// and then they converge far faster than the coefficient bounds.
Bounds dominant_root_bounds(const Coeffs& a) {
  Bounds out;  // zeros mean "no information"
  Dyadic a0 = a[0].abs_lo(), a1 = a[1].abs_lo();
  if (a0.is_zero() || a1.is_zero()) return out;

  // Candidates x_j = u (1 - 2^-j). The right-hand side is convex in x, so the
  // passing j form a range starting at 1 and the tightest one can be bisected.
  Dyadic u = div(a1, a[0].abs_hi(), Round::down);
  auto lower_ok = [&](long j, Dyadic& x) {
    x = add(u, -u.times_pow2(-j), Round::down);
    if (x.sign() <= 0) return false;
    Dyadic y = div(Dyadic(1L), x, Round::up);
    return add(mul(a[0].abs_hi(), x, Round::up), tail(a, 2, 1, y), Round::up) < a1;
  };
  const long finest = Dyadic::precision() - 16;
  Dyadic x;
  if (lower_ok(1, x)) {
    long good = 1, bad = finest + 1;
    out.lo = x;
    while (bad - good > 1) {
      long mid = (good + bad) / 2;
      if (lower_ok(mid, x)) {
        good = mid;
        out.lo = x;
      } else {
        bad = mid;
      }
    }
  }

  // Candidates v (1 + 2^-j); passing is monotone in x.
  Dyadic v = div(a[1].abs_hi(), a0, Round::up);
  auto upper_ok = [&](long j, Dyadic& x) {
    x = add(v, v.times_pow2(-j), Round::up);
    return tail(a, 1, 0, div(Dyadic(1L), x, Round::up)) <= a0;
  };
  if (upper_ok(0, x)) {
    long good = 0, bad = finest + 1;
    out.hi = x;
    while (bad - good > 1) {
      long mid = (good + bad) / 2;
      if (upper_ok(mid, x)) {
        good = mid;
        out.hi = x;
      } else {
        bad = mid;
      }
    }
  }
  return out;
}

Dyadic nth_sqrt(Dyadic x, int times, Round r) {
  for (int i = 0; i < times; ++i) x = spectral::sqrt(x, r);
  return x;
}

// Strips roots at zero; returns the reduced polynomial and whether any
// nonzero root remains.
Polynomial strip_zero_roots(const Polynomial& p) {
  const auto& c = p.coeffs();
  std::size_t z = 0;
  while (z < c.size() && c[z] == 0) ++z;
  return Polynomial(std::vector<Rational>(c.begin() + static_cast<std::ptrdiff_t>(z), c.end()));
}

// Squarings before the dominant-root test is worth its cost.
constexpr int kDominantFrom = 6;

using Accept = std::function<bool(const ModulusInterval&)>;

ModulusInterval enclose_max(const Polynomial& input, const Accept& accept) {
  if (input.is_zero() || input.is_constant()) throw Error(Errc::no_roots, "polynomial of degree < 1 has no roots");
  Polynomial p = strip_zero_roots(input);
  const std::size_t n = *p.degree();
  if (n == 0) return {0, 0};
  if (n == 1) {
    Rational r = abs(p.coeff(0) / p.coeff(1));
    return {r, r};
  }

  // Cancellation between same-modulus roots widens the coefficient intervals
  // by roughly a factor 2^n per squaring, so retry with more mantissa bits
  // when the enclosure stalls. Enclosures from every pass are certified and
  // are intersected.
  ModulusInterval best;
  bool have = false;
  for (long bits : {256L, 1024L, 4096L}) {
    spectral::PrecisionScope scope(bits);
    Coeffs a(n + 1);
    for (std::size_t k = 0; k <= n; ++k) a[k] = Interval::point(p.coeff(n - k));
    for (int m = 0; m <= kMaxGraeffeSquarings; ++m) {
      if (a[0].contains_zero()) break;
      Bounds b = coefficient_bounds(a);
      if (m >= kDominantFrom) {
        Bounds d = dominant_root_bounds(a);
        if (b.lo < d.lo) b.lo = d.lo;
        if (!d.hi.is_zero() && d.hi < b.hi) b.hi = d.hi;
      }
      Rational lo = nth_sqrt(b.lo, m, Round::down).to_rational();
      Rational hi = nth_sqrt(b.hi, m, Round::up).to_rational();
      if (!have) {
        best = {lo, hi};
        have = true;
      } else {
        if (lo > best.lo) best.lo = lo;
        if (hi < best.hi) best.hi = hi;
      }
      if (accept(best)) return best;
      if (m < kMaxGraeffeSquarings) a = graeffe_step(a);
    }
  }
  throw Error(Errc::precision, "root modulus enclosure [" + std::to_string(best.lo.get_d()) + ", " +
                                   std::to_string(best.hi.get_d()) + "] did not reach the requested width after " +
                                   std::to_string(kMaxGraeffeSquarings) + " squarings");
}

}  // namespace

ModulusInterval max_root_modulus(const Polynomial& p, const Rational& tol) {
  if (tol <= 0) throw PreconditionError("tolerance must be positive");
  return enclose_max(p, [&](const ModulusInterval& m) { return m.width() <= tol; });
}

ModulusInterval min_root_modulus(const Polynomial& p, const Rational& tol) {
  if (tol <= 0) throw PreconditionError("tolerance must be positive");
  if (p.is_zero() || p.is_constant()) throw Error(Errc::no_roots, "polynomial of degree < 1 has no roots");
  if (p.coeff(0) == 0) throw Error(Errc::zero_root, "polynomial has a root at zero");
  // Roots of the reversal are the reciprocals; lo > 0 since p(0) != 0.
  auto reciprocal = [](const ModulusInterval& m) -> ModulusInterval {
    return {1 / m.hi, m.lo > 0 ? Rational(1 / m.lo) : Rational(0)};
  };
  ModulusInterval rev = enclose_max(p.reversed(), [&](const ModulusInterval& m) {
    return m.lo > 0 && reciprocal(m).width() <= tol;
  });
  return reciprocal(rev);
}

ModulusInterval sqrt_enclosure(const Rational& x, const Rational& tol) {
  if (x < 0) throw PreconditionError("sqrt of a negative number");
  Dyadic lo = spectral::sqrt(Dyadic::from_rational(x, Round::down), Round::down);
  Dyadic hi = spectral::sqrt(Dyadic::from_rational(x, Round::up), Round::up);
  ModulusInterval r{lo.to_rational(), hi.to_rational()};
  if (r.width() > tol) throw Error(Errc::precision, "sqrt enclosure wider than tolerance");
  return r;
}

}  // namespace twz
