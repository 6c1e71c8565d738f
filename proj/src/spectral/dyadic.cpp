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

#include "spectral/dyadic.hpp"

#include <algorithm>
#include <limits>

#include "exact/errors.hpp"

namespace twz::spectral {

namespace {

thread_local long t_precision = Dyadic::kDefaultPrecision;

long bits(const Integer& z) { return z == 0 ? 0 : static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2)); }

Integer shl(const Integer& z, long k) {
  Integer r;
  mpz_mul_2exp(r.get_mpz_t(), z.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  return r;
}

Integer shr(const Integer& z, long k, Round r) {
  Integer out;
  if (r == Round::down)
    mpz_fdiv_q_2exp(out.get_mpz_t(), z.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  else
    mpz_cdiv_q_2exp(out.get_mpz_t(), z.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  return out;
}

Integer divide(const Integer& a, const Integer& b, Round r) {
  Integer out;
  if (r == Round::down)
    mpz_fdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  else
    mpz_cdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

long floor_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

long Dyadic::precision() { return t_precision; }

PrecisionScope::PrecisionScope(long bits) : saved_(t_precision) { t_precision = bits; }
PrecisionScope::~PrecisionScope() { t_precision = saved_; }

long Dyadic::top() const {
  if (mant_ == 0) return std::numeric_limits<long>::min();
  return exp_ + bits(mant_) - 1;
}

Dyadic Dyadic::rounded(Round r) const {
  long b = bits(mant_);
  if (b <= precision()) return *this;
  long s = b - precision();
  return Dyadic(shr(mant_, s, r), exp_ + s);
}

Dyadic Dyadic::from_rational(const Rational& q, Round r) {
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (den == 1) return Dyadic(num, 0).rounded(r);
  long k = std::max(0L, precision() + bits(den) - bits(num) + 2);
  return Dyadic(divide(shl(num, k), den, r), -k).rounded(r);
}

Rational Dyadic::to_rational() const {
  if (exp_ >= 0) return Rational(shl(mant_, exp_));
  return make_rational(mant_, shl(Integer(1), -exp_));
}

int cmp(const Dyadic& a, const Dyadic& b) {
  int sa = a.sign(), sb = b.sign();
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  long ta = a.top(), tb = b.top();
  if (ta != tb) return (ta < tb) == (sa > 0) ? -1 : 1;
  long e = std::min(a.exp_, b.exp_);
  Integer ma = shl(a.mant_, a.exp_ - e), mb = shl(b.mant_, b.exp_ - e);
  return ma < mb ? -1 : (ma > mb ? 1 : 0);
}

Dyadic add(const Dyadic& a, const Dyadic& b, Round r) {
  if (a.is_zero()) return b.rounded(r);
  if (b.is_zero()) return a.rounded(r);
  const Dyadic* big = &a;
  Dyadic small = b;
  if (b.top() > a.top()) {
    big = &b;
    small = a;
  }
  const long guard = Dyadic::precision() + 8;
  if (big->top() - small.top() > guard) {
    // The smaller term is below the last kept bit; replace it by a tiny
    // surrogate that keeps the rounding direction honest.
    Dyadic eps(1L, big->top() - guard);
    bool pos = small.sign() > 0;
    if (r == Round::up)
      small = pos ? eps : Dyadic();
    else
      small = pos ? Dyadic() : -eps;
    if (small.is_zero()) return big->rounded(r);
  }
  long e = std::min(big->exp_, small.exp_);
  Integer m = shl(big->mant_, big->exp_ - e) + shl(small.mant_, small.exp_ - e);
  return Dyadic(std::move(m), e).rounded(r);
}

Dyadic mul(const Dyadic& a, const Dyadic& b, Round r) {
  return Dyadic(Integer(a.mant_ * b.mant_), a.exp_ + b.exp_).rounded(r);
}

Dyadic div(const Dyadic& a, const Dyadic& b, Round r) {
  if (b.is_zero()) throw Error(Errc::internal, "dyadic division by zero");
  if (a.is_zero()) return Dyadic();
  long k = std::max(0L, Dyadic::precision() + bits(b.mant_) - bits(a.mant_) + 2);
  Integer q = divide(shl(a.mant_, k), b.mant_, r);
  return Dyadic(std::move(q), a.exp_ - k - b.exp_).rounded(r);
}

Dyadic sqrt(const Dyadic& a, Round r) { return root(a, 2, r); }

Dyadic root(const Dyadic& a, unsigned long k, Round r) {
  if (a.sign() < 0) throw Error(Errc::internal, "root of a negative dyadic");
  if (a.is_zero() || k == 1) return a.rounded(r);
  const long kk = static_cast<long>(k);
  long need = std::max(0L, kk * (Dyadic::precision() + 2) - bits(a.mant_));
  long e = a.exp_ - need;
  long adjust = floor_mod(e, kk);
  need += adjust;
  e -= adjust;
  Integer m = shl(a.mant_, need);
  Integer rt;
  int exact = mpz_root(rt.get_mpz_t(), m.get_mpz_t(), k);
  if (r == Round::up && !exact) rt += 1;
  return Dyadic(std::move(rt), e / kk).rounded(r);
}

Dyadic Interval::abs_lo() const {
  if (contains_zero()) return Dyadic();
  return lo.sign() > 0 ? lo : hi.abs();
}

Dyadic Interval::abs_hi() const {
  Dyadic a = lo.abs(), b = hi.abs();
  return a < b ? b : a;
}

Interval operator+(const Interval& a, const Interval& b) {
  return {add(a.lo, b.lo, Round::down), add(a.hi, b.hi, Round::up)};
}

Interval operator*(const Interval& a, const Interval& b) {
  const Dyadic* xs[2] = {&a.lo, &a.hi};
  const Dyadic* ys[2] = {&b.lo, &b.hi};
  Dyadic lo, hi;
  bool first = true;
  for (auto x : xs)
    for (auto y : ys) {
      Dyadic d = mul(*x, *y, Round::down), u = mul(*x, *y, Round::up);
      if (first) {
        lo = d;
        hi = u;
        first = false;
      } else {
        if (d < lo) lo = d;
        if (hi < u) hi = u;
      }
    }
  return {lo, hi};
}

Interval square(const Interval& a) {
  if (a.lo.sign() >= 0) return {mul(a.lo, a.lo, Round::down), mul(a.hi, a.hi, Round::up)};
  if (a.hi.sign() <= 0) return {mul(a.hi, a.hi, Round::down), mul(a.lo, a.lo, Round::up)};
  Dyadic m = a.abs_hi();
  return {Dyadic(), mul(m, m, Round::up)};
}

}  // namespace twz::spectral
