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

#pragma once

#include "exact/rational.hpp"

namespace twz::spectral {

enum class Round { down, up };

// mant * 2^exp with a bounded mantissa. Every operation takes an explicit
// rounding direction, so results are exact rationals that bound the true value
// from below (down) or above (up). The separate exponent absorbs the growth of
// repeated squaring without touching the mantissa.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long mant, long exp = 0) : mant_(mant), exp_(exp) {}
  Dyadic(Integer mant, long exp) : mant_(std::move(mant)), exp_(exp) {}

  static Dyadic from_rational(const Rational& q, Round r);

  int sign() const { return sgn(mant_); }
  bool is_zero() const { return mant_ == 0; }
  Dyadic abs() const { return Dyadic(Integer(::abs(mant_)), exp_); }
  Dyadic operator-() const { return Dyadic(Integer(-mant_), exp_); }
  Dyadic times_pow2(long k) const { return Dyadic(mant_, exp_ + k); }

  // Exact conversion; only sensible for moderate exponents.
  Rational to_rational() const;

  friend int cmp(const Dyadic& a, const Dyadic& b);
  friend bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0; }
  friend bool operator==(const Dyadic& a, const Dyadic& b) { return cmp(a, b) == 0; }

  friend Dyadic add(const Dyadic& a, const Dyadic& b, Round r);
  friend Dyadic mul(const Dyadic& a, const Dyadic& b, Round r);
  friend Dyadic div(const Dyadic& a, const Dyadic& b, Round r);
  // a >= 0.
  friend Dyadic sqrt(const Dyadic& a, Round r);
  friend Dyadic root(const Dyadic& a, unsigned long k, Round r);

  // Mantissa bits kept by rounding; thread-local, see PrecisionScope.
  static long precision();
  static constexpr long kDefaultPrecision = 256;

 private:
  long top() const;  // index of the highest set bit, relative to 2^0
  Dyadic rounded(Round r) const;

  Integer mant_ = 0;
  long exp_ = 0;
};

int cmp(const Dyadic& a, const Dyadic& b);
Dyadic add(const Dyadic& a, const Dyadic& b, Round r);
Dyadic mul(const Dyadic& a, const Dyadic& b, Round r);
Dyadic div(const Dyadic& a, const Dyadic& b, Round r);
Dyadic sqrt(const Dyadic& a, Round r);
Dyadic root(const Dyadic& a, unsigned long k, Round r);

// Sets the mantissa precision of the calling thread for its lifetime.
class PrecisionScope {
 public:
  explicit PrecisionScope(long bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  long saved_;
};

// Closed interval with dyadic endpoints.
struct Interval {
  Dyadic lo, hi;

  static Interval point(const Rational& q) {
    return {Dyadic::from_rational(q, Round::down), Dyadic::from_rational(q, Round::up)};
  }
  Interval operator-() const { return {-hi, -lo}; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  // Bounds on |x| over the interval.
  Dyadic abs_lo() const;
  Dyadic abs_hi() const;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval square(const Interval& a);

}  // namespace twz::spectral
