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

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exact/rational.hpp"

namespace twz {

// Dense univariate polynomial over Q, coefficient i multiplies t^i.
// Trailing zeros are always trimmed, so the zero polynomial has no coefficients
// and degree() == std::nullopt (degree "minus infinity").
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);

  std::optional<std::size_t> degree() const;
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  // Zero past the end.
  const Rational& coeff(std::size_t i) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const;

  Rational operator()(const Rational& t) const;

  Polynomial derivative() const;
  // t^n p(1/t); n must be >= degree.
  Polynomial reversed(std::size_t n) const;
  Polynomial reversed() const;
  Polynomial monic() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  std::string to_string(const char* var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Quotient and remainder; throws PreconditionError on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

// Monic greatest common divisor.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

// p / gcd(p, p'), made monic.
Polynomial squarefree_part(const Polynomial& p);

// Number of distinct real roots in the closed interval [lo, hi].
std::size_t count_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi);

}  // namespace twz
