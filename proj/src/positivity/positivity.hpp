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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exact/rational.hpp"
#include "exact/series.hpp"

namespace twz {

// Least index with a negative coefficient, or nullopt when all are >= 0.
// Requires a zero constant term.
std::optional<std::size_t> nonneg_check(const TruncatedSeries& g);

// Polynomial in x_1..x_n with positive integer coefficients, keyed by the
// exponent vector (e_1, ..., e_n).
class BellPolynomial {
 public:
  using Exponents = std::vector<unsigned>;

  BellPolynomial() = default;
  BellPolynomial(unsigned n, std::map<Exponents, Integer> terms) : n_(n), terms_(std::move(terms)) {}

  unsigned variables() const { return n_; }
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  Rational evaluate(const std::vector<Rational>& x) const;
  // e.g. "x3 + 3*x1*x2 + x1^3", highest-index variables first.
  std::string to_string() const;

 private:
  unsigned n_ = 0;
  std::map<Exponents, Integer> terms_;
};

// P_1 = x_1, P_{k+1} = sum_i x_{i+1} dP_k/dx_i + x_1 P_k; 1 <= n <= 12.
std::vector<BellPolynomial> bell_polynomials(unsigned n);

// First n with coeff_n(exp G) < coeff_n(G), or nullopt. Requires a zero
// constant term and nonnegative coefficients.
std::optional<std::size_t> derivative_domination_check(const TruncatedSeries& g);

struct RadiusEstimate {
  bool unbounded = false;
  double radius = 0;
};

// Reciprocal of the growth rate limsup |a_n|^(1/n), estimated from the lagged
// ratios |a_n / a_{n-w}|^(1/w) over the last w = window coefficients,
// extrapolated linearly in 1/n. Requires window >= 4 and order >= 2 window.
RadiusEstimate radius_estimate(const TruncatedSeries& s, std::size_t window);

}  // namespace twz
