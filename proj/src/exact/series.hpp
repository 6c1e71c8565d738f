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
#include <vector>

#include "exact/polynomial.hpp"
#include "exact/rational.hpp"

namespace twz {

// Formal power series known modulo t^(order+1). Binary operations between
// series of different orders truncate to the smaller order.
class TruncatedSeries {
 public:
  // coeffs must be non-empty; order = coeffs.size() - 1.
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries zero(std::size_t order);
  static TruncatedSeries one(std::size_t order);
  static TruncatedSeries from_polynomial(const Polynomial& p, std::size_t order);

  std::size_t order() const { return c_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return c_.at(i); }
  const std::vector<Rational>& coeffs() const { return c_; }

  TruncatedSeries truncated(std::size_t order) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<Rational> c_;
};

// exp(G) via e_n = (1/n) sum_{k=1..n} k g_k e_{n-k}. Requires g_0 == 0.
TruncatedSeries series_exp(const TruncatedSeries& g);

// Inverse of series_exp. Requires s_0 == 1.
TruncatedSeries series_log(const TruncatedSeries& s);

// Formal derivative; the result has order one less. Requires order >= 1.
TruncatedSeries series_derivative(const TruncatedSeries& g);

}  // namespace twz
