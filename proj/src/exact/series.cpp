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

#include "exact/series.hpp"

#include <algorithm>

#include "exact/errors.hpp"

namespace twz {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw PreconditionError("truncated series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) {
  return TruncatedSeries(std::vector<Rational>(order + 1));
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  std::vector<Rational> v(order + 1);
  v[0] = 1;
  return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, std::size_t order) {
  std::vector<Rational> v(order + 1);
  for (std::size_t i = 0; i <= order; ++i) v[i] = p.coeff(i);
  return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  std::vector<Rational> v(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
  return TruncatedSeries(std::move(v));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) v[i] = a.c_[i] + b.c_[i];
  return TruncatedSeries(std::move(v));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) v[i] = a.c_[i] - b.c_[i];
  return TruncatedSeries(std::move(v));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return TruncatedSeries(std::move(v));
}

TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a) {
  std::vector<Rational> v(a.c_);
  for (auto& x : v) x *= s;
  return TruncatedSeries(std::move(v));
}

TruncatedSeries series_exp(const TruncatedSeries& g) {
  if (g[0] != 0) throw PreconditionError("series_exp: constant term must be 0");
  const std::size_t n = g.order();
  std::vector<Rational> e(n + 1);
  e[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= m; ++k) {
      if (g[k] == 0) continue;
      acc += static_cast<unsigned long>(k) * g[k] * e[m - k];
    }
    e[m] = acc / static_cast<unsigned long>(m);
  }
  return TruncatedSeries(std::move(e));
}

TruncatedSeries series_log(const TruncatedSeries& s) {
  if (s[0] != 1) throw PreconditionError("series_log: constant term must be 1");
  const std::size_t n = s.order();
  // n s_n = sum_{k=1..n} k l_k s_{n-k}
  std::vector<Rational> l(n + 1);
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc = static_cast<unsigned long>(m) * s[m];
    for (std::size_t k = 1; k < m; ++k) {
      if (l[k] == 0) continue;
      acc -= static_cast<unsigned long>(k) * l[k] * s[m - k];
    }
    l[m] = acc / static_cast<unsigned long>(m);
  }
  return TruncatedSeries(std::move(l));
}

TruncatedSeries series_derivative(const TruncatedSeries& g) {
  if (g.order() == 0) throw PreconditionError("series_derivative: order must be at least 1");
  std::vector<Rational> d(g.order());
  for (std::size_t i = 1; i <= g.order(); ++i) d[i - 1] = static_cast<unsigned long>(i) * g[i];
  return TruncatedSeries(std::move(d));
}

}  // namespace twz
