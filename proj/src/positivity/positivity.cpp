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


#include "positivity/positivity.hpp"

#include <algorithm>
#include <cmath>

#include "exact/errors.hpp"

namespace twz {

namespace {

constexpr unsigned kMaxBell = 12;

void require_zero_constant(const TruncatedSeries& g) {
  if (g[0] != 0) throw PreconditionError("series must have zero constant term");
}

// Natural log of |q|, q != 0, without overflowing doubles.
double log_abs(const Rational& q) {
  auto log_int = [](const Integer& z) {
    long e = 0;
    double m = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
  };
  return log_int(q.get_num()) - log_int(q.get_den());
}

}  // namespace

std::optional<std::size_t> nonneg_check(const TruncatedSeries& g) {
  require_zero_constant(g);
  for (std::size_t n = 1; n <= g.order(); ++n)
    if (g[n] < 0) return n;
  return std::nullopt;
}

Rational BellPolynomial::evaluate(const std::vector<Rational>& x) const {
  if (x.size() < n_) throw PreconditionError("too few values for Bell polynomial evaluation");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term *= rpow(x[i], e[i]);
    sum += term;
  }
  return sum;
}

std::string BellPolynomial::to_string() const {
  // Highest-index variables first: compare reversed exponent vectors.
  std::vector<const std::pair<const Exponents, Integer>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto a, auto b) {
    return std::lexicographical_compare(b->first.rbegin(), b->first.rend(), a->first.rbegin(), a->first.rend());
  });
  std::string s;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    if (!s.empty()) s += " + ";
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (c != 1) s += c.get_str() + (mono.empty() ? "" : "*");
    s += mono.empty() && c == 1 ? "1" : mono;
  }
  return s.empty() ? "0" : s;
}

std::vector<BellPolynomial> bell_polynomials(unsigned n) {
  if (n < 1 || n > kMaxBell) throw PreconditionError("bell_polynomials needs 1 <= n <= 12");
  std::vector<BellPolynomial> out;
  std::map<BellPolynomial::Exponents, Integer> cur{{{1}, Integer(1)}};
  out.emplace_back(1, cur);
  for (unsigned k = 1; k < n; ++k) {
    std::map<BellPolynomial::Exponents, Integer> next;
    for (const auto& [e0, c] : cur) {
      BellPolynomial::Exponents e = e0;
      e.push_back(0);  // room for x_{k+1}
      // x_{i+1} dP/dx_i
      for (std::size_t i = 0; i < k; ++i) {
        if (!e[i]) continue;
        BellPolynomial::Exponents d = e;
        --d[i];
        ++d[i + 1];
        next[d] += c * e[i];
      }
      // x_1 P
      BellPolynomial::Exponents m = e;
      ++m[0];
      next[m] += c;
    }
    cur = std::move(next);
    out.emplace_back(k + 1, cur);
  }
  return out;
}

std::optional<std::size_t> derivative_domination_check(const TruncatedSeries& g) {
  if (nonneg_check(g)) throw PreconditionError("derivative domination needs nonnegative coefficients");
  TruncatedSeries e = series_exp(g);
  for (std::size_t n = 1; n <= g.order(); ++n)
    if (e[n] < g[n]) return n;
  return std::nullopt;
}

RadiusEstimate radius_estimate(const TruncatedSeries& s, std::size_t window) {
  if (window < 4) throw PreconditionError("radius_estimate needs window >= 4");
  if (s.order() < 2 * window) throw PreconditionError("radius_estimate needs order >= 2 * window");
  const std::size_t top = s.order();
  bool any = false;
  for (std::size_t n = top - window + 1; n <= top; ++n) any = any || s[n] != 0;
  if (!any) return {true, 0};

  // Lagged root ratios rho_n = |a_n / a_{n-w}|^(1/w) (a geometric mean of w
  // consecutive ratios). A pole of order c gives log rho_n ~ log b + (c-1)/n,
  // so fit a line in 1/n and take the intercept.
  std::vector<double> xs, ys;
  for (std::size_t n = top - window + 1; n <= top; ++n) {
    if (s[n] == 0 || s[n - window] == 0) continue;
    xs.push_back(1.0 / static_cast<double>(n));
    ys.push_back((log_abs(s[n]) - log_abs(s[n - window])) / static_cast<double>(window));
  }
  double log_rate = 0;
  if (xs.size() >= 3) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxx += (xs[i] - mx) * (xs[i] - mx);
      sxy += (xs[i] - mx) * (ys[i] - my);
    }
    log_rate = my - (sxx > 0 ? sxy / sxx : 0) * mx;
  } else if (!xs.empty()) {
    for (double y : ys) log_rate += y;
    log_rate /= static_cast<double>(ys.size());
  } else {
    // No usable ratios: fall back to |a_n|^(1/n).
    std::size_t used = 0;
    for (std::size_t n = top - window + 1; n <= top; ++n) {
      if (s[n] == 0) continue;
      log_rate += log_abs(s[n]) / static_cast<double>(n);
      ++used;
    }
    log_rate /= static_cast<double>(used);
  }
  return {false, std::exp(-log_rate)};
}

}  // namespace twz
