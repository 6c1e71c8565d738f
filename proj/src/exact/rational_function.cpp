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

#include "exact/rational_function.hpp"

#include <vector>

#include "exact/errors.hpp"

namespace twz {

RationalFunction::RationalFunction() : num_(Polynomial::constant(1)), den_(Polynomial::constant(1)) {}

RationalFunction RationalFunction::make(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw PreconditionError("rational function with zero denominator");
  if (num.is_zero()) return RationalFunction(Polynomial{}, Polynomial::constant(1));
  Polynomial g = poly_gcd(num, den);
  Polynomial n = divmod(num, g).first;
  Polynomial d = divmod(den, g).first;
  if (d.coeff(0) == 0) throw PreconditionError("rational function has a pole at t = 0");
  Rational s = 1 / d.coeff(0);
  return RationalFunction(s * n, s * d);
}

TruncatedSeries RationalFunction::expand(std::size_t order) const {
  // den(0) = 1, so s_n = num_n - sum_{j>=1} den_j s_{n-j}.
  std::vector<Rational> s(order + 1);
  const auto& dc = den_.coeffs();
  for (std::size_t n = 0; n <= order; ++n) {
    Rational acc = num_.coeff(n);
    for (std::size_t j = 1; j < dc.size() && j <= n; ++j) acc -= dc[j] * s[n - j];
    s[n] = acc;
  }
  return TruncatedSeries(std::move(s));
}

std::string RationalFunction::to_string() const {
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

namespace {

// Incremental exact elimination for the denominator coefficients q_1..q_d of
// Q = 1 + q_1 t + ... + q_d t^d. Each coefficient index n > max_num_deg adds
// the row  sum_{j=1..d} a_{n-j} q_j = -a_n.
class RecurrenceSolver {
 public:
  explicit RecurrenceSolver(std::size_t unknowns) : d_(unknowns) {}

  // Returns false when the new row is inconsistent with the previous ones.
  bool add_row(std::vector<Rational> row, Rational rhs) {
    for (const auto& p : pivots_) {
      const Rational& f = row[p.col];
      if (f == 0) continue;
      Rational m = f;  // pivot rows are scaled to 1 at their pivot column
      for (std::size_t c = 0; c < d_; ++c)
        if (p.row[c] != 0) row[c] -= m * p.row[c];
      rhs -= m * p.rhs;
    }
    std::size_t col = d_;
    for (std::size_t c = 0; c < d_; ++c)
      if (row[c] != 0) {
        col = c;
        break;
      }
    if (col == d_) return rhs == 0;
    Rational inv = 1 / row[col];
    for (auto& x : row) x *= inv;
    rhs *= inv;
    pivots_.push_back({col, std::move(row), std::move(rhs)});
    return true;
  }

  // Free unknowns are set to zero.
  std::vector<Rational> solve() const {
    std::vector<Rational> x(d_);
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      Rational v = it->rhs;
      for (std::size_t c = 0; c < d_; ++c)
        if (c != it->col && it->row[c] != 0) v -= it->row[c] * x[c];
      x[it->col] = v;
    }
    return x;
  }

 private:
  struct Pivot {
    std::size_t col;
    std::vector<Rational> row;
    Rational rhs;
  };
  std::size_t d_;
  std::vector<Pivot> pivots_;
};

}  // namespace

RationalFunction reconstruct_rational(std::span<const Rational> a, std::size_t max_num_deg,
                                      std::size_t max_den_deg) {
  if (a.size() < max_num_deg + max_den_deg + 1)
    throw PreconditionError("reconstruct_rational: need at least max_num_deg + max_den_deg + 1 coefficients");
  const std::size_t d = max_den_deg;
  auto at = [&](std::ptrdiff_t i) -> Rational { return i < 0 ? Rational(0) : a[static_cast<std::size_t>(i)]; };

  RecurrenceSolver solver(d);
  for (std::size_t n = max_num_deg + 1; n < a.size(); ++n) {
    std::vector<Rational> row(d);
    for (std::size_t j = 1; j <= d; ++j) row[j - 1] = at(static_cast<std::ptrdiff_t>(n) - static_cast<std::ptrdiff_t>(j));
    if (!solver.add_row(std::move(row), -a[n]))
      throw ReconstructionError(n, "no rational function with numerator degree <= " + std::to_string(max_num_deg) +
                                       " and denominator degree <= " + std::to_string(max_den_deg) +
                                       " matches coefficient " + std::to_string(n));
  }
  std::vector<Rational> q = solver.solve();
  std::vector<Rational> den(d + 1);
  den[0] = 1;
  for (std::size_t j = 1; j <= d; ++j) den[j] = q[j - 1];

  std::vector<Rational> num(max_num_deg + 1);
  for (std::size_t n = 0; n <= max_num_deg; ++n) {
    Rational acc = a[n];
    for (std::size_t j = 1; j <= d && j <= n; ++j) acc += den[j] * a[n - j];
    num[n] = acc;
  }
  return RationalFunction::make(Polynomial(std::move(num)), Polynomial(std::move(den)));
}

}  // namespace twz
