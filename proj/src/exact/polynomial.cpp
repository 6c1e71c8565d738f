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

#include "exact/polynomial.hpp"

#include <algorithm>

#include "exact/errors.hpp"

namespace twz {

namespace {
const Rational kZero(0);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const {
  if (c_.empty()) return std::nullopt;
  return c_.size() - 1;
}

const Rational& Polynomial::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : kZero; }

const Rational& Polynomial::leading() const {
  if (c_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
  return c_.back();
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::reversed(std::size_t n) const {
  if (!c_.empty() && c_.size() - 1 > n) throw PreconditionError("reversal length below degree");
  std::vector<Rational> r(n + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) r[n - i] = c_[i];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::reversed() const { return c_.empty() ? Polynomial{} : reversed(c_.size() - 1); }

Polynomial Polynomial::monic() const {
  if (c_.empty()) return {};
  Rational inv = 1 / c_.back();
  return inv * *this;
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> r(c_);
  for (auto& x : r) x = -x;
  return Polynomial(std::move(r));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
  return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(r));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> r(p.c_);
  for (auto& x : r) x *= s;
  return Polynomial(std::move(r));
}

std::string Polynomial::to_string(const char* var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    std::string term = c_[i].get_str();
    if (i >= 1) term += std::string("*") + var;
    if (i >= 2) term += "^" + std::to_string(i);
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  std::vector<Rational> rem(a.coeffs());
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (rem.size() < bc.size()) return {Polynomial{}, a};
  std::vector<Rational> quo(rem.size() - db);
  const Rational inv = 1 / bc.back();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] * inv;
    quo[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * bc[j];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw PreconditionError("gcd of two zero polynomials");
  Polynomial a = p.monic(), b = q.monic();
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_constant()) return p.monic();
  return divmod(p, poly_gcd(p, p.derivative())).first.monic();
}

namespace {

int sign_of(const Rational& r) { return sgn(r); }

std::size_t sign_changes(const std::vector<Polynomial>& chain, const Rational& x) {
  std::size_t changes = 0;
  int prev = 0;
  for (const auto& p : chain) {
    int s = sign_of(p(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

std::size_t count_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw PreconditionError("root count of the zero polynomial");
  if (hi < lo || p.is_constant()) return 0;
  Polynomial s = squarefree_part(p);
  std::vector<Polynomial> chain{s, s.derivative()};
  while (!chain.back().is_zero() && !chain.back().is_constant()) {
    Polynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  // Sturm counts distinct roots in (lo, hi]; add lo itself if it is a root.
  std::size_t n = sign_changes(chain, lo) - sign_changes(chain, hi);
  if (s(lo) == 0) ++n;
  return n;
}

}  // namespace twz
