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


#include "models/graded.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "exact/errors.hpp"
#include "spectral/root_modulus.hpp"

namespace twz {

namespace {

// Relative purity tolerance on |eigenvalue| / q^(k/2).
const Rational kPurityDelta = make_rational(1, 1000000000);

bool odd(unsigned d) { return d % 2 == 1; }

void check_purity(const GradedPiece& p, const Integer& q) {
  Polynomial cp = p.frob_action.char_poly();
  Rational target = rpow(Rational(q), p.weight);  // |alpha|^2
  Rational lo = target * (1 - kPurityDelta) * (1 - kPurityDelta);
  Rational hi = target * (1 + kPurityDelta) * (1 + kPurityDelta);
  // Enclose |alpha| to well below the allowed relative band.
  ModulusInterval s = sqrt_enclosure(target, Rational("1/1000000000000"));
  Rational tol = s.lo * kPurityDelta / 4;
  auto fits = [&](const ModulusInterval& m) { return m.lo * m.lo <= hi && m.hi * m.hi >= lo; };
  if (cp.coeff(0) == 0) throw PreconditionError(p.label() + ": Frobenius is singular on a pure piece");
  if (!fits(max_root_modulus(cp, tol)) || !fits(min_root_modulus(cp, tol)))
    throw PreconditionError(p.label() + ": Frobenius eigenvalue moduli differ from q^(weight/2)");
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace

std::string GradedPiece::label() const {
  return "piece (degree " + std::to_string(degree) + ", weight " + std::to_string(weight) + ")";
}

std::size_t GradedAction::betti(bool want_odd) const {
  std::size_t s = 0;
  for (const auto& p : pieces)
    if (odd(p.degree) == want_odd) s += p.size();
  return s;
}

void validate(const GradedAction& a) {
  if (!is_prime_power(a.q)) throw PreconditionError("q = " + a.q.get_str() + " is not a prime power");
  std::set<std::pair<unsigned, unsigned>> seen;
  for (const auto& p : a.pieces) {
    if (p.f_action.size() == 0) throw PreconditionError(p.label() + ": empty matrices");
    if (p.f_action.size() != p.frob_action.size())
      throw PreconditionError(p.label() + ": f and Frobenius actions differ in size");
    if (!seen.insert({p.degree, p.weight}).second) throw PreconditionError(p.label() + ": duplicated");
    if (p.degree > 2 * a.dim || p.weight > 2 * a.dim)
      throw PreconditionError(p.label() + ": degree or weight exceeds 2 dim = " + std::to_string(2 * a.dim));
    if (p.f_action * p.frob_action != p.frob_action * p.f_action)
      throw PreconditionError(p.label() + ": f and Frobenius actions do not commute");
    if (a.proper) check_purity(p, a.q);
  }
}

GradedAction make_graded_action(std::vector<GradedPiece> pieces, const Integer& q, bool proper, unsigned dim) {
  GradedAction a{std::move(pieces), q, proper, dim};
  validate(a);
  return a;
}

GradedAction iterate_action(const GradedAction& a, unsigned r) {
  if (r == 0) throw PreconditionError("iterate must be >= 1");
  GradedAction out = a;
  for (auto& p : out.pieces) p.f_action = p.f_action.pow(r);
  return out;
}

std::vector<Rational> trace_sequence(const GradedAction& a, std::size_t count) {
  if (count == 0) throw PreconditionError("trace_sequence needs N >= 1");
  std::vector<Rational> t(count);
  for (const auto& p : a.pieces) {
    Matrix b = p.combined();
    Matrix power = b;
    for (std::size_t n = 0; n < count; ++n) {
      if (n > 0) power = power * b;
      if (odd(p.degree))
        t[n] -= power.trace();
      else
        t[n] += power.trace();
    }
  }
  return t;
}

Rational twisted_trace(const GradedAction& a, unsigned m) {
  Rational s = 0;
  for (const auto& p : a.pieces) {
    Rational tr = (p.f_action * p.frob_action.pow(m)).trace();
    s += odd(p.degree) ? Rational(-tr) : tr;
  }
  return s;
}

Matrix exterior_power(const Matrix& b, std::size_t k) {
  const std::size_t n = b.size();
  if (k > n) throw PreconditionError("exterior power degree exceeds matrix size");
  if (k == 0) return Matrix::identity(1);
  auto idx = subsets(n, k);
  Matrix out(idx.size());
  Matrix minor(k);
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) {
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor(i, j) = b(idx[r][i], idx[c][j]);
      out(r, c) = minor.det();
    }
  return out;
}

bool lefschetz_determinant_identity(const Matrix& b) {
  Rational s = 0;
  for (std::size_t k = 0; k <= b.size(); ++k) {
    Rational tr = exterior_power(b, k).trace();
    s += k % 2 ? Rational(-tr) : tr;
  }
  return s == (Matrix::identity(b.size()) - b).det();
}

}  // namespace twz
