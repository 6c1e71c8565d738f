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


#include "spectral/spectral.hpp"

#include <algorithm>

#include "exact/errors.hpp"

namespace twz {

namespace {

constexpr int kRefinementRounds = 20;

bool odd(unsigned d) { return d % 2 == 1; }

ModulusInterval interval_max(const ModulusInterval& a, const ModulusInterval& b) {
  return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

struct ParityRadii {
  std::vector<std::pair<unsigned, ModulusInterval>> pieces;  // (weight, radius)
  ModulusInterval lambda{0, 0};
};

ModulusInterval char_poly_radius(const Matrix& m, const Rational& tol) {
  Polynomial cp = m.char_poly();
  if (cp == Polynomial::monomial(1, m.size())) return {0, 0};
  return max_root_modulus(cp, tol);
}

// Absolute width tol where the 40-squaring budget allows it; large radii
// (high iterates) fall back to width tol * radius.
ModulusInterval radius_within(const Matrix& m, const Rational& tol) {
  try {
    return char_poly_radius(m, tol);
  } catch (const Error& err) {
    if (err.code() != Errc::precision) throw;
    ModulusInterval coarse = char_poly_radius(m, Rational(1));
    if (coarse.hi <= 1) throw;
    return char_poly_radius(m, tol * coarse.hi);
  }
}

ParityRadii radii(const GradedAction& a, bool want_odd, const Rational& tol) {
  ParityRadii r;
  for (const auto& p : a.pieces) {
    if (odd(p.degree) != want_odd) continue;
    ModulusInterval m = radius_within(p.f_action, tol);
    r.pieces.push_back({p.weight, m});
    r.lambda = interval_max(r.lambda, m);
  }
  return r;
}

std::optional<unsigned> top_weight(const ParityRadii& r) {
  std::optional<unsigned> k;
  for (const auto& [w, m] : r.pieces)
    if (m.overlaps(r.lambda) && (!k || w > *k)) k = w;
  return k;
}

// Monic polynomial whose roots are z_i z_j (i <= j) over the roots z of s.
Polynomial pairwise_products(const Polynomial& s) {
  const std::size_t d = *s.degree();
  const std::size_t big = d * (d + 1) / 2;
  Polynomial m = s.monic();
  // Newton: power sums of the roots of s up to 2 * big.
  std::vector<Rational> e(d + 1), p(2 * big + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= d; ++k) e[k] = (k % 2 ? -1 : 1) * m.coeff(d - k);
  for (std::size_t k = 1; k <= 2 * big; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i < k && i <= d; ++i) acc += (i % 2 ? 1 : -1) * e[i] * p[k - i];
    if (k <= d) acc += (k % 2 ? 1 : -1) * Rational(static_cast<unsigned long>(k)) * e[k];
    p[k] = acc;
  }
  std::vector<Rational> pp(big + 1), ee(big + 1);
  for (std::size_t k = 1; k <= big; ++k) pp[k] = (p[k] * p[k] + p[2 * k]) / 2;
  ee[0] = 1;
  for (std::size_t k = 1; k <= big; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += (i % 2 ? 1 : -1) * ee[k - i] * pp[i];
    ee[k] = acc / static_cast<unsigned long>(k);
  }
  std::vector<Rational> c(big + 1);
  for (std::size_t k = 0; k <= big; ++k) c[big - k] = (k % 2 ? -1 : 1) * ee[k];
  return Polynomial(std::move(c));
}

Polynomial parity_radius_poly(const GradedAction& a, bool want_odd) {
  Polynomial s = Polynomial::constant(1);
  for (const auto& p : a.pieces)
    if (odd(p.degree) == want_odd) s = s * p.f_action.char_poly();
  s = squarefree_part(s);
  if (s.is_constant()) return s;
  return squarefree_part(pairwise_products(s));
}

ModulusInterval squared(const ModulusInterval& m) { return {m.lo * m.lo, m.hi * m.hi}; }

ModulusInterval scaled(const ModulusInterval& m, const ModulusInterval& s) { return {m.lo * s.lo, m.hi * s.hi}; }

// Enclosure with width <= tol relative to the size of the quantity.
ModulusInterval relative_radius(const Matrix& m, const Rational& tol) {
  ModulusInterval coarse = spectral_radius(m, Rational(1));
  return spectral_radius(m, tol * std::max(Rational(1), coarse.hi));
}

std::optional<ModulusInterval> relative_min_modulus(const Matrix& m, const Rational& tol) {
  Polynomial cp = m.char_poly();
  if (cp.coeff(0) == 0) return std::nullopt;
  ModulusInterval coarse = min_root_modulus(cp, Rational(1, 1024));
  return min_root_modulus(cp, tol * std::max(Rational(1), coarse.hi));
}

std::string show(const ModulusInterval& m) {
  return "[" + std::to_string(m.lo.get_d()) + ", " + std::to_string(m.hi.get_d()) + "]";
}

}  // namespace

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::inconclusive:
      return "inconclusive";
    case Verdict::not_applicable:
      return "not-applicable";
  }
  return "inconclusive";
}

ModulusInterval spectral_radius(const Matrix& m, const Rational& tol) { return char_poly_radius(m, tol); }

bool certify_equal_radii(const GradedAction& a, const ModulusInterval& even, const ModulusInterval& odd_i) {
  if (even.is_point() && odd_i.is_point()) return even == odd_i;
  if (!even.overlaps(odd_i)) return false;
  Polynomial re = parity_radius_poly(a, false), ro = parity_radius_poly(a, true);
  if (re.is_constant() || ro.is_constant()) return false;
  ModulusInterval ie = squared(even), io = squared(odd_i);
  if (count_real_roots(re, ie.lo, ie.hi) != 1 || count_real_roots(ro, io.lo, io.hi) != 1) return false;
  Polynomial g = poly_gcd(re, ro);
  if (g.is_constant()) return false;
  return count_real_roots(g, std::max(ie.lo, io.lo), std::min(ie.hi, io.hi)) >= 1;
}

SpectralReport spectral_report(const GradedAction& a, const Rational& tol) {
  if (a.pieces.empty()) throw PreconditionError("spectral_report needs a nonempty graded action");
  if (tol <= 0) throw PreconditionError("tolerance must be positive");
  SpectralReport rep;
  ParityRadii ev, od;
  bool have = false;
  bool decided = false;
  Rational t = tol;
  for (int round = 0; round <= kRefinementRounds; ++round, t /= 2) {
    ParityRadii e, o;
    try {
      e = radii(a, false, t);
      o = radii(a, true, t);
    } catch (const Error& err) {
      if (err.code() != Errc::precision || !have) throw;
      break;  // enclosures cannot get tighter; keep the last ones
    }
    ev = std::move(e);
    od = std::move(o);
    have = true;
    rep.final_tol = t;
    if (ev.lambda.lo >= od.lambda.hi) {
      rep.ineq1 = Verdict::holds;
      rep.equality_certified = ev.lambda.is_point() && od.lambda.is_point() && ev.lambda == od.lambda;
      decided = true;
    } else if (ev.lambda.hi < od.lambda.lo) {
      rep.ineq1 = Verdict::fails;
      decided = true;
    } else if (certify_equal_radii(a, ev.lambda, od.lambda)) {
      rep.ineq1 = Verdict::holds;
      rep.equality_certified = true;
      decided = true;
    }
    if (decided) break;
  }
  if (!decided) rep.ineq1 = Verdict::inconclusive;
  rep.lambda_even = ev.lambda;
  rep.lambda_odd = od.lambda;
  rep.k_even = top_weight(ev);
  rep.k_odd = top_weight(od);

  if (!rep.equality_certified && !ev.lambda.overlaps(od.lambda)) {
    rep.ineq2 = Verdict::not_applicable;
  } else {
    bool ok = !rep.k_odd || (rep.k_even && *rep.k_even >= *rep.k_odd);
    rep.ineq2 = ok ? Verdict::holds : (rep.equality_certified ? Verdict::fails : Verdict::inconclusive);
  }
  return rep;
}

DiscLemmaResult disc_lemma_check(const ZetaResult& z, bool positivity_ok, const Rational& tol) {
  DiscLemmaResult r;
  const Polynomial& num = z.reconstructed.numerator();
  const Polynomial& den = z.reconstructed.denominator();
  if (num.is_constant()) {
    r.verdict = Verdict::holds;
    return r;
  }
  if (den.is_constant()) {
    r.verdict = Verdict::fails;
  } else {
    Rational t = tol;
    for (int round = 0; round <= kRefinementRounds; ++round, t /= 2) {
      try {
        r.numerator_min = min_root_modulus(num, t);
        r.denominator_min = min_root_modulus(den, t);
      } catch (const Error& err) {
        if (err.code() != Errc::precision || !r.numerator_min) throw;
        break;
      }
      if (r.denominator_min->hi <= r.numerator_min->lo) {
        r.verdict = Verdict::holds;
        break;
      }
      if (r.denominator_min->lo > r.numerator_min->hi) {
        r.verdict = Verdict::fails;
        break;
      }
    }
  }
  r.contradiction = positivity_ok && r.verdict == Verdict::fails;
  return r;
}

std::vector<WeightViolation> weight_bound_check(const GradedAction& a, const Rational& tol) {
  std::vector<WeightViolation> out;
  if (tol <= 0) throw PreconditionError("tolerance must be positive");
  ModulusInterval lambda_even{0, 0};
  for (const auto& p : a.pieces)
    if (!odd(p.degree)) lambda_even = interval_max(lambda_even, relative_radius(p.f_action, tol));
  Rational qdim = rpow(Rational(a.q), a.dim);
  ModulusInterval bound{lambda_even.lo * qdim, lambda_even.hi * qdim};

  for (const auto& p : a.pieces) {
    Matrix b = p.combined();
    ModulusInterval comb = relative_radius(b, tol);
    if (!odd(p.degree) && comb.lo > bound.hi)
      out.push_back({p.degree, p.weight, "even_root_bound",
                     "eigenvalue modulus " + show(comb) + " exceeds lambda_even q^dim " + show(bound)});

    // |eigenvalue of F f| = |eigenvalue of f| q^(k/2) on a pure piece.
    ModulusInterval half = sqrt_enclosure(rpow(Rational(a.q), p.weight), tol / 16);
    ModulusInterval fmax = scaled(relative_radius(p.f_action, tol), half);
    if (!comb.overlaps(fmax))
      out.push_back({p.degree, p.weight, "weight_max",
                     "largest modulus " + show(comb) + " differs from " + show(fmax)});
    auto cmin = relative_min_modulus(b, tol);
    auto fmin = relative_min_modulus(p.f_action, tol);
    if (cmin && fmin && !cmin->overlaps(scaled(*fmin, half)))
      out.push_back({p.degree, p.weight, "weight_min",
                     "smallest modulus " + show(*cmin) + " differs from " + show(scaled(*fmin, half))});
  }
  return out;
}

}  // namespace twz
