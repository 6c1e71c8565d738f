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


#include "zeta/zeta.hpp"

#include <string>

#include "exact/errors.hpp"
#include "models/oracles.hpp"

namespace twz {

namespace {

struct RawProduct {
  Polynomial odd = Polynomial::constant(1);
  Polynomial even = Polynomial::constant(1);
  std::size_t odd_size = 0;
  std::size_t even_size = 0;
};

RawProduct raw_product(const GradedAction& a) {
  RawProduct r;
  for (const auto& p : a.pieces) {
    Polynomial f = p.combined().reverse_char_poly();
    if (p.degree % 2) {
      r.odd = r.odd * f;
      r.odd_size += p.size();
    } else {
      r.even = r.even * f;
      r.even_size += p.size();
    }
  }
  return r;
}

template <class Model, class Fix>
std::optional<unsigned> n0_search(const GradedAction& a, const Model& m, unsigned max_m, Fix fix) {
  if (max_m == 0) throw PreconditionError("max_m must be >= 1");
  for (unsigned k = 1; k <= max_m; ++k) {
    Rational tr = twisted_trace(a, k);
    if (tr >= 0 && is_integer(tr) && tr == Rational(fix(m, k))) return k;
  }
  return std::nullopt;
}

}  // namespace

TruncatedSeries zeta_series(const std::vector<Rational>& traces, std::size_t n) {
  if (n > traces.size()) throw PreconditionError("zeta_series needs N <= number of traces");
  std::vector<Rational> g(n + 1);
  for (std::size_t k = 1; k <= n; ++k) g[k] = traces[k - 1] / static_cast<unsigned long>(k);
  return series_exp(TruncatedSeries(std::move(g)));
}

RationalFunction product_formula(const GradedAction& a) {
  RawProduct r = raw_product(a);
  return RationalFunction::make(r.odd, r.even);
}

std::size_t default_terms(const GradedAction& a) { return 2 * (a.betti(true) + a.betti(false)) + 4; }

ZetaResult zeta(const GradedAction& a, std::size_t n) {
  ZetaResult z;
  z.odd_betti = a.betti(true);
  z.even_betti = a.betti(false);
  if (n < z.odd_betti + z.even_betti + 1)
    throw PreconditionError("zeta needs N >= " + std::to_string(z.odd_betti + z.even_betti + 1) + " terms");
  z.traces = trace_sequence(a, n);
  z.series = zeta_series(z.traces, n);
  z.reconstructed = reconstruct_rational(z.series.coeffs(), z.odd_betti, z.even_betti);

  RawProduct r = raw_product(a);
  z.product_form = RationalFunction::make(r.odd, r.even);
  z.cancelled = poly_gcd(r.odd, r.even);
  z.odd_degree_drop = r.odd_size - *r.odd.degree();
  z.even_degree_drop = r.even_size - *r.even.degree();
  z.agreement = z.reconstructed == z.product_form;
  return z;
}

std::optional<unsigned> n0_estimate(const TorusModel& t, unsigned max_m) {
  return n0_search(torus_graded_action(t), t, max_m,
                   [](const TorusModel& m, unsigned k) { return torus_fixed_count_formula(m, k); });
}

std::optional<unsigned> n0_estimate(const AbelianProductModel& a, unsigned max_m) {
  return n0_search(abelian_graded_action(a), a, max_m,
                   [](const AbelianProductModel& m, unsigned k) { return abelian_fixed_count(m, k); });
}

}  // namespace twz
