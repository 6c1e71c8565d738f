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
#include <vector>

#include "exact/polynomial.hpp"
#include "exact/rational_function.hpp"
#include "exact/series.hpp"
#include "models/families.hpp"
#include "models/graded.hpp"

namespace twz {

struct ZetaResult {
  std::vector<Rational> traces;  // traces[n-1] for n = 1..N
  TruncatedSeries series{{1}};
  RationalFunction reconstructed;
  RationalFunction product_form;
  bool agreement = false;
  std::size_t odd_betti = 0;
  std::size_t even_betti = 0;
  // gcd of the raw odd and even products; nonconstant when factors cancel.
  Polynomial cancelled = Polynomial::constant(1);
  // Degree lost to zero eigenvalues of the combined action, per parity.
  std::size_t odd_degree_drop = 0;
  std::size_t even_degree_drop = 0;
};

// exp(sum_{n=1..N} traces[n-1] t^n / n) to order N.
TruncatedSeries zeta_series(const std::vector<Rational>& traces, std::size_t n);

// prod_i P_i(t)^((-1)^(i+1)), P_i = prod over degree-i pieces of det(1 - t F f).
RationalFunction product_formula(const GradedAction& a);

// Requires n >= odd Betti + even Betti + 1.
ZetaResult zeta(const GradedAction& a, std::size_t n);

// 2 * (total Betti) + 4.
std::size_t default_terms(const GradedAction& a);

// Least m <= max_m with Tr(f F^m) a nonnegative integer equal to Fix(f F^m).
std::optional<unsigned> n0_estimate(const TorusModel& t, unsigned max_m);
std::optional<unsigned> n0_estimate(const AbelianProductModel& a, unsigned max_m);

}  // namespace twz
