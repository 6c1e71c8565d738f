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

#include <optional>
#include <string>
#include <vector>

#include "exact/matrix.hpp"
#include "models/graded.hpp"
#include "spectral/root_modulus.hpp"
#include "zeta/zeta.hpp"

namespace twz {

enum class Verdict { holds, fails, inconclusive, not_applicable };

// "holds", "fails", "inconclusive", "not-applicable"
const char* verdict_name(Verdict v) noexcept;

struct SpectralReport {
  ModulusInterval lambda_even;
  ModulusInterval lambda_odd;
  std::optional<unsigned> k_even;  // empty when the parity class is empty
  std::optional<unsigned> k_odd;
  Verdict ineq1 = Verdict::inconclusive;
  Verdict ineq2 = Verdict::not_applicable;
  // lambda_even == lambda_odd proved exactly (real root isolation).
  bool equality_certified = false;
  Rational final_tol;
};

// Largest modulus of an eigenvalue of m; [0, 0] when m is nilpotent.
ModulusInterval spectral_radius(const Matrix& m, const Rational& tol);

// Halves tol up to 20 times while the lambda intervals overlap and equality
// cannot be certified.
SpectralReport spectral_report(const GradedAction& a, const Rational& tol);

// Exact test of lambda_even^2 == lambda_odd^2 given enclosures of both:
// lambda^2 is a real root of the polynomial whose roots are the pairwise
// products of the eigenvalues, and Sturm counts isolate it.
bool certify_equal_radii(const GradedAction& a, const ModulusInterval& even, const ModulusInterval& odd);

struct DiscLemmaResult {
  Verdict verdict = Verdict::inconclusive;
  std::optional<ModulusInterval> numerator_min;
  std::optional<ModulusInterval> denominator_min;
  // The check failed although positivity passed.
  bool contradiction = false;
};

// min |root of denominator| <= min |root of numerator| on certified intervals.
DiscLemmaResult disc_lemma_check(const ZetaResult& z, bool positivity_ok, const Rational& tol);

struct WeightViolation {
  unsigned degree = 0;
  unsigned weight = 0;
  std::string kind;  // even_root_bound, weight_max, weight_min
  std::string detail;
};

std::vector<WeightViolation> weight_bound_check(const GradedAction& a, const Rational& tol);

}  // namespace twz
