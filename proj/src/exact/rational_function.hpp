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
#include <span>
#include <string>

#include "exact/polynomial.hpp"
#include "exact/series.hpp"

namespace twz {

// num/den with gcd(num, den) = 1 and den(0) = 1. The normalization is the
// det(1 - tA) convention, so equal functions compare equal coefficientwise.
class RationalFunction {
 public:
  // The constant function 1.
  RationalFunction();

  // Cancels the exact gcd and scales so den(0) = 1. Throws PreconditionError
  // when den is zero or the reduced denominator vanishes at t = 0.
  static RationalFunction make(const Polynomial& num, const Polynomial& den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  // Power-series expansion to the given order.
  TruncatedSeries expand(std::size_t order) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}
  Polynomial num_;
  Polynomial den_;
};

// The unique normalized F with deg num <= max_num_deg, deg den <= max_den_deg
// whose expansion matches every supplied coefficient. Throws
// ReconstructionError with the first index that cannot be matched.
RationalFunction reconstruct_rational(std::span<const Rational> a, std::size_t max_num_deg,
                                      std::size_t max_den_deg);

}  // namespace twz
