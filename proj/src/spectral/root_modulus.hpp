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

#include <string>

#include "exact/polynomial.hpp"
#include "exact/rational.hpp"

namespace twz {

// Certified enclosure [lo, hi] of a nonnegative real quantity.
struct ModulusInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool overlaps(const ModulusInterval& o) const { return lo <= o.hi && o.lo <= hi; }
  bool is_point() const { return lo == hi; }
  friend bool operator==(const ModulusInterval&, const ModulusInterval&) = default;
};

// Enclosure of max |root| of p with hi - lo <= tol. Graeffe root squaring on
// outward-rounded coefficient intervals, at most 40 squarings per precision
// level (256, 1024, 4096 mantissa bits).
// Throws Error(no_roots) if deg p < 1 and Error(precision) if tol cannot be met.
ModulusInterval max_root_modulus(const Polynomial& p, const Rational& tol);

// Enclosure of min |root| of p; requires p(0) != 0 (Error(zero_root)).
ModulusInterval min_root_modulus(const Polynomial& p, const Rational& tol);

// Outward-rounded enclosure of sqrt(x) of the given width.
ModulusInterval sqrt_enclosure(const Rational& x, const Rational& tol);

inline constexpr int kMaxGraeffeSquarings = 40;

}  // namespace twz
