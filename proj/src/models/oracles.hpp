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

#include "exact/rational.hpp"
#include "models/families.hpp"

namespace twz {

// |det(q^n M - I)|. Throws Error(non_isolated_fixed_points) if the determinant vanishes.
Integer torus_fixed_count_formula(const TorusModel& t, unsigned n);

// Counts (x, y) in F*_{q^s} x F*_{q^s} with x^A11 y^A12 = x^A21 y^A22 = 1,
// A = q^n M - I, enumerating the group of e-th roots of unity where e is
// the exponent of Z^2 / A Z^2 (so every solution lies in it) and s is the
// order of q mod e. Throws Error(insufficient_extension) when s > ext_bound
// and PreconditionError when q^s exceeds the table limit.
Integer torus_fixed_count_bruteforce(const TorusModel& t, unsigned n, unsigned ext_bound);

// Largest invariant factor of the 2x2 integer matrix a: |det a| / gcd(entries).
Integer smith_exponent(const IntMatrix& a);

// #E(F_{q^n}) for y^2 = x^3 + a4 x + a6, including the point at infinity.
// q must be an odd prime, q^n <= 10^6, and the curve nonsingular mod q.
Integer elliptic_point_count_bruteforce(unsigned q, long a4, long a6, unsigned n);

// det(I - B) for the combined action f F^m on H^1 of E^g.
Integer abelian_fixed_count(const AbelianProductModel& a, unsigned m);

}  // namespace twz
