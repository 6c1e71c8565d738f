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

#include "exact/matrix.hpp"
#include "exact/rational.hpp"
#include "models/graded.hpp"

namespace twz {

// Split torus with the monomial self-map given by m on the cocharacter lattice.
struct TorusModel {
  Integer q = 2;
  IntMatrix m;
};

// E^g for an elliptic curve E with Frobenius trace a, with f acting through m.
struct AbelianProductModel {
  Integer q = 2;
  Integer frob_trace = 0;
  unsigned g = 1;
  IntMatrix m;
};

// Rank 2 only. Let s = sign(det m):
//   degree 2, weight 0: f = [s],        F = [1]
//   degree 3, weight 2: f = s m,        F = q I
//   degree 4, weight 4: f = [|det m|],  F = [q^2]
// Throws Error(unsupported_rank) for other ranks.
GradedAction torus_graded_action(const TorusModel& t);

// Pieces exterior_power(B_f, k), exterior_power(B_F, k) for k = 0..2g, with
// B_f = m^T (x) I_2 and B_F = I_g (x) companion(t^2 - a t + q).
GradedAction abelian_graded_action(const AbelianProductModel& a);

// A single point: one piece (0, 0, [1], [1]).
GradedAction constant_map_action(const Integer& q);

// Companion matrix of t^2 - a t + q: trace a, determinant q.
Matrix frobenius_companion(const Integer& a, const Integer& q);

void validate(const TorusModel& t);
void validate(const AbelianProductModel& a);

// Model with f replaced by f^r.
TorusModel iterate_model(const TorusModel& t, unsigned r);
AbelianProductModel iterate_model(const AbelianProductModel& a, unsigned r);

}  // namespace twz
