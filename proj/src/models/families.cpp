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


#include "models/families.hpp"

#include "exact/errors.hpp"

namespace twz {

Matrix frobenius_companion(const Integer& a, const Integer& q) {
  return Matrix{{0, Rational(-q)}, {1, Rational(a)}};
}

void validate(const TorusModel& t) {
  if (!is_prime_power(t.q)) throw PreconditionError("q = " + t.q.get_str() + " is not a prime power");
  if (t.m.size() != 2)
    throw Error(Errc::unsupported_rank,
                "torus model supports rank 2 only, got rank " + std::to_string(t.m.size()));
  if (t.m.det() == 0) throw PreconditionError("torus matrix must be invertible");
}

void validate(const AbelianProductModel& a) {
  if (!is_prime_power(a.q)) throw PreconditionError("q = " + a.q.get_str() + " is not a prime power");
  if (a.g == 0) throw PreconditionError("g must be >= 1");
  if (a.m.size() != a.g) throw PreconditionError("matrix size must equal g");
  if (a.frob_trace * a.frob_trace > 4 * a.q)
    throw PreconditionError("Frobenius trace " + a.frob_trace.get_str() + " violates the Weil bound a^2 <= 4q");
  if (a.m.det() == 0) throw PreconditionError("matrix must have nonzero determinant");
}

GradedAction torus_graded_action(const TorusModel& t) {
  validate(t);
  Integer d = t.m.det();
  Rational s = sgn(d);
  Rational q = t.q;
  std::vector<GradedPiece> pieces;
  pieces.push_back({2, 0, Matrix{{s}}, Matrix{{1}}});
  pieces.push_back({3, 2, s * t.m.to_rational(), Matrix::scalar(2, q)});
  pieces.push_back({4, 4, Matrix{{Rational(abs(d))}}, Matrix{{q * q}}});
  return make_graded_action(std::move(pieces), t.q, false, 2);
}

GradedAction abelian_graded_action(const AbelianProductModel& a) {
  validate(a);
  Matrix bf = kronecker(a.m.to_rational().transpose(), Matrix::identity(2));
  Matrix bF = kronecker(Matrix::identity(a.g), frobenius_companion(a.frob_trace, a.q));
  std::vector<GradedPiece> pieces;
  for (unsigned k = 0; k <= 2 * a.g; ++k) pieces.push_back({k, k, exterior_power(bf, k), exterior_power(bF, k)});
  return make_graded_action(std::move(pieces), a.q, true, a.g);
}

GradedAction constant_map_action(const Integer& q) {
  return make_graded_action({GradedPiece{0, 0, Matrix{{1}}, Matrix{{1}}}}, q, true, 0);
}

TorusModel iterate_model(const TorusModel& t, unsigned r) {
  if (r == 0) throw PreconditionError("iterate must be >= 1");
  return {t.q, t.m.pow(r)};
}

AbelianProductModel iterate_model(const AbelianProductModel& a, unsigned r) {
  if (r == 0) throw PreconditionError("iterate must be >= 1");
  return {a.q, a.frob_trace, a.g, a.m.pow(r)};
}

}  // namespace twz
