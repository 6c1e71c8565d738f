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
#include <string>
#include <vector>

#include "exact/matrix.hpp"
#include "exact/rational.hpp"

namespace twz {

// One weight-graded piece Gr^k_W H^i with commuting actions of f and Frobenius.
struct GradedPiece {
  unsigned degree = 0;
  unsigned weight = 0;
  Matrix f_action;
  Matrix frob_action;

  std::size_t size() const { return f_action.size(); }
  // frob_action * f_action
  Matrix combined() const { return frob_action * f_action; }
  std::string label() const;
};

struct GradedAction {
  std::vector<GradedPiece> pieces;
  Integer q = 2;
  bool proper = false;
  unsigned dim = 0;

  std::size_t betti(bool odd) const;
};

// Checks every invariant (sizes, commutation, unique (degree, weight), bounds
// by 2 dim, q a prime power, purity when proper) and returns the action.
// Throws PreconditionError naming the offending piece.
GradedAction make_graded_action(std::vector<GradedPiece> pieces, const Integer& q, bool proper, unsigned dim);

// Same checks as make_graded_action; throws on the first violation.
void validate(const GradedAction& a);

// The action of f^r: every f_action replaced by its r-th power.
GradedAction iterate_action(const GradedAction& a, unsigned r);

// Entry n-1 is sum over pieces of (-1)^degree Tr((f F)^n), n = 1..count.
std::vector<Rational> trace_sequence(const GradedAction& a, std::size_t count);

// sum over pieces of (-1)^degree Tr(f F^m).
Rational twisted_trace(const GradedAction& a, unsigned m);

// k-th compound matrix; rows and columns are the k-subsets in lexicographic order.
Matrix exterior_power(const Matrix& b, std::size_t k);

// sum_k (-1)^k Tr(exterior_power(b, k)) == det(I - b), checked exactly.
bool lefschetz_determinant_identity(const Matrix& b);

}  // namespace twz
