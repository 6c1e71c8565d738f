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

#include <cstdint>
#include <vector>

namespace twz {

// F_{p^e} with p^e <= 10^7. Elements are integers whose base-p digits are
// the coefficients of a polynomial in x modulo a primitive polynomial; x is the
// generator behind the exp/log tables.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  FiniteField(std::uint32_t p, unsigned e);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  std::uint32_t size() const { return n_; }
  // Coefficients c_0..c_{e-1} of the monic primitive modulus (leading 1 omitted).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const;
  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, long long k) const;
  // a != 0; log(exp(i)) = i for 0 <= i < size()-1.
  std::uint32_t log(Elem a) const { return log_[a]; }
  Elem exp(std::uint64_t i) const { return exp_[i % (n_ - 1)]; }

  static constexpr std::uint32_t kMaxSize = 10000000;

 private:
  std::uint32_t p_;
  unsigned e_;
  std::uint32_t n_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace twz
