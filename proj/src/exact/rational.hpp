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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace twz {

using Integer = mpz_class;
// Always canonical: lowest terms, positive denominator, zero is 0/1.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

// "num/den" with den > 0, always including the denominator ("3/1").
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Accepts "n", "n/d", and decimal or scientific text such as "0.25" or "1e-9".
// Conversion is exact. Throws PreconditionError on malformed input.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Integer ipow(const Integer& base, unsigned long exp);
Rational rpow(const Rational& base, unsigned long exp);

bool is_integer(const Rational& r);

// Returns true and sets p, k when q = p^k with p prime, k >= 1.
bool prime_power(const Integer& q, Integer& p, unsigned& k);
bool is_prime_power(const Integer& q);

}  // namespace twz
