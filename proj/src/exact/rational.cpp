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

#include "exact/rational.hpp"

#include <cctype>

#include "exact/errors.hpp"

namespace twz {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::precondition: return "precondition";
    case Errc::reconstruction_failure: return "reconstruction_failure";
    case Errc::config: return "config";
    case Errc::unsupported_rank: return "unsupported_rank";
    case Errc::insufficient_extension: return "insufficient_extension";
    case Errc::non_isolated_fixed_points: return "non_isolated_fixed_points";
    case Errc::no_roots: return "no_roots";
    case Errc::zero_root: return "zero_root";
    case Errc::precision: return "precision";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  bool neg = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) throw PreconditionError("malformed integer: '" + std::string(text) + "'");
  Integer z(std::string(body), 10);
  return neg ? Integer(-z) : z;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view dtext = text.substr(slash + 1);
    if (!all_digits(dtext)) throw PreconditionError("malformed rational: '" + std::string(text) + "'");
    return make_rational(num, Integer(std::string(dtext), 10));
  }

  // Decimal / scientific notation, parsed exactly.
  std::string_view body = text;
  bool neg = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  long exp10 = 0;
  auto epos = body.find_first_of("eE");
  if (epos != std::string_view::npos) {
    std::string_view etext = body.substr(epos + 1);
    Integer e = parse_integer(etext);
    if (!e.fits_slong_p() || abs(e) > 100000) throw PreconditionError("exponent out of range: '" + std::string(text) + "'");
    exp10 = e.get_si();
    body = body.substr(0, epos);
  }
  std::string digits;
  auto dot = body.find('.');
  if (dot != std::string_view::npos) {
    std::string_view ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw PreconditionError("malformed number: '" + std::string(text) + "'");
    digits = std::string(ip) + std::string(fp);
    exp10 -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(body)) throw PreconditionError("malformed number: '" + std::string(text) + "'");
    digits = std::string(body);
  }
  Integer mant(digits, 10);
  if (neg) mant = -mant;
  Integer scale = ipow(Integer(10), static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  return exp10 < 0 ? make_rational(mant, scale) : Rational(mant * scale);
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational rpow(const Rational& base, unsigned long exp) {
  return make_rational(ipow(base.get_num(), exp), ipow(base.get_den(), exp));
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

bool prime_power(const Integer& q, Integer& p, unsigned& k) {
  if (q < 2) return false;
  Integer rest = q;
  Integer d = 2;
  // Smallest prime factor by trial division; inputs are field sizes.
  while (d * d <= rest) {
    if (rest % d == 0) break;
    d += 1;
  }
  if (rest % d != 0) d = rest;
  k = 0;
  while (rest % d == 0) {
    rest /= d;
    ++k;
  }
  if (rest != 1) return false;
  p = d;
  return true;
}

bool is_prime_power(const Integer& q) {
  Integer p;
  unsigned k = 0;
  return prime_power(q, p, k);
}

}  // namespace twz
