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


#include "models/finite_field.hpp"

#include <string>

#include "exact/errors.hpp"

namespace twz {

namespace {

using u64 = std::uint64_t;

// Polynomials over F_p of degree < e, packed as base-p digits.
struct PolyRing {
  std::uint32_t p;
  unsigned e;
  std::vector<std::uint32_t> mod;  // x^e = -sum mod[i] x^i

  std::vector<std::uint32_t> times_x(const std::vector<std::uint32_t>& a) const {
    std::vector<std::uint32_t> r(e);
    std::uint32_t top = a[e - 1];
    for (unsigned i = e - 1; i > 0; --i) r[i] = a[i - 1];
    r[0] = 0;
    for (unsigned i = 0; i < e; ++i) r[i] = static_cast<std::uint32_t>((r[i] + u64(p - mod[i]) * top) % p);
    return r;
  }

  std::vector<std::uint32_t> mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const {
    std::vector<std::uint32_t> acc(e), sh = a;
    for (unsigned j = 0; j < e; ++j) {
      for (unsigned i = 0; i < e; ++i) acc[i] = static_cast<std::uint32_t>((acc[i] + u64(sh[i]) * b[j]) % p);
      sh = times_x(sh);
    }
    return acc;
  }

  std::vector<std::uint32_t> x_pow(u64 k) const {
    std::vector<std::uint32_t> r(e), base(e);
    r[0] = 1;
    if (e == 1) {
      base[0] = (p - mod[0]) % p;
    } else {
      base[1] = 1;
    }
    while (k) {
      if (k & 1) r = mul(r, base);
      base = mul(base, base);
      k >>= 1;
    }
    return r;
  }

  bool is_one(const std::vector<std::uint32_t>& a) const {
    if (a[0] != 1) return false;
    for (unsigned i = 1; i < e; ++i)
      if (a[i]) return false;
    return true;
  }
};

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> f;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) f.push_back(n);
  return f;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; u64(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, unsigned e) : p_(p), e_(e) {
  if (!is_prime(p)) throw PreconditionError("field characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw PreconditionError("field degree must be >= 1");
  u64 n = 1;
  for (unsigned i = 0; i < e; ++i) {
    n *= p;
    if (n > kMaxSize) throw PreconditionError("field too large to tabulate");
  }
  n_ = static_cast<std::uint32_t>(n);
  const u64 order = n - 1;
  auto factors = prime_factors(order);

  // Smallest modulus in lexicographic order (c_{e-1}, ..., c_0) for which x
  // has multiplicative order exactly p^e - 1.
  PolyRing ring{p, e, std::vector<std::uint32_t>(e)};
  bool found = false;
  for (u64 code = 1; code < n && !found; ++code) {
    u64 c = code;
    for (unsigned i = 0; i < e; ++i) {
      ring.mod[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (ring.mod[0] == 0) continue;
    if (!ring.is_one(ring.x_pow(order))) continue;
    bool primitive = true;
    for (u64 r : factors)
      if (ring.is_one(ring.x_pow(order / r))) {
        primitive = false;
        break;
      }
    found = primitive;
  }
  if (!found) throw Error(Errc::internal, "no primitive polynomial found");
  modulus_ = ring.mod;

  exp_.resize(order);
  log_.assign(n, 0);
  std::vector<std::uint32_t> cur(e);
  cur[0] = 1;
  for (u64 i = 0; i < order; ++i) {
    u64 v = 0;
    for (unsigned k = e; k-- > 0;) v = v * p + cur[k];
    exp_[i] = static_cast<Elem>(v);
    log_[v] = static_cast<std::uint32_t>(i);
    cur = ring.times_x(cur);
  }
}

FiniteField::Elem FiniteField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  return static_cast<Elem>(r < 0 ? r + p_ : r);
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  Elem r = 0, scale = 1;
  while (a || b) {
    r += scale * ((a % p_ + b % p_) % p_);
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  Elem r = 0, scale = 1;
  while (a) {
    r += scale * ((p_ - a % p_) % p_);
    a /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(u64(log_[a]) + log_[b]) % (n_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem a, long long k) const {
  if (a == 0) {
    if (k <= 0) throw PreconditionError("zero to a non-positive power");
    return 0;
  }
  const long long m = static_cast<long long>(n_ - 1);
  long long e = (static_cast<long long>(log_[a]) * (k % m)) % m;
  if (e < 0) e += m;
  return exp_[static_cast<std::size_t>(e)];
}

}  // namespace twz
