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

#include "exact/matrix.hpp"

#include "exact/errors.hpp"

namespace twz {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) : n_(rows.size()), a_() {
  a_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw PreconditionError("matrix must be square");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) { return scalar(n, 1); }

Matrix Matrix::scalar(std::size_t n, const Rational& s) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational Matrix::trace() const {
  Rational s = 0;
  for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, i);
  return s;
}

Rational Matrix::det() const {
  Matrix m = *this;
  Rational d = 1;
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t p = c;
    while (p < n_ && m(p, c) == 0) ++p;
    if (p == n_) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    Rational inv = 1 / m(c, c);
    for (std::size_t r = c + 1; r < n_; ++r) {
      if (m(r, c) == 0) continue;
      Rational f = m(r, c) * inv;
      for (std::size_t j = c; j < n_; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return d;
}

Matrix Matrix::pow(unsigned long k) const {
  Matrix result = identity(n_), base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool Matrix::is_integral() const {
  for (const auto& x : a_)
    if (!is_integer(x)) return false;
  return true;
}

Polynomial Matrix::char_poly() const {
  // c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k.
  std::vector<Rational> c(n_ + 1);
  c[n_] = 1;
  Matrix m(n_);
  for (std::size_t k = 1; k <= n_; ++k) {
    m = *this * m;
    for (std::size_t i = 0; i < n_; ++i) m(i, i) += c[n_ - k + 1];
    Matrix am = *this * m;
    c[n_ - k] = -am.trace() / static_cast<unsigned long>(k);
  }
  return Polynomial(std::move(c));
}

Polynomial Matrix::reverse_char_poly() const { return char_poly().reversed(n_); }

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw PreconditionError("matrix size mismatch");
  Matrix r(a.n_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw PreconditionError("matrix size mismatch");
  Matrix r(a.n_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw PreconditionError("matrix size mismatch");
  const std::size_t n = a.n_;
  Matrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += x * b(k, j);
    }
  return r;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix r = a;
  for (auto& x : r.a_) x *= s;
  return r;
}

std::string Matrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < n_; ++j) s += (j ? ", " : "") + (*this)(i, j).get_str();
    s += "]";
  }
  return s + "]";
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size(), m = b.size();
  Matrix r(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) r(i * m + k, j * m + l) = a(i, j) * b(k, l);
    }
  return r;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : n_(rows.size()), a_() {
  a_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw PreconditionError("matrix must be square");
    for (long x : r) a_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Integer IntMatrix::det() const {
  Rational d = to_rational().det();
  return d.get_num();
}

Integer IntMatrix::trace() const {
  Integer s = 0;
  for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, i);
  return s;
}

IntMatrix IntMatrix::pow(unsigned long k) const {
  IntMatrix result = identity(n_), base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Matrix IntMatrix::to_rational() const {
  Matrix m(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = Rational((*this)(i, j));
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw PreconditionError("matrix size mismatch");
  const std::size_t n = a.n_;
  IntMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) r(i, j) += a(i, k) * b(k, j);
  return r;
}

}  // namespace twz
