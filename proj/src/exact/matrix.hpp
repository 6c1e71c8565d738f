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
#include <initializer_list>
#include <string>
#include <vector>

#include "exact/polynomial.hpp"
#include "exact/rational.hpp"

namespace twz {

// Square matrix over Q, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<Rational>& d);
  static Matrix scalar(std::size_t n, const Rational& s);

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  Matrix transpose() const;
  Rational trace() const;
  Rational det() const;
  Matrix pow(unsigned long k) const;
  bool is_integral() const;

  // det(t I - A), monic of degree n (Faddeev-LeVerrier).
  Polynomial char_poly() const;
  // det(1 - t A) = t^n charpoly(1/t); constant term 1.
  Polynomial reverse_char_poly() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

// a ⊗ b
Matrix kronecker(const Matrix& a, const Matrix& b);

// Square integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  Integer det() const;
  Integer trace() const;
  IntMatrix pow(unsigned long k) const;
  Matrix to_rational() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

 private:
  std::size_t n_ = 0;
  std::vector<Integer> a_;
};

}  // namespace twz
