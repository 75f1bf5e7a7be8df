// Copyright 2026 The srgcut Authors
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

// Exact arithmetic in Q(√d): values r + c·√d with rational r, c and a
// square-free radicand d. Everything the library says about eigenvalues,
// multiplicities and spectral bounds goes through this type; doubles only
// appear when a value is formatted for humans.

#ifndef SRGCUT_QUADRATIC_H_
#define SRGCUT_QUADRATIC_H_

#include <compare>
#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace srgcut {

using Rational = boost::rational<int64_t>;

std::string ToString(const Rational& q);
double ToDouble(const Rational& q);
// Decimal expansion truncated (not rounded) to `digits` places.
std::string ToDecimal(const Rational& q, int digits);
bool IsInteger(const Rational& q);

// Exact sign comparison of two rationals using 128-bit cross products.
std::strong_ordering Compare(const Rational& a, const Rational& b);

// Largest s with s*s <= n (n >= 0).
int64_t IntegerSqrt(int64_t n);
bool IsPerfectSquare(int64_t n);

// Writes n = square * radicand with radicand square-free; returns the
// square root of the square part.
int64_t ExtractSquare(int64_t n, int64_t* radicand);

class QuadraticValue {
 public:
  QuadraticValue() = default;
  QuadraticValue(Rational rational)  // NOLINT: implicit on purpose
      : rational_(rational) {}
  QuadraticValue(int64_t value) : rational_(value) {}  // NOLINT
  // r + c·√n for any n >= 0; square factors of n are folded into c.
  QuadraticValue(Rational r, Rational c, int64_t n);

  static QuadraticValue Sqrt(int64_t n) { return {0, 1, n}; }

  const Rational& rational_part() const { return rational_; }
  const Rational& surd_coefficient() const { return surd_; }
  int64_t radicand() const { return radicand_; }
  bool is_rational() const { return surd_.numerator() == 0; }
  bool is_integer() const { return is_rational() && IsInteger(rational_); }

  // -1, 0, +1, exactly.
  int sign() const;
  double ToDouble() const;
  std::string ToString() const;

  QuadraticValue operator-() const { return {-rational_, -surd_, radicand_}; }
  friend QuadraticValue operator+(const QuadraticValue& a, const QuadraticValue& b);
  friend QuadraticValue operator-(const QuadraticValue& a, const QuadraticValue& b);
  // Throws std::domain_error when both operands carry different radicands.
  friend QuadraticValue operator*(const QuadraticValue& a, const QuadraticValue& b);
  friend QuadraticValue operator/(const QuadraticValue& a, const Rational& b);

  friend bool operator==(const QuadraticValue& a, const QuadraticValue& b) {
    return (a - b).sign() == 0;
  }
  friend std::strong_ordering operator<=>(const QuadraticValue& a,
                                          const QuadraticValue& b) {
    return (a - b).sign() <=> 0;
  }

 private:
  void Normalize();

  Rational rational_{0};
  Rational surd_{0};
  int64_t radicand_ = 1;
};

}  // namespace srgcut

#endif  // SRGCUT_QUADRATIC_H_
