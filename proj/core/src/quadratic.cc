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

#include "srgcut/quadratic.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace srgcut {

__extension__ typedef __int128 int128;

std::string ToString(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

double ToDouble(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

std::string ToDecimal(const Rational& q, int digits) {
  if (digits < 0 || digits > 18) throw std::domain_error("ToDecimal: digits must lie in [0, 18]");
  int128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const int128 num = q.numerator();
  const int128 scaled = (num < 0 ? -num : num) * scale / q.denominator();
  const auto whole = static_cast<int64_t>(scaled / scale);
  auto frac = static_cast<int64_t>(scaled % scale);
  std::string out = (num < 0 && scaled != 0 ? "-" : "") + std::to_string(whole);
  if (digits > 0) {
    std::string tail = std::to_string(frac);
    out += "." + std::string(digits - tail.size(), '0') + tail;
  }
  return out;
}

bool IsInteger(const Rational& q) { return q.denominator() == 1; }

std::strong_ordering Compare(const Rational& a, const Rational& b) {
  // Denominators are positive after boost normalisation.
  const int128 lhs = static_cast<int128>(a.numerator()) * b.denominator();
  const int128 rhs = static_cast<int128>(b.numerator()) * a.denominator();
  return lhs <=> rhs;
}

int64_t IntegerSqrt(int64_t n) {
  if (n < 0) throw std::domain_error("IntegerSqrt of negative value");
  auto s = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
  while (s > 0 && static_cast<int128>(s) * s > n) --s;
  while (static_cast<int128>(s + 1) * (s + 1) <= n) ++s;
  return s;
}

bool IsPerfectSquare(int64_t n) {
  if (n < 0) return false;
  const int64_t s = IntegerSqrt(n);
  return s * s == n;
}

int64_t ExtractSquare(int64_t n, int64_t* radicand) {
  if (n < 0) throw std::domain_error("ExtractSquare of negative value");
  if (n == 0) {
    *radicand = 1;
    return 0;
  }
  int64_t root = 1, rest = n;
  for (int64_t p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      root *= p;
    }
  }
  *radicand = rest;
  return root;
}

QuadraticValue::QuadraticValue(Rational r, Rational c, int64_t n)
    : rational_(r), surd_(c), radicand_(n) {
  Normalize();
}

void QuadraticValue::Normalize() {
  int64_t rad = 1;
  const int64_t root = ExtractSquare(radicand_, &rad);
  surd_ *= root;
  radicand_ = rad;
  if (radicand_ == 1) {
    rational_ += surd_;
    surd_ = 0;
  }
  if (surd_.numerator() == 0) radicand_ = 1;
}

int QuadraticValue::sign() const {
  const int rs = rational_.numerator() > 0 ? 1 : (rational_.numerator() < 0 ? -1 : 0);
  const int cs = surd_.numerator() > 0 ? 1 : (surd_.numerator() < 0 ? -1 : 0);
  if (cs == 0) return rs;
  if (rs == 0 || rs == cs) return cs;
  // Opposite signs: compare r^2 against c^2 d.
  const int128 rn = rational_.numerator(), rd = rational_.denominator();
  const int128 cn = surd_.numerator(), cd = surd_.denominator();
  const int128 lhs = rn * rn * cd * cd;
  const int128 rhs = cn * cn * radicand_ * rd * rd;
  if (lhs == rhs) return 0;  // impossible for square-free d > 1, kept for safety
  return lhs > rhs ? rs : cs;
}

double QuadraticValue::ToDouble() const {
  return srgcut::ToDouble(rational_) +
         srgcut::ToDouble(surd_) * std::sqrt(static_cast<double>(radicand_));
}

std::string QuadraticValue::ToString() const {
  if (is_rational()) return srgcut::ToString(rational_);
  std::ostringstream out;
  if (rational_.numerator() != 0) {
    out << srgcut::ToString(rational_) << (surd_.numerator() > 0 ? "+" : "-");
  } else if (surd_.numerator() < 0) {
    out << "-";
  }
  const Rational c = surd_.numerator() > 0 ? surd_ : -surd_;
  if (c != Rational(1)) out << srgcut::ToString(c) << "*";
  out << "sqrt(" << radicand_ << ")";
  return out.str();
}

namespace {

int64_t CommonRadicand(const QuadraticValue& a, const QuadraticValue& b) {
  if (a.is_rational()) return b.radicand();
  if (b.is_rational()) return a.radicand();
  if (a.radicand() != b.radicand()) {
    throw std::domain_error("quadratic values over different radicands: " +
                            std::to_string(a.radicand()) + " vs " +
                            std::to_string(b.radicand()));
  }
  return a.radicand();
}

}  // namespace

QuadraticValue operator+(const QuadraticValue& a, const QuadraticValue& b) {
  const int64_t d = CommonRadicand(a, b);
  return {a.rational_ + b.rational_, a.surd_ + b.surd_, d};
}

QuadraticValue operator-(const QuadraticValue& a, const QuadraticValue& b) {
  return a + (-b);
}

QuadraticValue operator*(const QuadraticValue& a, const QuadraticValue& b) {
  const int64_t d = CommonRadicand(a, b);
  return {a.rational_ * b.rational_ + a.surd_ * b.surd_ * d,
          a.rational_ * b.surd_ + a.surd_ * b.rational_, d};
}

QuadraticValue operator/(const QuadraticValue& a, const Rational& b) {
  if (b.numerator() == 0) throw std::domain_error("division by zero");
  return {a.rational_ / b, a.surd_ / b, a.radicand_};
}

}  // namespace srgcut
