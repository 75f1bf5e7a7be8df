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

#include "srgcut/finite_field.h"

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

namespace srgcut {
namespace {

struct PrimitivePolynomial {
  int p, e;
  // Low-order coefficients c_0..c_{e-1} of the monic x^e + ... + c_0.
  std::array<int, 6> low;
};

// Conway polynomials for the non-prime orders up to 64.
constexpr PrimitivePolynomial kPolynomials[] = {
    {2, 2, {1, 1}},              // x^2 + x + 1
    {2, 3, {1, 1, 0}},           // x^3 + x + 1
    {2, 4, {1, 1, 0, 0}},        // x^4 + x + 1
    {2, 5, {1, 0, 1, 0, 0}},     // x^5 + x^2 + 1
    {2, 6, {1, 1, 0, 1, 1, 0}},  // x^6 + x^4 + x^3 + x + 1
    {3, 2, {2, 2}},              // x^2 + 2x + 2
    {3, 3, {1, 2, 0}},           // x^3 + 2x + 1
    {5, 2, {2, 4}},              // x^2 + 4x + 2
    {7, 2, {3, 6}},              // x^2 + 6x + 3
};

bool IsPrime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

std::optional<std::pair<int, int>> PrimePowerDecomposition(int q) {
  if (q < 2) return std::nullopt;
  int p = 2;
  while (q % p != 0) ++p;
  int e = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1 || !IsPrime(p)) return std::nullopt;
  return std::make_pair(p, e);
}

FiniteField::FiniteField(int q) : q_(q) {
  const auto pe = PrimePowerDecomposition(q);
  if (!pe || q > kMaxOrder) {
    throw std::domain_error("GF(" + std::to_string(q) +
                            "): order must be a prime power in [2, 64]");
  }
  p_ = pe->first;
  e_ = pe->second;

  // Digit-wise addition mod p.
  add_.resize(q_ * q_);
  neg_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    for (int b = 0; b < q_; ++b) {
      int sum = 0, place = 1, x = a, y = b;
      for (int i = 0; i < e_; ++i) {
        sum += ((x % p_ + y % p_) % p_) * place;
        x /= p_;
        y /= p_;
        place *= p_;
      }
      add_[a * q_ + b] = sum;
      if (sum == 0) neg_[a] = b;
    }
  }

  // Powers of the generator: x for extension fields, a primitive root mod p
  // otherwise.
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  if (e_ == 1) {
    for (int g = 1; g < q_; ++g) {
      int x = 1;
      bool primitive = true;
      for (int i = 0; i < q_ - 1; ++i) {
        exp_[i] = x;
        x = x * g % q_;
        if (x == 1 && i < q_ - 2) {
          primitive = false;
          break;
        }
      }
      if (primitive) break;
    }
  } else {
    const PrimitivePolynomial* poly = nullptr;
    for (const auto& cand : kPolynomials) {
      if (cand.p == p_ && cand.e == e_) poly = &cand;
    }
    std::vector<int> coeffs(e_, 0);  // current power as a polynomial
    coeffs[0] = 1;
    for (int i = 0; i < q_ - 1; ++i) {
      int value = 0;
      for (int d = e_ - 1; d >= 0; --d) value = value * p_ + coeffs[d];
      exp_[i] = value;
      // Multiply by x and reduce with x^e = -(c_{e-1} x^{e-1} + ... + c_0).
      const int top = coeffs[e_ - 1];
      for (int d = e_ - 1; d > 0; --d) coeffs[d] = coeffs[d - 1];
      coeffs[0] = 0;
      for (int d = 0; d < e_; ++d) {
        coeffs[d] = ((coeffs[d] - top * poly->low[d]) % p_ + p_) % p_;
      }
    }
  }
  std::vector<bool> seen(q_, false);
  for (int i = 0; i < q_ - 1; ++i) {
    if (exp_[i] == 0 || seen[exp_[i]]) {
      throw std::logic_error("GF(" + std::to_string(q) +
                             "): generator is not primitive");
    }
    seen[exp_[i]] = true;
    log_[exp_[i]] = i;
  }
}

int FiniteField::inv(int a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

}  // namespace srgcut
