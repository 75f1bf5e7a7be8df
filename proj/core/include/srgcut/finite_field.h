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

#ifndef SRGCUT_FINITE_FIELD_H_
#define SRGCUT_FINITE_FIELD_H_

#include <optional>
#include <vector>

namespace srgcut {

// GF(q) for prime powers q <= 64. Elements are the integers 0..q-1: the
// base-p digits of an element are its polynomial coefficients, so for prime q
// this is plain arithmetic mod q. Multiplication uses log/antilog tables
// built from a shipped primitive polynomial.
class FiniteField {
 public:
  static constexpr int kMaxOrder = 64;

  // Throws std::domain_error unless q is a prime power in [2, 64].
  explicit FiniteField(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return e_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  // Throws std::domain_error for a == 0.
  int inv(int a) const;
  int primitive_element() const { return exp_[1 % (q_ - 1)]; }
  bool is_square(int a) const { return a != 0 && log_[a] % 2 == 0; }

 private:
  int q_, p_, e_;
  std::vector<int> add_;
  std::vector<int> neg_;
  std::vector<int> exp_;
  std::vector<int> log_;
};

// (p, e) with q = p^e, or nullopt when q is not a prime power.
std::optional<std::pair<int, int>> PrimePowerDecomposition(int q);

}  // namespace srgcut

#endif  // SRGCUT_FINITE_FIELD_H_
