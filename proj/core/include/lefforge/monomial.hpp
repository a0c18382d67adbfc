// Copyright 2026 The LefForge Authors
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

#ifndef LEFFORGE_MONOMIAL_HPP
#define LEFFORGE_MONOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace lefforge {

/// Exponent vector x_1^{e_1} ... x_n^{e_n}. Variables are 0-based in the API.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(int n) { return Monomial(std::vector<int>(n, 0)); }
  static Monomial variable(int n, int index);

  int size() const noexcept { return static_cast<int>(exps_.size()); }
  int degree() const noexcept { return degree_; }
  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  std::span<const int> exponents() const noexcept { return exps_; }

  Monomial operator*(const Monomial& other) const;
  // Divides by x_i; requires exponent(i) > 0.
  Monomial without(int i) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// Graded lexicographic with x_1 > x_2 > ... > x_n; returns true when `a`
/// comes strictly before `b`, i.e. a > b in the term order.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// All monomials of degree d in n variables, in descending graded-lex order.
std::vector<Monomial> monomials_of_degree(int n, int d);

/// C(n+d-1, d).
std::uint64_t count_monomials(int n, int d);

std::uint64_t binomial(int n, int k);

}  // namespace lefforge

#endif  // LEFFORGE_MONOMIAL_HPP
