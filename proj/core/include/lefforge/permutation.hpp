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

#ifndef LEFFORGE_PERMUTATION_HPP
#define LEFFORGE_PERMUTATION_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "lefforge/monomial.hpp"

namespace lefforge {

/// Bijection of {0, ..., n-1}. Composition follows (s * t)(i) = s(t(i)).
class Permutation {
 public:
  Permutation() = default;
  /// `images[i]` is the image of i; throws unless bijective.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);
  /// Cycle i_0 -> i_1 -> ... -> i_k -> i_0.
  static Permutation cycle(int n, std::initializer_list<int> points);
  static Permutation cycle(int n, const std::vector<int>& points);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  /// Cycle lengths in non-increasing order, fixed points included.
  std::vector<int> cycle_type() const;

  /// The substitution x_i -> x_{s(i)} applied to a monomial.
  Monomial act(const Monomial& m) const;

  std::string to_string() const;

  friend Permutation operator*(const Permutation& s, const Permutation& t);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// All n! permutations in lexicographic order of their image lists.
std::vector<Permutation> all_permutations(int n);

}  // namespace lefforge

#endif  // LEFFORGE_PERMUTATION_HPP
