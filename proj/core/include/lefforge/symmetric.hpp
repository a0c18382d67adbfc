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

#ifndef LEFFORGE_SYMMETRIC_HPP
#define LEFFORGE_SYMMETRIC_HPP

#include <vector>

#include "lefforge/polynomial.hpp"

namespace lefforge {

/// e_d in the variables listed in `subset` (0-based), embedded in n variables.
Polynomial elementary_symmetric(int n, int d, const std::vector<int>& subset);

/// p_d = sum of x_i^d over `subset`.
Polynomial power_sum(int n, int d, const std::vector<int>& subset);

/// 0, 1, ..., n-1.
std::vector<int> all_variables(int n);

/// Specht polynomials of shape (n-2, 2):
///   (x1 - xj)(x2 - xk), 3 <= j < k <= n,  then  (x1 - x2)(x3 - xk), 4 <= k <= n.
std::vector<Polynomial> specht_basis(int n);

/// det(d f_i / d x_j) by Laplace expansion over column subsets.
Polynomial jacobian_determinant(const std::vector<Polynomial>& fs);

/// Dimension of the Q-span of the given polynomials.
std::size_t polynomial_span_rank(const std::vector<Polynomial>& polys);

}  // namespace lefforge

#endif  // LEFFORGE_SYMMETRIC_HPP
