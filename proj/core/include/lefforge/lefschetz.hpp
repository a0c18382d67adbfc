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

#ifndef LEFFORGE_LEFSCHETZ_HPP
#define LEFFORGE_LEFSCHETZ_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lefforge/quotient.hpp"

namespace lefforge {

/// Graded subspace V = (+) V_d of a quotient A, each V_d given by a basis of
/// coordinate vectors in the standard basis of A_d. Holds a reference to the
/// quotient, which must outlive it.
class GradedSubspaceFamily {
 public:
  /// bases[d] spans V_d; degrees past bases.size() are zero. Throws if a
  /// listed basis is dependent or has the wrong length.
  GradedSubspaceFamily(const GradedQuotient& ambient, std::vector<std::vector<Vector>> bases);

  /// V = A.
  static GradedSubspaceFamily full(const GradedQuotient& q);

  const GradedQuotient& ambient() const noexcept { return *q_; }
  int max_degree() const noexcept { return static_cast<int>(bases_.size()) - 1; }
  std::size_t dim(int d) const;
  const std::vector<Vector>& basis(int d) const;
  HilbertFunction hilbert() const;

 private:
  const GradedQuotient* q_;
  std::vector<std::vector<Vector>> bases_;
};

struct LefschetzReport {
  Polynomial element;
  bool weak = false;
  bool strong = false;
  bool symmetric = false;  // Hilbert function symmetric about c/2
  int c = 0;               // initial degree + end degree
  std::vector<std::pair<int, std::size_t>> weak_ranks;    // (d, rank of V_d -> V_{d+1})
  std::vector<std::pair<int, std::size_t>> strong_ranks;  // (i, rank of l^{c-2i}: V_i -> V_{c-i})
  std::vector<int> weak_failures;
  std::vector<int> strong_failures;
};

/// Both notions are evaluated; the two entry points differ only in name.
/// Throws UnstableSubspaceError if l V_d is not contained in V_{d+1}.
LefschetzReport is_weak_lefschetz(const GradedSubspaceFamily& space, const Polynomial& ell);
LefschetzReport is_strong_lefschetz(const GradedSubspaceFamily& space, const Polynomial& ell);

std::size_t sperner_number(const GradedSubspaceFamily& space);
std::size_t sperner_number(const GradedQuotient& q);

/// dim A/lA = sum_d (dim A_d - rank(x l: A_{d-1} -> A_d)).
std::size_t coinvariant_dimension(const GradedQuotient& q, const Polynomial& ell);

/// e_1 in n variables.
Polynomial linear_sum(int n);

struct SlpSearchResult {
  std::optional<Polynomial> element;
  std::optional<LefschetzReport> report;
  int tried = 0;
};

/// e_1 first (unless skipped), then a fixed-seed sample of `samples` linear
/// forms with integer coefficients in [-9, 9]. Best effort only.
SlpSearchResult find_strong_lefschetz_element(const GradedQuotient& q, bool skip_e1 = false,
                                              int samples = 20, std::uint64_t seed = 20100521);

}  // namespace lefforge

#endif  // LEFFORGE_LEFSCHETZ_HPP
