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

#ifndef LEFFORGE_INVARIANTS_HPP
#define LEFFORGE_INVARIANTS_HPP

#include <string>
#include <vector>

#include "lefforge/lefschetz.hpp"
#include "lefforge/quotient.hpp"

namespace lefforge {

/// S_{n_1} x ... x S_{n_r} acting on consecutive blocks of variables:
/// block i holds x_{n_1+...+n_{i-1}+1}, ..., x_{n_1+...+n_i}.
class YoungSubgroup {
 public:
  explicit YoungSubgroup(std::vector<int> sizes);

  static YoungSubgroup trivial(int n) { return YoungSubgroup(std::vector<int>(static_cast<std::size_t>(n), 1)); }
  static YoungSubgroup full(int n) { return YoungSubgroup({n}); }

  int n() const noexcept { return n_; }
  int block_count() const noexcept { return static_cast<int>(sizes_.size()); }
  const std::vector<int>& sizes() const noexcept { return sizes_; }
  int block_start(int i) const { return starts_[static_cast<std::size_t>(i)]; }
  std::vector<int> block_variables(int i) const;
  long long order() const;
  bool is_trivial() const;
  std::string label() const;  // e.g. "S2xS3"

  /// Adjacent transpositions inside each block; they generate the group.
  std::vector<Permutation> generators() const;

  /// Orbit representative: exponents sorted non-increasingly inside blocks.
  Monomial canonical(const Monomial& m) const;
  long long orbit_size(const Monomial& m) const;
  /// The distinct monomials in the orbit of m.
  std::vector<Monomial> orbit(const Monomial& m) const;
  /// Sum of the distinct monomials in the orbit of m.
  Polynomial orbit_sum(const Monomial& m) const;
  /// Canonical monomials of degree d, descending grlex; their orbit sums
  /// form a basis of (R^G)_d.
  std::vector<Monomial> orbit_representatives(int d) const;

 private:
  int n_ = 0;
  std::vector<int> sizes_;
  std::vector<int> starts_;
};

/// A Young subgroup on arbitrary variable sets, moved to consecutive blocks.
struct BlockRelabeling {
  YoungSubgroup group;
  /// Variable relabel(i) of the consecutive layout corresponds to user
  /// variable i: apply_permutation(relabel, f) rewrites f in the new layout.
  Permutation relabel;
};

/// `sets` are 0-based variable sets partitioning 0..n-1.
BlockRelabeling relabel_blocks(int n, const std::vector<std::vector<int>>& sets);

/// Bases of (A^G)_d as coordinate vectors in the standard basis of A_d.
struct InvariantSlice {
  std::vector<std::vector<Vector>> bases;

  HilbertFunction hilbert() const;
  std::size_t dim(int d) const;
};

/// Throws ValidationError unless the ideal is stable under G.
void require_stable(const GradedQuotient& q, const YoungSubgroup& g);

/// Echelon basis of (A^G)_d: the image of the averaging projector, which is
/// spanned by the classes of monomial orbit sums.
std::vector<Vector> reynolds_basis(const GradedQuotient& q, const YoungSubgroup& g, int d);
InvariantSlice invariant_slice(const GradedQuotient& q, const YoungSubgroup& g);

HilbertFunction invariant_hilbert_function(const GradedQuotient& q, const YoungSubgroup& g);

/// Hilbert function of the subalgebra generated by (A^G)_1.
HilbertFunction degree_one_generated_hf(const GradedQuotient& q, const InvariantSlice& slice);
HilbertFunction degree_one_generated_hf(const GradedQuotient& q, const YoungSubgroup& g);

/// Degrees of a minimal homogeneous generating set of A^G (graded
/// Nakayama), sorted ascending.
std::vector<int> minimal_generator_degrees(const GradedQuotient& q, const InvariantSlice& slice);
std::vector<int> minimal_generator_degrees(const GradedQuotient& q, const YoungSubgroup& g);

struct VandermondeGenerators {
  std::vector<Polynomial> gs;
  std::vector<int> degrees;
};

/// Within block i: g_{i,k} = sum_j x_{ij}^k f_{ij} for k = 0..n_i-1. Requires
/// f_i^sigma = f_{sigma(i)} for sigma in G and homogeneous f's.
VandermondeGenerators vandermonde_generators(const std::vector<Polynomial>& fs,
                                             const YoungSubgroup& g);

struct IntersectionDegree {
  int degree = 0;
  std::size_t generated_rank = 0;  // span of h g_k, h in (R^G)
  std::size_t projected_rank = 0;  // averaging image of I_d
  std::size_t joint_rank = 0;
  bool equal() const { return generated_rank == projected_rank && projected_rank == joint_rank; }
};

struct IntersectionReport {
  bool equal = true;
  int bound = 0;
  int safe_bound = 0;
  bool below_safe_bound = false;
  std::vector<IntersectionDegree> degrees;
};

/// Compares (g_1..g_n) R^G with I cap R^G degree by degree inside (R^G)_d.
IntersectionReport ideal_intersection_equality(const GradedQuotient& q, const YoungSubgroup& g,
                                               const VandermondeGenerators& gens, int bound);

/// 2 * socle degree + 2.
int default_intersection_bound(const GradedQuotient& q);

/// Strong Lefschetz check of ell on the invariant slice. ell must be invariant.
LefschetzReport invariant_slp_check(const GradedQuotient& q, const YoungSubgroup& g,
                                    const Polynomial& ell);
LefschetzReport invariant_slp_check(const GradedQuotient& q, const YoungSubgroup& g,
                                    const InvariantSlice& slice, const Polynomial& ell);

}  // namespace lefforge

#endif  // LEFFORGE_INVARIANTS_HPP
