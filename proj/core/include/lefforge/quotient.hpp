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

#ifndef LEFFORGE_QUOTIENT_HPP
#define LEFFORGE_QUOTIENT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lefforge/linalg.hpp"
#include "lefforge/polynomial.hpp"

namespace lefforge {

/// Homogeneous generators of an ideal I in Q[x_1..x_n].
class GradedIdealPresentation {
 public:
  /// Throws ValidationError on zero or inhomogeneous generators.
  GradedIdealPresentation(int n, std::vector<Polynomial> generators);

  /// Parses each string with the polynomial grammar.
  static GradedIdealPresentation parse(int n, const std::vector<std::string>& generators);

  int ambient() const noexcept { return n_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  int max_degree() const;
  /// Sum of (deg f_i - 1): the socle degree when this is a complete intersection.
  int ci_socle_degree() const;

 private:
  int n_;
  std::vector<Polynomial> gens_;
  std::vector<int> degrees_;
};

/// Sequence d -> dim V_d with trailing zeros trimmed.
struct HilbertFunction {
  std::vector<long long> values;

  HilbertFunction() = default;
  explicit HilbertFunction(std::vector<long long> v);

  long long at(int d) const;
  long long total() const;
  long long max() const;
  bool symmetric() const;
  std::string to_string() const;
  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

/// Coefficients of prod_i (1 + T + ... + T^{deg_i - 1}): the Hilbert
/// function of a complete intersection with generator degrees `degrees`.
HilbertFunction ci_hilbert_function(const std::vector<int>& degrees);

/// Data for one graded piece R_d -> A_d.
struct DegreePiece {
  int degree = 0;
  std::vector<Monomial> monomials;  // descending grlex
  std::unordered_map<Monomial, int, MonomialHash> index;
  std::vector<SparseRow> ideal_rows;  // RREF basis of I_d, pivot coefficient 1
  std::vector<int> standard;          // columns of the standard monomials
  // For column j: position in `standard` if >= 0, else -(pivot row + 1).
  std::vector<int> role;

  std::size_t dim_r() const noexcept { return monomials.size(); }
  std::size_t dim_i() const noexcept { return ideal_rows.size(); }
  std::size_t dim_a() const noexcept { return standard.size(); }
};

/// A = R/I truncated at a top degree, each piece built by exact elimination.
class GradedQuotient {
 public:
  /// Builds degrees 0..top_degree. I_d is spanned by m * f_i, deg m = d - deg f_i.
  static GradedQuotient build(const GradedIdealPresentation& pres, int top_degree);

  const GradedIdealPresentation& presentation() const noexcept { return pres_; }
  int ambient() const noexcept { return pres_.ambient(); }
  int top_degree() const noexcept { return static_cast<int>(pieces_.size()) - 1; }
  const DegreePiece& piece(int d) const;

  std::size_t dim(int d) const { return piece(d).dim_a(); }
  /// True when A vanishes at the top built degree, hence in all higher ones.
  bool vanishes_at_top() const { return pieces_.back().dim_a() == 0; }
  /// Largest d with A_d != 0 among the built degrees.
  int socle_degree() const;

  std::vector<Monomial> standard_monomials(int d) const;

  /// Coordinates of the class of p in the standard-monomial basis of A_d.
  /// Every term of p must have degree d.
  Vector normal_form(const Polynomial& p, int d) const;
  /// Same, for a nonzero homogeneous p.
  Vector normal_form(const Polynomial& p) const;
  Vector normal_form(const Monomial& m) const;

  /// Polynomial supported on standard monomials with the given coordinates.
  Polynomial lift(const Vector& coords, int d) const;

  /// Class of a*b where a in A_da and b in A_db.
  Vector multiply(const Vector& a, int da, const Vector& b, int db) const;

  /// Matrix of x ell: A_d -> A_{d+k} for homogeneous ell of degree k.
  Matrix mult_map_matrix(const Polynomial& ell, int d) const;

  bool in_ideal(const Polynomial& p) const;

 private:
  GradedQuotient(GradedIdealPresentation pres) : pres_(std::move(pres)) {}

  GradedIdealPresentation pres_;
  std::vector<DegreePiece> pieces_;
};

HilbertFunction hilbert_function(const GradedQuotient& q);

struct CompleteIntersectionCheck {
  bool is_ci = false;
  int bound = 0;  // degree D at which A_D must vanish
  HilbertFunction expected;
  HilbertFunction actual;
  std::optional<int> first_deviation;
  std::string diagnostic;
};

/// n forms in n variables are a regular sequence iff A vanishes at
/// D = sum(deg f_i - 1) + 1.
CompleteIntersectionCheck is_complete_intersection(const GradedIdealPresentation& pres);
/// Same check on an already built quotient (must reach degree D).
CompleteIntersectionCheck is_complete_intersection(const GradedQuotient& q);

/// Nonzero class in A_c, dim A_c = 1, and annihilated by every variable.
bool socle_check(const GradedQuotient& q, const Polynomial& candidate);

}  // namespace lefforge

#endif  // LEFFORGE_QUOTIENT_HPP
