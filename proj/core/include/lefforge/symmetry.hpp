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

#ifndef LEFFORGE_SYMMETRY_HPP
#define LEFFORGE_SYMMETRY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lefforge/quotient.hpp"

namespace lefforge {

/// Partition of n: non-increasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// (n - i, i); i = 0 gives the one-row partition (n).
  static Partition two_row(int n, int i);

  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const noexcept { return parts_; }
  /// "[3,2]"; the one-row shape prints as "[n,0]" to match two-row labels.
  std::string label() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Partitions of n in reverse lexicographic order: (n), (n-1,1), (n-2,2), ...
std::vector<Partition> partitions(int n);

struct CycleType {
  Partition parts;
  long long centralizer = 0;  // z_mu = prod i^{m_i} m_i!
  long long class_size = 0;   // n! / z_mu

  explicit CycleType(Partition mu);
  /// A permutation with this cycle type (consecutive cycles).
  Permutation representative() const;
};

std::vector<CycleType> conjugacy_classes(int n);

/// chi_lambda(mu) by the Murnaghan-Nakayama border-strip recursion.
long long character_value(const Partition& lambda, const CycleType& mu);
long long character_value(const Partition& lambda, const Partition& mu);

/// n! / product of hook lengths.
long long irrep_dimension(const Partition& lambda);

long long factorial(int n);

/// Character values for all (lambda, class) pairs of S_n, computed once.
class CharacterTable {
 public:
  explicit CharacterTable(int n);

  int n() const noexcept { return n_; }
  const std::vector<Partition>& irreps() const noexcept { return irreps_; }
  const std::vector<CycleType>& classes() const noexcept { return classes_; }
  long long value(std::size_t irrep, std::size_t cls) const {
    return values_[irrep * classes_.size() + cls];
  }
  long long dimension(std::size_t irrep) const { return dims_[irrep]; }

 private:
  int n_;
  std::vector<Partition> irreps_;
  std::vector<CycleType> classes_;
  std::vector<long long> values_;
  std::vector<long long> dims_;
};

/// True when every generator's image under sigma lies in the ideal.
bool ideal_is_stable(const GradedQuotient& q, const Permutation& sigma);

/// Trace of sigma on A_d as trace on R_d minus trace on I_d.
Rational trace_on_degree(const GradedQuotient& q, const Permutation& sigma, int d);

using IsotypicMultiplicities = std::vector<std::pair<Partition, long long>>;

/// Multiplicity of each irreducible of S_n in A_d, in reverse-lex order of
/// partitions. Throws InconsistencyError on a non-integral or negative value.
IsotypicMultiplicities isotypic_multiplicities(const GradedQuotient& q, int d);

/// d -> multiplicity of V^lambda in A_d times dim V^lambda.
HilbertFunction isotypic_hilbert_function(const GradedQuotient& q, const Partition& lambda);

struct EquivarianceResult {
  bool ok = true;
  // First failure: (transposition index k meaning (k k+1), generator i).
  std::optional<std::pair<int, int>> witness;
  std::string description;
};

/// f_i^sigma == f_{sigma(i)} for all adjacent transpositions sigma.
EquivarianceResult equivariance_check(const std::vector<Polynomial>& fs);
/// Same condition for an explicit list of permutations.
EquivarianceResult equivariance_check(const std::vector<Polynomial>& fs,
                                      const std::vector<Permutation>& generators);

struct FixedLineReport {
  bool ok = false;
  int n = 0;
  std::vector<Polynomial> fixed_basis;  // S_n-fixed part of R_1 e_1
  std::vector<Polynomial> sign_basis;   // sign-isotypic part, reported for n = 2
};

/// Averages R_1 e_1 over S_n and compares the fixed space with span{e_1^2}.
FixedLineReport fixed_line_check(int n);

}  // namespace lefforge

#endif  // LEFFORGE_SYMMETRY_HPP
