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

#ifndef LEFFORGE_FAMILY_HPP
#define LEFFORGE_FAMILY_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lefforge/invariants.hpp"
#include "lefforge/quotient.hpp"

namespace lefforge {

/// (p0, p1, p2, p3), not all zero. The generator attached to x_1 is
///   p0 x1^2 + p1 (x2 + ... + xn) x1 + p2 (x2^2 + ... + xn^2) + p3 sum_{2<=i<j} xi xj.
class FamilyParams {
 public:
  FamilyParams(Rational p0, Rational p1, Rational p2, Rational p3);
  explicit FamilyParams(const std::array<Rational, 4>& p);

  /// "p0,p1,p2,p3" with INT or INT/INT entries.
  static FamilyParams parse(std::string_view text);

  const Rational& operator[](std::size_t k) const { return p_[k]; }
  const std::array<Rational, 4>& values() const noexcept { return p_; }
  /// Projective representative: first nonzero coordinate scaled to 1.
  FamilyParams normalized() const;
  std::string to_string() const;  // "(5,2,0,2)"

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;

 private:
  std::array<Rational, 4> p_;
};

/// f_1 from the closed form above; f_i is f_1 with x_1 and x_i exchanged,
/// which equals f_1 moved by the (i-1)-th power of the cycle (1 2 ... n).
std::vector<Polynomial> family_generators(int n, const FamilyParams& params);

class FamilyInstance {
 public:
  FamilyInstance(int n, FamilyParams params, std::vector<Polynomial> fs);

  int n() const noexcept { return n_; }
  const FamilyParams& params() const noexcept { return params_; }
  const std::vector<Polynomial>& generators() const noexcept { return fs_; }
  GradedIdealPresentation presentation() const;

  /// Built on first use up to degree n + 1 (one past the CI socle degree).
  /// Throws ValidationError when some f_i is zero.
  const GradedQuotient& quotient() const;
  const CompleteIntersectionCheck& ci() const;
  bool is_ci() const { return ci().is_ci; }

 private:
  struct Lazy;
  void ensure_built() const;

  int n_;
  FamilyParams params_;
  std::vector<Polynomial> fs_;
  std::shared_ptr<Lazy> lazy_;
};

/// Requires n >= 2; verifies the equivariance condition before returning.
FamilyInstance build_family(int n, const FamilyParams& params);

/// e_1^2 in span{f_1..f_n}: rank test on the coefficient rows in R_2.
bool e1sq_in_ideal(const FamilyInstance& inst);

/// For CI members with e_1^2 not in I: every x_i^2 lies in I + e_1 R.
bool squares_in_ideal_plus_e1(const FamilyInstance& inst);

// --- n = 3 subfamily -----------------------------------------------------------

/// ab(a-3)(b-3)(ab-a-2b)(ab-2a-b).
Rational n3_resultant_value(const Rational& a, const Rational& b);

/// (e-ax)(e-bx), (e-ay)(e-by), (e-az)(e-bz) with e = x + y + z.
std::vector<Polynomial> n3_subfamily(const Rational& a, const Rational& b);

struct N3Check {
  Rational a, b;
  Rational value;
  bool is_ci = false;
  bool agrees() const { return value.is_zero() != is_ci; }
};

N3Check n3_check(const Rational& a, const Rational& b);

// --- fiber substitution ----------------------------------------------------------

struct FiberRestriction {
  /// f_2', ..., f_n' in the n - 1 variables x_2..x_n (renumbered from 1).
  std::vector<Polynomial> fs;
  bool has_zero() const;
  /// Throws ValidationError if some f_i' vanishes.
  GradedIdealPresentation presentation() const;
};

/// Substitutes x_1 -> -(x_2 + ... + x_n) in f_2..f_n and drops x_1.
FiberRestriction fiber_restriction(const FamilyInstance& inst);

// --- scanning ---------------------------------------------------------------------

/// Per-coordinate rational grid. Coordinates are ':'-separated; each is
/// "LO..HI" or "LO..HI/DEN" (LO/DEN, ..., HI/DEN) or a ',' list of
/// rationals. A single coordinate applies to all four.
class GridSpec {
 public:
  explicit GridSpec(std::array<std::vector<Rational>, 4> axes);
  static GridSpec parse(std::string_view text);
  /// 0..8 on every axis.
  static GridSpec default_grid();
  static GridSpec single(const FamilyParams& p);

  const std::array<std::vector<Rational>, 4>& axes() const noexcept { return axes_; }
  /// Lexicographic over the axes, zero tuple skipped, projective duplicates
  /// dropped (first occurrence kept).
  std::vector<FamilyParams> points() const;

 private:
  std::array<std::vector<Rational>, 4> axes_;
};

/// k points chosen by a seeded shuffle, returned in their original order.
std::vector<FamilyParams> deterministic_sample(const std::vector<FamilyParams>& points,
                                               std::size_t k, std::uint64_t seed = 20100521);

/// not-ci: A is not Artinian. For CI points, non-standard-grading whenever
/// K[(A^G)_1] != A^G; otherwise e1sq-in-ideal or standard-grading.
enum class ScanClass { NotCi, E1sqInIdeal, StandardGrading, NonStandardGrading };
std::string to_string(ScanClass c);

struct ScanRow {
  FamilyParams params;
  ScanClass cls = ScanClass::NotCi;
  bool e1sq_in_ideal = false;          // only evaluated for CI points
  HilbertFunction invariant_hilbert;   // empty unless CI
  HilbertFunction degree_one_hilbert;  // empty unless CI
};

struct ScanReport {
  int n = 0;
  std::vector<int> blocks;
  std::vector<ScanRow> rows;

  std::size_t count(ScanClass c) const;
  /// standard / (standard + non-standard); nullopt when both are zero.
  std::optional<double> genericity_ratio() const;
  std::vector<FamilyParams> degenerate() const;
};

ScanRow classify_point(int n, const YoungSubgroup& g, const FamilyParams& params);

/// Points are evaluated in parallel and merged in grid order.
ScanReport scan_parameters(int n, const YoungSubgroup& g, const std::vector<FamilyParams>& points);
ScanReport scan_parameters(int n, const YoungSubgroup& g, const GridSpec& grid);

}  // namespace lefforge

#endif  // LEFFORGE_FAMILY_HPP
