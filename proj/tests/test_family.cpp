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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "lefforge/errors.hpp"
#include "lefforge/family.hpp"
#include "lefforge/invariants.hpp"
#include "lefforge/lefschetz.hpp"
#include "lefforge/symmetric.hpp"
#include "lefforge/symmetry.hpp"
#include "oracles.hpp"

namespace lefforge {
namespace {

Polynomial e1(int n) { return elementary_symmetric(n, 1, all_variables(n)); }

FamilyParams random_params(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  for (;;) {
    FamilyParams p(dist(rng), dist(rng), dist(rng), dist(rng));
    for (const auto& v : p.values())
      if (!v.is_zero()) return p;
  }
}

// f_1 straight from its definition, built term by term.
Polynomial oracle_f1(int n, const FamilyParams& p) {
  Polynomial f(n);
  const auto x = [n](int i) { return Polynomial::variable(n, i); };
  f += x(0) * x(0) * p[0];
  for (int i = 1; i < n; ++i) {
    f += x(0) * x(i) * p[1];
    f += x(i) * x(i) * p[2];
    for (int j = i + 1; j < n; ++j) f += x(i) * x(j) * p[3];
  }
  return f;
}

TEST(FamilyParams, ParseAndNormalize) {
  const auto p = FamilyParams::parse("5,2,0,-2/3");
  EXPECT_EQ(p, FamilyParams(5, 2, 0, Rational(-2, 3)));
  EXPECT_EQ(p.to_string(), "(5,2,0,-2/3)");
  EXPECT_EQ(FamilyParams(0, 4, 2, 6).normalized(), FamilyParams(0, 1, Rational(1, 2), Rational(3, 2)));
  EXPECT_THROW(FamilyParams::parse("1,2,3"), ValidationError);
  EXPECT_THROW(FamilyParams::parse("1,2,x,4"), ValidationError);
  EXPECT_THROW(build_family(3, FamilyParams(0, 0, 0, 0)), ValidationError);
  EXPECT_THROW(build_family(1, FamilyParams(1, 0, 0, 0)), ValidationError);
}

TEST(BuildFamily, Examples) {
  for (int n = 2; n <= 5; ++n) {
    const auto fs = family_generators(n, FamilyParams(1, 0, 0, 0));
    for (int i = 0; i < n; ++i) EXPECT_EQ(fs[static_cast<std::size_t>(i)], Polynomial::variable(n, i).pow(2));
  }
  const auto degenerate = build_family(3, FamilyParams(1, 2, 1, 2));
  for (const auto& f : degenerate.generators()) EXPECT_EQ(f, e1(3).pow(2));
  EXPECT_FALSE(degenerate.is_ci());
  EXPECT_TRUE(build_family(5, FamilyParams(5, 2, 0, 2)).is_ci());
}

TEST(BuildFamily, MatchesClosedFormAndCycle) {
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 6; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      const auto p = random_params(rng, -5, 5);
      const auto fs = family_generators(n, p);
      EXPECT_EQ(fs[0], oracle_f1(n, p));
      std::vector<int> all(static_cast<std::size_t>(n));
      std::iota(all.begin(), all.end(), 0);
      const auto sigma = Permutation::cycle(n, all);
      Polynomial f = fs[0];
      for (int i = 1; i < n; ++i) {
        f = apply_permutation(sigma, f);
        EXPECT_EQ(f, fs[static_cast<std::size_t>(i)]);
      }
    }
}

TEST(E1sq, Examples) {
  EXPECT_FALSE(e1sq_in_ideal(build_family(3, FamilyParams(1, 0, 0, 0))));
  EXPECT_FALSE(e1sq_in_ideal(build_family(3, FamilyParams(1, 0, 0, 1))));
  EXPECT_TRUE(e1sq_in_ideal(build_family(3, FamilyParams(1, 2, 1, 2))));
  // Summing the f_i gives e_1^2 times (p0 + (n-1) p2) exactly when
  // 2(p0 + (n-1) p2) = 2 p1 + (n-2) p3; (3,1,0,2) gives 6 != 4.
  EXPECT_FALSE(e1sq_in_ideal(build_family(3, FamilyParams(3, 1, 0, 2))));
  EXPECT_TRUE(e1sq_in_ideal(build_family(3, FamilyParams(1, 0, 0, 2))));
}

TEST(E1sq, AgreesWithLinearCondition) {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 6; ++n) {
    int hits = 0;
    for (int trial = 0; trial < 40; ++trial) {
      auto p = random_params(rng, -3, 3);
      // Push every other sample onto the hyperplane so both outcomes occur.
      if (trial % 2 == 0 && n > 2) {
        const Rational rhs = Rational(2) * (p[0] + Rational(n - 1) * p[2]) - Rational(2) * p[1];
        p = FamilyParams(p[0], p[1], p[2], rhs / Rational(n - 2));
      }
      const bool expected = oracle::e1sq_linear_condition(n, p.values());
      hits += expected;
      EXPECT_EQ(e1sq_in_ideal(build_family(n, p)), expected) << n << " " << p.to_string();
    }
    if (n > 2) {
      EXPECT_GT(hits, 0);
    }
  }
}

TEST(N3, Examples) {
  EXPECT_EQ(n3_resultant_value(1, 2), Rational(24));
  EXPECT_TRUE(n3_check(1, 2).is_ci);
  EXPECT_TRUE(n3_resultant_value(3, 1).is_zero());
  EXPECT_FALSE(n3_check(3, 1).is_ci);
  EXPECT_TRUE(n3_resultant_value(0, 5).is_zero());
  EXPECT_FALSE(n3_check(0, 5).is_ci);
}

TEST(N3, ValueMatchesEvaluation) {
  const auto sub = n3_subfamily(2, 5);
  // f = (e - 2x)(e - 5x) at (x,y,z) = (1,2,3): e = 6, (4)(1) = 4
  EXPECT_EQ(oracle::eval(sub[0], {1, 2, 3}), Rational(4));
  for (int a = -3; a <= 8; ++a)
    for (int b = -3; b <= 8; ++b) {
      const Rational ra(a), rb(b);
      const Rational direct = ra * rb * (ra - 3) * (rb - 3) * (ra * rb - ra - 2 * rb) * (ra * rb - 2 * ra - rb);
      EXPECT_EQ(n3_resultant_value(ra, rb), direct);
    }
}

TEST(N3, ZeroLocusEquivalenceOnRationalGrid) {
  int disagreements = 0;
  for (int a = -6; a <= 5; ++a)
    for (int b = -6; b <= 5; ++b) disagreements += !n3_check(Rational(a, 2), Rational(b, 2)).agrees();
  EXPECT_EQ(disagreements, 0);
}

TEST(Fiber, Examples) {
  const auto r = fiber_restriction(build_family(3, FamilyParams(1, 0, 0, 0)));
  ASSERT_EQ(r.fs.size(), 2u);
  EXPECT_EQ(r.fs[0], parse_polynomial("x1^2", 2));
  EXPECT_EQ(r.fs[1], parse_polynomial("x2^2", 2));
  EXPECT_FALSE(r.has_zero());
}

TEST(Fiber, MatchesSubstitution) {
  std::mt19937_64 rng(3);
  for (int n = 3; n <= 5; ++n) {
    const auto inst = build_family(n, random_params(rng, -4, 4));
    const auto r = fiber_restriction(inst);
    for (int trial = 0; trial < 5; ++trial) {
      auto rest = oracle::random_point(rng, n - 1);
      std::vector<Rational> full{Rational()};
      for (const auto& v : rest) {
        full[0] -= v;
        full.push_back(v);
      }
      for (int i = 1; i < n; ++i)
        EXPECT_EQ(oracle::eval(r.fs[static_cast<std::size_t>(i - 1)], rest),
                  oracle::eval(inst.generators()[static_cast<std::size_t>(i)], full));
    }
  }
}

TEST(Grid, ParseAndPoints) {
  const auto g = GridSpec::parse("0..2");
  // Projective points of {0,1,2}^4 \ 0: tuples with gcd 1 plus none lost to scaling by 2.
  std::set<std::array<int, 4>> primitive;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= 2; ++d) {
          if (a + b + c + d == 0) continue;
          const bool all_even = a % 2 == 0 && b % 2 == 0 && c % 2 == 0 && d % 2 == 0;
          if (!all_even) primitive.insert({a, b, c, d});
        }
  EXPECT_EQ(g.points().size(), primitive.size());
  EXPECT_EQ(g.points().front(), FamilyParams(0, 0, 0, 1));

  const auto h = GridSpec::parse("1:0..1/2:3,5:-1");
  EXPECT_EQ(h.axes()[1], (std::vector<Rational>{0, Rational(1, 2)}));
  EXPECT_EQ(h.points().size(), 4u);
  EXPECT_EQ(GridSpec::single(FamilyParams(5, 2, 0, 2)).points(), (std::vector<FamilyParams>{FamilyParams(5, 2, 0, 2)}));
  EXPECT_THROW(GridSpec::parse("3..1"), ValidationError);
  EXPECT_THROW(GridSpec::parse("0..1:2"), ValidationError);
  EXPECT_TRUE(GridSpec::parse("0").points().empty());

  std::set<std::string> seen;
  for (const auto& p : GridSpec::default_grid().points()) EXPECT_TRUE(seen.insert(p.normalized().to_string()).second);
}

TEST(Grid, DeterministicSample) {
  const auto pts = GridSpec::parse("0..7").points();
  const auto a = deterministic_sample(pts, 200);
  EXPECT_EQ(a.size(), 200u);
  EXPECT_EQ(a, deterministic_sample(pts, 200));
  EXPECT_NE(a, deterministic_sample(pts, 200, 1));
  // Original order preserved.
  std::size_t cursor = 0;
  for (const auto& p : a) {
    while (cursor < pts.size() && !(pts[cursor] == p)) ++cursor;
    ASSERT_LT(cursor, pts.size());
    ++cursor;
  }
  EXPECT_EQ(deterministic_sample(pts, pts.size() + 5).size(), pts.size());
}

TEST(Scan, DegenerateTuplesAreNonStandard) {
  const std::vector<FamilyParams> tuples{{5, 2, 0, 2}, {0, 0, 3, 8}, {7, 7, 3, 8}, {4, 3, 2, 6},
                                         {6, 0, 0, 4}, {6, 3, 0, 2}, {1, 1, 3, 8}};
  const auto report = scan_parameters(5, YoungSubgroup({2, 3}), tuples);
  ASSERT_EQ(report.rows.size(), tuples.size());
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    EXPECT_EQ(report.rows[i].params, tuples[i]);
    EXPECT_EQ(report.rows[i].cls, ScanClass::NonStandardGrading) << tuples[i].to_string();
  }
  EXPECT_EQ(report.count(ScanClass::NonStandardGrading), tuples.size());
  EXPECT_EQ(report.degenerate().size(), tuples.size());
  EXPECT_EQ(report.genericity_ratio(), 0.0);
}

TEST(Scan, MonomialPointIsStandard) {
  const auto row = classify_point(5, YoungSubgroup({2, 3}), FamilyParams(1, 0, 0, 0));
  EXPECT_EQ(row.cls, ScanClass::StandardGrading);
  EXPECT_FALSE(row.e1sq_in_ideal);
  EXPECT_EQ(row.invariant_hilbert.values, row.degree_one_hilbert.values);
  EXPECT_EQ(classify_point(3, YoungSubgroup({3}), FamilyParams(1, 2, 1, 2)).cls, ScanClass::NotCi);
  EXPECT_EQ(to_string(ScanClass::NonStandardGrading), "non-standard-grading");
}

TEST(Scan, RandomPointsMostlyStandard) {
  std::mt19937_64 rng(20100521);
  std::vector<FamilyParams> pts;
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  while (pts.size() < 100) {
    FamilyParams p(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                   Rational(num(rng), den(rng)));
    pts.push_back(p);
  }
  const auto report = scan_parameters(4, YoungSubgroup({2, 2}), pts);
  ASSERT_TRUE(report.genericity_ratio().has_value());
  EXPECT_GT(*report.genericity_ratio(), 0.5);
  // Order and content are independent of scheduling.
  const auto again = scan_parameters(4, YoungSubgroup({2, 2}), pts);
  for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_EQ(report.rows[i].cls, again.rows[i].cls);
}

TEST(Properties, EquivarianceForAllN) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 6; ++n)
    for (int trial = 0; trial < 10; ++trial)
      EXPECT_TRUE(equivariance_check(family_generators(n, random_params(rng, -7, 7))).ok);
}

// Strong Lefschetz for e_1, Sperner equality and I + e_1 R = (x_i^2, e_1)
// whenever e_1^2 is not in I.
TEST(Properties, E1IsStrongLefschetzOffTheHyperplane) {
  std::mt19937_64 rng(13);
  int checked = 0;
  for (int n = 3; n <= 4; ++n)
    for (int trial = 0; trial < 12; ++trial) {
      const auto inst = build_family(n, random_params(rng, 0, 7));
      if (!inst.is_ci() || e1sq_in_ideal(inst)) continue;
      ++checked;
      const auto& q = inst.quotient();
      const auto report = is_strong_lefschetz(GradedSubspaceFamily::full(q), e1(n));
      EXPECT_TRUE(report.strong) << inst.params().to_string();
      EXPECT_EQ(coinvariant_dimension(q, e1(n)), sperner_number(q));
      EXPECT_TRUE(squares_in_ideal_plus_e1(inst));
    }
  EXPECT_GT(checked, 10);
}

TEST(Properties, E1SquaredBranch) {
  int checked = 0;
  for (int n = 3; n <= 4; ++n)
    for (const auto& p : GridSpec::parse("0..3").points()) {
      if (!oracle::e1sq_linear_condition(n, p.values())) continue;
      const auto inst = build_family(n, p);
      if (!inst.is_ci()) continue;
      ASSERT_TRUE(e1sq_in_ideal(inst));
      const auto r = fiber_restriction(inst);
      if (r.has_zero()) continue;
      EXPECT_TRUE(equivariance_check(r.fs).ok) << p.to_string();
      const auto fiber_ci = is_complete_intersection(r.presentation());
      if (!fiber_ci.is_ci) continue;
      ++checked;
      const auto found = find_strong_lefschetz_element(inst.quotient(), true);
      EXPECT_TRUE(found.element.has_value()) << n << " " << p.to_string();
      // e_1 itself fails: e_1^2 = 0 in A.
      EXPECT_FALSE(is_strong_lefschetz(GradedSubspaceFamily::full(inst.quotient()), e1(n)).strong);
    }
  EXPECT_GT(checked, 0);
}

}  // namespace
}  // namespace lefforge
