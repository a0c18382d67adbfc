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

#include <numeric>

#include "lefforge/errors.hpp"
#include "lefforge/family.hpp"
#include "lefforge/symmetric.hpp"
#include "lefforge/symmetry.hpp"
#include "oracles.hpp"

namespace lefforge {
namespace {

Polynomial P(const char* text, int n) { return parse_polynomial(text, n); }

GradedQuotient polynomial_ring(int n, int top) {
  return GradedQuotient::build(GradedIdealPresentation(n, {}), top);
}

GradedQuotient squares(int n) {
  return build_family(n, FamilyParams(1, 0, 0, 0)).quotient();
}

long long multiplicity(const IsotypicMultiplicities& m, const Partition& lambda) {
  for (const auto& [mu, k] : m)
    if (mu == lambda) return k;
  ADD_FAILURE() << "missing " << lambda.label();
  return -1;
}

// Trace from the full induced matrix on A_d: normal forms of sigma applied to
// each standard monomial.
Rational brute_trace(const GradedQuotient& q, const Permutation& s, int d) {
  const auto monos = q.standard_monomials(d);
  Rational t;
  for (std::size_t j = 0; j < monos.size(); ++j) t += q.normal_form(s.act(monos[j]))[j];
  return t;
}

TEST(Partitions, Enumeration) {
  const auto p5 = partitions(5);
  EXPECT_EQ(p5.size(), 7u);
  EXPECT_EQ(p5.front(), Partition({5}));
  EXPECT_EQ(p5[1], Partition({4, 1}));
  EXPECT_EQ(p5[2], Partition({3, 2}));
  EXPECT_EQ(p5.back(), Partition({1, 1, 1, 1, 1}));
  EXPECT_EQ(Partition::two_row(5, 0).label(), "[5,0]");
  EXPECT_EQ(Partition::two_row(5, 2).label(), "[3,2]");
  EXPECT_THROW(Partition({1, 2}), ValidationError);
  EXPECT_THROW(Partition::two_row(5, 3), ValidationError);
}

TEST(Characters, Examples) {
  for (int n = 2; n <= 7; ++n) {
    EXPECT_EQ(character_value(Partition({n - 1, 1}), Partition(std::vector<int>(static_cast<std::size_t>(n), 1))),
              n - 1);
    for (const auto& mu : partitions(n)) EXPECT_EQ(character_value(Partition({n}), mu), 1);
  }
  EXPECT_EQ(character_value(Partition({2, 2}), Partition({2, 1, 1})), 0);
  EXPECT_THROW(character_value(Partition({2, 2}), Partition({3})), ValidationError);
}

TEST(Characters, SignCharacter) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& c : conjugacy_classes(n)) {
      const int sign = (n - c.parts.length()) % 2 == 0 ? 1 : -1;
      EXPECT_EQ(character_value(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), c), sign);
    }
}

TEST(Characters, TwoRowAgainstSubsetCounting) {
  for (int n = 2; n <= 7; ++n)
    for (const auto& c : conjugacy_classes(n)) {
      const auto rep = c.representative();
      EXPECT_EQ(rep.cycle_type(), c.parts.parts());
      for (int k = 0; 2 * k <= n; ++k)
        EXPECT_EQ(character_value(Partition::two_row(n, k), c), oracle::two_row_character(k, rep.images()))
            << n << " " << k << " " << c.parts.label();
    }
}

TEST(Characters, ClassSizes) {
  for (int n = 1; n <= 7; ++n) {
    long long total = 0;
    for (const auto& c : conjugacy_classes(n)) total += c.class_size;
    EXPECT_EQ(total, factorial(n));
  }
  // Brute force: count permutations of S_5 by cycle type.
  std::map<std::vector<int>, long long> counts;
  for (const auto& s : all_permutations(5)) ++counts[s.cycle_type()];
  for (const auto& c : conjugacy_classes(5)) EXPECT_EQ(counts[c.parts.parts()], c.class_size);
}

TEST(Characters, ColumnOrthogonalityAndDimensions) {
  for (int n = 1; n <= 7; ++n) {
    const CharacterTable table(n);
    long long squares = 0;
    for (std::size_t i = 0; i < table.irreps().size(); ++i) {
      squares += table.dimension(i) * table.dimension(i);
      for (std::size_t j = 0; j < table.irreps().size(); ++j) {
        Rational inner;
        for (std::size_t c = 0; c < table.classes().size(); ++c)
          inner += Rational(table.value(i, c) * table.value(j, c), table.classes()[c].centralizer);
        EXPECT_EQ(inner, Rational(i == j ? 1 : 0)) << n;
      }
    }
    EXPECT_EQ(squares, factorial(n));
  }
}

TEST(Dimensions, Examples) {
  EXPECT_EQ(irrep_dimension(Partition({3, 2})), 5);
  EXPECT_EQ(irrep_dimension(Partition({6})), 1);
  EXPECT_EQ(irrep_dimension(Partition({3, 2, 1})), 16);
  for (int n = 2; n <= 9; ++n)
    for (int i = 0; 2 * i <= n; ++i)
      EXPECT_EQ(irrep_dimension(Partition::two_row(n, i)), oracle::choose(n, i) - oracle::choose(n, i - 1));
}

TEST(Trace, Examples) {
  const auto r = polynomial_ring(2, 2);
  EXPECT_EQ(trace_on_degree(r, Permutation::transposition(2, 0, 1), 2), Rational(1));
  const auto q = squares(4);
  for (int d = 0; d <= 4; ++d)
    EXPECT_EQ(trace_on_degree(q, Permutation::identity(4), d), Rational(static_cast<long>(q.dim(d))));
  for (const auto& s : all_permutations(4)) EXPECT_EQ(trace_on_degree(q, s, 0), Rational(1));
}

TEST(Trace, MatchesInducedMatrix) {
  for (const auto& p : {FamilyParams(1, 0, 0, 0), FamilyParams(5, 2, 0, 2), FamilyParams(3, -1, 2, 7)}) {
    const auto inst = build_family(4, p);
    const auto& q = inst.quotient();
    for (const auto& c : conjugacy_classes(4))
      for (int d = 0; d <= 4; ++d)
        EXPECT_EQ(trace_on_degree(q, c.representative(), d), brute_trace(q, c.representative(), d));
  }
}

TEST(Trace, UnstableIdealRejected) {
  const auto q = GradedQuotient::build(GradedIdealPresentation::parse(2, {"x1^2", "x2^3"}), 3);
  EXPECT_FALSE(ideal_is_stable(q, Permutation::transposition(2, 0, 1)));
  EXPECT_THROW(trace_on_degree(q, Permutation::transposition(2, 0, 1), 2), ValidationError);
}

TEST(Isotypic, PolynomialRingPieces) {
  for (int n = 3; n <= 6; ++n) {
    const auto r = polynomial_ring(n, 2);
    const auto m1 = isotypic_multiplicities(r, 1);
    EXPECT_EQ(multiplicity(m1, Partition::two_row(n, 0)), 1);
    EXPECT_EQ(multiplicity(m1, Partition::two_row(n, 1)), 1);
    const auto m2 = isotypic_multiplicities(r, 2);
    EXPECT_EQ(multiplicity(m2, Partition::two_row(n, 0)), 2);
    EXPECT_EQ(multiplicity(m2, Partition::two_row(n, 1)), 2);
    if (n >= 4) {
      EXPECT_EQ(multiplicity(m2, Partition::two_row(n, 2)), 1);
    }
    long long others = 0;
    for (const auto& [lambda, k] : m2)
      if (lambda.length() > 2) others += k;
    EXPECT_EQ(others, 0) << n;
  }
  const auto m3 = isotypic_multiplicities(polynomial_ring(3, 2), 2);
  EXPECT_EQ(multiplicity(m3, Partition({1, 1, 1})), 0);
}

// Full-group averaging with characters from the subset-count oracle and
// traces from induced matrices, compared with the class-sum computation.
TEST(Isotypic, ClassSumsMatchGroupAveraging) {
  for (int n = 3; n <= 5; ++n) {
    const auto inst = build_family(n, FamilyParams(5, 2, 1, 2));
    ASSERT_TRUE(inst.is_ci());
    const auto& q = inst.quotient();
    const auto perms = all_permutations(n);
    for (int d = 0; d <= n; ++d) {
      const auto m = isotypic_multiplicities(q, d);
      std::vector<Rational> traces;
      for (const auto& s : perms) traces.push_back(brute_trace(q, s, d));
      for (int k = 0; 2 * k <= n; ++k) {
        Rational sum;
        for (std::size_t i = 0; i < perms.size(); ++i)
          sum += Rational(oracle::two_row_character(k, perms[i].images())) * traces[i];
        sum /= Rational(factorial(n));
        EXPECT_EQ(Rational(multiplicity(m, Partition::two_row(n, k))), sum) << n << " " << d << " " << k;
      }
    }
  }
}

TEST(Isotypic, DimensionSumAndAgreementWithMonomialCase) {
  for (int n = 3; n <= 5; ++n) {
    const auto b = squares(n);
    for (const auto& p : {FamilyParams(5, 2, 0, 2), FamilyParams(1, 3, 2, 0), FamilyParams(4, 3, 2, 6)}) {
      const auto inst = build_family(n, p);
      if (!inst.is_ci()) continue;
      const auto& q = inst.quotient();
      for (int d = 0; d <= n; ++d) {
        const auto m = isotypic_multiplicities(q, d);
        long long total = 0;
        for (const auto& [lambda, k] : m) total += k * irrep_dimension(lambda);
        EXPECT_EQ(total, static_cast<long long>(q.dim(d)));
        EXPECT_EQ(m, isotypic_multiplicities(b, d)) << n << " " << p.to_string() << " " << d;
      }
    }
  }
}

TEST(IsotypicHilbert, Examples) {
  const auto q4 = squares(4);
  EXPECT_EQ(isotypic_hilbert_function(q4, Partition({3, 1})).values, (std::vector<long long>{0, 3, 3, 3}));
  for (int n = 3; n <= 5; ++n) {
    const auto q = squares(n);
    EXPECT_EQ(isotypic_hilbert_function(q, Partition({n})).values,
              std::vector<long long>(static_cast<std::size_t>(n + 1), 1));
  }
  EXPECT_EQ(isotypic_hilbert_function(squares(5), Partition({3, 2})).values,
            (std::vector<long long>{0, 0, 5, 5}));
}

TEST(IsotypicHilbert, TwoRowFormula) {
  for (int n = 3; n <= 5; ++n) {
    const auto q = squares(n);
    for (int i = 0; 2 * i <= n; ++i) {
      std::vector<long long> expected(static_cast<std::size_t>(n - i + 1), 0);
      for (int d = i; d <= n - i; ++d)
        expected[static_cast<std::size_t>(d)] = oracle::choose(n, i) - oracle::choose(n, i - 1);
      EXPECT_EQ(isotypic_hilbert_function(q, Partition::two_row(n, i)).values, expected);
    }
  }
}

TEST(Equivariance, Examples) {
  std::vector<Polynomial> squares3{P("x1^2", 3), P("x2^2", 3), P("x3^2", 3)};
  EXPECT_TRUE(equivariance_check(squares3).ok);
  for (int n = 2; n <= 6; ++n)
    for (const auto& p : {FamilyParams(1, 2, 3, 4), FamilyParams(0, 0, 1, 0), FamilyParams(7, -1, 0, 3)})
      EXPECT_TRUE(equivariance_check(family_generators(n, p)).ok);
  const auto bad = equivariance_check({P("x1^2", 3), P("x2^2", 3), P("x1*x2 + x3^2", 3)});
  EXPECT_FALSE(bad.ok);
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_FALSE(bad.description.empty());
}

TEST(Equivariance, ExplicitGenerators) {
  std::vector<Polynomial> fs{P("x1^2", 3), P("x2^2", 3), P("x3^3", 3)};
  EXPECT_TRUE(equivariance_check(fs, {Permutation::transposition(3, 0, 1)}).ok);
  EXPECT_FALSE(equivariance_check(fs, {Permutation::transposition(3, 1, 2)}).ok);
}

TEST(FixedLine, Examples) {
  for (int n = 3; n <= 6; ++n) {
    const auto r = fixed_line_check(n);
    EXPECT_TRUE(r.ok) << n;
    ASSERT_EQ(r.fixed_basis.size(), 1u);
    EXPECT_EQ(polynomial_span_rank({r.fixed_basis[0], elementary_symmetric(n, 1, all_variables(n)).pow(2)}), 1u);
  }
  const auto r2 = fixed_line_check(2);
  EXPECT_TRUE(r2.ok);
  ASSERT_EQ(r2.fixed_basis.size(), 1u);
  ASSERT_EQ(r2.sign_basis.size(), 1u);
  const auto e1 = P("x1 + x2", 2);
  EXPECT_EQ(polynomial_span_rank({r2.fixed_basis[0], e1 * e1}), 1u);
  EXPECT_EQ(polynomial_span_rank({r2.sign_basis[0], e1 * P("x1 - x2", 2)}), 1u);
  EXPECT_THROW(fixed_line_check(1), ValidationError);
}

// The (n-2, 2) character projector fixes every Specht polynomial.
TEST(Specht, ProjectorFixesSpan) {
  for (int n = 4; n <= 6; ++n) {
    const auto perms = all_permutations(n);
    const Partition lambda = Partition::two_row(n, 2);
    const Rational scale(irrep_dimension(lambda), factorial(n));
    for (const auto& f : specht_basis(n)) {
      Polynomial image(n);
      for (const auto& s : perms) {
        const long long chi = oracle::two_row_character(2, s.images());
        if (chi != 0) image += apply_permutation(s, f) * Rational(chi);
      }
      EXPECT_EQ(image * scale, f) << n;
    }
  }
}

}  // namespace
}  // namespace lefforge
