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

#include "lefforge/errors.hpp"
#include "lefforge/linalg.hpp"
#include "lefforge/monomial.hpp"
#include "lefforge/permutation.hpp"
#include "lefforge/polynomial.hpp"
#include "lefforge/rational.hpp"
#include "lefforge/symmetric.hpp"
#include "oracles.hpp"

namespace lefforge {
namespace {

Polynomial P(const char* text, int n) { return parse_polynomial(text, n); }

Monomial M(std::vector<int> e) { return Monomial(std::move(e)); }

Polynomial e1(int n) { return elementary_symmetric(n, 1, all_variables(n)); }

// --- rationals ---

TEST(Rational, ParseAndCanonicalize) {
  EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("-2"), Rational(-2));
  EXPECT_EQ(Rational(3, -6).to_string(), "-1/2");
  EXPECT_THROW(Rational::parse("1/0"), ValidationError);
  EXPECT_THROW(Rational::parse("abc"), ValidationError);
  EXPECT_THROW(Rational(1, 2) / Rational(0), ValidationError);
}

TEST(Rational, FieldLawsOnRandomValues) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 99999);
  for (int i = 0; i < 500; ++i) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(Rational, NoOverflowOnLargeProducts) {
  Rational r(1);
  for (int i = 0; i < 40; ++i) r *= Rational(1000000007L, 3);
  for (int i = 0; i < 40; ++i) r /= Rational(1000000007L, 3);
  EXPECT_EQ(r, Rational(1));
}

// --- monomials ---

TEST(Monomial, GrlexOrder) {
  GrlexGreater gt;
  EXPECT_TRUE(gt(M({2, 0}), M({1, 1})));
  EXPECT_TRUE(gt(M({1, 1}), M({0, 2})));
  EXPECT_TRUE(gt(M({0, 0, 2}), M({1, 0, 0})));  // degree first
  EXPECT_TRUE(gt(M({1, 0, 0}), M({0, 1, 0})));
  EXPECT_FALSE(gt(M({1, 1}), M({1, 1})));
}

TEST(Monomial, CountsMatchBinomials) {
  for (int n = 1; n <= 6; ++n)
    for (int d = 0; d <= 8; ++d) {
      const auto ms = monomials_of_degree(n, d);
      EXPECT_EQ(ms.size(), oracle::choose(n + d - 1, d)) << n << " " << d;
      EXPECT_EQ(count_monomials(n, d), ms.size());
      EXPECT_TRUE(std::is_sorted(ms.begin(), ms.end(), GrlexGreater{}));
    }
}

// --- parser / printer ---

TEST(Parse, SpecExamples) {
  const auto p = P("x1^2 + 2*x1*x2", 2);
  EXPECT_EQ(p.term_count(), 2u);
  EXPECT_EQ(p.coefficient(M({2, 0})), Rational(1));
  EXPECT_EQ(p.coefficient(M({1, 1})), Rational(2));
  EXPECT_TRUE(P("0", 3).is_zero());
  EXPECT_THROW(P("(nonsense", 2), ParseError);
}

TEST(Parse, Errors) {
  EXPECT_THROW(P("x3", 2), ParseError);
  EXPECT_THROW(P("x0", 2), ParseError);
  EXPECT_THROW(P("x1 x2", 2), ParseError);  // no implicit multiplication
  EXPECT_THROW(P("x1 +", 2), ParseError);
  EXPECT_THROW(P("1/0*x1", 2), ParseError);
  EXPECT_THROW(P("", 2), ParseError);
  try {
    P("x1 + + x2", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_GT(e.position(), 0u);
  }
}

TEST(Parse, GrammarDetails) {
  EXPECT_EQ(P("-x1 + 3/2*x2^2", 2).coefficient(M({0, 2})), Rational(3, 2));
  EXPECT_EQ(P("-x1", 2).coefficient(M({1, 0})), Rational(-1));
  EXPECT_EQ(P(" x1 * x1 ", 2), P("x1^2", 2));
  EXPECT_THROW(P("2*3*x1", 2), ParseError);  // one coefficient per term
  EXPECT_EQ(P("x1 - x1", 2), Polynomial(2));
}

TEST(Print, Canonical) {
  EXPECT_EQ(P("x2 + x1^2 - 1", 2).to_string(), "x1^2 + x2 - 1");
  EXPECT_EQ(P("1", 2).to_string(), "1");
  EXPECT_EQ(P("-x1*x2", 2).to_string(), "-x1*x2");
  EXPECT_EQ(Polynomial(3).to_string(), "0");
}

TEST(Parse, RoundTripRandomCorpus) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const auto p = oracle::random_polynomial(rng, n, 1 + static_cast<int>(rng() % 6), 4);
    const auto text = p.to_string();
    const auto q = P(text.c_str(), n);
    EXPECT_EQ(q, p) << text;
    EXPECT_EQ(q.to_string(), text);
  }
}

// --- arithmetic ---

TEST(Arithmetic, SpecExamples) {
  EXPECT_EQ(P("x1+x2", 2) * P("x1-x2", 2), P("x1^2 - x2^2", 2));
  const auto p = P("3*x1^2 - x2 + 7/3", 2);
  EXPECT_TRUE((p + p * Rational(-1)).is_zero());
  const auto e = e1(3);
  EXPECT_EQ(e * e, P("x1^2+x2^2+x3^2+2*x1*x2+2*x1*x3+2*x2*x3", 3));
}

TEST(Arithmetic, AmbientMismatch) {
  EXPECT_THROW(P("x1", 2) + P("x1", 3), ValidationError);
  EXPECT_THROW(P("x1", 2) * P("x1", 3), ValidationError);
}

TEST(Arithmetic, AgreesWithPointEvaluation) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto a = oracle::random_polynomial(rng, n, 5, 3);
    const auto b = oracle::random_polynomial(rng, n, 5, 3);
    const auto pt = oracle::random_point(rng, n);
    EXPECT_EQ(oracle::eval(a * b, pt), oracle::eval(a, pt) * oracle::eval(b, pt));
    EXPECT_EQ(oracle::eval(a - b, pt), oracle::eval(a, pt) - oracle::eval(b, pt));
    EXPECT_EQ(oracle::eval(a.pow(3), pt), oracle::eval(a * a * a, pt));
    const auto prod = a * b;
    for (const auto& [m, c] : prod.terms()) EXPECT_FALSE(c.is_zero());
  }
}

TEST(Arithmetic, Homogeneity) {
  EXPECT_EQ(P("x1^2 + x1*x2", 2).homogeneous_degree(), 2);
  EXPECT_FALSE(P("x1^2 + x2", 2).homogeneous_degree().has_value());
  EXPECT_FALSE(Polynomial(2).homogeneous_degree().has_value());
}

// --- permutations ---

TEST(Permutation, SpecExamples) {
  const auto s12 = Permutation::transposition(3, 0, 1);
  EXPECT_EQ(apply_permutation(s12, P("x1^2*x3", 3)), P("x2^2*x3", 3));
  const auto p = P("x1 + 2*x2 - 5*x3^2", 3);
  EXPECT_EQ(apply_permutation(Permutation::identity(3), p), p);
  const auto c = Permutation::cycle(3, {0, 1, 2});
  EXPECT_EQ(apply_permutation(c, P("x1+2*x2+3*x3", 3)), P("x2+2*x3+3*x1", 3));
}

TEST(Permutation, Validation) {
  EXPECT_THROW(Permutation({0, 0, 1}), ValidationError);
  EXPECT_THROW(apply_permutation(Permutation::identity(2), P("x1", 3)), ValidationError);
}

// Pins the convention: substituting by sigma then tau equals substituting by
// tau * sigma, where (tau * sigma)(i) = tau(sigma(i)).
TEST(Permutation, ActionLaw) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    for (int trial = 0; trial < 40; ++trial) {
      const auto& s = perms[rng() % perms.size()];
      const auto& t = perms[rng() % perms.size()];
      const auto p = oracle::random_polynomial(rng, n, 6, 3);
      EXPECT_EQ(apply_permutation(t, apply_permutation(s, p)), apply_permutation(t * s, p));
      EXPECT_EQ(apply_permutation(s.inverse(), apply_permutation(s, p)), p);
      const auto q = oracle::random_polynomial(rng, n, 4, 2);
      EXPECT_EQ(apply_permutation(s, p * q), apply_permutation(s, p) * apply_permutation(s, q));
    }
  }
}

TEST(Permutation, CycleType) {
  EXPECT_EQ(Permutation::cycle(5, {0, 2, 4}).cycle_type(), (std::vector<int>{3, 1, 1}));
  EXPECT_EQ(all_permutations(4).size(), 24u);
}

// --- symmetric functions ---

TEST(Symmetric, ElementaryExamples) {
  EXPECT_EQ(elementary_symmetric(3, 2, all_variables(3)), P("x1*x2+x1*x3+x2*x3", 3));
  EXPECT_EQ(elementary_symmetric(4, 1, all_variables(4)), P("x1+x2+x3+x4", 4));
  for (int n = 1; n <= 7; ++n)
    for (int d = 1; d <= n; ++d)
      EXPECT_EQ(elementary_symmetric(n, d, all_variables(n)).term_count(),
                static_cast<std::size_t>(oracle::choose(n, d)));
  EXPECT_THROW(elementary_symmetric(3, 4, all_variables(3)), ValidationError);
  EXPECT_THROW(elementary_symmetric(3, 0, all_variables(3)), ValidationError);
}

TEST(Symmetric, PowerSums) {
  EXPECT_EQ(power_sum(2, 2, {0, 1}), P("x1^2+x2^2", 2));
  EXPECT_EQ(power_sum(4, 1, all_variables(4)), elementary_symmetric(4, 1, all_variables(4)));
  EXPECT_THROW(power_sum(3, 2, {}), ValidationError);
}

TEST(Symmetric, NewtonIdentity) {
  for (int n = 3; n <= 6; ++n) {
    const auto v = all_variables(n);
    const auto e1 = elementary_symmetric(n, 1, v), e2 = elementary_symmetric(n, 2, v),
               e3 = elementary_symmetric(n, 3, v);
    EXPECT_EQ(power_sum(n, 3, v), e1.pow(3) - Rational(3) * e1 * e2 + Rational(3) * e3) << n;
  }
}

TEST(Symmetric, SpechtBasis) {
  const auto b4 = specht_basis(4);
  ASSERT_EQ(b4.size(), 2u);
  EXPECT_EQ(b4[0], P("x1-x3", 4) * P("x2-x4", 4));
  EXPECT_EQ(b4[1], P("x1-x2", 4) * P("x3-x4", 4));
}

TEST(Symmetric, SpechtCountsAndRank) {
  EXPECT_THROW(specht_basis(3), ValidationError);
  for (int n = 4; n <= 7; ++n) {
    const auto b = specht_basis(n);
    EXPECT_EQ(b.size(), static_cast<std::size_t>(n * (n - 3) / 2));
    EXPECT_EQ(polynomial_span_rank(b), b.size());
    for (const auto& p : b) EXPECT_EQ(p.homogeneous_degree(), 2);
  }
}

TEST(Symmetric, SubstituteLinear) {
  const auto repl = P("-x2-x3", 3);
  EXPECT_EQ(substitute_linear(P("x1^2", 3), 0, repl), P("x2^2+2*x2*x3+x3^2", 3));
  const auto p = P("x2*x3 + x3^2", 3);
  EXPECT_EQ(substitute_linear(p, 0, repl), p);
  for (int n = 2; n <= 6; ++n) {
    auto r = Polynomial(n) - e1(n) + Polynomial::variable(n, 0);
    EXPECT_TRUE(substitute_linear(e1(n), 0, r).is_zero());
  }
  EXPECT_THROW(substitute_linear(p, 0, P("x2^2", 3)), ValidationError);
}

TEST(Symmetric, SubstitutionIsHomomorphism) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const auto a = oracle::random_polynomial(rng, 4, 4, 2, true);
    const auto b = oracle::random_polynomial(rng, 4, 4, 3, true);
    const auto r = oracle::random_polynomial(rng, 4, 3, 1, true);
    EXPECT_EQ(substitute_linear(a * b, 2, r), substitute_linear(a, 2, r) * substitute_linear(b, 2, r));
    const auto s = substitute_linear(b, 2, r);
    EXPECT_TRUE(s.is_zero() || s.homogeneous_degree() == 3);
  }
}

TEST(Symmetric, Jacobian) {
  EXPECT_EQ(jacobian_determinant({P("x1^2", 3), P("x2^2", 3), P("x3^2", 3)}), P("8*x1*x2*x3", 3));
  const auto f = P("x1^2 + x2*x3", 3);
  EXPECT_TRUE(jacobian_determinant({f, f, P("x3^2", 3)}).is_zero());
  EXPECT_THROW(jacobian_determinant({P("x1", 2)}), ValidationError);
}

// Jacobian of a linear system is the constant determinant of its matrix.
TEST(Symmetric, JacobianOfLinearMap) {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 5; ++n) {
    std::vector<Polynomial> fs;
    Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      Polynomial f(n);
      for (int j = 0; j < n; ++j) {
        const Rational c(static_cast<long>(rng() % 7) - 3);
        m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = c;
        f += Polynomial::variable(n, j) * c;
      }
      fs.push_back(f);
    }
    const auto det = jacobian_determinant(fs);
    EXPECT_EQ(det.is_zero(), m.rank() < static_cast<std::size_t>(n));
  }
}

// --- linear algebra ---

TEST(Linalg, RankAndNullspace) {
  Matrix m(3, 3);
  long v[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = Rational(v[i][j]);
  EXPECT_EQ(m.rank(), 2u);
  const auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_TRUE(is_zero_vector(m.apply(ns[0])));
}

TEST(Linalg, SparseAndModularAgreeWithDense) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int cols = 1 + static_cast<int>(rng() % 12);
    const int rows = 1 + static_cast<int>(rng() % 14);
    std::vector<SparseRow> sparse;
    std::vector<Vector> dense;
    for (int r = 0; r < rows; ++r) {
      SparseRow row;
      Vector d(static_cast<std::size_t>(cols));
      for (int c = 0; c < cols; ++c)
        if (rng() % 3 == 0) {
          const Rational x(static_cast<long>(rng() % 5) - 2, 1 + static_cast<long>(rng() % 3));
          if (x.is_zero()) continue;
          row.emplace_back(c, x);
          d[static_cast<std::size_t>(c)] = x;
        }
      // Duplicate some rows so rank deficiency is common.
      if (r > 0 && rng() % 4 == 0) {
        row = sparse.back();
        d = dense.back();
      }
      sparse.push_back(row);
      dense.push_back(d);
    }
    const auto expected = rank_of(dense, static_cast<std::size_t>(cols));
    EXPECT_EQ(sparse_rank(sparse, cols), expected);
    const auto mod = modular_rank(sparse, cols);
    ASSERT_TRUE(mod.has_value());
    EXPECT_LE(*mod, expected);
    SparseEchelon ech(cols);
    for (const auto& row : sparse) ech.insert(row);
    ech.finalize();
    EXPECT_EQ(ech.rank(), expected);
    for (const auto& row : ech.rows()) EXPECT_EQ(row.front().second, Rational(1));
  }
}

}  // namespace
}  // namespace lefforge
