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

#ifndef LEFFORGE_POLYNOMIAL_HPP
#define LEFFORGE_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lefforge/monomial.hpp"
#include "lefforge/permutation.hpp"
#include "lefforge/rational.hpp"

namespace lefforge {

/// Element of Q[x_1, ..., x_n] stored as a graded-lex ordered term map.
/// Zero coefficients are never stored, so structural equality is equality.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  explicit Polynomial(int n = 0) : n_(n) {}

  static Polynomial constant(int n, const Rational& c);
  static Polynomial variable(int n, int index);
  static Polynomial term(const Monomial& m, const Rational& c);

  int ambient() const noexcept { return n_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  /// The common degree of all terms; nullopt for zero or mixed degrees.
  std::optional<int> homogeneous_degree() const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  Polynomial pow(int k) const;
  Polynomial derivative(int var) const;

  /// Canonical text form, re-readable by parse_polynomial.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.to_string();
  }

 private:
  void require_same_ambient(const Polynomial& o) const;

  int n_;
  TermMap terms_;
};

/// f^sigma: substitutes x_i -> x_{sigma(i)}. Under (s*t)(i) = s(t(i)) this
/// satisfies apply(t, apply(s, f)) == apply(t * s, f).
Polynomial apply_permutation(const Permutation& sigma, const Polynomial& p);

/// Ring homomorphism x_var -> replacement; the replacement must be linear.
Polynomial substitute_linear(const Polynomial& p, int var,
                             const Polynomial& replacement);

/// Drops variable `var` (which must not occur) and renumbers the others.
Polynomial drop_variable(const Polynomial& p, int var);

/// Reads the text grammar: expr := term (('+'|'-') term)*, terms are an
/// optional INT or INT/INT coefficient followed by '*'-joined factors
/// x<k> or x<k>^<e>. Variables are 1-based in text. A '-' may open the
/// expression. Throws ParseError with a character position.
Polynomial parse_polynomial(std::string_view text, int n);

}  // namespace lefforge

#endif  // LEFFORGE_POLYNOMIAL_HPP
