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

#include "lefforge/polynomial.hpp"

#include <cctype>
#include <sstream>

#include "lefforge/errors.hpp"

namespace lefforge {

Polynomial Polynomial::constant(int n, const Rational& c) {
  Polynomial p(n);
  p.add_term(Monomial::one(n), c);
  return p;
}

Polynomial Polynomial::variable(int n, int index) {
  Polynomial p(n);
  p.add_term(Monomial::variable(n, index), Rational(1));
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return std::nullopt;
  }
  return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != n_) throw ValidationError("monomial ambient mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::require_same_ambient(const Polynomial& o) const {
  if (o.n_ != n_) {
    throw ValidationError("polynomial ambient mismatch: " + std::to_string(n_) +
                          " vs " + std::to_string(o.n_));
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ambient(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_ambient(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ambient(b);
  Polynomial out(a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw ValidationError("negative polynomial power");
  Polynomial result = constant(n_, Rational(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= n_) throw ValidationError("variable index out of range");
  Polynomial out(n_);
  for (const auto& [m, c] : terms_) {
    const int e = m[var];
    if (e == 0) continue;
    out.add_term(m.without(var), c * Rational(e));
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational magnitude = negative ? -c : c;
    bool wrote = false;
    if (m.degree() == 0 || magnitude != Rational(1)) {
      os << magnitude;
      wrote = true;
    }
    for (int i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << '*';
      os << 'x' << i + 1;
      if (m[i] > 1) os << '^' << m[i];
      wrote = true;
    }
  }
  return os.str();
}

Polynomial apply_permutation(const Permutation& sigma, const Polynomial& p) {
  if (sigma.size() != p.ambient()) {
    throw ValidationError("permutation length does not match ambient");
  }
  Polynomial out(p.ambient());
  for (const auto& [m, c] : p.terms()) out.add_term(sigma.act(m), c);
  return out;
}

Polynomial substitute_linear(const Polynomial& p, int var,
                             const Polynomial& replacement) {
  if (replacement.ambient() != p.ambient()) {
    throw ValidationError("replacement ambient mismatch");
  }
  if (var < 0 || var >= p.ambient()) throw ValidationError("variable index out of range");
  if (!replacement.is_zero() && replacement.homogeneous_degree() != 1) {
    throw ValidationError("replacement must be a linear form");
  }
  // Powers of the replacement, cached by exponent.
  std::vector<Polynomial> powers{Polynomial::constant(p.ambient(), Rational(1))};
  Polynomial out(p.ambient());
  for (const auto& [m, c] : p.terms()) {
    const int e = m[var];
    while (static_cast<int>(powers.size()) <= e) {
      powers.push_back(powers.back() * replacement);
    }
    std::vector<int> rest(m.exponents().begin(), m.exponents().end());
    rest[static_cast<std::size_t>(var)] = 0;
    out += Polynomial::term(Monomial(std::move(rest)), c) *
           powers[static_cast<std::size_t>(e)];
  }
  return out;
}

Polynomial drop_variable(const Polynomial& p, int var) {
  if (var < 0 || var >= p.ambient()) throw ValidationError("variable index out of range");
  Polynomial out(p.ambient() - 1);
  for (const auto& [m, c] : p.terms()) {
    if (m[var] != 0) throw ValidationError("dropped variable occurs in polynomial");
    std::vector<int> e(m.exponents().begin(), m.exponents().end());
    e.erase(e.begin() + var);
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

// --- parser -----------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n) : text_(text), n_(n) {}

  Polynomial parse() {
    Polynomial result(n_);
    skip_ws();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    for (;;) {
      Polynomial t = parse_term();
      if (negative) t = -t;
      result += t;
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
      ++pos_;
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("syntax error: " + what, pos_);
  }

  std::string read_int() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  int read_small_int() {
    const std::size_t start = pos_;
    const std::string digits = read_int();
    if (digits.size() > 6) throw ParseError("integer too large", start);
    return std::stoi(digits);
  }

  Monomial parse_factor() {
    skip_ws();
    if (peek() != 'x') fail("expected variable 'x<k>'");
    ++pos_;
    const std::size_t index_pos = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected variable index");
    }
    const int index = read_small_int();
    if (index < 1 || index > n_) {
      throw ParseError("variable index x" + std::to_string(index) +
                           " out of range 1.." + std::to_string(n_),
                       index_pos);
    }
    int exponent = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      exponent = read_small_int();
    }
    std::vector<int> e(static_cast<std::size_t>(n_), 0);
    e[static_cast<std::size_t>(index - 1)] = exponent;
    return Monomial(std::move(e));
  }

  Polynomial parse_term() {
    skip_ws();
    Rational coeff(1);
    Monomial mono = Monomial::one(n_);
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      std::string num = read_int();
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        const std::string den = read_int();
        if (den.find_first_not_of('0') == std::string::npos) {
          throw ParseError("zero denominator", start);
        }
        num += "/" + den;
      }
      coeff = Rational::parse(num);
      need_factor = false;
    }
    if (need_factor) mono = parse_factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      mono = mono * parse_factor();
    }
    return Polynomial::term(mono, coeff);
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int n) {
  if (n < 1) throw ValidationError("variable count must be positive");
  return Parser(text, n).parse();
}

}  // namespace lefforge
