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

#include "lefforge/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "lefforge/errors.hpp"
#include "lefforge/lefschetz.hpp"
#include "lefforge/symmetric.hpp"

namespace lefforge {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  std::erase(parts_, 0);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw ValidationError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw ValidationError("partition parts must be non-increasing");
    }
    size_ += parts_[i];
  }
}

Partition Partition::two_row(int n, int i) {
  if (i < 0 || 2 * i > n) throw ValidationError("two-row shape needs 0 <= i <= n/2");
  return Partition({n - i, i});
}

std::string Partition::label() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  if (parts_.size() == 1) os << ",0";
  os << ']';
  return os.str();
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  if (n == 0) {
    out.emplace_back(std::vector<int>{});
    return out;
  }
  rec(n, n);
  return out;
}

long long factorial(int n) {
  if (n < 0 || n > 20) throw ValidationError("factorial argument out of range");
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

CycleType::CycleType(Partition mu) : parts(std::move(mu)) {
  std::map<int, int> mult;
  for (int p : parts.parts()) ++mult[p];
  centralizer = 1;
  for (const auto& [len, m] : mult) {
    for (int k = 0; k < m; ++k) centralizer *= len;
    centralizer *= factorial(m);
  }
  class_size = factorial(parts.size()) / centralizer;
}

Permutation CycleType::representative() const {
  const int n = parts.size();
  std::vector<int> im(static_cast<std::size_t>(n));
  int start = 0;
  for (int len : parts.parts()) {
    for (int k = 0; k < len; ++k) {
      im[static_cast<std::size_t>(start + k)] = start + (k + 1) % len;
    }
    start += len;
  }
  return Permutation(std::move(im));
}

std::vector<CycleType> conjugacy_classes(int n) {
  std::vector<CycleType> out;
  for (auto& p : partitions(n)) out.emplace_back(std::move(p));
  return out;
}

namespace {

// Beta set of lambda with `length` beads.
std::vector<int> beta_set(const std::vector<int>& parts, int length) {
  std::vector<int> beta(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    const int part = i < static_cast<int>(parts.size()) ? parts[static_cast<std::size_t>(i)] : 0;
    beta[static_cast<std::size_t>(i)] = part + (length - 1 - i);
  }
  return beta;
}

std::vector<int> from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int length = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < length; ++i) {
    const int part = beta[static_cast<std::size_t>(i)] - (length - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return parts;
}

long long mn_recurse(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t k,
                     std::map<std::pair<std::vector<int>, std::size_t>, long long>& memo) {
  if (k == mu.size()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int r = mu[k];
  const int length = static_cast<int>(lambda.size());
  const std::vector<int> beta = beta_set(lambda, length);
  long long total = 0;
  for (std::size_t b = 0; b < beta.size(); ++b) {
    const int from = beta[b];
    const int to = from - r;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    int between = 0;
    for (int v : beta) {
      if (v > to && v < from) ++between;
    }
    std::vector<int> next = beta;
    next[b] = to;
    const long long sub = mn_recurse(from_beta(next), mu, k + 1, memo);
    total += (between % 2 ? -sub : sub);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

long long character_value(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw ValidationError("character arguments of different sizes");
  std::map<std::pair<std::vector<int>, std::size_t>, long long> memo;
  return mn_recurse(lambda.parts(), mu.parts(), 0, memo);
}

long long character_value(const Partition& lambda, const CycleType& mu) {
  return character_value(lambda, mu.parts);
}

long long irrep_dimension(const Partition& lambda) {
  const auto& p = lambda.parts();
  // Hook length product accumulated as a rational to stay exact.
  long long num = factorial(lambda.size());
  long long den = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p[i]; ++j) {
      int below = 0;
      for (std::size_t k = i + 1; k < p.size() && p[k] > j; ++k) ++below;
      const int hook = (p[i] - j - 1) + below + 1;
      den *= hook;
      const long long g = std::gcd(num, den);
      num /= g;
      den /= g;
    }
  }
  if (den != 1) throw InconsistencyError("hook length formula gave a non-integer");
  return num;
}

CharacterTable::CharacterTable(int n)
    : n_(n), irreps_(partitions(n)), classes_(conjugacy_classes(n)) {
  values_.reserve(irreps_.size() * classes_.size());
  for (const auto& lambda : irreps_) {
    dims_.push_back(irrep_dimension(lambda));
    for (const auto& mu : classes_) values_.push_back(character_value(lambda, mu));
  }
}

bool ideal_is_stable(const GradedQuotient& q, const Permutation& sigma) {
  for (const auto& f : q.presentation().generators()) {
    if (!q.in_ideal(apply_permutation(sigma, f))) return false;
  }
  return true;
}

namespace {

Rational trace_unchecked(const GradedQuotient& q, const Permutation& sigma, int d) {
  const DegreePiece& p = q.piece(d);
  long long fixed = 0;
  for (const auto& m : p.monomials) {
    if (sigma.act(m) == m) ++fixed;
  }
  Rational ideal_trace;
  for (const auto& row : p.ideal_rows) {
    const Monomial& pivot = p.monomials[static_cast<std::size_t>(row.front().first)];
    for (const auto& [col, c] : row) {
      if (sigma.act(p.monomials[static_cast<std::size_t>(col)]) == pivot) ideal_trace += c;
    }
  }
  return Rational(fixed) - ideal_trace;
}

void require_sn_stable(const GradedQuotient& q) {
  const int n = q.ambient();
  for (int k = 0; k + 1 < n; ++k) {
    if (!ideal_is_stable(q, Permutation::transposition(n, k, k + 1))) {
      throw ValidationError("ideal is not stable under the transposition (" +
                            std::to_string(k + 1) + " " + std::to_string(k + 2) + ")");
    }
  }
}

}  // namespace

Rational trace_on_degree(const GradedQuotient& q, const Permutation& sigma, int d) {
  if (sigma.size() != q.ambient()) throw ValidationError("permutation length mismatch");
  if (!ideal_is_stable(q, sigma)) {
    throw ValidationError("ideal is not stable under " + sigma.to_string());
  }
  return trace_unchecked(q, sigma, d);
}

IsotypicMultiplicities isotypic_multiplicities(const GradedQuotient& q, int d) {
  require_sn_stable(q);
  const CharacterTable table(q.ambient());
  std::vector<Rational> traces;
  for (const auto& cls : table.classes()) {
    traces.push_back(trace_unchecked(q, cls.representative(), d));
  }
  IsotypicMultiplicities out;
  long long weighted = 0;
  for (std::size_t i = 0; i < table.irreps().size(); ++i) {
    Rational m;
    for (std::size_t c = 0; c < table.classes().size(); ++c) {
      m += Rational(table.value(i, c)) * traces[c] / Rational(table.classes()[c].centralizer);
    }
    if (!m.is_integer() || m.sign() < 0) {
      throw InconsistencyError("multiplicity of " + table.irreps()[i].label() + " in degree " +
                               std::to_string(d) + " is " + m.to_string());
    }
    const long long mult = m.numerator().get_si();
    weighted += mult * table.dimension(i);
    out.emplace_back(table.irreps()[i], mult);
  }
  if (weighted != static_cast<long long>(q.dim(d))) {
    throw InconsistencyError("isotypic dimensions do not add up in degree " + std::to_string(d));
  }
  return out;
}

HilbertFunction isotypic_hilbert_function(const GradedQuotient& q, const Partition& lambda) {
  if (lambda.size() != q.ambient()) throw ValidationError("partition size differs from n");
  const long long dim = irrep_dimension(lambda);
  std::vector<long long> values;
  for (int d = 0; d <= q.top_degree(); ++d) {
    long long mult = 0;
    for (const auto& [mu, m] : isotypic_multiplicities(q, d)) {
      if (mu == lambda) mult = m;
    }
    values.push_back(mult * dim);
  }
  return HilbertFunction(std::move(values));
}

EquivarianceResult equivariance_check(const std::vector<Polynomial>& fs,
                                      const std::vector<Permutation>& generators) {
  EquivarianceResult out;
  const int n = static_cast<int>(fs.size());
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const Permutation& sigma = generators[g];
    if (sigma.size() != n) throw ValidationError("permutation length mismatch");
    for (int i = 0; i < n; ++i) {
      const auto& fi = fs[static_cast<std::size_t>(i)];
      if (fi.ambient() != n) throw ValidationError("generator ambient differs from count");
      if (apply_permutation(sigma, fi) != fs[static_cast<std::size_t>(sigma(i))]) {
        out.ok = false;
        out.witness = std::make_pair(static_cast<int>(g), i);
        out.description = "f" + std::to_string(i + 1) + " under " + sigma.to_string() +
                          " is not f" + std::to_string(sigma(i) + 1);
        return out;
      }
    }
  }
  return out;
}

EquivarianceResult equivariance_check(const std::vector<Polynomial>& fs) {
  const int n = static_cast<int>(fs.size());
  std::vector<Permutation> gens;
  for (int k = 0; k + 1 < n; ++k) gens.push_back(Permutation::transposition(n, k, k + 1));
  return equivariance_check(fs, gens);
}

FixedLineReport fixed_line_check(int n) {
  if (n < 2) throw ValidationError("fixed line check needs n >= 2");
  FixedLineReport report;
  report.n = n;
  const Polynomial e1 = linear_sum(n);
  const auto group = all_permutations(n);
  std::vector<Polynomial> fixed;
  std::vector<Polynomial> sign;
  for (int i = 0; i < n; ++i) {
    const Polynomial v = Polynomial::variable(n, i) * e1;
    Polynomial avg(n);
    Polynomial alt(n);
    for (const auto& sigma : group) {
      const Polynomial image = apply_permutation(sigma, v);
      avg += image;
      // sign(sigma) = (-1)^(n - #cycles)
      if ((n - static_cast<int>(sigma.cycle_type().size())) % 2) alt -= image;
      else alt += image;
    }
    const Rational scale(1, static_cast<long>(group.size()));
    fixed.push_back(avg * scale);
    sign.push_back(alt * scale);
  }
  auto basis_of = [](std::vector<Polynomial> polys) {
    std::vector<Polynomial> basis;
    for (auto& p : polys) {
      basis.push_back(p);
      if (polynomial_span_rank(basis) < basis.size()) basis.pop_back();
    }
    return basis;
  };
  report.fixed_basis = basis_of(fixed);
  const Polynomial e1sq = e1 * e1;
  auto spans_exactly = [](const std::vector<Polynomial>& basis, const Polynomial& target) {
    if (basis.size() != 1) return false;
    return polynomial_span_rank({basis.front(), target}) == 1;
  };
  report.ok = spans_exactly(report.fixed_basis, e1sq);
  if (n == 2) {
    report.sign_basis = basis_of(sign);
    const Polynomial line = e1 * (Polynomial::variable(2, 0) - Polynomial::variable(2, 1));
    report.ok = report.ok && spans_exactly(report.sign_basis, line);
  }
  return report;
}

}  // namespace lefforge
