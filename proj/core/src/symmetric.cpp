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

#include "lefforge/symmetric.hpp"

#include <bit>
#include <map>
#include <unordered_map>

#include "lefforge/errors.hpp"
#include "lefforge/linalg.hpp"

namespace lefforge {

namespace {

void check_subset(int n, const std::vector<int>& subset) {
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : subset) {
    if (v < 0 || v >= n) throw ValidationError("subset variable out of range");
    if (seen[static_cast<std::size_t>(v)]) {
      throw ValidationError("subset variable repeated");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

void add_squarefree(int n, const std::vector<int>& subset, std::size_t from,
                    int remaining, std::vector<int>& exps, Polynomial& out) {
  if (remaining == 0) {
    out.add_term(Monomial(exps), Rational(1));
    return;
  }
  for (std::size_t k = from; k + static_cast<std::size_t>(remaining) <= subset.size(); ++k) {
    exps[static_cast<std::size_t>(subset[k])] = 1;
    add_squarefree(n, subset, k + 1, remaining - 1, exps, out);
    exps[static_cast<std::size_t>(subset[k])] = 0;
  }
}

}  // namespace

std::vector<int> all_variables(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

Polynomial elementary_symmetric(int n, int d, const std::vector<int>& subset) {
  check_subset(n, subset);
  if (d < 1 || d > static_cast<int>(subset.size())) {
    throw ValidationError("elementary symmetric degree out of range");
  }
  Polynomial out(n);
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  add_squarefree(n, subset, 0, d, exps, out);
  return out;
}

Polynomial power_sum(int n, int d, const std::vector<int>& subset) {
  check_subset(n, subset);
  if (subset.empty()) throw ValidationError("power sum over empty subset");
  if (d < 1) throw ValidationError("power sum degree must be positive");
  Polynomial out(n);
  for (int v : subset) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(v)] = d;
    out.add_term(Monomial(std::move(e)), Rational(1));
  }
  return out;
}

std::vector<Polynomial> specht_basis(int n) {
  if (n < 4) throw ValidationError("shape (n-2,2) requires n >= 4");
  auto x = [n](int i) { return Polynomial::variable(n, i); };
  std::vector<Polynomial> out;
  for (int j = 2; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) out.push_back((x(0) - x(j)) * (x(1) - x(k)));
  }
  for (int k = 3; k < n; ++k) out.push_back((x(0) - x(1)) * (x(2) - x(k)));
  return out;
}

Polynomial jacobian_determinant(const std::vector<Polynomial>& fs) {
  const int n = static_cast<int>(fs.size());
  if (n == 0) throw ValidationError("jacobian of an empty list");
  if (n > 20) throw ValidationError("jacobian limited to 20 variables");
  for (const auto& f : fs) {
    if (f.ambient() != n) {
      throw ValidationError("jacobian needs n polynomials in n variables");
    }
  }
  std::vector<std::vector<Polynomial>> partial(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      partial[static_cast<std::size_t>(i)].push_back(fs[static_cast<std::size_t>(i)].derivative(j));
    }
  }
  // minor[mask] = det of the bottom popcount(mask) rows restricted to the
  // columns in mask.
  std::unordered_map<std::uint32_t, Polynomial> minor;
  minor.emplace(0u, Polynomial::constant(n, Rational(1)));
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
  for (int size = 1; size <= n; ++size) {
    const int row = n - size;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      if (std::popcount(mask) != size) continue;
      Polynomial acc(n);
      int position = 0;
      for (int j = 0; j < n; ++j) {
        if (!(mask & (1u << j))) continue;
        const Polynomial& entry =
            partial[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
        if (!entry.is_zero()) {
          const Polynomial& sub = minor.at(mask & ~(1u << j));
          if (!sub.is_zero()) {
            Polynomial prod = entry * sub;
            if (position % 2) acc -= prod;
            else acc += prod;
          }
        }
        ++position;
      }
      minor.emplace(mask, std::move(acc));
    }
  }
  return minor.at(full);
}

std::size_t polynomial_span_rank(const std::vector<Polynomial>& polys) {
  std::map<Monomial, std::size_t, GrlexGreater> columns;
  for (const auto& p : polys) {
    for (const auto& [m, c] : p.terms()) columns.try_emplace(m, 0);
  }
  std::size_t k = 0;
  for (auto& [m, idx] : columns) idx = k++;
  std::vector<Vector> rows;
  for (const auto& p : polys) {
    Vector v(columns.size());
    for (const auto& [m, c] : p.terms()) v[columns.at(m)] = c;
    rows.push_back(std::move(v));
  }
  return rank_of(rows, columns.size());
}

}  // namespace lefforge
