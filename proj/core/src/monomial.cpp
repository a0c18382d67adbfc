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

#include "lefforge/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "lefforge/errors.hpp"

namespace lefforge {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw ValidationError("negative exponent in monomial");
    degree_ += e;
  }
}

Monomial Monomial::variable(int n, int index) {
  if (index < 0 || index >= n) throw ValidationError("variable index out of range");
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(index)] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.exps_.size() != exps_.size()) {
    throw ValidationError("monomial ambient mismatch");
  }
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  out.degree_ += other.degree_;
  return out;
}

Monomial Monomial::without(int i) const {
  Monomial out = *this;
  --out.exps_[static_cast<std::size_t>(i)];
  --out.degree_;
  return out;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const noexcept {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  for (std::size_t i = 0; i < ea.size() && i < eb.size(); ++i) {
    if (ea[i] != eb[i]) return ea[i] > eb[i];
  }
  return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

void enumerate(int n, int pos, int remaining, std::vector<int>& cur,
               std::vector<Monomial>& out) {
  if (pos == n - 1) {
    cur[static_cast<std::size_t>(pos)] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[static_cast<std::size_t>(pos)] = e;
    enumerate(n, pos + 1, remaining - e, cur, out);
  }
  cur[static_cast<std::size_t>(pos)] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  if (n <= 0 || d < 0) {
    if (n == 0 && d == 0) out.emplace_back(std::vector<int>{});
    return out;
  }
  out.reserve(static_cast<std::size_t>(count_monomials(n, d)));
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  enumerate(n, 0, d, cur, out);
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::uint64_t count_monomials(int n, int d) {
  if (n <= 0) return d == 0 ? 1 : 0;
  return binomial(n + d - 1, d);
}

}  // namespace lefforge
