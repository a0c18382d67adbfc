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

#include "lefforge/lefschetz.hpp"

#include <algorithm>
#include <random>

#include "lefforge/errors.hpp"

namespace lefforge {

GradedSubspaceFamily::GradedSubspaceFamily(const GradedQuotient& ambient,
                                           std::vector<std::vector<Vector>> bases)
    : q_(&ambient), bases_(std::move(bases)) {
  while (!bases_.empty() && bases_.back().empty()) bases_.pop_back();
  if (max_degree() > ambient.top_degree()) {
    throw ValidationError("subspace family exceeds the quotient's built degrees");
  }
  for (int d = 0; d <= max_degree(); ++d) {
    const auto& b = bases_[static_cast<std::size_t>(d)];
    for (const auto& v : b) {
      if (v.size() != ambient.dim(d)) {
        throw ValidationError("basis vector length mismatch in degree " + std::to_string(d));
      }
    }
    if (rank_of(b, ambient.dim(d)) != b.size()) {
      throw ValidationError("basis in degree " + std::to_string(d) + " is dependent");
    }
  }
}

GradedSubspaceFamily GradedSubspaceFamily::full(const GradedQuotient& q) {
  std::vector<std::vector<Vector>> bases;
  for (int d = 0; d <= q.top_degree(); ++d) {
    std::vector<Vector> b;
    for (std::size_t k = 0; k < q.dim(d); ++k) {
      Vector e(q.dim(d));
      e[k] = Rational(1);
      b.push_back(std::move(e));
    }
    bases.push_back(std::move(b));
  }
  return GradedSubspaceFamily(q, std::move(bases));
}

std::size_t GradedSubspaceFamily::dim(int d) const {
  if (d < 0 || d > max_degree()) return 0;
  return bases_[static_cast<std::size_t>(d)].size();
}

const std::vector<Vector>& GradedSubspaceFamily::basis(int d) const {
  static const std::vector<Vector> kEmpty;
  if (d < 0 || d > max_degree()) return kEmpty;
  return bases_[static_cast<std::size_t>(d)];
}

HilbertFunction GradedSubspaceFamily::hilbert() const {
  std::vector<long long> v;
  for (int d = 0; d <= max_degree(); ++d) v.push_back(static_cast<long long>(dim(d)));
  return HilbertFunction(std::move(v));
}

Polynomial linear_sum(int n) {
  Polynomial e(n);
  for (int i = 0; i < n; ++i) e.add_term(Monomial::variable(n, i), Rational(1));
  return e;
}

namespace {

void require_linear(const Polynomial& ell, int n) {
  if (ell.ambient() != n) throw ValidationError("linear form ambient mismatch");
  if (!ell.is_zero() && ell.homogeneous_degree() != 1) {
    throw ValidationError("Lefschetz element must be a linear form");
  }
}

// x ell: A_d -> A_{d+1}; the zero form gives the zero matrix.
Matrix linear_map(const GradedQuotient& q, const Polynomial& ell, int d) {
  if (ell.is_zero()) return Matrix(q.dim(d + 1), q.dim(d));
  return q.mult_map_matrix(ell, d);
}

}  // namespace

LefschetzReport is_weak_lefschetz(const GradedSubspaceFamily& space, const Polynomial& ell) {
  const GradedQuotient& q = space.ambient();
  require_linear(ell, q.ambient());

  LefschetzReport report;
  report.element = ell;
  const HilbertFunction hf = space.hilbert();
  report.symmetric = hf.symmetric();

  const int top = space.max_degree();
  int initial = 0;
  while (initial <= top && space.dim(initial) == 0) ++initial;
  report.c = top < 0 ? 0 : initial + top;

  // Maps V_d -> V_{d+1}; the one out of the top degree is only checked for
  // stability when the quotient reaches that far.
  std::vector<Matrix> maps;
  for (int d = 0; d <= top; ++d) {
    if (d + 1 > q.top_degree()) break;
    maps.push_back(linear_map(q, ell, d));
  }

  report.weak = true;
  for (int d = 0; d <= top; ++d) {
    const auto& src = space.basis(d);
    std::vector<Vector> images;
    if (static_cast<std::size_t>(d) < maps.size()) {
      const Echelon target = echelonize(space.basis(d + 1), q.dim(d + 1));
      for (const auto& v : src) {
        Vector img = maps[static_cast<std::size_t>(d)].apply(v);
        if (!target.contains(img)) {
          throw UnstableSubspaceError("subspace family is not stable under the linear form",
                                      d);
        }
        images.push_back(std::move(img));
      }
    }
    const std::size_t rank =
        images.empty() ? 0 : rank_of(images, q.dim(d + 1));
    report.weak_ranks.emplace_back(d, rank);
    if (rank != std::min(space.dim(d), space.dim(d + 1))) {
      report.weak = false;
      report.weak_failures.push_back(d);
    }
  }

  report.strong = true;
  for (int i = 0; 2 * i <= report.c; ++i) {
    const int j = report.c - i;
    std::vector<Vector> images = space.basis(i);
    for (int d = i; d < j; ++d) {
      for (auto& v : images) v = maps[static_cast<std::size_t>(d)].apply(v);
    }
    const std::size_t rank = images.empty() ? 0 : rank_of(images, q.dim(j));
    report.strong_ranks.emplace_back(i, rank);
    if (!(space.dim(i) == space.dim(j) && rank == space.dim(i))) {
      report.strong = false;
      report.strong_failures.push_back(i);
    }
  }
  return report;
}

LefschetzReport is_strong_lefschetz(const GradedSubspaceFamily& space, const Polynomial& ell) {
  return is_weak_lefschetz(space, ell);
}

std::size_t sperner_number(const GradedSubspaceFamily& space) {
  return static_cast<std::size_t>(space.hilbert().max());
}

std::size_t sperner_number(const GradedQuotient& q) {
  return static_cast<std::size_t>(hilbert_function(q).max());
}

std::size_t coinvariant_dimension(const GradedQuotient& q, const Polynomial& ell) {
  require_linear(ell, q.ambient());
  std::size_t total = q.dim(0);
  for (int d = 1; d <= q.top_degree(); ++d) {
    total += q.dim(d) - linear_map(q, ell, d - 1).rank();
  }
  return total;
}

SlpSearchResult find_strong_lefschetz_element(const GradedQuotient& q, bool skip_e1,
                                              int samples, std::uint64_t seed) {
  const int n = q.ambient();
  const auto space = GradedSubspaceFamily::full(q);
  SlpSearchResult result;
  auto attempt = [&](const Polynomial& ell) {
    ++result.tried;
    LefschetzReport r = is_strong_lefschetz(space, ell);
    if (r.strong) {
      result.element = ell;
      result.report = std::move(r);
      return true;
    }
    return false;
  };
  if (!skip_e1 && attempt(linear_sum(n))) return result;
  std::mt19937_64 engine(seed);
  for (int s = 0; s < samples; ++s) {
    Polynomial ell(n);
    for (int i = 0; i < n; ++i) {
      const long coeff = static_cast<long>(engine() % 19) - 9;
      ell.add_term(Monomial::variable(n, i), Rational(coeff));
    }
    if (ell.is_zero()) continue;
    if (attempt(ell)) return result;
  }
  return result;
}

}  // namespace lefforge
