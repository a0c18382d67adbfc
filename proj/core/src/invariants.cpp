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

#include "lefforge/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "lefforge/errors.hpp"
#include "lefforge/symmetry.hpp"

namespace lefforge {

// --- Young subgroups --------------------------------------------------------

YoungSubgroup::YoungSubgroup(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw ValidationError("Young subgroup needs at least one block");
  for (int s : sizes_) {
    if (s < 1) throw ValidationError("Young subgroup blocks must be nonempty");
    starts_.push_back(n_);
    n_ += s;
  }
}

std::vector<int> YoungSubgroup::block_variables(int i) const {
  std::vector<int> v(static_cast<std::size_t>(sizes_.at(static_cast<std::size_t>(i))));
  std::iota(v.begin(), v.end(), block_start(i));
  return v;
}

long long YoungSubgroup::order() const {
  long long o = 1;
  for (int s : sizes_) o *= factorial(s);
  return o;
}

bool YoungSubgroup::is_trivial() const {
  return std::all_of(sizes_.begin(), sizes_.end(), [](int s) { return s == 1; });
}

std::string YoungSubgroup::label() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i) os << 'x';
    os << 'S' << sizes_[i];
  }
  return os.str();
}

std::vector<Permutation> YoungSubgroup::generators() const {
  std::vector<Permutation> gens;
  for (int b = 0; b < block_count(); ++b) {
    for (int k = 0; k + 1 < sizes_[static_cast<std::size_t>(b)]; ++k) {
      gens.push_back(Permutation::transposition(n_, block_start(b) + k, block_start(b) + k + 1));
    }
  }
  return gens;
}

Monomial YoungSubgroup::canonical(const Monomial& m) const {
  if (m.size() != n_) throw ValidationError("monomial ambient differs from group degree");
  std::vector<int> e(m.exponents().begin(), m.exponents().end());
  for (int b = 0; b < block_count(); ++b) {
    auto first = e.begin() + block_start(b);
    std::sort(first, first + sizes_[static_cast<std::size_t>(b)], std::greater<>());
  }
  return Monomial(std::move(e));
}

long long YoungSubgroup::orbit_size(const Monomial& m) const {
  long long size = 1;
  for (int b = 0; b < block_count(); ++b) {
    std::map<int, int> mult;
    for (int v : block_variables(b)) ++mult[m[v]];
    long long count = factorial(sizes_[static_cast<std::size_t>(b)]);
    for (const auto& [e, k] : mult) count /= factorial(k);
    size *= count;
  }
  return size;
}

std::vector<Monomial> YoungSubgroup::orbit(const Monomial& m) const {
  const Monomial start = canonical(m);
  std::vector<int> e(start.exponents().begin(), start.exponents().end());
  std::vector<Monomial> out;
  // Odometer over the distinct arrangements of each block.
  std::function<void(int)> rec = [&](int b) {
    if (b == block_count()) {
      out.emplace_back(e);
      return;
    }
    auto first = e.begin() + block_start(b);
    auto last = first + sizes_[static_cast<std::size_t>(b)];
    std::sort(first, last);
    do {
      rec(b + 1);
    } while (std::next_permutation(first, last));
  };
  rec(0);
  return out;
}

Polynomial YoungSubgroup::orbit_sum(const Monomial& m) const {
  Polynomial out(n_);
  for (const auto& u : orbit(m)) out.add_term(u, Rational(1));
  return out;
}

std::vector<Monomial> YoungSubgroup::orbit_representatives(int d) const {
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(n_, d)) {
    if (canonical(m) == m) out.push_back(m);
  }
  return out;
}

BlockRelabeling relabel_blocks(int n, const std::vector<std::vector<int>>& sets) {
  std::vector<int> sizes;
  std::vector<int> images(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (const auto& set : sets) {
    if (set.empty()) throw ValidationError("empty block");
    std::vector<int> sorted = set;
    std::sort(sorted.begin(), sorted.end());
    for (int v : sorted) {
      if (v < 0 || v >= n) throw ValidationError("block variable out of range");
      if (images[static_cast<std::size_t>(v)] != -1) {
        throw ValidationError("variable x" + std::to_string(v + 1) + " is in two blocks");
      }
      images[static_cast<std::size_t>(v)] = next++;
    }
    sizes.push_back(static_cast<int>(set.size()));
  }
  if (next != n) throw ValidationError("blocks do not cover all variables");
  return BlockRelabeling{YoungSubgroup(std::move(sizes)), Permutation(std::move(images))};
}

// --- invariant slices -------------------------------------------------------

HilbertFunction InvariantSlice::hilbert() const {
  std::vector<long long> v;
  for (const auto& b : bases) v.push_back(static_cast<long long>(b.size()));
  return HilbertFunction(std::move(v));
}

std::size_t InvariantSlice::dim(int d) const {
  if (d < 0 || static_cast<std::size_t>(d) >= bases.size()) return 0;
  return bases[static_cast<std::size_t>(d)].size();
}

void require_stable(const GradedQuotient& q, const YoungSubgroup& g) {
  if (g.n() != q.ambient()) throw ValidationError("group degree differs from variable count");
  for (const auto& sigma : g.generators()) {
    if (!ideal_is_stable(q, sigma)) {
      throw ValidationError("ideal is not stable under " + sigma.to_string());
    }
  }
}

namespace {

std::vector<Vector> reynolds_unchecked(const GradedQuotient& q, const YoungSubgroup& g, int d) {
  const std::size_t dim = q.dim(d);
  if (dim == 0) return {};
  std::vector<Vector> images;
  for (const auto& rep : g.orbit_representatives(d)) {
    images.push_back(q.normal_form(g.orbit_sum(rep), d));
  }
  return echelonize(images, dim).rows;
}

}  // namespace

std::vector<Vector> reynolds_basis(const GradedQuotient& q, const YoungSubgroup& g, int d) {
  require_stable(q, g);
  return reynolds_unchecked(q, g, d);
}

InvariantSlice invariant_slice(const GradedQuotient& q, const YoungSubgroup& g) {
  require_stable(q, g);
  InvariantSlice slice;
  for (int d = 0; d <= q.top_degree(); ++d) slice.bases.push_back(reynolds_unchecked(q, g, d));
  return slice;
}

HilbertFunction invariant_hilbert_function(const GradedQuotient& q, const YoungSubgroup& g) {
  return invariant_slice(q, g).hilbert();
}

HilbertFunction degree_one_generated_hf(const GradedQuotient& q, const InvariantSlice& slice) {
  std::vector<long long> dims;
  std::vector<Vector> current;
  if (q.dim(0) > 0) current.push_back(Vector{Rational(1)});
  dims.push_back(static_cast<long long>(current.size()));
  const int top = static_cast<int>(slice.bases.size()) - 1;
  for (int d = 1; d <= top; ++d) {
    std::vector<Vector> products;
    for (const auto& ell : slice.bases[1]) {
      for (const auto& b : current) products.push_back(q.multiply(ell, 1, b, d - 1));
    }
    current = echelonize(products, q.dim(d)).rows;
    dims.push_back(static_cast<long long>(current.size()));
  }
  return HilbertFunction(std::move(dims));
}

HilbertFunction degree_one_generated_hf(const GradedQuotient& q, const YoungSubgroup& g) {
  return degree_one_generated_hf(q, invariant_slice(q, g));
}

std::vector<int> minimal_generator_degrees(const GradedQuotient& q, const InvariantSlice& slice) {
  struct Generator {
    int degree;
    Vector coords;
  };
  std::vector<Generator> gens;
  std::vector<int> degrees;
  const int top = static_cast<int>(slice.bases.size()) - 1;
  for (int d = 1; d <= top; ++d) {
    const auto& piece = slice.bases[static_cast<std::size_t>(d)];
    if (piece.empty()) continue;
    // Decomposables in degree d are sums g * (A^G)_{d - deg g}.
    std::vector<Vector> products;
    for (const auto& gen : gens) {
      for (const auto& b : slice.bases[static_cast<std::size_t>(d - gen.degree)]) {
        products.push_back(q.multiply(gen.coords, gen.degree, b, d - gen.degree));
      }
    }
    Echelon span = echelonize(products, q.dim(d));
    for (const auto& v : piece) {
      if (span.contains(v)) continue;
      gens.push_back({d, v});
      degrees.push_back(d);
      products.push_back(v);
      span = echelonize(products, q.dim(d));
    }
  }
  return degrees;
}

std::vector<int> minimal_generator_degrees(const GradedQuotient& q, const YoungSubgroup& g) {
  return minimal_generator_degrees(q, invariant_slice(q, g));
}

// --- Vandermonde generators ---------------------------------------------------

VandermondeGenerators vandermonde_generators(const std::vector<Polynomial>& fs,
                                             const YoungSubgroup& g) {
  const int n = g.n();
  if (static_cast<int>(fs.size()) != n) {
    throw ValidationError("need one generator per variable");
  }
  const auto check = equivariance_check(fs, g.generators());
  if (!check.ok) throw ValidationError("generators are not G-equivariant: " + check.description);
  VandermondeGenerators out;
  for (int b = 0; b < g.block_count(); ++b) {
    const auto vars = g.block_variables(b);
    for (int k = 0; k < static_cast<int>(vars.size()); ++k) {
      Polynomial gk(n);
      int degree = -1;
      for (int v : vars) {
        const Polynomial& f = fs[static_cast<std::size_t>(v)];
        const auto df = f.homogeneous_degree();
        if (!df) throw ValidationError("Vandermonde construction needs homogeneous generators");
        degree = *df + k;
        gk += Polynomial::variable(n, v).pow(k) * f;
      }
      out.gs.push_back(std::move(gk));
      out.degrees.push_back(degree);
    }
  }
  for (const auto& sigma : g.generators()) {
    for (const auto& gk : out.gs) {
      if (apply_permutation(sigma, gk) != gk) {
        throw InconsistencyError("Vandermonde image is not invariant under " + sigma.to_string());
      }
    }
  }
  return out;
}

// --- ideal intersection -------------------------------------------------------

int default_intersection_bound(const GradedQuotient& q) {
  return 2 * q.presentation().ci_socle_degree() + 2;
}

IntersectionReport ideal_intersection_equality(const GradedQuotient& q, const YoungSubgroup& g,
                                               const VandermondeGenerators& gens, int bound) {
  require_stable(q, g);
  IntersectionReport report;
  report.bound = bound;
  const int max_gen = gens.degrees.empty()
                          ? 0
                          : *std::max_element(gens.degrees.begin(), gens.degrees.end());
  report.safe_bound = q.presentation().ci_socle_degree() + max_gen;
  report.below_safe_bound = bound < report.safe_bound;

  std::vector<std::vector<Monomial>> reps_by_degree;
  for (int d = 0; d <= bound; ++d) reps_by_degree.push_back(g.orbit_representatives(d));

  for (int d = 0; d <= bound; ++d) {
    const auto& reps = reps_by_degree[static_cast<std::size_t>(d)];
    std::unordered_map<Monomial, std::size_t, MonomialHash> coord;
    for (std::size_t k = 0; k < reps.size(); ++k) coord.emplace(reps[k], k);
    const std::size_t dim = reps.size();

    // Rows for (orbit sum of rep) * g_k, read off on the representatives
    // without forming the product polynomial.
    std::vector<SparseRow> generated;
    std::map<int, Rational> acc;
    for (std::size_t k = 0; k < gens.gs.size(); ++k) {
      const int e = d - gens.degrees[k];
      if (e < 0) continue;
      for (const auto& rep : reps_by_degree[static_cast<std::size_t>(e)]) {
        for (const auto& u : g.orbit(rep)) {
          for (const auto& [m, c] : gens.gs[k].terms()) {
            if (auto it = coord.find(u * m); it != coord.end()) acc[static_cast<int>(it->second)] += c;
          }
        }
        SparseRow row;
        for (auto& [col, c] : acc) {
          if (!c.is_zero()) row.emplace_back(col, std::move(c));
        }
        acc.clear();
        generated.push_back(std::move(row));
      }
    }

    std::vector<SparseRow> projected;
    if (d <= q.top_degree()) {
      const DegreePiece& piece = q.piece(d);
      for (const auto& row : piece.ideal_rows) {
        std::map<int, Rational> v;
        for (const auto& [col, c] : row) {
          const Monomial& m = piece.monomials[static_cast<std::size_t>(col)];
          v[static_cast<int>(coord.at(g.canonical(m)))] += c / Rational(g.orbit_size(m));
        }
        SparseRow sparse;
        for (auto& [col, c] : v) {
          if (!c.is_zero()) sparse.emplace_back(col, std::move(c));
        }
        projected.push_back(std::move(sparse));
      }
    } else if (q.vanishes_at_top()) {
      for (std::size_t k = 0; k < dim; ++k) projected.push_back(SparseRow{{static_cast<int>(k), Rational(1)}});
    } else {
      throw ValidationError("degree " + std::to_string(d) +
                            " is beyond the built range of a non-Artinian quotient");
    }

    IntersectionDegree entry;
    entry.degree = d;
    const int columns = static_cast<int>(dim);
    entry.generated_rank = sparse_rank(generated, columns);
    entry.projected_rank = sparse_rank(projected, columns);
    if (entry.generated_rank == dim || entry.projected_rank == dim) {
      entry.joint_rank = dim;
    } else {
      std::vector<SparseRow> joint = generated;
      joint.insert(joint.end(), projected.begin(), projected.end());
      entry.joint_rank = sparse_rank(joint, columns);
    }
    report.equal = report.equal && entry.equal();
    report.degrees.push_back(entry);
  }
  return report;
}

// --- Lefschetz on the slice ---------------------------------------------------

LefschetzReport invariant_slp_check(const GradedQuotient& q, const YoungSubgroup& g,
                                    const InvariantSlice& slice, const Polynomial& ell) {
  if (ell.ambient() != q.ambient()) throw ValidationError("linear form ambient mismatch");
  if (!ell.is_zero() && ell.homogeneous_degree() != 1) {
    throw ValidationError("Lefschetz element must be a linear form");
  }
  for (const auto& sigma : g.generators()) {
    if (apply_permutation(sigma, ell) != ell) {
      throw ValidationError("linear form is not invariant under " + sigma.to_string());
    }
  }
  const GradedSubspaceFamily space(q, slice.bases);
  return is_strong_lefschetz(space, ell);
}

LefschetzReport invariant_slp_check(const GradedQuotient& q, const YoungSubgroup& g,
                                    const Polynomial& ell) {
  return invariant_slp_check(q, g, invariant_slice(q, g), ell);
}

}  // namespace lefforge
