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

#include "lefforge/quotient.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "lefforge/errors.hpp"
#include "lefforge/parallel.hpp"

namespace lefforge {

// --- presentation -----------------------------------------------------------

GradedIdealPresentation::GradedIdealPresentation(int n, std::vector<Polynomial> generators)
    : n_(n), gens_(std::move(generators)) {
  if (n < 1) throw ValidationError("variable count must be positive");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const auto& g = gens_[i];
    if (g.ambient() != n) {
      throw ValidationError("generator " + std::to_string(i + 1) + " has wrong ambient");
    }
    if (g.is_zero()) {
      throw ValidationError("generator " + std::to_string(i + 1) + " is zero");
    }
    const auto d = g.homogeneous_degree();
    if (!d) {
      throw ValidationError("generator " + std::to_string(i + 1) + " is not homogeneous");
    }
    degrees_.push_back(*d);
  }
}

GradedIdealPresentation GradedIdealPresentation::parse(
    int n, const std::vector<std::string>& generators) {
  std::vector<Polynomial> gens;
  gens.reserve(generators.size());
  for (const auto& text : generators) gens.push_back(parse_polynomial(text, n));
  return GradedIdealPresentation(n, std::move(gens));
}

int GradedIdealPresentation::max_degree() const {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

int GradedIdealPresentation::ci_socle_degree() const {
  int c = 0;
  for (int d : degrees_) c += d - 1;
  return c;
}

// --- Hilbert functions ------------------------------------------------------

HilbertFunction::HilbertFunction(std::vector<long long> v) : values(std::move(v)) {
  while (!values.empty() && values.back() == 0) values.pop_back();
}

long long HilbertFunction::at(int d) const {
  if (d < 0 || static_cast<std::size_t>(d) >= values.size()) return 0;
  return values[static_cast<std::size_t>(d)];
}

long long HilbertFunction::total() const {
  long long s = 0;
  for (long long v : values) s += v;
  return s;
}

long long HilbertFunction::max() const {
  return values.empty() ? 0 : *std::max_element(values.begin(), values.end());
}

bool HilbertFunction::symmetric() const {
  // Symmetric about (initial + end) / 2.
  std::size_t first = 0;
  while (first < values.size() && values[first] == 0) ++first;
  if (first == values.size()) return true;
  std::size_t last = values.size() - 1;
  for (std::size_t i = first, j = last; i < j; ++i, --j) {
    if (values[i] != values[j]) return false;
  }
  return true;
}

std::string HilbertFunction::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  os << ')';
  return os.str();
}

HilbertFunction ci_hilbert_function(const std::vector<int>& degrees) {
  std::vector<long long> poly{1};
  for (int d : degrees) {
    if (d < 1) throw ValidationError("complete intersection degrees must be positive");
    std::vector<long long> next(poly.size() + static_cast<std::size_t>(d) - 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      for (int k = 0; k < d; ++k) next[i + static_cast<std::size_t>(k)] += poly[i];
    }
    poly = std::move(next);
  }
  return HilbertFunction(std::move(poly));
}

// --- quotient ---------------------------------------------------------------

namespace {

DegreePiece build_piece(const GradedIdealPresentation& pres, int d) {
  DegreePiece piece;
  piece.degree = d;
  const int n = pres.ambient();
  piece.monomials = monomials_of_degree(n, d);
  piece.index.reserve(piece.monomials.size());
  for (std::size_t j = 0; j < piece.monomials.size(); ++j) {
    piece.index.emplace(piece.monomials[j], static_cast<int>(j));
  }
  const int columns = static_cast<int>(piece.monomials.size());
  std::vector<SparseRow> candidates;
  for (std::size_t g = 0; g < pres.generators().size(); ++g) {
    const int dg = pres.degrees()[g];
    if (dg > d) continue;
    const auto& f = pres.generators()[g];
    for (const Monomial& m : monomials_of_degree(n, d - dg)) {
      SparseRow row;
      row.reserve(f.term_count());
      for (const auto& [fm, c] : f.terms()) {
        row.emplace_back(piece.index.at(m * fm), c);
      }
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      candidates.push_back(std::move(row));
    }
  }
  std::vector<int> pivot_row(static_cast<std::size_t>(columns), -1);
  // Full rank mod p implies full rank over Q; then I_d = R_d and the RREF is
  // the identity, which skips the expensive rational elimination.
  if (static_cast<int>(candidates.size()) >= columns && columns > 0 &&
      modular_rank(candidates, columns) == static_cast<std::size_t>(columns)) {
    for (int j = 0; j < columns; ++j) {
      piece.ideal_rows.push_back(SparseRow{{j, Rational(1)}});
      pivot_row[static_cast<std::size_t>(j)] = j;
    }
  } else if (auto rref = multimodular_rref(candidates, columns)) {
    piece.ideal_rows = std::move(rref->rows);
    pivot_row = std::move(rref->pivot_row);
  } else {
    SparseEchelon ech(columns);
    for (const auto& row : candidates) {
      if (ech.full()) break;
      ech.insert(row);
    }
    ech.finalize();
    piece.ideal_rows = ech.rows();
    pivot_row = ech.pivot_row();
  }
  piece.role.assign(piece.monomials.size(), 0);
  for (std::size_t j = 0; j < piece.monomials.size(); ++j) {
    const int p = pivot_row[j];
    if (p >= 0) {
      piece.role[j] = -(p + 1);
    } else {
      piece.role[j] = static_cast<int>(piece.standard.size());
      piece.standard.push_back(static_cast<int>(j));
    }
  }
  return piece;
}

}  // namespace

GradedQuotient GradedQuotient::build(const GradedIdealPresentation& pres, int top_degree) {
  if (top_degree < 0) throw ValidationError("top degree must be non-negative");
  if (top_degree < pres.max_degree()) {
    throw ValidationError("top degree below the largest generator degree");
  }
  GradedQuotient q(pres);
  q.pieces_.resize(static_cast<std::size_t>(top_degree) + 1);
  // Larger degrees first so the expensive pieces start early.
  parallel_for(q.pieces_.size(), [&](std::size_t k) {
    const std::size_t d = q.pieces_.size() - 1 - k;
    q.pieces_[d] = build_piece(q.pres_, static_cast<int>(d));
  });
  return q;
}

const DegreePiece& GradedQuotient::piece(int d) const {
  if (d < 0 || d > top_degree()) {
    throw ValidationError("degree " + std::to_string(d) + " outside built range 0.." +
                          std::to_string(top_degree()));
  }
  return pieces_[static_cast<std::size_t>(d)];
}

int GradedQuotient::socle_degree() const {
  for (int d = top_degree(); d >= 0; --d) {
    if (dim(d) > 0) return d;
  }
  return -1;
}

std::vector<Monomial> GradedQuotient::standard_monomials(int d) const {
  const DegreePiece& p = piece(d);
  std::vector<Monomial> out;
  out.reserve(p.standard.size());
  for (int j : p.standard) out.push_back(p.monomials[static_cast<std::size_t>(j)]);
  return out;
}

namespace {

void accumulate_normal_form(const DegreePiece& p, const Monomial& m, const Rational& c,
                            Vector& out) {
  const int col = p.index.at(m);
  const int role = p.role[static_cast<std::size_t>(col)];
  if (role >= 0) {
    out[static_cast<std::size_t>(role)] += c;
    return;
  }
  const SparseRow& row = p.ideal_rows[static_cast<std::size_t>(-role - 1)];
  for (std::size_t k = 1; k < row.size(); ++k) {
    const int r = p.role[static_cast<std::size_t>(row[k].first)];
    out[static_cast<std::size_t>(r)].sub_mul(c, row[k].second);
  }
}

}  // namespace

Vector GradedQuotient::normal_form(const Polynomial& p, int d) const {
  if (p.ambient() != ambient()) throw ValidationError("polynomial ambient mismatch");
  const DegreePiece& pc = piece(d);
  Vector out(pc.dim_a());
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != d) {
      throw ValidationError("normal form input is not homogeneous of degree " +
                            std::to_string(d));
    }
    accumulate_normal_form(pc, m, c, out);
  }
  return out;
}

Vector GradedQuotient::normal_form(const Polynomial& p) const {
  const auto d = p.homogeneous_degree();
  if (!d) throw ValidationError("normal form needs a nonzero homogeneous polynomial");
  return normal_form(p, *d);
}

Vector GradedQuotient::normal_form(const Monomial& m) const {
  const DegreePiece& pc = piece(m.degree());
  Vector out(pc.dim_a());
  accumulate_normal_form(pc, m, Rational(1), out);
  return out;
}

Polynomial GradedQuotient::lift(const Vector& coords, int d) const {
  const DegreePiece& pc = piece(d);
  if (coords.size() != pc.dim_a()) throw ValidationError("coordinate length mismatch");
  Polynomial out(ambient());
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (!coords[k].is_zero()) {
      out.add_term(pc.monomials[static_cast<std::size_t>(pc.standard[k])], coords[k]);
    }
  }
  return out;
}

Vector GradedQuotient::multiply(const Vector& a, int da, const Vector& b, int db) const {
  const DegreePiece& pa = piece(da);
  const DegreePiece& pb = piece(db);
  const DegreePiece& pc = piece(da + db);
  if (a.size() != pa.dim_a() || b.size() != pb.dim_a()) {
    throw ValidationError("coordinate length mismatch");
  }
  Vector out(pc.dim_a());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    const Monomial& mi = pa.monomials[static_cast<std::size_t>(pa.standard[i])];
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      const Monomial& mj = pb.monomials[static_cast<std::size_t>(pb.standard[j])];
      accumulate_normal_form(pc, mi * mj, a[i] * b[j], out);
    }
  }
  return out;
}

Matrix GradedQuotient::mult_map_matrix(const Polynomial& ell, int d) const {
  if (ell.ambient() != ambient()) throw ValidationError("polynomial ambient mismatch");
  int k = 0;
  if (!ell.is_zero()) {
    const auto deg = ell.homogeneous_degree();
    if (!deg) throw ValidationError("multiplier is not homogeneous");
    k = *deg;
  }
  if (d + k > top_degree()) {
    throw ValidationError("multiplication map leaves the built degree range");
  }
  const DegreePiece& src = piece(d);
  const DegreePiece& dst = piece(d + k);
  Matrix m(dst.dim_a(), src.dim_a());
  for (std::size_t j = 0; j < src.dim_a(); ++j) {
    const Monomial& s = src.monomials[static_cast<std::size_t>(src.standard[j])];
    Vector col(dst.dim_a());
    for (const auto& [lm, c] : ell.terms()) accumulate_normal_form(dst, lm * s, c, col);
    for (std::size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
  }
  return m;
}

bool GradedQuotient::in_ideal(const Polynomial& p) const {
  std::map<int, Polynomial> parts;
  for (const auto& [m, c] : p.terms()) {
    auto [it, inserted] = parts.try_emplace(m.degree(), ambient());
    it->second.add_term(m, c);
  }
  for (const auto& [d, part] : parts) {
    if (d > top_degree()) {
      if (!vanishes_at_top()) {
        throw ValidationError("membership test above the built degree range");
      }
      continue;
    }
    if (!is_zero_vector(normal_form(part, d))) return false;
  }
  return true;
}

HilbertFunction hilbert_function(const GradedQuotient& q) {
  std::vector<long long> v;
  for (int d = 0; d <= q.top_degree(); ++d) v.push_back(static_cast<long long>(q.dim(d)));
  return HilbertFunction(std::move(v));
}

CompleteIntersectionCheck is_complete_intersection(const GradedQuotient& q) {
  const auto& pres = q.presentation();
  if (static_cast<int>(pres.generators().size()) != pres.ambient()) {
    throw ValidationError("complete intersection test needs exactly n generators, got " +
                          std::to_string(pres.generators().size()));
  }
  CompleteIntersectionCheck out;
  out.bound = pres.ci_socle_degree() + 1;
  if (q.top_degree() < out.bound) {
    throw ValidationError("quotient not built up to the complete intersection bound");
  }
  out.expected = ci_hilbert_function(pres.degrees());
  out.actual = hilbert_function(q);
  out.is_ci = q.dim(out.bound) == 0;
  for (int d = 0; d <= out.bound; ++d) {
    if (out.actual.at(d) != out.expected.at(d)) {
      out.first_deviation = d;
      break;
    }
  }
  std::ostringstream os;
  if (out.is_ci) {
    os << "A vanishes in degree " << out.bound << "; Hilbert function "
       << out.actual.to_string();
  } else {
    os << "dim A_" << out.bound << " = " << q.dim(out.bound) << " != 0";
    if (out.first_deviation) {
      os << "; first deviation from " << out.expected.to_string() << " in degree "
         << *out.first_deviation;
    }
  }
  out.diagnostic = os.str();
  return out;
}

CompleteIntersectionCheck is_complete_intersection(const GradedIdealPresentation& pres) {
  if (static_cast<int>(pres.generators().size()) != pres.ambient()) {
    throw ValidationError("complete intersection test needs exactly n generators, got " +
                          std::to_string(pres.generators().size()));
  }
  return is_complete_intersection(
      GradedQuotient::build(pres, pres.ci_socle_degree() + 1));
}

bool socle_check(const GradedQuotient& q, const Polynomial& candidate) {
  const int c = q.presentation().ci_socle_degree();
  if (candidate.is_zero()) return false;
  if (candidate.homogeneous_degree() != c) {
    throw ValidationError("socle candidate must be homogeneous of degree " + std::to_string(c));
  }
  if (q.top_degree() < c + 1) throw ValidationError("quotient not built past the socle degree");
  if (q.dim(c) != 1) return false;
  if (is_zero_vector(q.normal_form(candidate, c))) return false;
  for (int i = 0; i < q.ambient(); ++i) {
    const Polynomial prod = Polynomial::variable(q.ambient(), i) * candidate;
    if (!is_zero_vector(q.normal_form(prod, c + 1))) return false;
  }
  return true;
}

}  // namespace lefforge
