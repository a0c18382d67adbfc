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

#include "lefforge/family.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "lefforge/errors.hpp"
#include "lefforge/parallel.hpp"
#include "lefforge/symmetric.hpp"
#include "lefforge/symmetry.hpp"

namespace lefforge {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

long parse_int(std::string_view s) {
  s = trim(s);
  const Rational r = Rational::parse(s);
  if (!r.is_integer() || !r.numerator().fits_slong_p()) {
    throw ValidationError("expected an integer, got '" + std::string(s) + "'");
  }
  return r.numerator().get_si();
}

}  // namespace

// --- parameters ---------------------------------------------------------------

FamilyParams::FamilyParams(Rational p0, Rational p1, Rational p2, Rational p3)
    : FamilyParams(std::array<Rational, 4>{std::move(p0), std::move(p1), std::move(p2),
                                           std::move(p3)}) {}

FamilyParams::FamilyParams(const std::array<Rational, 4>& p) : p_(p) {
  if (std::all_of(p_.begin(), p_.end(), [](const Rational& r) { return r.is_zero(); })) {
    throw ValidationError("family parameters must not all be zero");
  }
}

FamilyParams FamilyParams::parse(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw ValidationError("expected four parameters p0,p1,p2,p3");
  std::array<Rational, 4> p;
  for (std::size_t k = 0; k < 4; ++k) p[k] = Rational::parse(trim(parts[k]));
  return FamilyParams(p);
}

FamilyParams FamilyParams::normalized() const {
  std::array<Rational, 4> p = p_;
  const auto lead = std::find_if(p.begin(), p.end(), [](const Rational& r) { return !r.is_zero(); });
  const Rational scale = *lead;
  for (auto& r : p) r /= scale;
  return FamilyParams(p);
}

std::string FamilyParams::to_string() const {
  std::ostringstream os;
  os << '(' << p_[0] << ',' << p_[1] << ',' << p_[2] << ',' << p_[3] << ')';
  return os.str();
}

std::vector<Polynomial> family_generators(int n, const FamilyParams& p) {
  if (n < 2) throw ValidationError("family needs n >= 2");
  auto x = [n](int i) { return Polynomial::variable(n, i); };
  Polynomial rest(n), rest_sq(n), rest_pairs(n);
  for (int i = 1; i < n; ++i) {
    rest += x(i);
    rest_sq += x(i) * x(i);
    for (int j = i + 1; j < n; ++j) rest_pairs += x(i) * x(j);
  }
  const Polynomial f1 =
      p[0] * (x(0) * x(0)) + p[1] * (rest * x(0)) + p[2] * rest_sq + p[3] * rest_pairs;
  std::vector<Polynomial> fs{f1};
  for (int i = 1; i < n; ++i) fs.push_back(apply_permutation(Permutation::transposition(n, 0, i), f1));
  return fs;
}

// --- instances ------------------------------------------------------------------

struct FamilyInstance::Lazy {
  std::once_flag once;
  std::optional<GradedQuotient> quotient;
  CompleteIntersectionCheck ci;
};

FamilyInstance::FamilyInstance(int n, FamilyParams params, std::vector<Polynomial> fs)
    : n_(n), params_(std::move(params)), fs_(std::move(fs)), lazy_(std::make_shared<Lazy>()) {}

GradedIdealPresentation FamilyInstance::presentation() const {
  return GradedIdealPresentation(n_, fs_);
}

void FamilyInstance::ensure_built() const {
  std::call_once(lazy_->once, [this] {
    // e.g. n = 2 with only p3 set: every f_i vanishes.
    if (std::any_of(fs_.begin(), fs_.end(), [](const Polynomial& f) { return f.is_zero(); })) {
      lazy_->ci.is_ci = false;
      lazy_->ci.diagnostic = "a generator is identically zero";
      return;
    }
    lazy_->quotient.emplace(GradedQuotient::build(presentation(), n_ + 1));
    lazy_->ci = is_complete_intersection(*lazy_->quotient);
  });
}

const GradedQuotient& FamilyInstance::quotient() const {
  ensure_built();
  if (!lazy_->quotient) throw ValidationError("family member has a zero generator");
  return *lazy_->quotient;
}

const CompleteIntersectionCheck& FamilyInstance::ci() const {
  ensure_built();
  return lazy_->ci;
}

FamilyInstance build_family(int n, const FamilyParams& params) {
  auto fs = family_generators(n, params);
  const auto eq = equivariance_check(fs);
  if (!eq.ok) throw InconsistencyError("family generators fail equivariance: " + eq.description);
  return FamilyInstance(n, params, std::move(fs));
}

bool e1sq_in_ideal(const FamilyInstance& inst) {
  const Polynomial e1 = linear_sum(inst.n());
  std::vector<Polynomial> rows = inst.generators();
  const std::size_t base = polynomial_span_rank(rows);
  rows.push_back(e1 * e1);
  return polynomial_span_rank(rows) == base;
}

bool squares_in_ideal_plus_e1(const FamilyInstance& inst) {
  std::vector<Polynomial> gens = inst.generators();
  gens.push_back(linear_sum(inst.n()));
  const auto q = GradedQuotient::build(GradedIdealPresentation(inst.n(), gens), 2);
  for (int i = 0; i < inst.n(); ++i) {
    const Polynomial xi = Polynomial::variable(inst.n(), i);
    if (!q.in_ideal(xi * xi)) return false;
  }
  return true;
}

// --- n = 3 ----------------------------------------------------------------------

Rational n3_resultant_value(const Rational& a, const Rational& b) {
  return a * b * (a - Rational(3)) * (b - Rational(3)) * (a * b - a - Rational(2) * b) *
         (a * b - Rational(2) * a - b);
}

std::vector<Polynomial> n3_subfamily(const Rational& a, const Rational& b) {
  const Polynomial e = linear_sum(3);
  std::vector<Polynomial> out;
  for (int i = 0; i < 3; ++i) {
    const Polynomial xi = Polynomial::variable(3, i);
    out.push_back((e - a * xi) * (e - b * xi));
  }
  return out;
}

N3Check n3_check(const Rational& a, const Rational& b) {
  N3Check c{a, b, n3_resultant_value(a, b)};
  // e - a x always keeps the y + z part, so no generator is zero.
  c.is_ci = is_complete_intersection(GradedIdealPresentation(3, n3_subfamily(a, b))).is_ci;
  return c;
}

// --- fiber ------------------------------------------------------------------------

bool FiberRestriction::has_zero() const {
  return std::any_of(fs.begin(), fs.end(), [](const Polynomial& f) { return f.is_zero(); });
}

GradedIdealPresentation FiberRestriction::presentation() const {
  if (has_zero()) throw ValidationError("fiber restriction contains a zero generator");
  return GradedIdealPresentation(static_cast<int>(fs.size()), fs);
}

FiberRestriction fiber_restriction(const FamilyInstance& inst) {
  const int n = inst.n();
  Polynomial replacement(n);
  for (int i = 1; i < n; ++i) replacement -= Polynomial::variable(n, i);
  FiberRestriction out;
  for (int i = 1; i < n; ++i) {
    const Polynomial sub = substitute_linear(inst.generators()[static_cast<std::size_t>(i)], 0, replacement);
    out.fs.push_back(drop_variable(sub, 0));
  }
  return out;
}

// --- grids ----------------------------------------------------------------------

GridSpec::GridSpec(std::array<std::vector<Rational>, 4> axes) : axes_(std::move(axes)) {}

GridSpec GridSpec::parse(std::string_view text) {
  auto parse_axis = [](std::string_view s) {
    s = trim(s);
    std::vector<Rational> axis;
    if (s.empty()) throw ValidationError("empty grid coordinate");
    if (const auto dots = s.find(".."); dots != std::string_view::npos) {
      std::string_view hi_part = s.substr(dots + 2);
      long den = 1;
      if (const auto slash = hi_part.find('/'); slash != std::string_view::npos) {
        den = parse_int(hi_part.substr(slash + 1));
        hi_part = hi_part.substr(0, slash);
        if (den <= 0) throw ValidationError("grid denominator must be positive");
      }
      const long lo = parse_int(s.substr(0, dots));
      const long hi = parse_int(hi_part);
      if (hi < lo) throw ValidationError("grid range " + std::string(s) + " is empty");
      if (hi - lo > 10000) throw ValidationError("grid range too large");
      for (long k = lo; k <= hi; ++k) axis.emplace_back(k, den);
    } else {
      for (auto item : split(s, ',')) axis.push_back(Rational::parse(trim(item)));
    }
    return axis;
  };
  const auto coords = split(text, ':');
  std::array<std::vector<Rational>, 4> axes;
  if (coords.size() == 1) {
    axes.fill(parse_axis(coords[0]));
  } else if (coords.size() == 4) {
    for (std::size_t k = 0; k < 4; ++k) axes[k] = parse_axis(coords[k]);
  } else {
    throw ValidationError("grid needs one or four ':'-separated coordinates");
  }
  return GridSpec(std::move(axes));
}

GridSpec GridSpec::default_grid() { return parse("0..8"); }

GridSpec GridSpec::single(const FamilyParams& p) {
  std::array<std::vector<Rational>, 4> axes;
  for (std::size_t k = 0; k < 4; ++k) axes[k] = {p[k]};
  return GridSpec(std::move(axes));
}

std::vector<FamilyParams> GridSpec::points() const {
  std::vector<FamilyParams> out;
  std::set<std::string> seen;
  for (const auto& a : axes_[0]) {
    for (const auto& b : axes_[1]) {
      for (const auto& c : axes_[2]) {
        for (const auto& d : axes_[3]) {
          if (a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero()) continue;
          FamilyParams p(a, b, c, d);
          if (seen.insert(p.normalized().to_string()).second) out.push_back(std::move(p));
        }
      }
    }
  }
  return out;
}

std::vector<FamilyParams> deterministic_sample(const std::vector<FamilyParams>& points,
                                               std::size_t k, std::uint64_t seed) {
  std::vector<std::size_t> idx(points.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::mt19937_64 engine(seed);
  // Fisher-Yates with the engine directly: std::shuffle's use of the
  // engine is implementation-defined.
  for (std::size_t i = idx.size(); i > 1; --i) std::swap(idx[i - 1], idx[engine() % i]);
  idx.resize(std::min(k, idx.size()));
  std::sort(idx.begin(), idx.end());
  std::vector<FamilyParams> out;
  for (auto i : idx) out.push_back(points[i]);
  return out;
}

// --- scans ------------------------------------------------------------------------

std::string to_string(ScanClass c) {
  switch (c) {
    case ScanClass::NotCi: return "not-ci";
    case ScanClass::E1sqInIdeal: return "e1sq-in-ideal";
    case ScanClass::StandardGrading: return "standard-grading";
    case ScanClass::NonStandardGrading: return "non-standard-grading";
  }
  return "unknown";
}

std::size_t ScanReport::count(ScanClass c) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [c](const ScanRow& r) { return r.cls == c; }));
}

std::optional<double> ScanReport::genericity_ratio() const {
  const auto good = count(ScanClass::StandardGrading);
  const auto bad = count(ScanClass::NonStandardGrading);
  if (good + bad == 0) return std::nullopt;
  return static_cast<double>(good) / static_cast<double>(good + bad);
}

std::vector<FamilyParams> ScanReport::degenerate() const {
  std::vector<FamilyParams> out;
  for (const auto& r : rows) {
    if (r.cls == ScanClass::NonStandardGrading) out.push_back(r.params);
  }
  return out;
}

ScanRow classify_point(int n, const YoungSubgroup& g, const FamilyParams& params) {
  const FamilyInstance inst = build_family(n, params);
  ScanRow row{params, ScanClass::NotCi, false, {}, {}};
  if (!inst.is_ci()) return row;
  const auto& q = inst.quotient();
  const InvariantSlice slice = invariant_slice(q, g);
  row.invariant_hilbert = slice.hilbert();
  row.degree_one_hilbert = degree_one_generated_hf(q, slice);
  row.e1sq_in_ideal = e1sq_in_ideal(inst);
  // A grading failure is always reported; e_1^2 in I only separates the
  // standard-graded points where e_1 need not be a Lefschetz element.
  if (row.invariant_hilbert != row.degree_one_hilbert) {
    row.cls = ScanClass::NonStandardGrading;
  } else {
    row.cls = row.e1sq_in_ideal ? ScanClass::E1sqInIdeal : ScanClass::StandardGrading;
  }
  return row;
}

ScanReport scan_parameters(int n, const YoungSubgroup& g, const std::vector<FamilyParams>& points) {
  if (g.n() != n) throw ValidationError("block sizes must sum to n");
  ScanReport report;
  report.n = n;
  report.blocks = g.sizes();
  std::vector<std::optional<ScanRow>> rows(points.size());
  parallel_for(points.size(), [&](std::size_t i) { rows[i] = classify_point(n, g, points[i]); });
  for (auto& r : rows) report.rows.push_back(std::move(*r));
  return report;
}

ScanReport scan_parameters(int n, const YoungSubgroup& g, const GridSpec& grid) {
  return scan_parameters(n, g, grid.points());
}

}  // namespace lefforge
