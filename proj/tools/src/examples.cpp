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

#include "lefforge_cli/examples.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "lefforge/errors.hpp"
#include "lefforge/family.hpp"
#include "lefforge/invariants.hpp"
#include "lefforge/symmetric.hpp"
#include "lefforge/symmetry.hpp"

#ifndef LEFFORGE_SOURCE_DATA_DIR
#define LEFFORGE_SOURCE_DATA_DIR "data"
#endif
#ifndef LEFFORGE_INSTALL_DATA_DIR
#define LEFFORGE_INSTALL_DATA_DIR "data"
#endif

namespace lefforge::cli {

namespace {

using Checks = std::vector<ExampleCheck>;

void check(Checks& out, std::string name, bool pass, std::string detail = {}) {
  out.push_back({std::move(name), pass, std::move(detail)});
}

/// Coefficients of prod_i (1 + T + ... + T^{k_i}).
HilbertFunction truncated_geometric_product(const std::vector<int>& ks) {
  std::vector<long long> acc{1};
  for (int k : ks) {
    std::vector<long long> next(acc.size() + static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      for (int j = 0; j <= k; ++j) next[i + static_cast<std::size_t>(j)] += acc[i];
    }
    acc = std::move(next);
  }
  return HilbertFunction(std::move(acc));
}

long long multiplicity_of(const IsotypicMultiplicities& ms, const Partition& lambda) {
  for (const auto& [l, m] : ms) {
    if (l == lambda) return m;
  }
  return 0;
}

Checks n5_young() {
  Checks out;
  const YoungSubgroup g({2, 3});
  const auto base = build_family(5, FamilyParams(1, 0, 0, 0));
  const auto& q = base.quotient();
  const auto slice = invariant_slice(q, g);
  const HilbertFunction expected({1, 2, 3, 3, 2, 1});
  check(out, "(1,0,0,0) invariant Hilbert function = (1,2,3,3,2,1)", slice.hilbert() == expected,
        slice.hilbert().to_string());
  const auto deg1 = degree_one_generated_hf(q, slice);
  check(out, "(1,0,0,0) standard grading", deg1 == slice.hilbert(), deg1.to_string());
  const auto mins = minimal_generator_degrees(q, slice);
  check(out, "(1,0,0,0) minimal generator degrees = {1,1}", mins == std::vector<int>{1, 1});
  check(out, "(1,0,0,0) e1 strong Lefschetz on A^G",
        invariant_slp_check(q, g, slice, linear_sum(5)).strong);
  const auto vg = vandermonde_generators(base.generators(), g);
  check(out, "(1,0,0,0) Vandermonde degrees = (2,3|2,3,4)",
        vg.degrees == std::vector<int>{2, 3, 2, 3, 4});
  check(out, "(1,0,0,0) (g) R^G = I cap R^G up to degree 12",
        ideal_intersection_equality(q, g, vg, 12).equal);

  const auto special = classify_point(5, g, FamilyParams(5, 2, 0, 2));
  check(out, "(5,2,0,2) K[(A^G)_1] Hilbert function = (1,2,2,2,2,1)",
        special.degree_one_hilbert == HilbertFunction({1, 2, 2, 2, 2, 1}),
        special.degree_one_hilbert.to_string());
  check(out, "(5,2,0,2) invariant Hilbert function = (1,2,3,3,2,1)",
        special.invariant_hilbert == expected, special.invariant_hilbert.to_string());
  for (const FamilyParams& p : {FamilyParams(5, 2, 0, 2), FamilyParams(0, 0, 3, 8),
                                FamilyParams(7, 7, 3, 8), FamilyParams(4, 3, 2, 6),
                                FamilyParams(6, 0, 0, 4), FamilyParams(6, 3, 0, 2),
                                FamilyParams(1, 1, 3, 8)}) {
    const auto row = p == FamilyParams(5, 2, 0, 2) ? special : classify_point(5, g, p);
    check(out, p.to_string() + " non-standard grading",
          row.cls == ScanClass::NonStandardGrading, to_string(row.cls));
  }
  return out;
}

Checks n6_cubes(const std::string& data_dir) {
  Checks out;
  const auto pres = read_presentation_file(data_dir + "/cubes.json");
  const auto q = GradedQuotient::build(pres, pres.ci_socle_degree() + 1);
  check(out, "x_i^3 is a complete intersection", is_complete_intersection(q).is_ci);
  const YoungSubgroup g({3, 3});
  const auto slice = invariant_slice(q, g);
  const HilbertFunction expected({1, 2, 5, 8, 12, 14, 16, 14, 12, 8, 5, 2, 1});
  check(out, "invariant Hilbert function = (1,2,5,8,12,14,16,14,12,8,5,2,1)",
        slice.hilbert() == expected, slice.hilbert().to_string());
  // ((1+T^2)(1+T+T^2+T^3+T^4))^2
  std::vector<long long> series{1};
  for (const auto& factor : std::vector<std::vector<long long>>{
           {1, 0, 1}, {1, 1, 1, 1, 1}, {1, 0, 1}, {1, 1, 1, 1, 1}}) {
    std::vector<long long> next(series.size() + factor.size() - 1, 0);
    for (std::size_t i = 0; i < series.size(); ++i) {
      for (std::size_t j = 0; j < factor.size(); ++j) next[i + j] += series[i] * factor[j];
    }
    series = std::move(next);
  }
  check(out, "equals ((1+T^2)(1+T+T^2+T^3+T^4))^2", slice.hilbert() == HilbertFunction(series));

  const int n = 6;
  const std::vector<int> first{0, 1, 2};
  const std::vector<int> second{3, 4, 5};
  const Polynomial r = elementary_symmetric(n, 1, first);
  const Polynomial s = elementary_symmetric(n, 2, first);
  const Polynomial t = elementary_symmetric(n, 3, first);
  const Polynomial u = elementary_symmetric(n, 1, second);
  const Polynomial v = elementary_symmetric(n, 2, second);
  const Polynomial w = elementary_symmetric(n, 3, second);
  const Rational two(2), three(3);
  const std::vector<std::pair<std::string, Polynomial>> relations{
      {"u^3-3uv+3w", u.pow(3) - three * (u * v) + three * w},
      {"r^3-3rs+3t", r.pow(3) - three * (r * s) + three * t},
      {"u^2v-2v^2-uw", u.pow(2) * v - two * v.pow(2) - u * w},
      {"r^2s-2s^2-rt", r.pow(2) * s - two * s.pow(2) - r * t},
      {"u^2w-2vw", u.pow(2) * w - two * (v * w)},
      {"r^2t-2st", r.pow(2) * t - two * (s * t)},
  };
  for (const auto& [label, rel] : relations) {
    check(out, "relation " + label + " = 0 in A", q.in_ideal(rel));
  }
  const auto mins = minimal_generator_degrees(q, slice);
  check(out, "minimal generator degrees = {1,1,2,2}", mins == std::vector<int>{1, 1, 2, 2});
  const auto deg1 = degree_one_generated_hf(q, slice);
  check(out, "grading is not standard", deg1 != slice.hilbert(), deg1.to_string());
  return out;
}

Checks n3_resultant() {
  Checks out;
  const auto c12 = n3_check(1, 2);
  check(out, "(a,b)=(1,2): value 24 and CI", c12.value == Rational(24) && c12.is_ci,
        c12.value.to_string());
  check(out, "(a,b)=(3,1): value 0 and not CI", n3_check(3, 1).value.is_zero() && !n3_check(3, 1).is_ci);
  check(out, "(a,b)=(0,5): value 0 and not CI", n3_check(0, 5).value.is_zero() && !n3_check(0, 5).is_ci);
  int disagreements = 0, points = 0;
  for (int a = -3; a <= 8; ++a) {
    for (int b = -3; b <= 8; ++b) {
      ++points;
      if (!n3_check(a, b).agrees()) ++disagreements;
    }
  }
  check(out, "value != 0 <=> CI on {-3..8}^2", disagreements == 0,
        std::to_string(disagreements) + " disagreements over " + std::to_string(points) + " points");
  return out;
}

Checks monomial_fibers() {
  Checks out;
  for (const std::vector<int>& blocks : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {3, 3}, {1, 2, 3}}) {
    int n = 0;
    std::string label = "(";
    for (int b : blocks) {
      n += b;
      label += (label.size() > 1 ? "," : "") + std::to_string(b);
    }
    label += ")";
    const YoungSubgroup g(blocks);
    const auto inst = build_family(n, FamilyParams(1, 0, 0, 0));
    const auto& q = inst.quotient();
    const auto slice = invariant_slice(q, g);
    const auto expected = truncated_geometric_product(blocks);
    check(out, label + " invariant Hilbert function = prod (1+...+T^{n_i})",
          slice.hilbert() == expected, slice.hilbert().to_string());
    check(out, label + " standard grading", degree_one_generated_hf(q, slice) == slice.hilbert());
    check(out, label + " e1 strong Lefschetz on A^G",
          invariant_slp_check(q, g, slice, linear_sum(n)).strong);
  }
  return out;
}

Checks facts_3_1() {
  Checks out;
  for (int n = 3; n <= 6; ++n) {
    std::vector<Polynomial> cubes;
    for (int i = 0; i < n; ++i) cubes.push_back(Polynomial::variable(n, i).pow(3));
    // A_d = R_d for d <= 2.
    const auto q = GradedQuotient::build(GradedIdealPresentation(n, cubes), 3);
    const auto r1 = isotypic_multiplicities(q, 1);
    const auto r2 = isotypic_multiplicities(q, 2);
    const std::string tag = "n=" + std::to_string(n);
    check(out, tag + " R_1 = V^(n) + V^(n-1,1)",
          multiplicity_of(r1, Partition::two_row(n, 0)) == 1 &&
              multiplicity_of(r1, Partition::two_row(n, 1)) == 1 &&
              static_cast<std::size_t>(n) == q.dim(1));
    bool r2_ok = multiplicity_of(r2, Partition::two_row(n, 0)) == 2 &&
                 multiplicity_of(r2, Partition::two_row(n, 1)) == 2;
    if (n >= 4) r2_ok = r2_ok && multiplicity_of(r2, Partition::two_row(n, 2)) == 1;
    long long total = 0;
    for (const auto& [l, m] : r2) total += m;
    r2_ok = r2_ok && total == (n >= 4 ? 5 : 4);
    check(out, tag + (n >= 4 ? " R_2 multiplicities (2,2,1)" : " R_2 multiplicities (2,2)"), r2_ok);
  }
  for (int n = 4; n <= 7; ++n) {
    const auto basis = specht_basis(n);
    const std::size_t expected = static_cast<std::size_t>(n * (n - 3) / 2);
    check(out, "n=" + std::to_string(n) + " Specht polynomials: n(n-3)/2 of full rank",
          basis.size() == expected && polynomial_span_rank(basis) == expected &&
              static_cast<long long>(expected) == irrep_dimension(Partition::two_row(n, 2)));
  }
  for (int n = 4; n <= 5; ++n) {
    const auto inst = build_family(n, FamilyParams(1, 0, 0, 0));
    bool ok = true;
    for (int i = 0; 2 * i <= n; ++i) {
      const Partition lambda = Partition::two_row(n, i);
      std::vector<long long> expected(static_cast<std::size_t>(n) + 1, 0);
      for (int d = i; d <= n - i; ++d) expected[static_cast<std::size_t>(d)] = irrep_dimension(lambda);
      ok = ok && isotypic_hilbert_function(inst.quotient(), lambda) == HilbertFunction(expected);
    }
    check(out, "n=" + std::to_string(n) + " isotypic Hilbert functions of (x_i^2)", ok);
  }
  for (int n = 1; n <= 7; ++n) {
    const CharacterTable table(n);
    bool ok = true;
    for (std::size_t a = 0; a < table.irreps().size(); ++a) {
      for (std::size_t b = 0; b < table.irreps().size(); ++b) {
        long long sum = 0;
        for (std::size_t c = 0; c < table.classes().size(); ++c) {
          sum += table.classes()[c].class_size * table.value(a, c) * table.value(b, c);
        }
        ok = ok && sum == (a == b ? factorial(n) : 0);
      }
    }
    check(out, "n=" + std::to_string(n) + " character orthogonality", ok);
  }
  for (int n = 2; n <= 6; ++n) {
    const auto r = fixed_line_check(n);
    std::string detail;
    if (n == 2) detail = "fixed " + r.fixed_basis.at(0).to_string() + ", sign " +
                         (r.sign_basis.empty() ? "none" : r.sign_basis.at(0).to_string());
    check(out, "n=" + std::to_string(n) + " fixed part of R_1 e_1 is span{e_1^2}", r.ok, detail);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{"n5-young", "n6-cubes", "n3-resultant",
                                              "monomial-fibers", "facts-3-1"};
  return names;
}

std::vector<ExampleCheck> run_example(const std::string& name, const std::string& data_dir) {
  if (name == "n5-young") return n5_young();
  if (name == "n6-cubes") return n6_cubes(data_dir);
  if (name == "n3-resultant") return n3_resultant();
  if (name == "monomial-fibers") return monomial_fibers();
  if (name == "facts-3-1") return facts_3_1();
  throw ValidationError("unknown example '" + name + "'");
}

GradedIdealPresentation read_presentation(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("generators")) {
    throw ValidationError("input must be an object with \"n\" and \"generators\"");
  }
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1 || j["n"].get<long long>() > 64) {
    throw ValidationError("\"n\" must be an integer in 1..64");
  }
  if (!j["generators"].is_array()) throw ValidationError("\"generators\" must be an array");
  std::vector<std::string> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_string()) throw ValidationError("generators must be strings");
    gens.push_back(g.get<std::string>());
  }
  return GradedIdealPresentation::parse(j["n"].get<int>(), gens);
}

GradedIdealPresentation read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
  return read_presentation(j);
}

std::string default_data_dir() {
  if (const char* env = std::getenv("LEFFORGE_DATA_DIR"); env && *env) return env;
  if (std::filesystem::exists(std::string(LEFFORGE_SOURCE_DATA_DIR) + "/cubes.json")) {
    return LEFFORGE_SOURCE_DATA_DIR;
  }
  return LEFFORGE_INSTALL_DATA_DIR;
}

}  // namespace lefforge::cli
