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

#include "lefforge_cli/reports.hpp"

#include <algorithm>

#include "lefforge/errors.hpp"

namespace lefforge::cli {

json to_json(const HilbertFunction& h) { return h.values; }

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const FamilyParams& p) {
  json out = json::array();
  for (const auto& v : p.values()) out.push_back(to_json(v));
  return out;
}

json quotient_json(const GradedQuotient& q, const std::optional<CompleteIntersectionCheck>& ci) {
  json gens = json::array();
  for (const auto& f : q.presentation().generators()) gens.push_back(f.to_string());
  json out{{"n", q.ambient()},
           {"generators", gens},
           {"generator_degrees", q.presentation().degrees()},
           {"top_degree", q.top_degree()},
           {"hilbert", to_json(hilbert_function(q))},
           {"socle_degree", q.socle_degree()},
           {"artinian_within_range", q.vanishes_at_top()}};
  if (ci) {
    out["is_ci"] = ci->is_ci;
    if (!ci->diagnostic.empty()) out["ci_diagnostic"] = ci->diagnostic;
  }
  return out;
}

json lefschetz_json(const LefschetzReport& r) {
  return json{{"element", r.element.to_string()},
              {"weak", r.weak},
              {"strong", r.strong},
              {"symmetric", r.symmetric},
              {"c", r.c},
              {"weak_failures", r.weak_failures},
              {"strong_failures", r.strong_failures}};
}

json decomposition_json(const GradedQuotient& q, int from, int to) {
  json degrees = json::array();
  for (int d = from; d <= to; ++d) {
    json mult = json::object();
    for (const auto& [lambda, m] : isotypic_multiplicities(q, d)) {
      if (m != 0) mult[lambda.label()] = m;
    }
    degrees.push_back(json{{"degree", d}, {"dim", q.dim(d)}, {"multiplicities", mult}});
  }
  return json{{"n", q.ambient()}, {"degrees", degrees}};
}

InvariantReport invariant_report(const GradedQuotient& q, const YoungSubgroup& g,
                                 const std::vector<Polynomial>& fs) {
  InvariantReport r;
  r.blocks = g.sizes();
  const InvariantSlice slice = invariant_slice(q, g);
  r.invariant_hilbert = slice.hilbert();
  r.degree_one_hilbert = degree_one_generated_hf(q, slice);
  r.min_generator_degrees = minimal_generator_degrees(q, slice);
  r.slp_e1 = invariant_slp_check(q, g, slice, linear_sum(q.ambient())).strong;
  // The Vandermonde comparison needs n equivariant homogeneous generators of
  // an Artinian quotient; otherwise it is reported as not applicable.
  const bool applicable = static_cast<int>(fs.size()) == q.ambient() && q.vanishes_at_top() &&
                          equivariance_check(fs, g.generators()).ok;
  if (applicable) {
    const auto gens = vandermonde_generators(fs, g);
    r.vandermonde_ideal_equal =
        ideal_intersection_equality(q, g, gens, default_intersection_bound(q)).equal;
  }
  return r;
}

json invariant_json(const InvariantReport& r) {
  json out{{"blocks", r.blocks},
           {"invariant_hilbert", to_json(r.invariant_hilbert)},
           {"degree_one_hilbert", to_json(r.degree_one_hilbert)},
           {"standard_grading", r.invariant_hilbert == r.degree_one_hilbert},
           {"min_generator_degrees", r.min_generator_degrees},
           {"slp_e1", r.slp_e1},
           {"vandermonde_ideal_equal", nullptr}};
  if (r.vandermonde_ideal_equal) out["vandermonde_ideal_equal"] = *r.vandermonde_ideal_equal;
  if (r.relabeling) out["relabeling"] = *r.relabeling;
  return out;
}

json scan_rows_json(const ScanReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back(json{{"params", to_json(row.params)},
                        {"class", to_string(row.cls)},
                        {"e1sq_in_ideal", row.e1sq_in_ideal},
                        {"invariant_hilbert", to_json(row.invariant_hilbert)},
                        {"degree_one_hilbert", to_json(row.degree_one_hilbert)}});
  }
  return rows;
}

json scan_summary_json(const ScanReport& r) {
  json counts = json::object();
  for (auto c : {ScanClass::NotCi, ScanClass::E1sqInIdeal, ScanClass::StandardGrading,
                 ScanClass::NonStandardGrading}) {
    counts[to_string(c)] = r.count(c);
  }
  json degenerate = json::array();
  for (const auto& p : r.degenerate()) degenerate.push_back(to_json(p));
  json out{{"n", r.n},
           {"blocks", r.blocks},
           {"points", r.rows.size()},
           {"counts", counts},
           {"genericity_ratio", nullptr},
           {"degenerate", degenerate}};
  if (auto ratio = r.genericity_ratio()) out["genericity_ratio"] = *ratio;
  return out;
}

namespace {

bool is_scalar_array(const json& j) {
  return j.is_array() &&
         std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
}

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "n/a";
  return j.dump();
}

void write_text_at(std::ostream& os, const json& j, const std::string& path) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) write_text_at(os, v, path.empty() ? k : path + "." + k);
  } else if (is_scalar_array(j)) {
    os << path << ": (";
    for (std::size_t i = 0; i < j.size(); ++i) os << (i ? "," : "") << scalar_text(j[i]);
    os << ")\n";
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      write_text_at(os, j[i], path + "[" + std::to_string(i) + "]");
    }
  } else {
    os << path << ": " << scalar_text(j) << "\n";
  }
}

}  // namespace

void write_text(std::ostream& os, const json& j) { write_text_at(os, j, ""); }

}  // namespace lefforge::cli
