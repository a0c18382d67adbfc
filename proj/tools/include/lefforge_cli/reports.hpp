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

#ifndef LEFFORGE_CLI_REPORTS_HPP
#define LEFFORGE_CLI_REPORTS_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lefforge/family.hpp"
#include "lefforge/invariants.hpp"
#include "lefforge/lefschetz.hpp"
#include "lefforge/quotient.hpp"
#include "lefforge/symmetry.hpp"

namespace lefforge::cli {

using nlohmann::json;

json to_json(const HilbertFunction& h);
json to_json(const Rational& r);  // "p/q" string, integers without "/1"
json to_json(const FamilyParams& p);

json quotient_json(const GradedQuotient& q, const std::optional<CompleteIntersectionCheck>& ci);
json lefschetz_json(const LefschetzReport& r);

/// Per-degree isotypic multiplicities, keyed by partition label.
json decomposition_json(const GradedQuotient& q, int from, int to);

struct InvariantReport {
  std::vector<int> blocks;
  std::optional<std::vector<int>> relabeling;  // 1-based image of each variable
  HilbertFunction invariant_hilbert;
  HilbertFunction degree_one_hilbert;
  std::vector<int> min_generator_degrees;
  bool slp_e1 = false;
  std::optional<bool> vandermonde_ideal_equal;  // nullopt when not applicable
};

/// `fs` are the generators in the consecutive-block layout of g.
InvariantReport invariant_report(const GradedQuotient& q, const YoungSubgroup& g,
                                 const std::vector<Polynomial>& fs);
json invariant_json(const InvariantReport& r);

json scan_rows_json(const ScanReport& r);
json scan_summary_json(const ScanReport& r);

/// Flattens a JSON value into "path: value" lines; arrays of scalars print
/// inline as (a,b,c).
void write_text(std::ostream& os, const json& j);

}  // namespace lefforge::cli

#endif  // LEFFORGE_CLI_REPORTS_HPP
