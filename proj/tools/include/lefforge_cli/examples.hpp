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

#ifndef LEFFORGE_CLI_EXAMPLES_HPP
#define LEFFORGE_CLI_EXAMPLES_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "lefforge/quotient.hpp"

namespace lefforge::cli {

struct ExampleCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// n5-young, n6-cubes, n3-resultant, monomial-fibers, facts-3-1.
const std::vector<std::string>& example_names();

/// Runs one bundle. `data_dir` holds bundled inputs such as cubes.json.
/// Throws ValidationError for an unknown name.
std::vector<ExampleCheck> run_example(const std::string& name, const std::string& data_dir);

/// Input file: {"n": N, "generators": ["x1^2", ...], "top_degree": optional}.
GradedIdealPresentation read_presentation(const nlohmann::json& j);
GradedIdealPresentation read_presentation_file(const std::string& path);

/// Directory the bundled inputs were installed to (or the source tree).
std::string default_data_dir();

}  // namespace lefforge::cli

#endif  // LEFFORGE_CLI_EXAMPLES_HPP
