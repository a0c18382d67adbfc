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

#ifndef LEFFORGE_CLI_CLI_HPP
#define LEFFORGE_CLI_CLI_HPP

#include <ostream>

namespace lefforge::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInconsistency = 3;

/// Entry point behind the lefforge executable; commands are report, family,
/// scan, examples and decompose.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lefforge::cli

#endif  // LEFFORGE_CLI_CLI_HPP
