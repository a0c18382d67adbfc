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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lefforge_cli/cli.hpp"
#include "lefforge_cli/examples.hpp"
#include "lefforge_cli/reports.hpp"

namespace lefforge::cli {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "lefforge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<long long> longs(const json& j) { return j.get<std::vector<long long>>(); }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("lefforge_test_" + name);
}

TEST(Report, YoungExample) {
  const auto r = run_cli({"report", "--n", "5", "--params", "1,0,0,0", "--blocks", "2,3", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(longs(j["invariants"]["invariant_hilbert"]), (std::vector<long long>{1, 2, 3, 3, 2, 1}));
  EXPECT_TRUE(j["invariants"]["standard_grading"].get<bool>());
  EXPECT_TRUE(j["lefschetz"]["strong"].get<bool>());
  EXPECT_EQ(longs(j["quotient"]["hilbert"]), (std::vector<long long>{1, 5, 10, 10, 5, 1}));
}

TEST(Report, CubesInput) {
  const auto path = default_data_dir() + "/cubes.json";
  const auto r = run_cli({"report", "--input", path, "--blocks", "3,3", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(longs(j["invariants"]["invariant_hilbert"]),
            (std::vector<long long>{1, 2, 5, 8, 12, 14, 16, 14, 12, 8, 5, 2, 1}));
  EXPECT_EQ(j["invariants"]["min_generator_degrees"].get<std::vector<int>>(), (std::vector<int>{1, 1, 2, 2}));
  EXPECT_FALSE(j["invariants"]["standard_grading"].get<bool>());
}

TEST(Report, ArbitraryBlocksAreRelabelled) {
  const auto r = run_cli({"report", "--n", "5", "--params", "1,0,0,0", "--blocks", "1,4|2,3,5", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(longs(j["invariants"]["invariant_hilbert"]), (std::vector<long long>{1, 2, 3, 3, 2, 1}));
  EXPECT_TRUE(j["invariants"].contains("relabeling"));
}

TEST(Errors, ExitCodes) {
  const auto missing = run_cli({"report", "--params", "1,0,0,0"});
  EXPECT_EQ(missing.code, kExitValidation);
  EXPECT_NE(missing.err.find("--n"), std::string::npos);
  EXPECT_EQ(run_cli({"scan", "--n", "3", "--blocks", "3", "--grid", "0"}).code, kExitValidation);
  EXPECT_EQ(run_cli({"family", "--n", "3", "--params", "0,0,0,0"}).code, kExitValidation);
  EXPECT_EQ(run_cli({"examples", "nope"}).code, kExitValidation);
  EXPECT_EQ(run_cli({"report", "--n", "3", "--params", "1,0,0,0", "--format", "xml"}).code, kExitValidation);
  EXPECT_EQ(run_cli({"bogus"}).code, kExitValidation);
}

TEST(Family, Checks) {
  const auto r = run_cli({"family", "--n", "3", "--params", "1,0,0,1", "--check", "ci", "--check", "e1sq",
                          "--check", "slp", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_FALSE(json::parse(r.out).dump().empty());
  EXPECT_NE(r.out.find("e1sq"), std::string::npos);
}

TEST(Scan, DegenerateTuplesAndFile) {
  const auto out = temp_file("scan.json");
  const auto r = run_cli({"scan", "--n", "5", "--blocks", "2,3", "--grid", "5,6:2,3:0:2", "--out", out.string(),
                          "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(out);
  const auto rows = json::parse(in);
  ASSERT_TRUE(rows.is_array());
  bool found = false;
  for (const auto& row : rows) {
    if (row["params"].get<std::vector<std::string>>() == std::vector<std::string>{"5", "2", "0", "2"}) {
      found = true;
      EXPECT_EQ(row["class"], "non-standard-grading");
    }
  }
  EXPECT_TRUE(found);
  std::filesystem::remove(out);
}

TEST(Scan, SinglePoint) {
  const auto r = run_cli({"scan", "--n", "5", "--blocks", "2,3", "--grid", "1:0:0:0", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 1u);
  EXPECT_EQ(j["rows"][0]["class"], "standard-grading");
  EXPECT_EQ(j["counts"]["standard-grading"], 1);
}

TEST(Examples, AllBundlesPass) {
  for (const auto& name : example_names()) {
    if (name == "n6-cubes") continue;  // covered by the acceptance run
    for (const auto& check : run_example(name, default_data_dir()))
      EXPECT_TRUE(check.pass) << name << ": " << check.name << " " << check.detail;
  }
  const auto r = run_cli({"examples", "n3-resultant"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
}

TEST(Determinism, ByteIdenticalOutput) {
  const std::vector<std::string> args{"report", "--n", "4", "--params", "3,-1,2,7", "--blocks", "2,2", "--format", "json"};
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const std::vector<std::string> scan{"scan", "--n", "4", "--blocks", "2,2", "--grid", "0..2", "--format", "json"};
  EXPECT_EQ(run_cli(scan).out, run_cli(scan).out);
}

TEST(Formats, TextAndJsonCarryTheSameData) {
  const auto j = run_cli({"decompose", "--n", "4", "--params", "1,0,0,0", "--format", "json"});
  const auto t = run_cli({"decompose", "--n", "4", "--params", "1,0,0,0", "--format", "text"});
  ASSERT_EQ(j.code, kExitOk) << j.err;
  ASSERT_EQ(t.code, kExitOk) << t.err;
  std::ostringstream flattened;
  write_text(flattened, json::parse(j.out));
  EXPECT_EQ(flattened.str(), t.out);
}

}  // namespace
}  // namespace lefforge::cli
