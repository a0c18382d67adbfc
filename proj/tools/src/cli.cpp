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

#include "lefforge_cli/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lefforge/errors.hpp"
#include "lefforge/family.hpp"
#include "lefforge/invariants.hpp"
#include "lefforge/lefschetz.hpp"
#include "lefforge_cli/examples.hpp"
#include "lefforge_cli/reports.hpp"

namespace lefforge::cli {

namespace {

struct Options {
  std::optional<int> n;
  std::string params;
  std::string input;
  std::string blocks;
  std::string ell;
  std::string grid;
  std::string out_path;
  std::string format = "text";
  std::string data_dir;
  std::string example;
  std::vector<std::string> checks;
  std::optional<int> top;
  std::optional<int> degree;
};

// An ideal together with the generator list in block layout.
struct Problem {
  GradedIdealPresentation pres;
  std::optional<int> top;
};

Problem load_problem(const Options& o) {
  if (!o.input.empty()) {
    if (o.n || !o.params.empty()) throw ValidationError("--input excludes --n/--params");
    std::ifstream in(o.input);
    if (!in) throw ValidationError("cannot open " + o.input);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ValidationError(o.input + ": " + e.what());
    }
    Problem p{read_presentation(j), o.top};
    if (!p.top && j.contains("top_degree")) p.top = j["top_degree"].get<int>();
    return p;
  }
  if (!o.n) throw ValidationError("missing --n (or --input)");
  if (o.params.empty()) throw ValidationError("missing --params");
  const auto inst = build_family(*o.n, FamilyParams::parse(o.params));
  return Problem{inst.presentation(), o.top};
}

int top_degree_for(const GradedIdealPresentation& pres, std::optional<int> top) {
  if (top) return *top;
  if (static_cast<int>(pres.generators().size()) != pres.ambient()) {
    throw ValidationError("--top is required unless there are n generators");
  }
  return pres.ci_socle_degree() + 1;
}

struct Blocks {
  YoungSubgroup group;
  std::optional<Permutation> relabel;
};

// "2,3" gives consecutive blocks; "1,3|2,4,5" lists 1-based variables.
Blocks parse_blocks(const std::string& text, int n) {
  auto ints = [](const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(item, &used);
      } catch (const std::exception&) {
        throw ValidationError("bad block entry '" + item + "'");
      }
      if (used != item.size()) throw ValidationError("bad block entry '" + item + "'");
      out.push_back(v);
    }
    if (out.empty()) throw ValidationError("empty block list");
    return out;
  };
  if (text.find('|') == std::string::npos) {
    YoungSubgroup g(ints(text));
    if (g.n() != n) throw ValidationError("block sizes must sum to n = " + std::to_string(n));
    return {g, std::nullopt};
  }
  std::vector<std::vector<int>> sets;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '|')) {
    auto vars = ints(part);
    for (int& v : vars) --v;
    sets.push_back(std::move(vars));
  }
  auto r = relabel_blocks(n, sets);
  return {r.group, r.relabel};
}

std::vector<Polynomial> relabeled(const std::vector<Polynomial>& fs, const Permutation& sigma) {
  std::vector<Polynomial> out(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto target = fs.size() == static_cast<std::size_t>(sigma.size())
                            ? static_cast<std::size_t>(sigma(static_cast<int>(i)))
                            : i;
    out[target] = apply_permutation(sigma, fs[i]);
  }
  return out;
}

void emit(const Options& o, const json& j, std::ostream& out) {
  std::ostringstream buf;
  if (o.format == "json") {
    buf << j.dump(2) << "\n";
  } else {
    write_text(buf, j);
  }
  if (o.out_path.empty()) {
    out << buf.str();
    return;
  }
  std::ofstream file(o.out_path);
  if (!file || !(file << buf.str())) throw ValidationError("cannot write " + o.out_path);
}

json lefschetz_section(const GradedQuotient& q, const Polynomial& ell) {
  json j = lefschetz_json(is_strong_lefschetz(GradedSubspaceFamily::full(q), ell));
  j["sperner"] = sperner_number(q);
  j["coinvariant_dimension"] = coinvariant_dimension(q, ell);
  return j;
}

int cmd_report(const Options& o, std::ostream& out) {
  Problem p = load_problem(o);
  std::optional<Blocks> blocks;
  if (!o.blocks.empty()) blocks = parse_blocks(o.blocks, p.pres.ambient());
  std::vector<Polynomial> fs = p.pres.generators();
  if (blocks && blocks->relabel) fs = relabeled(fs, *blocks->relabel);
  const GradedIdealPresentation pres(p.pres.ambient(), fs);
  const auto q = GradedQuotient::build(pres, top_degree_for(pres, p.top));
  std::optional<CompleteIntersectionCheck> ci;
  if (static_cast<int>(fs.size()) == q.ambient() && q.top_degree() > pres.ci_socle_degree()) {
    ci = is_complete_intersection(q);
  }
  const Polynomial ell = o.ell.empty() ? linear_sum(q.ambient()) : parse_polynomial(o.ell, q.ambient());
  json j{{"quotient", quotient_json(q, ci)}, {"lefschetz", lefschetz_section(q, ell)}};
  if (blocks) {
    auto report = invariant_report(q, blocks->group, fs);
    if (blocks->relabel) {
      std::vector<int> images;
      for (int i = 0; i < q.ambient(); ++i) images.push_back((*blocks->relabel)(i) + 1);
      report.relabeling = images;
    }
    j["invariants"] = invariant_json(report);
  }
  emit(o, j, out);
  return kExitOk;
}

int cmd_family(const Options& o, std::ostream& out) {
  if (!o.n) throw ValidationError("missing --n");
  if (o.params.empty()) throw ValidationError("missing --params");
  const auto inst = build_family(*o.n, FamilyParams::parse(o.params));
  std::vector<std::string> checks = o.checks;
  if (checks.empty()) checks = {"ci", "e1sq", "wlp", "slp"};
  json gens = json::array();
  for (const auto& f : inst.generators()) gens.push_back(f.to_string());
  json j{{"n", inst.n()}, {"params", to_json(inst.params())}, {"generators", gens}};
  const bool e1sq = e1sq_in_ideal(inst);
  for (const auto& c : checks) {
    if (c == "ci") {
      j["is_ci"] = inst.is_ci();
      j["hilbert"] = to_json(inst.is_ci() ? hilbert_function(inst.quotient()) : HilbertFunction());
    } else if (c == "e1sq") {
      j["e1sq_in_ideal"] = e1sq;
    } else if (c == "wlp") {
      j["wlp"] = inst.is_ci() ? json(lefschetz_section(inst.quotient(), linear_sum(inst.n()))["weak"])
                              : json(nullptr);
    } else if (c == "slp") {
      if (!inst.is_ci()) {
        j["slp"] = nullptr;
        continue;
      }
      // e_1 is the certified element when e_1^2 is not in I; otherwise search.
      const auto found = find_strong_lefschetz_element(inst.quotient(), e1sq);
      json s{{"found", found.element.has_value()}, {"tried", found.tried}, {"e1_skipped", e1sq}};
      if (found.report) s["report"] = lefschetz_json(*found.report);
      j["slp"] = s;
    }
  }
  emit(o, j, out);
  return kExitOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
  if (!o.n) throw ValidationError("missing --n");
  if (o.blocks.empty()) throw ValidationError("missing --blocks");
  const Blocks blocks = parse_blocks(o.blocks, *o.n);
  if (blocks.relabel) throw ValidationError("scan takes block sizes, not variable sets");
  const GridSpec grid = o.grid.empty() ? GridSpec::default_grid() : GridSpec::parse(o.grid);
  const auto points = grid.points();
  if (points.empty()) throw ValidationError("grid has no nonzero points");
  const ScanReport report = scan_parameters(*o.n, blocks.group, points);
  json summary = scan_summary_json(report);
  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path);
    if (!file || !(file << scan_rows_json(report).dump(2) << "\n")) {
      throw ValidationError("cannot write " + o.out_path);
    }
    summary["out"] = o.out_path;
  } else {
    summary["rows"] = scan_rows_json(report);
  }
  Options to_stdout = o;
  to_stdout.out_path.clear();
  emit(to_stdout, summary, out);
  return kExitOk;
}

int cmd_examples(const Options& o, std::ostream& out) {
  std::vector<std::string> names;
  if (o.example == "all") {
    names = example_names();
  } else {
    names = {o.example};
  }
  const std::string data = o.data_dir.empty() ? default_data_dir() : o.data_dir;
  bool all_pass = true;
  json j = json::array();
  for (const auto& name : names) {
    for (const auto& c : run_example(name, data)) {
      all_pass = all_pass && c.pass;
      j.push_back(json{{"example", name}, {"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
  }
  if (o.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    for (const auto& c : j) {
      out << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["example"].get<std::string>() << ": "
          << c["check"].get<std::string>();
      if (!c["detail"].get<std::string>().empty()) out << " [" << c["detail"].get<std::string>() << "]";
      out << "\n";
    }
  }
  return all_pass ? kExitOk : kExitInconsistency;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  Problem p = load_problem(o);
  const auto q = GradedQuotient::build(p.pres, top_degree_for(p.pres, p.top));
  int from = 0, to = q.socle_degree();
  if (o.degree) {
    if (*o.degree < 0 || *o.degree > q.top_degree()) throw ValidationError("--degree out of range");
    from = to = *o.degree;
  }
  emit(o, decomposition_json(q, from, to), out);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lefschetz properties and invariants of graded Artinian algebras", "lefforge"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Number of variables");
    sub->add_option("--params", o.params, "Family parameters p0,p1,p2,p3");
    sub->add_option("--input", o.input, "JSON file with n and generators");
    sub->add_option("--top", o.top, "Top degree to build (default: CI socle degree + 1)");
  };

  auto* report = app.add_subcommand("report", "Quotient, Lefschetz and invariant report");
  add_source(report);
  report->add_option("--blocks", o.blocks, "Block sizes 2,3 or variable sets 1,2|3,4,5");
  report->add_option("--ell", o.ell, "Linear form to test (default e1)");
  report->add_option("--out", o.out_path, "Write the report to a file");
  add_format(report);

  auto* family = app.add_subcommand("family", "Checks on one member of the quadratic family");
  family->add_option("--n", o.n, "Number of variables");
  family->add_option("--params", o.params, "p0,p1,p2,p3");
  family->add_option("--check", o.checks, "slp, wlp, ci or e1sq (repeatable)")
      ->check(CLI::IsMember({"slp", "wlp", "ci", "e1sq"}));
  add_format(family);

  auto* scan = app.add_subcommand("scan", "Classify a parameter grid");
  scan->add_option("--n", o.n, "Number of variables");
  scan->add_option("--blocks", o.blocks, "Block sizes, e.g. 2,3");
  scan->add_option("--grid", o.grid, "LO..HI[/DEN] or a,b,c per coordinate, ':'-separated");
  scan->add_option("--out", o.out_path, "Write the rows as JSON to this file");
  add_format(scan);

  auto* examples = app.add_subcommand("examples", "Reproduce a bundled example");
  examples->add_option("name", o.example, "n5-young, n6-cubes, n3-resultant, monomial-fibers, facts-3-1 or all")
      ->required();
  examples->add_option("--data-dir", o.data_dir, "Directory with bundled inputs");
  add_format(examples);

  auto* decompose = app.add_subcommand("decompose", "Isotypic decomposition of each A_d");
  add_source(decompose);
  decompose->add_option("--degree", o.degree, "Single degree");
  add_format(decompose);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitValidation;
  }

  try {
    if (*report) return cmd_report(o, out);
    if (*family) return cmd_family(o, out);
    if (*scan) return cmd_scan(o, out);
    if (*examples) return cmd_examples(o, out);
    if (*decompose) return cmd_decompose(o, out);
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << "\n";
    return kExitInconsistency;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n\n" << app.get_subcommands().front()->help();
    return kExitValidation;
  } catch (const UnstableSubspaceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace lefforge::cli
