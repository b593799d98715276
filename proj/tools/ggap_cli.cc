// Copyright 2026 The ggap Authors
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

// Command-line front end: solve, gen, check-lemma4, oracle, exact.
//
// Exit codes: 0 success, 2 invalid input, 3 a certified inequality failed,
// 1 any other error.

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ggap/error.h"
#include "ggap/exact.h"
#include "ggap/generator.h"
#include "ggap/io.h"
#include "ggap/lemma4.h"
#include "ggap/lp_oracle.h"
#include "ggap/pipeline.h"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitCertificate = 3;

bool is_input_error(ggap::ErrorCode code) {
  using ggap::ErrorCode;
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kBadPartition:
    case ErrorCode::kBadSize:
    case ErrorCode::kBadBin:
    case ErrorCode::kNegativeProfit:
    case ErrorCode::kOversizedGroup:
    case ErrorCode::kElementTooLarge:
    case ErrorCode::kPreconditionViolated:
      return true;
    default:
      return false;
  }
}

void print_table(const ggap::Instance& inst, const ggap::SolveReport& r,
                 const nlohmann::json& bins) {
  auto row = [](const std::string& key, const std::string& value) {
    std::cout << std::left << std::setw(28) << key << value << "\n";
  };
  std::string groups;
  for (int g : r.selected_groups) {
    if (!groups.empty()) groups += ",";
    groups += std::to_string(inst.group(g).id);
  }
  row("selected_groups", groups.empty() ? "-" : groups);
  row("selected_size", ggap::to_string(r.selected_size));
  row("psi", ggap::to_string(r.psi_value));
  row("fractional_value", ggap::to_string(r.fractional_value));
  row("rounded_profit", ggap::to_string(r.rounded_profit));
  row("final_profit", ggap::to_string(r.final_profit));
  row("satisfied_profit", ggap::to_string(r.satisfied_profit));
  row("upper_bound", ggap::to_string(r.upper_bound));
  row("assignment", bins.dump());
  row("certificates", r.certificates.all() ? "ok" : "FAILED");
}

int run_solve(const std::string& path, int k, bool exact_compare, bool trace, bool as_json) {
  ggap::Instance inst = ggap::read_instance(path);
  ggap::validate_instance(inst, /*strict=*/true);
  ggap::SolveResult result = ggap::solve(inst, {k});
  const auto& report = result.report;
  bool ok = report.certificates.all();

  nlohmann::json doc = ggap::report_to_json(inst, report);
  doc["assignment"] = ggap::assignment_to_json(inst, result.assignment);
  if (exact_compare) {
    ggap::ExactResult exact = ggap::exact_group_gap(inst);
    doc["exact_optimum"] = ggap::to_string(exact.optimum);
    ggap::Rational ratio = exact.optimum == 0
                               ? ggap::Rational(1)
                               : ggap::Rational(report.final_profit / exact.optimum);
    doc["ratio_vs_exact"] = ggap::to_string(ratio);
    doc["ratio_vs_exact_float"] = ggap::to_double(ratio);
    if (6 * report.final_profit < exact.optimum) ok = false;
  }
  if (trace) {
    // JSON lines on stderr, one per resolution step and per reinsertion.
    const auto trace_doc = ggap::trace_to_json(inst, report.fill_trace);
    for (const auto& step : trace_doc["steps"]) std::cerr << step.dump() << "\n";
    for (const auto& r : trace_doc["reinserted"]) {
      std::cerr << nlohmann::json{{"reinsert", r}}.dump() << "\n";
    }
  }
  if (as_json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    print_table(inst, report, doc["assignment"]);
    if (exact_compare) {
      std::cout << std::left << std::setw(28) << "exact_optimum"
                << doc["exact_optimum"].get<std::string>() << "\n";
      std::cout << std::left << std::setw(28) << "ratio_vs_exact"
                << doc["ratio_vs_exact"].get<std::string>() << " ("
                << doc["ratio_vs_exact_float"].get<double>() << ")\n";
    }
  }
  return ok ? 0 : kExitCertificate;
}

std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw ggap::Error(ggap::ErrorCode::kParse, "--groups: bad id \"" + token + "\"");
    }
  }
  return out;
}

int run_oracle(const std::string& path, const std::string& groups_arg, bool as_json) {
  ggap::Instance inst = ggap::read_instance(path);
  ggap::validate_instance(inst, /*strict=*/false);
  std::vector<int> groups;
  if (groups_arg.empty()) {
    for (int g = 0; g < inst.num_groups(); ++g) groups.push_back(g);
  } else {
    for (int id : parse_id_list(groups_arg)) {
      if (id < 1 || id > inst.num_groups()) {
        throw ggap::Error(ggap::ErrorCode::kParse, "--groups: unknown group " + std::to_string(id));
      }
      groups.push_back(id - 1);
    }
  }
  ggap::Rational value = ggap::psi(inst, groups);
  if (as_json) {
    std::cout << nlohmann::json{{"psi", ggap::to_string(value)}}.dump() << "\n";
  } else {
    std::cout << ggap::to_string(value) << "\n";
  }
  return 0;
}

int run_exact(const std::string& path, bool as_json) {
  ggap::Instance inst = ggap::read_instance(path);
  ggap::validate_instance(inst, /*strict=*/false);
  ggap::ExactResult result = ggap::exact_group_gap(inst);
  if (as_json) {
    std::cout << nlohmann::json{{"optimum", ggap::to_string(result.optimum)},
                                {"assignment", ggap::assignment_to_json(inst, result.witness)},
                                {"nodes", result.nodes}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << ggap::to_string(result.optimum) << "\n";
  }
  return 0;
}

double parse_step(const std::string& text) {
  if (text.find('/') != std::string::npos) {
    return ggap::to_double(ggap::parse_rational(text, "--step"));
  }
  double value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ggap::Error(ggap::ErrorCode::kParse, "--step: expected a number, got \"" + text + "\"");
  }
  return value;
}

int run_lemma4(double step, int k) {
  ggap::Lemma4Report report = ggap::lemma4_grid_check(step, k);
  std::cout << (report.pass ? "PASS" : "FAIL") << " " << ggap::lemma4_to_json(report).dump()
            << "\n";
  return report.pass ? 0 : kExitCertificate;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Group GAP approximation toolkit"};
  app.require_subcommand(1);

  std::string file;
  int k = 6;
  bool exact_compare = false;
  bool trace = false;
  bool as_json = false;
  bool as_table = false;
  auto* solve = app.add_subcommand("solve", "Run the approximation pipeline on an instance");
  solve->add_option("file", file, "Instance JSON")->required();
  solve->add_option("--k", k, "Guess size of the submodular search")->check(CLI::PositiveNumber);
  solve->add_flag("--exact-compare", exact_compare, "Also solve exactly and report the ratio");
  solve->add_flag("--trace", trace, "Emit the filling trace as JSON lines on stderr");
  auto* json_flag = solve->add_flag("--json", as_json, "JSON report");
  solve->add_flag("--table", as_table, "Table report (default)")->excludes(json_flag);

  ggap::GeneratorSpec spec;
  std::string flavor = "uniform";
  std::string out_path;
  std::string delta = "1/2";
  auto* gen = app.add_subcommand("gen", "Generate a strict-valid random instance");
  gen->add_option("--seed", spec.seed, "RNG seed")->required();
  gen->add_option("--n", spec.items, "Number of items")->required();
  gen->add_option("--groups", spec.groups, "Number of groups")->required();
  gen->add_option("--bins", spec.bins, "Number of bins")->required();
  gen->add_option("--flavor", flavor, "uniform or vod")->check(CLI::IsMember({"uniform", "vod"}));
  gen->add_option("--denominator", spec.size_denominator, "Size grid 1/D");
  gen->add_option("--max-profit", spec.max_profit, "Largest base profit");
  gen->add_option("--delta", delta, "Group size cap as a fraction of m (p/q)");
  gen->add_option("-o,--output", out_path, "Output file")->required();

  std::string step = "1/64";
  int lemma_k = 6;
  auto* lemma = app.add_subcommand("check-lemma4", "Grid-check max(h, h') >= 1/3");
  lemma->add_option("--step", step, "Grid resolution, decimal or p/q");
  lemma->add_option("--k", lemma_k, "Constant k in h");

  std::string groups_arg;
  bool oracle_json = false;
  auto* oracle = app.add_subcommand("oracle", "Evaluate psi for a set of groups");
  oracle->add_option("file", file, "Instance JSON")->required();
  oracle->add_option("--groups", groups_arg, "Comma-separated 1-based group ids (default all)");
  oracle->add_flag("--json", oracle_json, "JSON output");

  bool exact_json = false;
  auto* exact = app.add_subcommand("exact", "Exact optimum by enumeration");
  exact->add_option("file", file, "Instance JSON")->required();
  exact->add_flag("--json", exact_json, "JSON output with witness");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*solve) return run_solve(file, k, exact_compare, trace, as_json);
    if (*gen) {
      spec.flavor = ggap::parse_flavor(flavor);
      spec.delta = ggap::parse_rational(delta, "--delta");
      ggap::Instance inst = ggap::generate_instance(spec);
      ggap::validate_instance(inst, /*strict=*/spec.delta <= ggap::Rational(1) / 2);
      ggap::write_instance(inst, out_path);
      return 0;
    }
    if (*lemma) {
      return run_lemma4(parse_step(step), lemma_k);
    }
    if (*oracle) return run_oracle(file, groups_arg, oracle_json);
    if (*exact) return run_exact(file, exact_json);
  } catch (const ggap::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? kExitInvalid : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
