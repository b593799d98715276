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

#include "ggap/pipeline.h"

#include <chrono>
#include <numeric>

#include "ggap/lp_oracle.h"
#include "ggap/rounding.h"
#include "ggap/submodular.h"

namespace ggap {

namespace {

class GroupOracle : public SubmodularOracle {
 public:
  explicit GroupOracle(const Instance& inst) : evaluator_(inst) {}
  Rational evaluate(const ElementSet& groups) const override { return evaluator_.psi(groups); }

 private:
  mutable PhiEvaluator evaluator_;
};

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
      .count();
}

}  // namespace

Rational upper_bound(const Instance& inst) {
  std::vector<int> all(inst.num_items());
  std::iota(all.begin(), all.end(), 0);
  return phi(inst, all);
}

SolveResult solve(const Instance& inst, const SolveConfig& cfg) {
  validate_instance(inst, /*strict=*/true);
  SolveResult out;
  SolveReport& report = out.report;

  auto t0 = std::chrono::steady_clock::now();
  std::vector<GroundElement> ground;
  for (int g = 0; g < inst.num_groups(); ++g) ground.push_back({g, inst.group_size(g)});
  GroupOracle oracle(inst);
  OptResult selection = submodular_opt(oracle, ground, {cfg.k, Rational(inst.bins())});
  report.selected_groups = selection.selected;
  report.selected_size = selection.size;
  report.psi_value = selection.value;
  report.times.select_ms = elapsed_ms(t0);

  t0 = std::chrono::steady_clock::now();
  const ItemSubset items = items_of_groups(inst, report.selected_groups);
  FractionalSolution x = optimal_solution(inst, items);
  report.fractional_value = x.value;
  report.times.lp_ms = elapsed_ms(t0);

  t0 = std::chrono::steady_clock::now();
  out.rounded = round_to_assignment(inst, x);
  report.rounded_profit = assignment_profit(inst, out.rounded);
  report.times.round_ms = elapsed_ms(t0);

  t0 = std::chrono::steady_clock::now();
  FillResult filled = resolve(inst, out.rounded);
  out.assignment = std::move(filled.assignment);
  report.fill_trace = std::move(filled.trace);
  report.final_profit = assignment_profit(inst, out.assignment);
  report.satisfied_profit = satisfied_profit(inst, out.assignment);
  report.times.fill_ms = elapsed_ms(t0);

  report.upper_bound = upper_bound(inst);

  Certificates& c = report.certificates;
  c.selection_within_half = 2 * report.selected_size <= inst.bins();
  c.fractional_realizes_psi = report.fractional_value == report.psi_value;
  c.rounded_almost_feasible = is_almost_feasible(inst, out.rounded);
  c.rounded_dominates_fractional = report.rounded_profit >= report.fractional_value;
  c.final_feasible = is_feasible(inst, out.assignment);
  c.final_packs_selection = out.assignment.placed_items() == items;
  c.final_at_least_half_rounded = 2 * report.final_profit >= report.rounded_profit;
  c.final_at_least_half_psi = 2 * report.final_profit >= report.psi_value;
  return out;
}

}  // namespace ggap
