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

#ifndef GGAP_PIPELINE_H_
#define GGAP_PIPELINE_H_

#include <vector>

#include "ggap/filling.h"
#include "ggap/instance.h"
#include "ggap/rational.h"

namespace ggap {

struct SolveConfig {
  int k = 6;
};

struct Certificates {
  bool selection_within_half = false;  // s(I(S*)) <= m/2
  bool fractional_realizes_psi = false;  // p.x == psi(S*)
  bool rounded_almost_feasible = false;
  bool rounded_dominates_fractional = false;  // p(U) >= p.x
  bool final_feasible = false;
  bool final_packs_selection = false;  // I(U') == I(S*)
  bool final_at_least_half_rounded = false;  // p(U') >= p(U)/2
  bool final_at_least_half_psi = false;      // p(U') >= psi(S*)/2

  bool all() const {
    return selection_within_half && fractional_realizes_psi && rounded_almost_feasible &&
           rounded_dominates_fractional && final_feasible && final_packs_selection &&
           final_at_least_half_rounded && final_at_least_half_psi;
  }
};

struct StageTimes {
  double select_ms = 0;
  double lp_ms = 0;
  double round_ms = 0;
  double fill_ms = 0;
};

struct SolveReport {
  std::vector<int> selected_groups;  // group indices
  Rational selected_size;
  Rational psi_value;
  Rational fractional_value;
  Rational rounded_profit;
  Rational final_profit;
  Rational satisfied_profit;
  Rational upper_bound;  // phi(I)
  Certificates certificates;
  StageTimes times;
  FillTrace fill_trace;
};

struct SolveResult {
  Assignment assignment;
  Assignment rounded;
  SolveReport report;
};

// Selects groups by reserved-capacity submodular maximization of psi, takes
// the LP point realizing psi(S*), rounds it and fills it to feasibility.
// Validates the instance in strict mode first.
SolveResult solve(const Instance& inst, const SolveConfig& cfg = {});

// phi(I): the LP over all items ignores integrality and groups, so it
// bounds the optimum from above.
Rational upper_bound(const Instance& inst);

}  // namespace ggap

#endif  // GGAP_PIPELINE_H_
