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

#include "ggap/lemma4.h"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "ggap/error.h"

namespace ggap {

namespace {

std::vector<double> axis(double upper, double step) {
  std::vector<double> out;
  for (long i = 0;; ++i) {
    double v = static_cast<double>(i) * step;
    if (v > upper + 1e-12) break;
    out.push_back(v);
  }
  if (std::abs(out.back() - upper) > 1e-12) out.push_back(upper);
  return out;
}

}  // namespace

double lemma4_h(double p_a, double p_b, double s_a, double s_b, int k) {
  const double denom = 1.0 - s_a - s_b;
  if (denom <= kLemma4Guard) {
    throw Error(ErrorCode::kDegenerateDenominator,
                "1 - SA - SB = " + std::to_string(denom) + " is not above the guard");
  }
  return p_a + (1.0 - p_a - p_b) * (1.0 - std::exp(-(0.5 - s_a) / denom)) -
         (p_a + p_b) / static_cast<double>(k);
}

Lemma4Report lemma4_grid_check(double step, int k) {
  if (!(step > 0.0) || step > 0.125) {
    throw Error(ErrorCode::kPreconditionViolated, "grid step must lie in (0, 1/8]");
  }
  const auto ps = axis(1.0 / 3.0, step);
  const auto ss = axis(0.5, step);
  Lemma4Report report;
  report.step = step;
  report.min_value = std::numeric_limits<double>::infinity();
  for (double s1 : ss) {
    for (double s2 : ss) {
      const bool degenerate = 1.0 - s1 - s2 <= kLemma4Guard;
      for (double p1 : ps) {
        for (double p2 : ps) {
          if (degenerate) {
            ++report.skipped;
            continue;
          }
          ++report.evaluated;
          double v = std::max(lemma4_h(p1, p2, s1, s2, k), lemma4_h(p2, p1, s2, s1, k));
          if (v < report.min_value) {
            report.min_value = v;
            report.argmin = {p1, p2, s1, s2};
          }
        }
      }
    }
  }
  report.pass = report.min_value >= 1.0 / 3.0 - kLemma4Guard;
  return report;
}

}  // namespace ggap
