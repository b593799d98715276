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

#ifndef GGAP_LEMMA4_H_
#define GGAP_LEMMA4_H_

#include <array>
#include <cstddef>

namespace ggap {

inline constexpr double kLemma4Guard = 1e-9;

// h(pA, pB, SA, SB) = pA + (1 - pA - pB)(1 - exp(-(1/2 - SA) / (1 - SA - SB)))
//                     - (pA + pB) / k
// Throws Error(kDegenerateDenominator) when 1 - SA - SB <= 1e-9.
double lemma4_h(double p_a, double p_b, double s_a, double s_b, int k = 6);

struct Lemma4Report {
  double step = 0;
  double min_value = 0;
  std::array<double, 4> argmin{};  // p1, p2, S1, S2
  std::size_t evaluated = 0;
  std::size_t skipped = 0;  // points with S1 + S2 >= 1 - guard
  bool pass = false;        // min_value >= 1/3 - guard
};

// Minimum of max(h(p1,p2,S1,S2), h(p2,p1,S2,S1)) over the grid
// p1, p2 in [0, 1/3] and S1, S2 in [0, 1/2]. Each axis holds the multiples
// of `step` plus its upper endpoint. Requires 0 < step <= 1/8.
Lemma4Report lemma4_grid_check(double step, int k = 6);

}  // namespace ggap

#endif  // GGAP_LEMMA4_H_
