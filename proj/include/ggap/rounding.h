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

#ifndef GGAP_ROUNDING_H_
#define GGAP_ROUNDING_H_

#include <vector>

#include "ggap/instance.h"
#include "ggap/rational.h"

namespace ggap {

struct SlotEdge {
  int item = 0;
  int bin = 0;   // 0-based
  int rank = 0;  // 1-based slot rank inside the bin
  Rational weight;
  Rational load;
};

// Items on the left, slots (bin, rank) on the right. Within a bin, slots are
// filled in non-increasing item size order, so each slot except the last
// carries exactly one unit of load.
struct SlotGraph {
  std::vector<int> items;          // left side, sorted by index
  std::vector<int> slots_per_bin;  // k_j
  std::vector<SlotEdge> edges;
};

// Throws kUnsaturatedInput if an item's fractions do not sum to 1.
SlotGraph build_slot_graph(const Instance& inst, const FractionalSolution& x);

// Weight of the fractional matching x' carried by the edges.
Rational fractional_weight(const SlotGraph& g);

// Maximum-weight matching that covers every item; one edge per item,
// ordered like g.items. Throws kNoCompleteMatching if none exists.
std::vector<SlotEdge> complete_matching(const SlotGraph& g);

// Rounds a saturated fractional solution into an almost feasible
// assignment of its support with p(U) >= p.x.
Assignment round_to_assignment(const Instance& inst, const FractionalSolution& x);

}  // namespace ggap

#endif  // GGAP_ROUNDING_H_
