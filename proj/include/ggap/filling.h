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

#ifndef GGAP_FILLING_H_
#define GGAP_FILLING_H_

#include <span>
#include <string_view>
#include <vector>

#include "ggap/instance.h"
#include "ggap/rational.h"

namespace ggap {

// full: load > 1, semi-full: 1/2 <= load <= 1, semi-vacant: load < 1/2.
enum class BinClass { kFull, kSemiFull, kSemiVacant };

BinClass classify_bin(const Rational& load);
std::string_view to_string(BinClass c);

// Big items have size > 1/2.
bool is_big(const Instance& inst, int item);

// The largest item of the bin (ties: lowest index). For an almost feasible
// bin, removing it leaves load <= 1. Returns -1 for an empty bin.
int select_witness(const Instance& inst, std::span<const int> bin_items);

struct BinPartition {
  std::vector<int> a;  // contains the witness
  std::vector<int> b;
};

// Splits a bin into two sides of load <= 1: the witness starts side A and
// the remaining items are first-fit onto A in index order, the rest go to B.
// Throws kNotAlmostFeasible if the bin minus the witness exceeds 1.
BinPartition feasible_partition(const Instance& inst, std::span<const int> bin_items,
                                int witness);

enum class FillStepKind {
  kNoBig = 1,        // full bin without big items
  kOneBig = 2,       // one big item, one semi-vacant partner
  kTwoBigMove = 3,   // two big items, one of which fits the partner
  kTwoBigSplit = 4,  // two big items, two semi-vacant partners
};

struct FillStep {
  FillStepKind kind;
  std::vector<int> bins;     // participating bins, full bin first
  std::vector<int> evicted;  // item indices
  Rational profit_before;    // over the participating bins
  Rational profit_after;
};

struct Reinsertion {
  int item = 0;
  int bin = 0;
};

struct FillTrace {
  std::vector<FillStep> steps;
  std::vector<Reinsertion> reinsertions;
  // Unresolved full / semi-vacant bin counts when the two-partner step
  // phase starts; semi_vacant > 2 * full holds whenever full > 0.
  int full_before_split = 0;
  int semi_vacant_before_split = 0;
};

struct FillResult {
  Assignment assignment;
  FillTrace trace;
  std::vector<int> evicted;  // every item evicted along the way, sorted
};

// Turns an almost feasible assignment with s(I(U)) <= m/2 into a feasible
// one over the same items with at least half the profit.
//
// Steps 1-3 run first, in that priority, lowest full bin first; a bin that
// took part in a step is resolved and never touched again. Semi-full bins
// are then resolved and step 4 clears the remaining full bins. Evicted items
// (always small) are reinserted last.
//
// Throws kPreconditionViolated when the input is not almost feasible or too
// large, kInternalStuck if no step applies while a full bin remains.
FillResult resolve(const Instance& inst, const Assignment& u);

// Places each of `evicted` (size descending, ties by index) into the bin
// with room that pays most for it (ties: lowest bin). Requires small items
// and s(I(u)) + s(evicted) <= m/2.
Assignment reinsert_evicted(const Instance& inst, Assignment u, std::span<const int> evicted,
                            std::vector<Reinsertion>* log = nullptr);

}  // namespace ggap

#endif  // GGAP_FILLING_H_
