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

#ifndef GGAP_LP_ORACLE_H_
#define GGAP_LP_ORACLE_H_

#include <map>
#include <span>
#include <vector>

#include "ggap/instance.h"
#include "ggap/rational.h"

namespace ggap {

// Sorted, duplicate-free item indices (S) and group indices (G*).
using ItemSubset = std::vector<int>;
using GroupSubset = std::vector<int>;

ItemSubset normalize_subset(std::vector<int> ids);

// Optimal value of the GAP LP restricted to `items`.
//
// The LP is solved as a transportation problem: substituting y = x * s_i
// turns it into supplies s_i per item, capacity 1 per bin and unit profit
// p_ij / s_i, which successive shortest paths solve exactly.
Rational phi(const Instance& inst, std::span<const int> items);

// phi(I(groups)).
Rational psi(const Instance& inst, std::span<const int> groups);

// Same LP with per-bin capacities `capacity` (one per bin) instead of 1.
Rational phi_with_capacities(const Instance& inst, std::span<const int> items,
                             std::span<const Rational> capacity);

// An optimal LP point in which every item of `items` is fully assigned.
// Unassigned fractions are poured into leftover capacity, items by index and
// bins by index. Throws kInsufficientCapacity when s(items) > m.
FractionalSolution optimal_solution(const Instance& inst, std::span<const int> items);

// Memoizing phi/psi evaluator bound to one instance. Not thread-safe; use one
// per worker.
class PhiEvaluator {
 public:
  explicit PhiEvaluator(const Instance& inst) : inst_(&inst) {}

  const Rational& phi(const ItemSubset& items);
  Rational psi(std::span<const int> groups);

  std::size_t cache_size() const { return cache_.size(); }
  std::size_t misses() const { return misses_; }

 private:
  const Instance* inst_;
  std::map<ItemSubset, Rational> cache_;
  std::size_t misses_ = 0;
};

}  // namespace ggap

#endif  // GGAP_LP_ORACLE_H_
