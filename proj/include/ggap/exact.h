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

#ifndef GGAP_EXACT_H_
#define GGAP_EXACT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ggap/error.h"
#include "ggap/instance.h"
#include "ggap/rational.h"
#include "ggap/submodular.h"

namespace ggap {

struct SearchLimits {
  int max_items = 16;
  int max_groups = 12;
  int max_bins = 6;
  std::uint64_t node_budget = 20'000'000;
  bool phi_pruning = true;
};

// Raised when a search exceeds its limits; carries the best value found.
class LimitExceededError : public Error {
 public:
  LimitExceededError(const std::string& message, Rational best)
      : Error(ErrorCode::kLimitExceeded, message), best_(std::move(best)) {}
  const Rational& best_so_far() const { return best_; }

 private:
  Rational best_;
};

struct ExactResult {
  Rational optimum;
  Assignment witness;
  std::uint64_t nodes = 0;
};

// Exact Group GAP optimum. Group subsets are tried by ascending total size;
// each is packed by branch-and-bound over item -> bin placements (items by
// descending size, bins ascending), pruned by the LP over the remaining items
// with the residual capacities.
ExactResult exact_group_gap(const Instance& inst, const SearchLimits& limits = {});

// max f(S) over s(S) <= cap by enumerating all subsets; |ground| <= 20.
Rational exact_submodular_knapsack(const SubmodularOracle& oracle,
                                   std::span<const GroundElement> ground, const Rational& cap);

// Complete bipartite graph; absent edges are weight 0.
struct BipartiteGraph {
  int left = 0;
  int right = 0;
  std::vector<Rational> weights;  // row-major left x right, non-negative

  const Rational& weight(int l, int r) const { return weights[l * right + r]; }
};

// Value of a maximum-weight matching in the subgraph induced by
// left_subset and all right nodes. Exhaustive; at most 16 right nodes.
Rational matching_value_function(const BipartiteGraph& g, std::span<const int> left_subset);

// The integral matching model of the LP: item i becomes s_i * scale copies,
// bin j becomes `scale` copies, and every copy pair is joined by an edge of
// weight p_ij / (s_i * scale). Requires s_i * scale to be integral.
struct ScaledGraph {
  BipartiteGraph graph;
  std::vector<int> owner;  // item index of each left node

  std::vector<int> left_nodes(std::span<const int> items) const;
};

ScaledGraph scaled_matching_graph(const Instance& inst, int scale);

}  // namespace ggap

#endif  // GGAP_EXACT_H_
