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

#include "ggap/exact.h"

#include <algorithm>
#include <map>
#include <string>

#include "ggap/lp_oracle.h"

namespace ggap {

namespace {

class Packer {
 public:
  Packer(const Instance& inst, const SearchLimits& limits, std::uint64_t& nodes)
      : inst_(inst), limits_(limits), nodes_(nodes) {}

  // Best packing of all `items` strictly above `floor`, if any.
  std::optional<std::pair<Rational, Assignment>> best_packing(std::vector<int> items,
                                                              const Rational& floor,
                                                              bool have_floor) {
    std::stable_sort(items.begin(), items.end(),
                     [&](int a, int b) { return inst_.size(a) > inst_.size(b); });
    items_ = std::move(items);
    best_.reset();
    floor_ = floor;
    have_floor_ = have_floor;
    residual_.assign(inst_.bins(), Rational(1));
    current_ = Assignment(inst_.bins());
    remaining_size_ = total_size(inst_, items_);
    search(0, Rational(0));
    return best_;
  }

 private:
  bool beats(const Rational& value) const {
    if (best_) return value > best_->first;
    return !have_floor_ || value > floor_;
  }

  void search(std::size_t depth, const Rational& profit) {
    if (++nodes_ > limits_.node_budget) {
      throw LimitExceededError("node budget exhausted",
                               best_ ? best_->first : (have_floor_ ? floor_ : Rational(0)));
    }
    if (depth == items_.size()) {
      if (beats(profit)) best_ = std::make_pair(profit, current_);
      return;
    }
    Rational free = 0;
    for (const auto& r : residual_) free += r;
    if (remaining_size_ > free) return;
    if (limits_.phi_pruning) {
      Rational greedy_bound = profit;
      for (std::size_t k = depth; k < items_.size(); ++k) {
        Rational top = 0;
        for (const auto& [bin, p] : inst_.profit_row(items_[k])) top = std::max(top, p);
        greedy_bound += top;
      }
      if (!beats(greedy_bound)) return;
      std::span<const int> rest(items_.data() + depth, items_.size() - depth);
      if (!beats(profit + phi_with_capacities(inst_, rest, residual_))) return;
    }
    const int item = items_[depth];
    const Rational& s = inst_.size(item);
    for (int j = 0; j < inst_.bins(); ++j) {
      if (residual_[j] < s) continue;
      residual_[j] -= s;
      remaining_size_ -= s;
      current_.place(item, j);
      search(depth + 1, profit + inst_.profit(item, j));
      auto& b = current_.bins[j];
      b.erase(std::find(b.begin(), b.end(), item));
      remaining_size_ += s;
      residual_[j] += s;
    }
  }

  const Instance& inst_;
  const SearchLimits& limits_;
  std::uint64_t& nodes_;
  std::vector<int> items_;
  std::vector<Rational> residual_;
  Rational remaining_size_;
  Assignment current_;
  Rational floor_;
  bool have_floor_ = false;
  std::optional<std::pair<Rational, Assignment>> best_;
};

}  // namespace

ExactResult exact_group_gap(const Instance& inst, const SearchLimits& limits) {
  if (inst.num_items() > limits.max_items || inst.num_groups() > limits.max_groups ||
      inst.bins() > limits.max_bins) {
    throw LimitExceededError("instance exceeds search limits", Rational(0));
  }
  const int groups = inst.num_groups();
  std::vector<std::pair<Rational, unsigned>> subsets;
  for (unsigned mask = 1; mask < (1u << groups); ++mask) {
    std::vector<int> chosen;
    for (int g = 0; g < groups; ++g) {
      if (mask >> g & 1) chosen.push_back(g);
    }
    Rational size = total_size(inst, items_of_groups(inst, chosen));
    if (size <= inst.bins()) subsets.emplace_back(std::move(size), mask);
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  ExactResult result;
  result.optimum = 0;
  result.witness = Assignment(inst.bins());
  Packer packer(inst, limits, result.nodes);
  for (const auto& [size, mask] : subsets) {
    std::vector<int> chosen;
    for (int g = 0; g < groups; ++g) {
      if (mask >> g & 1) chosen.push_back(g);
    }
    std::vector<int> items = items_of_groups(inst, chosen);
    if (limits.phi_pruning && phi(inst, items) <= result.optimum) continue;
    try {
      auto found = packer.best_packing(items, result.optimum, /*have_floor=*/true);
      if (found) {
        result.optimum = found->first;
        result.witness = std::move(found->second);
      }
    } catch (const LimitExceededError& e) {
      throw LimitExceededError(e.what(), std::max(result.optimum, e.best_so_far()));
    }
  }
  return result;
}

Rational exact_submodular_knapsack(const SubmodularOracle& oracle,
                                   std::span<const GroundElement> ground, const Rational& cap) {
  if (ground.size() > 20) {
    throw LimitExceededError("exhaustive knapsack limited to 20 elements", Rational(0));
  }
  const unsigned n = static_cast<unsigned>(ground.size());
  Rational best = oracle.evaluate({});
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Rational size = 0;
    ElementSet ids;
    for (unsigned k = 0; k < n; ++k) {
      if (mask >> k & 1) {
        size += ground[k].size;
        ids.push_back(ground[k].id);
      }
    }
    if (size > cap) continue;
    std::sort(ids.begin(), ids.end());
    best = std::max(best, oracle.evaluate(ids));
  }
  return best;
}

Rational matching_value_function(const BipartiteGraph& g, std::span<const int> left_subset) {
  if (g.right > 16) {
    throw LimitExceededError("matching oracle limited to 16 right nodes", Rational(0));
  }
  const std::size_t n = left_subset.size();
  const unsigned masks = 1u << g.right;
  // best[k][mask]: max weight matching the first k nodes of left_subset into
  // right nodes within mask.
  std::vector<Rational> prev(masks, Rational(0));
  std::vector<Rational> next(masks);
  for (std::size_t k = 0; k < n; ++k) {
    const int l = left_subset[k];
    for (unsigned mask = 0; mask < masks; ++mask) {
      Rational value = prev[mask];  // leave l unmatched
      for (int r = 0; r < g.right; ++r) {
        if (!(mask >> r & 1)) continue;
        Rational candidate = prev[mask & ~(1u << r)] + g.weight(l, r);
        if (candidate > value) value = std::move(candidate);
      }
      next[mask] = std::move(value);
    }
    std::swap(prev, next);
  }
  return prev[masks - 1];
}

std::vector<int> ScaledGraph::left_nodes(std::span<const int> items) const {
  std::vector<int> out;
  for (int node = 0; node < static_cast<int>(owner.size()); ++node) {
    if (std::find(items.begin(), items.end(), owner[node]) != items.end()) out.push_back(node);
  }
  return out;
}

ScaledGraph scaled_matching_graph(const Instance& inst, int scale) {
  ScaledGraph out;
  std::vector<int> copies(inst.num_items());
  for (int i = 0; i < inst.num_items(); ++i) {
    Rational scaled = inst.size(i) * scale;
    if (denominator(scaled) != 1) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "size of item " + std::to_string(inst.item(i).id) + " times " +
                      std::to_string(scale) + " is not integral");
    }
    copies[i] = numerator(scaled).convert_to<int>();
    for (int c = 0; c < copies[i]; ++c) out.owner.push_back(i);
  }
  BipartiteGraph& g = out.graph;
  g.left = static_cast<int>(out.owner.size());
  g.right = inst.bins() * scale;
  g.weights.assign(static_cast<std::size_t>(g.left) * g.right, Rational(0));
  for (int l = 0; l < g.left; ++l) {
    const int i = out.owner[l];
    for (int r = 0; r < g.right; ++r) {
      g.weights[static_cast<std::size_t>(l) * g.right + r] =
          inst.profit(i, r / scale) / copies[i];
    }
  }
  return out;
}

}  // namespace ggap
