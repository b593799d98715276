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

#include "ggap/lp_oracle.h"

#include <algorithm>
#include <optional>
#include <string>

#include "ggap/error.h"
#include "ggap/transport.h"

namespace ggap {

namespace {

struct TransportSolution {
  Rational value;
  // (item, bin) -> amount of size shipped
  std::map<std::pair<int, int>, Rational> shipped;
};

TransportSolution solve_transport(const Instance& inst, std::span<const int> items,
                                  std::span<const Rational> capacity) {
  const int n = static_cast<int>(items.size());
  const int m = inst.bins();
  // source, items, bins, sink
  const int source = 0;
  const int sink = n + m + 1;
  MinCostFlow flow(n + m + 2);
  struct Link {
    int item;
    int bin;
    int handle;
  };
  std::vector<Link> links;
  for (int k = 0; k < n; ++k) {
    const int i = items[k];
    const Rational& s = inst.size(i);
    flow.add_edge(source, 1 + k, s, Rational(0));
    for (const auto& [bin, p] : inst.profit_row(i)) {
      if (p <= 0 || capacity[bin] <= 0) continue;
      int h = flow.add_edge(1 + k, 1 + n + bin, s, Rational(-p / s));
      links.push_back({i, bin, h});
    }
  }
  for (int j = 0; j < m; ++j) {
    if (capacity[j] > 0) flow.add_edge(1 + n + j, sink, capacity[j], Rational(0));
  }
  auto result = flow.run(source, sink, std::nullopt, /*only_negative=*/true);
  TransportSolution out;
  out.value = -result.cost;
  for (const auto& link : links) {
    Rational y = flow.flow(link.handle);
    if (y > 0) out.shipped[{link.item, link.bin}] = std::move(y);
  }
  return out;
}

std::vector<Rational> unit_capacities(const Instance& inst) {
  return std::vector<Rational>(inst.bins(), Rational(1));
}

}  // namespace

ItemSubset normalize_subset(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

Rational phi(const Instance& inst, std::span<const int> items) {
  if (items.empty()) return Rational(0);
  auto caps = unit_capacities(inst);
  return solve_transport(inst, items, caps).value;
}

Rational psi(const Instance& inst, std::span<const int> groups) {
  return phi(inst, items_of_groups(inst, groups));
}

Rational phi_with_capacities(const Instance& inst, std::span<const int> items,
                             std::span<const Rational> capacity) {
  if (items.empty()) return Rational(0);
  return solve_transport(inst, items, capacity).value;
}

FractionalSolution optimal_solution(const Instance& inst, std::span<const int> items) {
  const Rational needed = total_size(inst, items);
  if (needed > inst.bins()) {
    throw Error(ErrorCode::kInsufficientCapacity,
                "s(S) = " + to_string(needed) + " exceeds m = " + std::to_string(inst.bins()));
  }
  FractionalSolution x;
  if (items.empty()) {
    x.value = 0;
    return x;
  }
  auto caps = unit_capacities(inst);
  TransportSolution t = solve_transport(inst, items, caps);
  std::vector<Rational> residual(inst.bins(), Rational(1));
  for (const auto& [key, y] : t.shipped) {
    x.entries[key] = y / inst.size(key.first);
    residual[key.second] -= y;
  }
  std::vector<int> order(items.begin(), items.end());
  std::sort(order.begin(), order.end());
  for (int i : order) {
    const Rational& s = inst.size(i);
    Rational missing = 1 - x.item_total(i);
    for (int j = 0; j < inst.bins() && missing > 0; ++j) {
      if (residual[j] <= 0) continue;
      Rational amount = std::min(missing, Rational(residual[j] / s));
      x.entries[{i, j}] += amount;
      residual[j] -= amount * s;
      missing -= amount;
    }
    if (missing > 0) {
      throw Error(ErrorCode::kInsufficientCapacity,
                  "could not saturate item " + std::to_string(inst.item(i).id));
    }
  }
  x.value = fractional_value(inst, x);
  return x;
}

const Rational& PhiEvaluator::phi(const ItemSubset& items) {
  auto it = cache_.find(items);
  if (it != cache_.end()) return it->second;
  ++misses_;
  return cache_.emplace(items, ggap::phi(*inst_, items)).first->second;
}

Rational PhiEvaluator::psi(std::span<const int> groups) {
  return phi(items_of_groups(*inst_, groups));
}

}  // namespace ggap
