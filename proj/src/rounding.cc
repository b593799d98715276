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

#include "ggap/rounding.h"

#include <algorithm>
#include <map>
#include <string>

#include "ggap/error.h"
#include "ggap/transport.h"

namespace ggap {

SlotGraph build_slot_graph(const Instance& inst, const FractionalSolution& x) {
  SlotGraph g;
  g.items = x.support();
  for (int i : g.items) {
    if (x.item_total(i) != 1) {
      throw Error(ErrorCode::kUnsaturatedInput,
                  "item " + std::to_string(inst.item(i).id) + " is assigned " +
                      to_string(x.item_total(i)) + " in total");
    }
  }
  std::vector<int> order = g.items;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return inst.size(a) > inst.size(b); });

  g.slots_per_bin.assign(inst.bins(), 0);
  for (int j = 0; j < inst.bins(); ++j) {
    int rank = 1;
    Rational used = 0;
    bool any = false;
    for (int i : order) {
      auto it = x.entries.find({i, j});
      if (it == x.entries.end() || it->second <= 0) continue;
      const Rational& share = it->second;
      any = true;
      if (used == 1) {
        ++rank;
        used = 0;
      }
      Rational first = std::min(share, Rational(1 - used));
      g.edges.push_back({i, j, rank, inst.profit(i, j), first});
      used += first;
      if (first != share) {
        ++rank;
        used = share - first;
        g.edges.push_back({i, j, rank, inst.profit(i, j), used});
      }
    }
    g.slots_per_bin[j] = any ? rank : 0;
  }
  return g;
}

Rational fractional_weight(const SlotGraph& g) {
  Rational sum = 0;
  for (const auto& e : g.edges) sum += e.weight * e.load;
  return sum;
}

std::vector<SlotEdge> complete_matching(const SlotGraph& g) {
  const int n = static_cast<int>(g.items.size());
  std::map<int, int> left;
  for (int k = 0; k < n; ++k) left[g.items[k]] = k;
  std::map<std::pair<int, int>, int> right;
  for (const auto& e : g.edges) right.emplace(std::make_pair(e.bin, e.rank), 0);
  int next = 0;
  for (auto& [slot, index] : right) index = next++;

  const int source = 0;
  const int sink = 1 + n + next;
  MinCostFlow flow(n + next + 2);
  for (int k = 0; k < n; ++k) flow.add_edge(source, 1 + k, Rational(1), Rational(0));
  for (int r = 0; r < next; ++r) flow.add_edge(1 + n + r, sink, Rational(1), Rational(0));
  std::vector<int> handles;
  for (const auto& e : g.edges) {
    handles.push_back(flow.add_edge(1 + left.at(e.item), 1 + n + right.at({e.bin, e.rank}),
                                    Rational(1), Rational(-e.weight)));
  }
  auto result = flow.run(source, sink, Rational(n), /*only_negative=*/false);
  if (result.flow != n) {
    throw Error(ErrorCode::kNoCompleteMatching,
                "matched " + to_string(result.flow) + " of " + std::to_string(n) + " items");
  }
  std::vector<SlotEdge> matched(n);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (flow.flow(handles[e]) == 1) matched[left.at(g.edges[e].item)] = g.edges[e];
  }
  return matched;
}

Assignment round_to_assignment(const Instance& inst, const FractionalSolution& x) {
  const Rational needed = total_size(inst, x.support());
  if (needed > inst.bins()) {
    throw Error(ErrorCode::kInsufficientCapacity,
                "support size " + to_string(needed) + " exceeds m");
  }
  SlotGraph g = build_slot_graph(inst, x);
  Assignment u(inst.bins());
  for (const auto& e : complete_matching(g)) u.place(e.item, e.bin);
  return u;
}

}  // namespace ggap
