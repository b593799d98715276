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

#include "ggap/transport.h"

#include <algorithm>

namespace ggap {

MinCostFlow::MinCostFlow(int nodes) : graph_(nodes) {}

int MinCostFlow::add_edge(int from, int to, const Rational& capacity, const Rational& cost) {
  const int forward_pos = static_cast<int>(graph_[from].size());
  const int backward_pos = static_cast<int>(graph_[to].size()) + (from == to ? 1 : 0);
  graph_[from].push_back({to, backward_pos, capacity, cost});
  graph_[to].push_back({from, forward_pos, Rational(0), Rational(-cost)});
  handles_.emplace_back(from, forward_pos);
  capacity_.push_back(capacity);
  return static_cast<int>(handles_.size()) - 1;
}

Rational MinCostFlow::flow(int edge) const {
  const auto [node, pos] = handles_[edge];
  return capacity_[edge] - graph_[node][pos].residual;
}

MinCostFlow::Result MinCostFlow::run(int source, int sink, std::optional<Rational> flow_limit,
                                     bool only_negative) {
  const int n = static_cast<int>(graph_.size());
  Result result{Rational(0), Rational(0)};
  std::vector<std::optional<Rational>> dist(n);
  std::vector<std::pair<int, int>> parent(n);
  while (!flow_limit || result.flow < *flow_limit) {
    std::fill(dist.begin(), dist.end(), std::nullopt);
    dist[source] = Rational(0);
    bool changed = true;
    for (int pass = 0; pass < n && changed; ++pass) {
      changed = false;
      for (int u = 0; u < n; ++u) {
        if (!dist[u]) continue;
        for (int k = 0; k < static_cast<int>(graph_[u].size()); ++k) {
          const Arc& arc = graph_[u][k];
          if (arc.residual <= 0) continue;
          Rational candidate = *dist[u] + arc.cost;
          if (!dist[arc.to] || candidate < *dist[arc.to]) {
            dist[arc.to] = std::move(candidate);
            parent[arc.to] = {u, k};
            changed = true;
          }
        }
      }
    }
    if (!dist[sink]) break;
    if (only_negative && *dist[sink] >= 0) break;

    Rational bottleneck;
    bool first = true;
    for (int v = sink; v != source; v = parent[v].first) {
      const Arc& arc = graph_[parent[v].first][parent[v].second];
      if (first || arc.residual < bottleneck) bottleneck = arc.residual;
      first = false;
    }
    if (flow_limit) bottleneck = std::min(bottleneck, Rational(*flow_limit - result.flow));
    for (int v = sink; v != source; v = parent[v].first) {
      Arc& arc = graph_[parent[v].first][parent[v].second];
      arc.residual -= bottleneck;
      graph_[v][arc.rev].residual += bottleneck;
    }
    result.flow += bottleneck;
    result.cost += bottleneck * *dist[sink];
  }
  return result;
}

}  // namespace ggap
