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

#ifndef GGAP_TRANSPORT_H_
#define GGAP_TRANSPORT_H_

#include <optional>
#include <vector>

#include "ggap/rational.h"

namespace ggap {

// Min-cost flow over exact rationals by successive shortest paths
// (Bellman-Ford on the residual graph). Intended for the small graphs the
// LP oracle and the slot matching produce.
class MinCostFlow {
 public:
  explicit MinCostFlow(int nodes);

  // Returns the edge handle used by flow().
  int add_edge(int from, int to, const Rational& capacity, const Rational& cost);

  struct Result {
    Rational flow;
    Rational cost;
  };

  // Augments along cheapest paths. Stops when the sink is unreachable, when
  // `flow_limit` units have been sent, or (if `only_negative`) when the
  // cheapest path no longer has negative cost.
  Result run(int source, int sink, std::optional<Rational> flow_limit, bool only_negative);

  Rational flow(int edge) const;

 private:
  struct Arc {
    int to;
    int rev;
    Rational residual;
    Rational cost;
  };
  std::vector<std::vector<Arc>> graph_;
  std::vector<std::pair<int, int>> handles_;
  std::vector<Rational> capacity_;
};

}  // namespace ggap

#endif  // GGAP_TRANSPORT_H_
