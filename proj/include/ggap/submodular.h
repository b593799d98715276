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

#ifndef GGAP_SUBMODULAR_H_
#define GGAP_SUBMODULAR_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ggap/rational.h"

namespace ggap {

struct GroundElement {
  int id = 0;
  Rational size;
};

// Sorted element ids.
using ElementSet = std::vector<int>;

// Value oracle for a non-negative monotone submodular set function.
// evaluate() receives sorted ids and must be pure.
class SubmodularOracle {
 public:
  virtual ~SubmodularOracle() = default;
  virtual Rational evaluate(const ElementSet& subset) const = 0;
};

// Adapts a callable to the oracle interface.
class FunctionOracle : public SubmodularOracle {
 public:
  explicit FunctionOracle(std::function<Rational(const ElementSet&)> fn) : fn_(std::move(fn)) {}
  Rational evaluate(const ElementSet& subset) const override { return fn_(subset); }

 private:
  std::function<Rational(const ElementSet&)> fn_;
};

struct OptConfig {
  int k = 6;          // size of the guessed prefix S_e
  Rational capacity;  // knapsack capacity m; solutions use at most m/2
};

// Density greedy: each round the element with the best marginal value per
// unit size is removed from the candidates, and kept only if it still fits
// under `cap`. Ties go to the lowest id; zero-size elements rank first.
ElementSet greedy(const SubmodularOracle& oracle, std::span<const GroundElement> ground,
                  const Rational& cap);

struct OptResult {
  ElementSet selected;
  Rational value;
  Rational size;
  std::size_t pairs_examined = 0;  // (S_e, B) pairs greedy ran on
  std::size_t oracle_calls = 0;    // distinct subsets evaluated
  bool below_guarantee_k = false;  // k < 6: no 1/3 bound
};

// Maximizes f subject to s(R) <= m/2. For every S_e with |S_e| <= k and
// every B subset of S_e with s(B) <= m/2, completes B greedily w.r.t. the
// marginal f_{S_e} within m/2 - s(B), keeping the best B u T (replaced on
// ties). Guarantees f(R) >= OPT_m / 3 where OPT_m uses the full capacity m.
//
// Throws kElementTooLarge if some size exceeds m/2, kPreconditionViolated for
// k < 1 or m <= 0, kLimitExceeded for more than 64 elements.
OptResult submodular_opt(const SubmodularOracle& oracle, std::span<const GroundElement> ground,
                         const OptConfig& cfg);

}  // namespace ggap

#endif  // GGAP_SUBMODULAR_H_
