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

#include "ggap/submodular.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_map>

#include "ggap/error.h"

namespace ggap {

namespace {

using Mask = std::uint64_t;

// Ground elements sorted by id, addressed by bit position, with memoized
// oracle values.
class MaskedOracle {
 public:
  MaskedOracle(const SubmodularOracle& oracle, std::span<const GroundElement> ground)
      : oracle_(oracle), elements_(ground.begin(), ground.end()) {
    if (elements_.size() > 64) {
      throw Error(ErrorCode::kLimitExceeded, "ground set larger than 64 elements");
    }
    std::sort(elements_.begin(), elements_.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
  }

  int size() const { return static_cast<int>(elements_.size()); }
  const GroundElement& element(int pos) const { return elements_[pos]; }
  Mask full() const { return size() == 64 ? ~Mask{0} : (Mask{1} << size()) - 1; }

  const Rational& value(Mask mask) {
    auto it = cache_.find(mask);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(mask, oracle_.evaluate(ids(mask))).first->second;
  }

  Rational weight(Mask mask) const {
    Rational sum = 0;
    for (int pos = 0; pos < size(); ++pos) {
      if (mask >> pos & 1) sum += elements_[pos].size;
    }
    return sum;
  }

  ElementSet ids(Mask mask) const {
    ElementSet out;
    for (int pos = 0; pos < size(); ++pos) {
      if (mask >> pos & 1) out.push_back(elements_[pos].id);
    }
    return out;
  }

  std::size_t calls() const { return cache_.size(); }

 private:
  const SubmodularOracle& oracle_;
  std::vector<GroundElement> elements_;
  std::unordered_map<Mask, Rational> cache_;
};

// Greedy on g = f_{base}; returns the chosen mask T.
Mask run_greedy(MaskedOracle& f, Mask base, const Rational& cap) {
  Mask chosen = 0;
  Rational used = 0;
  Mask candidates = f.full();
  while (candidates != 0) {
    const Rational& current = f.value(base | chosen);
    int best = -1;
    Rational best_gain;
    bool best_zero_size = false;
    for (int pos = 0; pos < f.size(); ++pos) {
      if (!(candidates >> pos & 1)) continue;
      Rational gain = f.value(base | chosen | (Mask{1} << pos)) - current;
      const Rational& s = f.element(pos).size;
      const bool zero_size = s == 0;
      bool better;
      if (best < 0) {
        better = true;
      } else if (zero_size != best_zero_size) {
        better = zero_size;
      } else if (zero_size) {
        better = gain > best_gain;
      } else {
        // gain / s > best_gain / s_best
        better = gain * f.element(best).size > best_gain * s;
      }
      if (better) {
        best = pos;
        best_gain = std::move(gain);
        best_zero_size = zero_size;
      }
    }
    const Rational& s = f.element(best).size;
    if (used + s <= cap) {
      chosen |= Mask{1} << best;
      used += s;
    }
    candidates &= ~(Mask{1} << best);
  }
  return chosen;
}

// All masks over positions [0, n) with exactly `count` bits, in
// lexicographic order of their sorted position lists.
void for_each_combination(int n, int count, const std::function<void(Mask)>& visit) {
  std::vector<int> idx(count);
  std::iota(idx.begin(), idx.end(), 0);
  if (count > n) return;
  while (true) {
    Mask mask = 0;
    for (int p : idx) mask |= Mask{1} << p;
    visit(mask);
    int i = count - 1;
    while (i >= 0 && idx[i] == n - count + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < count; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Submasks of `outer` ordered by (popcount, lexicographic positions).
std::vector<Mask> ordered_submasks(Mask outer) {
  std::vector<int> positions;
  for (int p = 0; p < 64; ++p) {
    if (outer >> p & 1) positions.push_back(p);
  }
  const int n = static_cast<int>(positions.size());
  std::vector<Mask> out;
  out.reserve(std::size_t{1} << n);
  for (int count = 0; count <= n; ++count) {
    for_each_combination(n, count, [&](Mask local) {
      Mask mask = 0;
      for (int q = 0; q < n; ++q) {
        if (local >> q & 1) mask |= Mask{1} << positions[q];
      }
      out.push_back(mask);
    });
  }
  return out;
}

}  // namespace

ElementSet greedy(const SubmodularOracle& oracle, std::span<const GroundElement> ground,
                  const Rational& cap) {
  MaskedOracle f(oracle, ground);
  return f.ids(run_greedy(f, 0, cap));
}

OptResult submodular_opt(const SubmodularOracle& oracle, std::span<const GroundElement> ground,
                         const OptConfig& cfg) {
  if (cfg.k < 1) throw Error(ErrorCode::kPreconditionViolated, "k must be at least 1");
  if (cfg.capacity <= 0) throw Error(ErrorCode::kPreconditionViolated, "capacity must be positive");
  const Rational half = cfg.capacity / 2;
  for (const auto& e : ground) {
    if (e.size < 0 || e.size > half) {
      throw Error(ErrorCode::kElementTooLarge,
                  "element " + std::to_string(e.id) + " has size " + to_string(e.size) +
                      " outside [0, m/2 = " + to_string(half) + "]");
    }
  }
  MaskedOracle f(oracle, ground);
  OptResult result;
  result.below_guarantee_k = cfg.k < 6;
  Mask best = 0;
  Rational best_value = f.value(0);
  const int max_guess = std::min(cfg.k, f.size());
  for (int count = 0; count <= max_guess; ++count) {
    for_each_combination(f.size(), count, [&](Mask guess) {
      for (Mask b : ordered_submasks(guess)) {
        Rational b_size = f.weight(b);
        if (b_size > half) continue;
        Mask t = run_greedy(f, guess, half - b_size);
        ++result.pairs_examined;
        Mask candidate = b | t;
        const Rational& value = f.value(candidate);
        if (value >= best_value) {
          best = candidate;
          best_value = value;
        }
      }
    });
  }
  result.selected = f.ids(best);
  result.value = best_value;
  result.size = f.weight(best);
  result.oracle_calls = f.calls();
  return result;
}

}  // namespace ggap
