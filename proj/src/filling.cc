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

#include "ggap/filling.h"

#include <algorithm>
#include <optional>
#include <string>

#include "ggap/error.h"

namespace ggap {

namespace {

const Rational kHalf = Rational(1) / 2;

std::vector<int> without(std::vector<int> items, int item) {
  items.erase(std::remove(items.begin(), items.end(), item), items.end());
  return items;
}

std::vector<int> with(std::vector<int> items, int item) {
  items.insert(std::lower_bound(items.begin(), items.end(), item), item);
  return items;
}

std::vector<int> bigs_of(const Instance& inst, std::span<const int> items) {
  std::vector<int> out;
  for (int i : items) {
    if (is_big(inst, i)) out.push_back(i);
  }
  return out;
}

bool contains(std::span<const int> items, int item) {
  return std::find(items.begin(), items.end(), item) != items.end();
}

class Resolver {
 public:
  Resolver(const Instance& inst, const Assignment& u)
      : inst_(inst), work_(u), resolved_(inst.bins(), false) {}

  FillResult run() {
    while (apply_step(FillStepKind::kNoBig) || apply_step(FillStepKind::kOneBig) ||
           apply_step(FillStepKind::kTwoBigMove)) {
    }
    for (int j = 0; j < inst_.bins(); ++j) {
      if (!resolved_[j] && classify(j) == BinClass::kSemiFull) resolved_[j] = true;
    }
    check_split_phase();
    while (auto j = first_unresolved(BinClass::kFull)) split(*j);

    FillResult result;
    std::sort(evicted_.begin(), evicted_.end());
    result.evicted = evicted_;
    work_.evicted.clear();
    result.assignment = reinsert_evicted(inst_, std::move(work_), evicted_,
                                         &trace_.reinsertions);
    result.trace = std::move(trace_);
    return result;
  }

 private:
  BinClass classify(int j) const { return classify_bin(bin_load(inst_, work_.bins[j])); }

  std::optional<int> first_unresolved(BinClass c, int skip = -1) const {
    for (int j = 0; j < inst_.bins(); ++j) {
      if (j != skip && !resolved_[j] && classify(j) == c) return j;
    }
    return std::nullopt;
  }

  Rational profit_of(std::span<const int> bins) const {
    Rational sum = 0;
    for (int b : bins) sum += bin_profit(inst_, work_.bins[b], b);
    return sum;
  }

  Rational side_profit(std::span<const int> side, int bin) const {
    return bin_profit(inst_, side, bin);
  }

  void commit(FillStepKind kind, std::vector<int> bins, std::vector<std::vector<int>> contents,
              std::vector<int> evicted) {
    std::sort(evicted.begin(), evicted.end());
    FillStep step{kind, bins, evicted, profit_of(bins), Rational(0)};
    for (std::size_t k = 0; k < bins.size(); ++k) {
      std::sort(contents[k].begin(), contents[k].end());
      work_.bins[bins[k]] = std::move(contents[k]);
      resolved_[bins[k]] = true;
    }
    for (int i : evicted) {
      if (is_big(inst_, i)) {
        throw Error(ErrorCode::kInternalStuck, "step would evict a big item");
      }
      evicted_.push_back(i);
      work_.evicted.push_back(i);
    }
    step.profit_after = profit_of(bins);
    if (2 * step.profit_after < step.profit_before) {
      throw Error(ErrorCode::kInternalStuck, "step kept less than half the profit");
    }
    trace_.steps.push_back(std::move(step));
  }

  BinPartition partition(int j) const {
    const auto& items = work_.bins[j];
    return feasible_partition(inst_, items, select_witness(inst_, items));
  }

  bool apply_step(FillStepKind kind) {
    for (int j = 0; j < inst_.bins(); ++j) {
      if (resolved_[j] || classify(j) != BinClass::kFull) continue;
      const auto bigs = bigs_of(inst_, work_.bins[j]);
      switch (kind) {
        case FillStepKind::kNoBig:
          if (bigs.empty()) {
            no_big(j);
            return true;
          }
          break;
        case FillStepKind::kOneBig:
          if (bigs.size() == 1) {
            if (auto partner = first_unresolved(BinClass::kSemiVacant, j)) {
              one_big(j, *partner);
              return true;
            }
          }
          break;
        case FillStepKind::kTwoBigMove:
          if (bigs.size() == 2 && two_big_move(j)) return true;
          break;
        case FillStepKind::kTwoBigSplit:
          break;
      }
    }
    return false;
  }

  void no_big(int j) {
    BinPartition p = partition(j);
    if (side_profit(p.a, j) > side_profit(p.b, j)) {
      commit(FillStepKind::kNoBig, {j}, {p.a}, p.b);
    } else {
      commit(FillStepKind::kNoBig, {j}, {p.b}, p.a);
    }
  }

  void one_big(int j, int l) {
    BinPartition p = partition(j);  // the big item is the witness, so it is in A
    const auto& partner = work_.bins[l];
    if (side_profit(p.a, j) + side_profit(partner, l) > side_profit(p.b, j)) {
      commit(FillStepKind::kOneBig, {j, l}, {p.a, partner}, p.b);
    } else {
      commit(FillStepKind::kOneBig, {j, l}, {p.b, p.a}, partner);
    }
  }

  bool two_big_move(int j) {
    BinPartition p = partition(j);
    const auto bigs = bigs_of(inst_, work_.bins[j]);
    const int witness = select_witness(inst_, work_.bins[j]);
    // The big item on side B first, then the witness.
    std::vector<int> candidates;
    for (int big : bigs) {
      if (big != witness) candidates.push_back(big);
    }
    candidates.push_back(witness);
    for (int l = 0; l < inst_.bins(); ++l) {
      if (l == j || resolved_[l] || classify(l) != BinClass::kSemiVacant) continue;
      const Rational partner_load = bin_load(inst_, work_.bins[l]);
      for (int big : candidates) {
        if (inst_.size(big) + partner_load > 1) continue;
        const bool in_a = contains(p.a, big);
        const auto& a_star = in_a ? p.a : p.b;
        const auto& b_star = in_a ? p.b : p.a;
        const auto& partner = work_.bins[l];
        if (side_profit(b_star, j) + side_profit(partner, l) > side_profit(a_star, j)) {
          commit(FillStepKind::kTwoBigMove, {j, l}, {b_star, with(partner, big)},
                 without(a_star, big));
        } else {
          commit(FillStepKind::kTwoBigMove, {j, l}, {a_star, b_star}, partner);
        }
        return true;
      }
    }
    return false;
  }

  void check_split_phase() {
    int full = 0;
    int vacant = 0;
    for (int j = 0; j < inst_.bins(); ++j) {
      if (resolved_[j]) continue;
      BinClass c = classify(j);
      if (c == BinClass::kSemiVacant) ++vacant;
      if (c != BinClass::kFull) continue;
      ++full;
      const auto bigs = bigs_of(inst_, work_.bins[j]);
      if (bigs.size() != 2) {
        throw Error(ErrorCode::kInternalStuck,
                    "full bin " + std::to_string(j + 1) + " left with " +
                        std::to_string(bigs.size()) + " big items after steps 1-3");
      }
    }
    trace_.full_before_split = full;
    trace_.semi_vacant_before_split = vacant;
    if (full > 0 && vacant <= 2 * full) {
      throw Error(ErrorCode::kInternalStuck,
                  std::to_string(full) + " full bins but only " + std::to_string(vacant) +
                      " semi-vacant bins");
    }
  }

  void split(int j) {
    auto l1 = first_unresolved(BinClass::kSemiVacant, j);
    std::optional<int> l2;
    for (int l = l1 ? *l1 + 1 : inst_.bins(); l < inst_.bins(); ++l) {
      if (!resolved_[l] && classify(l) == BinClass::kSemiVacant) {
        l2 = l;
        break;
      }
    }
    if (!l1 || !l2) {
      throw Error(ErrorCode::kInternalStuck,
                  "no two semi-vacant partners for full bin " + std::to_string(j + 1));
    }
    BinPartition p = partition(j);
    const auto& u1 = work_.bins[*l1];
    const auto& u2 = work_.bins[*l2];
    if (side_profit(p.a, j) + side_profit(u1, *l1) > side_profit(p.b, j) + side_profit(u2, *l2)) {
      commit(FillStepKind::kTwoBigSplit, {j, *l1, *l2}, {p.a, u1, p.b}, u2);
    } else {
      commit(FillStepKind::kTwoBigSplit, {j, *l1, *l2}, {p.b, p.a, u2}, u1);
    }
  }

  const Instance& inst_;
  Assignment work_;
  std::vector<bool> resolved_;
  std::vector<int> evicted_;
  FillTrace trace_;
};

}  // namespace

BinClass classify_bin(const Rational& load) {
  if (load > 1) return BinClass::kFull;
  if (load >= kHalf) return BinClass::kSemiFull;
  return BinClass::kSemiVacant;
}

std::string_view to_string(BinClass c) {
  switch (c) {
    case BinClass::kFull: return "full";
    case BinClass::kSemiFull: return "semi-full";
    case BinClass::kSemiVacant: return "semi-vacant";
  }
  return "?";
}

bool is_big(const Instance& inst, int item) { return inst.size(item) > kHalf; }

int select_witness(const Instance& inst, std::span<const int> bin_items) {
  int best = -1;
  for (int i : bin_items) {
    if (best < 0 || inst.size(i) > inst.size(best) ||
        (inst.size(i) == inst.size(best) && i < best)) {
      best = i;
    }
  }
  return best;
}

BinPartition feasible_partition(const Instance& inst, std::span<const int> bin_items,
                                int witness) {
  if (!contains(bin_items, witness)) {
    throw Error(ErrorCode::kNotAlmostFeasible, "witness is not in the bin");
  }
  std::vector<int> rest;
  for (int i : bin_items) {
    if (i != witness) rest.push_back(i);
  }
  std::sort(rest.begin(), rest.end());
  if (total_size(inst, rest) > 1) {
    throw Error(ErrorCode::kNotAlmostFeasible,
                "bin without item " + std::to_string(inst.item(witness).id) + " still exceeds 1");
  }
  BinPartition p;
  p.a.push_back(witness);
  Rational load_a = inst.size(witness);
  for (int i : rest) {
    if (load_a + inst.size(i) <= 1) {
      p.a.push_back(i);
      load_a += inst.size(i);
    } else {
      p.b.push_back(i);
    }
  }
  std::sort(p.a.begin(), p.a.end());
  return p;
}

FillResult resolve(const Instance& inst, const Assignment& u) {
  if (!is_well_formed(inst, u)) {
    throw Error(ErrorCode::kPreconditionViolated, "assignment is malformed");
  }
  if (!is_almost_feasible(inst, u)) {
    throw Error(ErrorCode::kPreconditionViolated, "assignment is not almost feasible");
  }
  const Rational total = total_size(inst, u.placed_items());
  if (2 * total > inst.bins()) {
    throw Error(ErrorCode::kPreconditionViolated,
                "s(I(U)) = " + to_string(total) + " exceeds m/2");
  }
  return Resolver(inst, u).run();
}

Assignment reinsert_evicted(const Instance& inst, Assignment u, std::span<const int> evicted,
                            std::vector<Reinsertion>* log) {
  Rational total = total_size(inst, u.placed_items()) + total_size(inst, evicted);
  if (2 * total > inst.bins()) {
    throw Error(ErrorCode::kPreconditionViolated, "placed plus evicted size exceeds m/2");
  }
  std::vector<int> order(evicted.begin(), evicted.end());
  for (int i : order) {
    if (is_big(inst, i)) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "evicted item " + std::to_string(inst.item(i).id) + " is big");
    }
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (inst.size(a) != inst.size(b)) return inst.size(a) > inst.size(b);
    return a < b;
  });
  std::vector<Rational> load(inst.bins());
  for (int j = 0; j < inst.bins(); ++j) load[j] = bin_load(inst, u.bins[j]);
  for (int i : order) {
    int best = -1;
    for (int j = 0; j < inst.bins(); ++j) {
      if (load[j] + inst.size(i) > 1) continue;
      if (best < 0 || inst.profit(i, j) > inst.profit(i, best)) best = j;
    }
    if (best < 0) {
      throw Error(ErrorCode::kReinsertionFailed,
                  "no bin has room for item " + std::to_string(inst.item(i).id));
    }
    u.place(i, best);
    load[best] += inst.size(i);
    u.evicted.erase(std::remove(u.evicted.begin(), u.evicted.end(), i), u.evicted.end());
    if (log) log->push_back({i, best});
  }
  return u;
}

}  // namespace ggap
