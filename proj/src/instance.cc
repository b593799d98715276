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

#include "ggap/instance.h"

#include <algorithm>
#include <string>

#include "ggap/error.h"

namespace ggap {

namespace {

const Rational kZero{0};

}  // namespace

Instance::Instance(int bins, std::vector<Item> items, std::vector<Group> groups,
                   std::vector<ProfitEntry> profits)
    : bins_(bins), items_(std::move(items)), groups_(std::move(groups)) {
  if (bins_ <= 0) throw Error(ErrorCode::kBadBin, "bin count must be positive");
  const int n = num_items();
  rows_.resize(n);
  group_of_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (!index_of_id_.emplace(items_[i].id, i).second) {
      throw Error(ErrorCode::kBadPartition,
                  "duplicate item id " + std::to_string(items_[i].id));
    }
  }
  for (int g = 0; g < num_groups(); ++g) {
    std::sort(groups_[g].members.begin(), groups_[g].members.end());
    for (int member : groups_[g].members) {
      if (member < 0 || member >= n) {
        throw Error(ErrorCode::kBadPartition,
                    "group " + std::to_string(groups_[g].id) + " references unknown item");
      }
      if (group_of_[member] == -1) group_of_[member] = g;
    }
  }
  for (auto& entry : profits) {
    if (entry.item < 0 || entry.item >= n) {
      throw Error(ErrorCode::kBadPartition, "profit references unknown item");
    }
    if (entry.bin < 0 || entry.bin >= bins_) {
      throw Error(ErrorCode::kBadBin, "profit for item " + std::to_string(items_[entry.item].id) +
                                          " references bin " + std::to_string(entry.bin + 1));
    }
    if (entry.value == 0) continue;
    auto& row = rows_[entry.item];
    auto it = std::find_if(row.begin(), row.end(),
                           [&](const auto& e) { return e.first == entry.bin; });
    if (it != row.end()) {
      it->second = entry.value;
    } else {
      row.emplace_back(entry.bin, std::move(entry.value));
    }
  }
  for (auto& row : rows_) {
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
}

Rational Instance::group_size(int group) const {
  return total_size(*this, groups_[group].members);
}

const Rational& Instance::profit(int item, int bin) const {
  for (const auto& [b, value] : rows_[item]) {
    if (b == bin) return value;
  }
  return kZero;
}

std::vector<ProfitEntry> Instance::profit_entries() const {
  std::vector<ProfitEntry> out;
  for (int i = 0; i < num_items(); ++i) {
    for (const auto& [bin, value] : rows_[i]) out.push_back({i, bin, value});
  }
  return out;
}

int Instance::index_of(int id) const {
  auto it = index_of_id_.find(id);
  return it == index_of_id_.end() ? -1 : it->second;
}

void validate_instance(const Instance& inst, bool strict) {
  std::vector<int> seen(inst.num_items(), 0);
  for (const auto& group : inst.groups()) {
    if (group.members.empty()) {
      throw Error(ErrorCode::kBadPartition, "group " + std::to_string(group.id) + " is empty");
    }
    for (int member : group.members) ++seen[member];
  }
  for (int i = 0; i < inst.num_items(); ++i) {
    if (seen[i] != 1) {
      throw Error(ErrorCode::kBadPartition,
                  "item " + std::to_string(inst.item(i).id) + " appears in " +
                      std::to_string(seen[i]) + " groups");
    }
    const Rational& s = inst.size(i);
    if (s <= 0 || s > 1) {
      throw Error(ErrorCode::kBadSize, "item " + std::to_string(inst.item(i).id) +
                                           " has size " + to_string(s) + " outside (0, 1]");
    }
    for (const auto& [bin, value] : inst.profit_row(i)) {
      if (value < 0) {
        throw Error(ErrorCode::kNegativeProfit,
                    "item " + std::to_string(inst.item(i).id) + " bin " +
                        std::to_string(bin + 1) + " has profit " + to_string(value));
      }
    }
  }
  if (strict) {
    const Rational cap = Rational(inst.bins()) / 2;
    for (int g = 0; g < inst.num_groups(); ++g) {
      Rational s = inst.group_size(g);
      if (s > cap) {
        throw Error(ErrorCode::kOversizedGroup,
                    "group " + std::to_string(inst.group(g).id) + " has size " + to_string(s) +
                        " > m/2 = " + to_string(cap));
      }
    }
  }
}

Rational total_size(const Instance& inst, std::span<const int> items) {
  Rational sum = 0;
  for (int i : items) sum += inst.size(i);
  return sum;
}

std::vector<int> items_of_groups(const Instance& inst, std::span<const int> groups) {
  std::vector<int> out;
  for (int g : groups) {
    const auto& members = inst.group(g).members;
    out.insert(out.end(), members.begin(), members.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational FractionalSolution::item_total(int item) const {
  Rational sum = 0;
  for (auto it = entries.lower_bound({item, 0}); it != entries.end() && it->first.first == item;
       ++it) {
    sum += it->second;
  }
  return sum;
}

std::vector<int> FractionalSolution::support() const {
  std::vector<int> out;
  for (const auto& [key, value] : entries) {
    if (value > 0 && (out.empty() || out.back() != key.first)) out.push_back(key.first);
  }
  return out;
}

Rational fractional_value(const Instance& inst, const FractionalSolution& x) {
  Rational sum = 0;
  for (const auto& [key, value] : x.entries) sum += value * inst.profit(key.first, key.second);
  return sum;
}

bool is_lp_feasible(const Instance& inst, const FractionalSolution& x) {
  std::vector<Rational> per_item(inst.num_items());
  std::vector<Rational> per_bin(inst.bins());
  for (const auto& [key, value] : x.entries) {
    const auto [item, bin] = key;
    if (item < 0 || item >= inst.num_items() || bin < 0 || bin >= inst.bins()) return false;
    if (value <= 0 || value > 1) return false;
    per_item[item] += value;
    per_bin[bin] += value * inst.size(item);
  }
  for (const auto& v : per_item) {
    if (v > 1) return false;
  }
  for (const auto& v : per_bin) {
    if (v > 1) return false;
  }
  return fractional_value(inst, x) == x.value;
}

void Assignment::place(int item, int bin) {
  auto& b = bins[bin];
  b.insert(std::lower_bound(b.begin(), b.end(), item), item);
}

std::vector<int> Assignment::placed_items() const {
  std::vector<int> out;
  for (const auto& b : bins) out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

int Assignment::bin_of(int item) const {
  for (std::size_t j = 0; j < bins.size(); ++j) {
    if (std::binary_search(bins[j].begin(), bins[j].end(), item)) return static_cast<int>(j);
  }
  return -1;
}

Rational bin_load(const Instance& inst, std::span<const int> bin_items) {
  return total_size(inst, bin_items);
}

Rational bin_profit(const Instance& inst, std::span<const int> bin_items, int bin) {
  Rational sum = 0;
  for (int i : bin_items) sum += inst.profit(i, bin);
  return sum;
}

Rational assignment_profit(const Instance& inst, const Assignment& u) {
  Rational sum = 0;
  for (std::size_t j = 0; j < u.bins.size(); ++j) {
    sum += bin_profit(inst, u.bins[j], static_cast<int>(j));
  }
  return sum;
}

Rational satisfied_profit(const Instance& inst, const Assignment& u) {
  std::vector<int> where(inst.num_items(), -1);
  for (std::size_t j = 0; j < u.bins.size(); ++j) {
    for (int i : u.bins[j]) where[i] = static_cast<int>(j);
  }
  Rational sum = 0;
  for (const auto& group : inst.groups()) {
    bool satisfied = std::all_of(group.members.begin(), group.members.end(),
                                 [&](int i) { return where[i] >= 0; });
    if (!satisfied) continue;
    for (int i : group.members) sum += inst.profit(i, where[i]);
  }
  return sum;
}

bool is_feasible(const Instance& inst, const Assignment& u) {
  return std::all_of(u.bins.begin(), u.bins.end(),
                     [&](const auto& b) { return bin_load(inst, b) <= 1; });
}

bool is_almost_feasible(const Instance& inst, const Assignment& u) {
  for (const auto& b : u.bins) {
    if (b.empty()) continue;
    Rational load = bin_load(inst, b);
    Rational largest = 0;
    for (int i : b) largest = std::max(largest, inst.size(i));
    if (load - largest > 1) return false;
  }
  return true;
}

bool is_well_formed(const Instance& inst, const Assignment& u) {
  if (static_cast<int>(u.bins.size()) != inst.bins()) return false;
  std::vector<int> count(inst.num_items(), 0);
  for (const auto& b : u.bins) {
    for (int i : b) {
      if (i < 0 || i >= inst.num_items() || ++count[i] > 1) return false;
    }
  }
  return true;
}

}  // namespace ggap
