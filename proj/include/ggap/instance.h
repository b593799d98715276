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

#ifndef GGAP_INSTANCE_H_
#define GGAP_INSTANCE_H_

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "ggap/rational.h"

namespace ggap {

// Items are addressed by their index 0..n-1 everywhere in the library; `id`
// is the external label used by files and reports. Bins are 0-based
// internally and rendered 1-based.
struct Item {
  int id = 0;
  Rational size;
};

struct Group {
  int id = 0;
  std::vector<int> members;  // item indices
};

struct ProfitEntry {
  int item = 0;  // item index
  int bin = 0;   // 0-based
  Rational value;
};

// A Group GAP instance: m unit bins, sized items, a partition of the items
// into groups and a sparse profit table (absent entries are zero).
//
// The constructor only checks that indices are in range; the semantic
// invariants are checked by validate_instance().
class Instance {
 public:
  Instance() = default;
  Instance(int bins, std::vector<Item> items, std::vector<Group> groups,
           std::vector<ProfitEntry> profits);

  int bins() const { return bins_; }
  int num_items() const { return static_cast<int>(items_.size()); }
  int num_groups() const { return static_cast<int>(groups_.size()); }

  const std::vector<Item>& items() const { return items_; }
  const Item& item(int index) const { return items_[index]; }
  const Rational& size(int index) const { return items_[index].size; }

  const std::vector<Group>& groups() const { return groups_; }
  const Group& group(int index) const { return groups_[index]; }
  // -1 when the item belongs to no group.
  int group_of(int item) const { return group_of_[item]; }
  Rational group_size(int group) const;

  // Profit of item in 0-based bin; zero when absent.
  const Rational& profit(int item, int bin) const;
  // Non-zero entries of one item as (bin, value), ascending bin.
  const std::vector<std::pair<int, Rational>>& profit_row(int item) const {
    return rows_[item];
  }
  std::vector<ProfitEntry> profit_entries() const;

  // Index of the item with external id `id`, or -1.
  int index_of(int id) const;

 private:
  int bins_ = 0;
  std::vector<Item> items_;
  std::vector<Group> groups_;
  std::vector<std::vector<std::pair<int, Rational>>> rows_;
  std::vector<int> group_of_;
  std::map<int, int> index_of_id_;
};

void validate_instance(const Instance& inst, bool strict);

// Total size of a set of item indices.
Rational total_size(const Instance& inst, std::span<const int> items);

// Union of group members, sorted.
std::vector<int> items_of_groups(const Instance& inst, std::span<const int> groups);

// Sparse (item, bin) -> fraction map; a feasible point of LP(S).
struct FractionalSolution {
  std::map<std::pair<int, int>, Rational> entries;
  Rational value;

  Rational item_total(int item) const;
  std::vector<int> support() const;
};

Rational fractional_value(const Instance& inst, const FractionalSolution& x);
// Per-item sums <= 1, per-bin size-weighted sums <= 1, entries in (0, 1],
// cached value matches.
bool is_lp_feasible(const Instance& inst, const FractionalSolution& x);

struct Assignment {
  std::vector<std::vector<int>> bins;  // item indices per 0-based bin, sorted
  std::vector<int> evicted;            // empty except mid-filling

  Assignment() = default;
  explicit Assignment(int m) : bins(static_cast<std::size_t>(m)) {}

  void place(int item, int bin);
  std::vector<int> placed_items() const;  // sorted
  int bin_of(int item) const;             // -1 when unplaced
};

Rational bin_load(const Instance& inst, std::span<const int> bin_items);
Rational bin_profit(const Instance& inst, std::span<const int> bin_items, int bin);
Rational assignment_profit(const Instance& inst, const Assignment& u);
// Profit counted only from groups whose members are all placed.
Rational satisfied_profit(const Instance& inst, const Assignment& u);
bool is_feasible(const Instance& inst, const Assignment& u);
bool is_almost_feasible(const Instance& inst, const Assignment& u);
// No item in two bins and every index in range.
bool is_well_formed(const Instance& inst, const Assignment& u);

}  // namespace ggap

#endif  // GGAP_INSTANCE_H_
