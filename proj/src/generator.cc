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

#include "ggap/generator.h"

#include <algorithm>
#include <string>
#include <vector>

#include "ggap/error.h"

namespace ggap {

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

Flavor parse_flavor(std::string_view name) {
  if (name == "uniform") return Flavor::kUniform;
  if (name == "vod") return Flavor::kVod;
  throw Error(ErrorCode::kParse, "flavor: expected uniform or vod, got " + std::string(name));
}

namespace {

[[noreturn]] void impossible(const std::string& why) {
  throw Error(ErrorCode::kPreconditionViolated, why);
}

// Splits n items into `groups` non-empty groups with sizes in [lo, hi].
std::vector<int> group_counts(std::mt19937_64& rng, int n, int groups, int lo, int hi) {
  if (groups <= 0) impossible("need at least one group");
  if (static_cast<long>(groups) * lo > n || static_cast<long>(groups) * hi < n) {
    impossible(std::to_string(n) + " items cannot form " + std::to_string(groups) +
               " groups of " + std::to_string(lo) + ".." + std::to_string(hi) + " items");
  }
  std::vector<int> counts(groups, lo);
  for (int extra = n - groups * lo; extra > 0; --extra) {
    int g;
    do {
      g = static_cast<int>(uniform_int(rng, 0, groups - 1));
    } while (counts[g] >= hi);
    ++counts[g];
  }
  return counts;
}

}  // namespace

Instance generate_instance(const GeneratorSpec& spec) {
  if (spec.items <= 0 || spec.bins <= 0 || spec.size_denominator <= 0 || spec.max_profit < 0) {
    impossible("items, bins and size denominator must be positive");
  }
  if (spec.delta <= 0) impossible("delta must be positive");
  std::mt19937_64 rng(spec.seed);
  const int den = spec.size_denominator;
  const bool vod = spec.flavor == Flavor::kVod;
  const auto counts = vod ? group_counts(rng, spec.items, spec.groups, 2, 8)
                          : group_counts(rng, spec.items, spec.groups, 1, spec.items);

  // Group capacity in units of 1/den, floored.
  const Rational cap_rational = spec.delta * spec.bins * den;
  const long cap_units = static_cast<long>(
      (numerator(cap_rational) / denominator(cap_rational)).convert_to<long long>());
  const long max_item_units = vod ? std::max(1, den / 4) : den;

  std::vector<Item> items;
  std::vector<Group> groups;
  std::vector<ProfitEntry> profits;
  int next = 0;
  for (int g = 0; g < spec.groups; ++g) {
    const int count = counts[g];
    if (cap_units < count) {
      impossible("group " + std::to_string(g) + " of " + std::to_string(count) +
                 " items cannot fit the cap delta*m with sizes >= 1/" + std::to_string(den));
    }
    Group group{g + 1, {}};
    long budget = cap_units;
    const int home = static_cast<int>(uniform_int(rng, 0, spec.bins - 1));
    const long base = uniform_int(rng, 1, std::max(1, spec.max_profit));
    for (int k = 0; k < count; ++k) {
      // Keep at least one unit for each remaining member.
      const long room = budget - (count - k - 1);
      const long units = uniform_int(rng, 1, std::min(max_item_units, room));
      budget -= units;
      const int index = next++;
      items.push_back({index, Rational(units) / den});
      group.members.push_back(index);
      for (int j = 0; j < spec.bins; ++j) {
        Rational value;
        if (vod) {
          // Revenue halves with each hop between the audience bin and j.
          const int hops = std::abs(j - home);
          value = Rational(base * uniform_int(rng, 1, 4)) / Rational(1L << std::min(hops, 20));
        } else {
          if (uniform_int(rng, 0, 9) < 3) continue;
          value = Rational(uniform_int(rng, 0, spec.max_profit));
        }
        if (value != 0) profits.push_back({index, j, value});
      }
    }
    groups.push_back(std::move(group));
  }
  return Instance(spec.bins, std::move(items), std::move(groups), std::move(profits));
}

}  // namespace ggap
