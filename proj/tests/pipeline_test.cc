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

#include <random>

#include <gtest/gtest.h>

#include "ggap/error.h"
#include "ggap/exact.h"
#include "ggap/generator.h"
#include "ggap/lp_oracle.h"
#include "ggap/pipeline.h"
#include "test_support.h"

namespace ggap {
namespace {

using testing::R;

TEST(SolveTest, SingleItem) {
  Instance inst = testing::make_instance(1, {R(1, 2)}, {{0, 0, R(5)}});
  SolveResult r = solve(inst);
  EXPECT_EQ(r.report.selected_groups, (std::vector<int>{0}));
  EXPECT_EQ(r.report.psi_value, 5);
  EXPECT_EQ(r.report.final_profit, 5);
  EXPECT_EQ(r.report.satisfied_profit, 5);
  EXPECT_TRUE(r.report.certificates.all());
  EXPECT_EQ(r.assignment.bins[0], (std::vector<int>{0}));
}

TEST(SolveTest, TwoBigItemsInOneGroup) {
  Instance inst = testing::make_instance(3, {R(3, 5), R(3, 5)},
                                         {{0, 0, R(10)}, {1, 0, R(6)}, {1, 1, R(3)}}, {{0, 1}});
  SolveResult r = solve(inst);
  EXPECT_EQ(r.report.psi_value, 15);
  EXPECT_EQ(r.report.fractional_value, 15);
  EXPECT_EQ(r.report.rounded_profit, 16);
  EXPECT_EQ(r.report.final_profit, 13);
  EXPECT_EQ(exact_group_gap(inst).optimum, 13);
  EXPECT_TRUE(r.report.certificates.all());
  ASSERT_EQ(r.report.fill_trace.steps.size(), 1u);
}

TEST(SolveTest, RejectsOversizedGroup) {
  Instance inst = testing::make_instance(2, {R(3, 5), R(3, 5)}, {}, {{0, 1}});
  try {
    solve(inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOversizedGroup);
  }
}

TEST(SolveTest, EmptyInstance) {
  Instance inst = testing::make_instance(2, {}, {});
  SolveResult r = solve(inst);
  EXPECT_TRUE(r.report.selected_groups.empty());
  EXPECT_EQ(r.report.final_profit, 0);
  EXPECT_TRUE(r.report.certificates.all());
}

TEST(SolveTest, SixApproximationOnGeneratedInstances) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    GeneratorSpec spec;
    spec.seed = seed;
    spec.items = 2 + static_cast<int>(seed % 7);
    spec.groups = 1 + static_cast<int>(seed % 4);
    spec.bins = 1 + static_cast<int>(seed % 3);
    if (spec.groups > spec.items) spec.groups = spec.items;
    spec.flavor = seed % 2 ? Flavor::kUniform : Flavor::kVod;
    if (spec.flavor == Flavor::kVod) spec.items = std::max(spec.items, 2 * spec.groups);
    Instance inst = generate_instance(spec);
    SolveResult r = solve(inst);
    const Rational opt = exact_group_gap(inst).optimum;
    EXPECT_TRUE(r.report.certificates.all()) << "seed " << seed;
    EXPECT_TRUE(is_feasible(inst, r.assignment));
    EXPECT_GE(6 * r.report.final_profit, opt) << "seed " << seed;
    EXPECT_GE(2 * r.report.final_profit, r.report.psi_value);
    EXPECT_LE(opt, r.report.upper_bound);
    // Only whole groups are placed.
    EXPECT_EQ(r.report.satisfied_profit, r.report.final_profit);
  }
}

TEST(SolveTest, DeterministicReport) {
  GeneratorSpec spec;
  spec.seed = 77;
  spec.items = 9;
  spec.groups = 4;
  spec.bins = 3;
  Instance inst = generate_instance(spec);
  SolveResult a = solve(inst);
  SolveResult b = solve(inst);
  EXPECT_EQ(a.assignment.bins, b.assignment.bins);
  EXPECT_EQ(a.report.selected_groups, b.report.selected_groups);
}

TEST(UpperBoundTest, IsPhiOfEverything) {
  Instance inst = testing::make_instance(1, {R(3, 4), R(1, 2)}, {{0, 0, R(4)}, {1, 0, R(3)}});
  EXPECT_EQ(upper_bound(inst), R(17, 3));
}

}  // namespace
}  // namespace ggap
