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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ggap/error.h"
#include "ggap/exact.h"
#include "ggap/lemma4.h"
#include "ggap/submodular.h"
#include "test_support.h"

namespace ggap {
namespace {

using testing::R;

// a=0 (size 1, value 5), b=1 (size 1, value 3), c=2 (size 2, value 4).
std::vector<GroundElement> abc_ground() { return {{0, R(1)}, {1, R(1)}, {2, R(2)}}; }

TEST(GreedyTest, PicksByDensity) {
  auto f = testing::modular_oracle({{0, R(5)}, {1, R(3)}, {2, R(4)}});
  auto ground = abc_ground();
  ElementSet t = greedy(f, ground, R(2));
  EXPECT_EQ(t, (ElementSet{0, 1}));
  EXPECT_EQ(f.evaluate(t), 8);
}

TEST(GreedyTest, SkipsElementsThatDoNotFit) {
  // b=1 has size 1 and value 1; c=2 has size 2 and value 4.
  auto f = testing::modular_oracle({{0, R(0)}, {1, R(1)}, {2, R(4)}});
  std::vector<GroundElement> ground{{1, R(1)}, {2, R(2)}};
  ElementSet t = greedy(f, ground, R(3));
  EXPECT_EQ(t, (ElementSet{1, 2}));
  EXPECT_EQ(f.evaluate(t), 5);
  // With capacity 2 the denser c is taken and b no longer fits.
  EXPECT_EQ(greedy(f, ground, R(2)), (ElementSet{2}));
}

TEST(GreedyTest, EmptyWhenNothingFits) {
  auto f = testing::modular_oracle({{0, R(5)}});
  std::vector<GroundElement> ground{{0, R(3)}};
  EXPECT_TRUE(greedy(f, ground, R(2)).empty());
}

TEST(SubmodularOptTest, SingleElement) {
  auto f = testing::modular_oracle({{0, R(7)}});
  std::vector<GroundElement> ground{{0, R(1)}};
  OptResult r = submodular_opt(f, ground, {6, R(2)});
  EXPECT_EQ(r.selected, (ElementSet{0}));
  EXPECT_EQ(r.value, 7);
  EXPECT_EQ(r.size, 1);
  EXPECT_FALSE(r.below_guarantee_k);
}

TEST(SubmodularOptTest, HalfCapacityCostsAtMostHalf) {
  // Two unit elements, capacity 2: only one of them fits into m/2.
  auto f = testing::modular_oracle({{0, R(4)}, {1, R(4)}});
  std::vector<GroundElement> ground{{0, R(1)}, {1, R(1)}};
  OptResult r = submodular_opt(f, ground, {6, R(2)});
  EXPECT_EQ(r.value, 4);
  EXPECT_EQ(r.size, 1);
  auto opt = testing::brute_force_knapsack(f, ground, R(2));
  EXPECT_EQ(opt, 8);
  EXPECT_EQ(r.value * 2, opt);
}

TEST(SubmodularOptTest, RejectsElementLargerThanHalf) {
  auto f = testing::modular_oracle({{0, R(1)}});
  std::vector<GroundElement> ground{{0, R(3, 2)}};
  try {
    submodular_opt(f, ground, {6, R(2)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kElementTooLarge);
  }
}

TEST(SubmodularOptTest, RejectsBadConfig) {
  auto f = testing::modular_oracle({{0, R(1)}});
  std::vector<GroundElement> ground{{0, R(1, 2)}};
  EXPECT_THROW(submodular_opt(f, ground, {0, R(2)}), Error);
  EXPECT_THROW(submodular_opt(f, ground, {6, R(0)}), Error);
  OptResult r = submodular_opt(f, ground, {2, R(2)});
  EXPECT_TRUE(r.below_guarantee_k);
}

std::vector<GroundElement> random_ground(std::mt19937_64& rng, int n, const Rational& cap) {
  std::vector<GroundElement> ground;
  for (int e = 0; e < n; ++e) {
    // sizes in (0, cap/2] as multiples of cap/16
    ground.push_back({e, cap * R(testing::draw(rng, 1, 8), 16)});
  }
  return ground;
}

TEST(SubmodularOptTest, ThirdOfOptimumOnModularAndCoverage) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const int n = static_cast<int>(testing::draw(rng, 1, 8));
    const Rational cap = R(testing::draw(rng, 1, 4));
    auto ground = random_ground(rng, n, cap);
    std::map<int, Rational> values;
    std::map<int, std::vector<int>> cover;
    std::vector<Rational> weights;
    for (int p = 0; p < 10; ++p) weights.push_back(R(testing::draw(rng, 0, 9)));
    for (int e = 0; e < n; ++e) {
      values[e] = R(testing::draw(rng, 0, 20));
      for (int p = 0; p < 10; ++p) {
        if (testing::draw(rng, 0, 2) == 0) cover[e].push_back(p);
      }
    }
    auto modular = testing::modular_oracle(values);
    auto coverage = testing::coverage_oracle(cover, weights);
    for (const SubmodularOracle* f : {static_cast<const SubmodularOracle*>(&modular),
                                      static_cast<const SubmodularOracle*>(&coverage)}) {
      OptResult r = submodular_opt(*f, ground, {6, cap});
      EXPECT_LE(r.size * 2, cap);
      EXPECT_EQ(r.value, f->evaluate(r.selected));
      EXPECT_GE(3 * r.value, testing::brute_force_knapsack(*f, ground, cap)) << "trial " << t;
    }
  }
}

TEST(SubmodularOptTest, Deterministic) {
  std::mt19937_64 rng(5);
  auto ground = random_ground(rng, 7, R(3));
  std::map<int, std::vector<int>> cover;
  for (int e = 0; e < 7; ++e) cover[e] = {e % 3, (e * 5) % 7};
  auto f = testing::coverage_oracle(cover, {R(1), R(2), R(3), R(4), R(5), R(6), R(7)});
  OptResult a = submodular_opt(f, ground, {6, R(3)});
  OptResult b = submodular_opt(f, ground, {6, R(3)});
  EXPECT_EQ(a.selected, b.selected);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.pairs_examined, b.pairs_examined);
}

TEST(SubmodularOptTest, AgreesWithExactKnapsackSolver) {
  auto f = testing::modular_oracle({{0, R(5)}, {1, R(3)}, {2, R(4)}});
  auto ground = abc_ground();
  EXPECT_EQ(exact_submodular_knapsack(f, ground, R(2)), 8);
  EXPECT_EQ(testing::brute_force_knapsack(f, ground, R(2)), 8);
}

// Greedy from the empty set reaches (1 - exp(-c/c*)) of an optimum of size c*
// once it has spent c units, while no element is skipped.
TEST(GreedyTest, ExponentialGuaranteeOnUnitElements) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    const int n = 8;
    std::map<int, std::vector<int>> cover;
    std::vector<GroundElement> ground;
    for (int e = 0; e < n; ++e) {
      ground.push_back({e, R(1)});
      for (int p = 0; p < 12; ++p) {
        if (testing::draw(rng, 0, 3) == 0) cover[e].push_back(p);
      }
    }
    std::vector<Rational> weights(12, R(1));
    auto f = testing::coverage_oracle(cover, weights);
    const int c_star = 2;
    const Rational opt = testing::brute_force_knapsack(f, ground, R(c_star));
    for (int c = 1; c <= 4; ++c) {
      ElementSet t_set = greedy(f, ground, R(c));
      const double bound = (1.0 - std::exp(-static_cast<double>(c) / c_star)) * to_double(opt);
      EXPECT_GE(to_double(f.evaluate(t_set)) + 1e-12, bound);
    }
  }
}

TEST(Lemma4Test, SpotValues) {
  EXPECT_NEAR(lemma4_h(0, 0, 0, 0), 1 - std::exp(-0.5), 1e-12);
  EXPECT_NEAR(lemma4_h(1.0 / 3, 0, 0, 0), 1.0 / 3 + 2 * (1 - std::exp(-0.5)) / 3 - 1.0 / 18, 1e-12);
  const double x = (1 + std::sqrt(1 + 16 / std::exp(1.0))) / 4;
  const double corner = 5.0 / 6 - 1.0 / 18 - std::sqrt(1 + 16 / std::exp(1.0)) / 6;
  // exp(-(1/2 - s)/(1 - s)) = x
  const double l = -std::log(x);
  const double s1 = (0.5 - l) / (1 - l);
  const double v = std::max(lemma4_h(1.0 / 3, 0, s1, 0), lemma4_h(0, 1.0 / 3, 0, s1));
  EXPECT_NEAR(v, corner, 1e-5);
  EXPECT_NEAR(corner, 0.34043, 1e-5);
}

TEST(Lemma4Test, DegenerateDenominator) {
  try {
    lemma4_h(0.1, 0.1, 0.5, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateDenominator);
  }
}

TEST(Lemma4Test, GridPasses) {
  Lemma4Report coarse = lemma4_grid_check(1.0 / 8);
  EXPECT_TRUE(coarse.pass);
  EXPECT_GE(coarse.min_value, 1.0 / 3);
  Lemma4Report fine = lemma4_grid_check(1.0 / 64);
  EXPECT_TRUE(fine.pass);
  EXPECT_GE(fine.min_value, 1.0 / 3 - kLemma4Guard);
  EXPECT_EQ(fine.evaluated + fine.skipped, 576081u);  // 23 * 23 * 33 * 33
  EXPECT_GT(fine.skipped, 0u);
  EXPECT_TRUE(fine.argmin[0] <= 1.0 / 3 && fine.argmin[1] <= 1.0 / 3);
}

TEST(Lemma4Test, RejectsBadStep) {
  EXPECT_THROW(lemma4_grid_check(0), Error);
  EXPECT_THROW(lemma4_grid_check(0.5), Error);
}

}  // namespace
}  // namespace ggap
