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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails or exceeds its time limit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ggap/error.h"
#include "ggap/exact.h"
#include "ggap/filling.h"
#include "ggap/generator.h"
#include "ggap/lemma4.h"
#include "ggap/lp_oracle.h"
#include "ggap/pipeline.h"
#include "ggap/rounding.h"
#include "ggap/submodular.h"
#include "test_support.h"

namespace ggap {
namespace {

using testing::draw;
using testing::R;

struct Outcome {
  bool ok = true;
  std::size_t checks = 0;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::vector<int> members(unsigned mask, int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (mask >> v & 1) out.push_back(v);
  }
  return out;
}

// Checks f(A + u) - f(A) >= f(B + u) - f(B) for every A within B and u
// outside B, plus monotonicity and non-negativity, given f on all masks.
void check_submodular_table(const std::vector<Rational>& f, int n, const std::string& tag,
                            Outcome& out) {
  const unsigned full = (1u << n) - 1;
  for (unsigned b = 0; b <= full; ++b) {
    out.expect(f[b] >= 0, tag + ": negative value");
    for (unsigned a = b;; a = (a - 1) & b) {
      out.expect(f[a] <= f[b], tag + ": not monotone");
      for (int u = 0; u < n; ++u) {
        if (b >> u & 1) continue;
        const unsigned bit = 1u << u;
        out.expect(f[a | bit] - f[a] >= f[b | bit] - f[b], tag + ": diminishing returns violated");
      }
      if (a == 0) break;
    }
  }
}

Outcome criterion_submodularity() {
  Outcome out;
  std::mt19937_64 rng(1001);
  for (int t = 0; t < 200; ++t) {
    const int n = static_cast<int>(draw(rng, 1, 8));
    const int m = static_cast<int>(draw(rng, 1, 4));
    const int den = static_cast<int>(draw(rng, 1, 16));
    Instance base = testing::random_instance(rng, n, m, den, 12, den);
    // Random partition into groups for the group-level function.
    const int l = static_cast<int>(draw(rng, 1, n));
    std::vector<std::vector<int>> groups(l);
    for (int i = 0; i < n; ++i) groups[i < l ? i : draw(rng, 0, l - 1)].push_back(i);
    for (auto& g : groups) std::sort(g.begin(), g.end());
    std::vector<Rational> sizes;
    for (int i = 0; i < n; ++i) sizes.push_back(base.size(i));
    std::vector<std::tuple<int, int, Rational>> profits;
    for (const auto& e : base.profit_entries()) profits.emplace_back(e.item, e.bin, e.value);
    Instance inst = testing::make_instance(m, sizes, profits, groups);

    PhiEvaluator eval(inst);
    std::vector<Rational> phi_table(1u << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) phi_table[mask] = eval.phi(members(mask, n));
    check_submodular_table(phi_table, n, "phi trial " + std::to_string(t), out);
    std::vector<Rational> psi_table(1u << l);
    for (unsigned mask = 0; mask < (1u << l); ++mask) psi_table[mask] = eval.psi(members(mask, l));
    check_submodular_table(psi_table, l, "psi trial " + std::to_string(t), out);
    if (n <= 3 && m <= 2) {
      std::vector<int> all = members((1u << n) - 1, n);
      out.expect(phi_table.back() == testing::lp_vertex_oracle(inst, all),
                 "phi differs from vertex enumeration, trial " + std::to_string(t));
    }
  }
  return out;
}

Outcome criterion_reserved_capacity() {
  Outcome out;
  std::mt19937_64 rng(1002);
  for (int t = 0; t < 100; ++t) {
    const int n = static_cast<int>(draw(rng, 1, 8));
    const Rational cap = R(draw(rng, 1, 4));
    std::vector<GroundElement> ground;
    for (int e = 0; e < n; ++e) ground.push_back({e, cap * R(draw(rng, 1, 16), 32)});
    std::map<int, Rational> values;
    std::map<int, std::vector<int>> cover;
    std::vector<Rational> weights;
    for (int p = 0; p < 12; ++p) weights.push_back(R(draw(rng, 0, 9)));
    for (int e = 0; e < n; ++e) {
      values[e] = R(draw(rng, 0, 20));
      for (int p = 0; p < 12; ++p) {
        if (draw(rng, 0, 3) == 0) cover[e].push_back(p);
      }
    }
    FunctionOracle f = t % 2 == 0 ? testing::modular_oracle(values)
                                  : testing::coverage_oracle(cover, weights);
    OptResult r = submodular_opt(f, ground, {6, cap});
    const Rational opt = testing::brute_force_knapsack(f, ground, cap);
    const std::string tag = " trial " + std::to_string(t);
    out.expect(3 * r.value >= opt, "3 f(R) < OPT_m" + tag);
    out.expect(2 * r.size <= cap, "s(R) > m/2" + tag);
    out.expect(r.value == f.evaluate(r.selected), "reported value differs" + tag);
  }
  return out;
}

Outcome criterion_rounding() {
  Outcome out;
  std::mt19937_64 rng(1003);
  int done = 0;
  while (done < 200) {
    const int m = static_cast<int>(draw(rng, 1, 4));
    const int n = static_cast<int>(draw(rng, 1, 10));
    Instance inst = testing::random_instance(rng, n, m, 16);
    auto s = testing::random_subset(rng, n, 70);
    if (total_size(inst, s) > m) continue;
    FractionalSolution x = done % 2 == 0 ? testing::random_saturated_solution(rng, inst, s)
                                         : optimal_solution(inst, s);
    const std::string tag = " trial " + std::to_string(done);
    ++done;
    bool saturated = is_lp_feasible(inst, x);
    for (int i : s) saturated = saturated && x.item_total(i) == 1;
    out.expect(saturated, "fuzzer produced an unsaturated solution" + tag);
    Assignment u = round_to_assignment(inst, x);
    out.expect(assignment_profit(inst, u) >= fractional_value(inst, x), "p(U) < p.x" + tag);
    out.expect(is_almost_feasible(inst, u), "U not almost feasible" + tag);
    out.expect(u.placed_items() == x.support(), "item set changed" + tag);
  }
  return out;
}

Outcome criterion_filling() {
  Outcome out;
  std::mt19937_64 rng(1004);
  for (int t = 0; t < 500; ++t) {
    const int m = static_cast<int>(draw(rng, 2, 10));
    auto c = testing::random_almost_feasible(rng, m);
    const std::string tag = " trial " + std::to_string(t);
    const auto placed = c.u.placed_items();
    out.expect(2 * total_size(c.inst, placed) <= m && is_almost_feasible(c.inst, c.u),
               "fuzzer produced a bad input" + tag);
    try {
      FillResult r = resolve(c.inst, c.u);
      out.expect(is_feasible(c.inst, r.assignment), "output infeasible" + tag);
      out.expect(2 * assignment_profit(c.inst, r.assignment) >= assignment_profit(c.inst, c.u),
                 "lost more than half the profit" + tag);
      out.expect(r.assignment.placed_items() == placed, "item set changed" + tag);
      for (int i : r.evicted) out.expect(!is_big(c.inst, i), "big item evicted" + tag);
      if (r.trace.full_before_split > 0) {
        out.expect(r.trace.semi_vacant_before_split > 2 * r.trace.full_before_split,
                   "counting guard violated" + tag);
      }
    } catch (const Error& e) {
      out.expect(false, std::string(e.what()) + tag);
    }
  }
  return out;
}

Outcome criterion_end_to_end() {
  Outcome out;
  std::mt19937_64 rng(1005);
  int done = 0;
  int attempts = 0;
  while (done < 50 && attempts < 1000) {
    ++attempts;
    GeneratorSpec spec;
    spec.seed = rng();
    spec.bins = static_cast<int>(draw(rng, 1, 3));
    spec.groups = static_cast<int>(draw(rng, 1, 4));
    spec.flavor = draw(rng, 0, 1) == 0 ? Flavor::kUniform : Flavor::kVod;
    const int min_items = spec.flavor == Flavor::kVod ? 2 * spec.groups : spec.groups;
    if (min_items > 10) continue;
    spec.items = static_cast<int>(draw(rng, min_items, 10));
    spec.size_denominator = static_cast<int>(draw(rng, 2, 16));
    Instance inst;
    try {
      inst = generate_instance(spec);
    } catch (const Error&) {
      continue;
    }
    const std::string tag = " seed " + std::to_string(spec.seed);
    ++done;
    try {
      SolveResult r = solve(inst);
      const Rational opt = exact_group_gap(inst).optimum;
      out.expect(6 * r.report.final_profit >= opt, "6 p(final) < OPT" + tag);
      out.expect(2 * r.report.final_profit >= r.report.psi_value, "p(final) < psi/2" + tag);
      out.expect(r.report.certificates.all(), "certificate failed" + tag);
      out.expect(is_feasible(inst, r.assignment), "final assignment infeasible" + tag);
    } catch (const Error& e) {
      out.expect(false, std::string(e.what()) + tag);
    }
  }
  out.expect(done == 50, "generated only " + std::to_string(done) + " instances");
  return out;
}

Outcome criterion_lemma4() {
  Outcome out;
  Lemma4Report grid = lemma4_grid_check(1.0 / 64);
  out.expect(grid.pass && grid.min_value >= 1.0 / 3 - kLemma4Guard,
             "grid minimum " + std::to_string(grid.min_value));
  const double origin = lemma4_h(0, 0, 0, 0);
  out.expect(std::abs(origin - 0.393469) < 1e-5 && std::abs(origin - (1 - std::exp(-0.5))) < 1e-12,
             "h(0,0,0,0) = " + std::to_string(origin));
  // The boundary corner with p1 = 1/3, p2 = S2 = 0, where h and h' cross.
  const double root = std::sqrt(1 + 16 * std::exp(-1.0));
  const double corner = 5.0 / 6 - 1.0 / 18 - root / 6;
  const double l = -std::log((1 + root) / 4);
  const double s1 = (0.5 - l) / (1 - l);
  const double v = std::max(lemma4_h(1.0 / 3, 0, s1, 0), lemma4_h(0, 1.0 / 3, 0, s1));
  out.expect(std::abs(corner - 0.34043) < 1e-5 && std::abs(v - corner) < 1e-5,
             "corner value " + std::to_string(v));
  return out;
}

Outcome criterion_matching_cross_check() {
  Outcome out;
  std::mt19937_64 rng(1007);
  int done = 0;
  while (done < 50) {
    const int m = static_cast<int>(draw(rng, 1, 3));
    const int n = static_cast<int>(draw(rng, 1, 5));
    const int den = draw(rng, 0, 1) == 0 ? 2 : 4;
    Instance inst = testing::random_instance(rng, n, m, den, 12, den);
    ScaledGraph sg = scaled_matching_graph(inst, 4);
    if (sg.graph.left + sg.graph.right > 24) continue;
    const std::string tag = " trial " + std::to_string(done);
    ++done;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      const auto s = members(mask, n);
      out.expect(phi(inst, s) == matching_value_function(sg.graph, sg.left_nodes(s)),
                 "phi differs from scaled matching" + tag);
    }
  }
  return out;
}

Outcome criterion_matching_submodular() {
  Outcome out;
  std::mt19937_64 rng(1008);
  for (int t = 0; t < 100; ++t) {
    const int l = static_cast<int>(draw(rng, 1, 6));
    const int r = static_cast<int>(draw(rng, 1, 8));
    BipartiteGraph g{l, r, {}};
    for (int e = 0; e < l * r; ++e) {
      g.weights.push_back(draw(rng, 0, 3) == 0 ? R(0) : R(draw(rng, 1, 24), draw(rng, 1, 4)));
    }
    std::vector<Rational> table(1u << l);
    for (unsigned mask = 0; mask < (1u << l); ++mask) {
      table[mask] = matching_value_function(g, members(mask, l));
    }
    check_submodular_table(table, l, "graph " + std::to_string(t), out);
  }
  return out;
}

struct Criterion {
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace ggap

int main() {
  using namespace ggap;
  const std::vector<Criterion> criteria = {
      {"phi/psi submodularity", 60, criterion_submodularity},
      {"reserved-capacity guarantee", 120, criterion_reserved_capacity},
      {"rounding guarantee", 30, criterion_rounding},
      {"filling guarantee", 60, criterion_filling},
      {"end-to-end ratio", 300, criterion_end_to_end},
      {"h-function grid check", 10, criterion_lemma4},
      {"phi equals scaled matching", 60, criterion_matching_cross_check},
      {"matching value submodularity", 60, criterion_matching_submodular},
  };
  int failures = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[c].run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < criteria[c].limit_s;
    const bool pass = out.ok && in_time;
    if (!pass) ++failures;
    std::printf("%s [%zu] %s: %zu checks, %.2fs (limit %.0fs)%s%s\n", pass ? "PASS" : "FAIL",
                c + 1, criteria[c].name, out.checks, secs, criteria[c].limit_s,
                out.detail.empty() ? "" : " : ", out.detail.c_str());
    if (!in_time) std::printf("     time limit exceeded\n");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
