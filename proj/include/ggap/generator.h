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

#ifndef GGAP_GENERATOR_H_
#define GGAP_GENERATOR_H_

#include <cstdint>
#include <random>
#include <string_view>

#include "ggap/instance.h"
#include "ggap/rational.h"

namespace ggap {

enum class Flavor {
  kUniform,  // independent sizes and sparse uniform profits
  kVod,      // videos of 2-8 segments, profits decaying with bin distance
};

Flavor parse_flavor(std::string_view name);

struct GeneratorSpec {
  std::uint64_t seed = 1;
  int items = 8;
  int groups = 3;
  int bins = 2;
  Flavor flavor = Flavor::kUniform;
  int size_denominator = 16;  // sizes are multiples of 1/size_denominator
  int max_profit = 20;
  Rational delta = Rational(1) / 2;  // group size cap is delta * m
};

// Deterministic for a given spec, on every platform (the draws use only
// raw mt19937_64 output). Throws kPreconditionViolated for impossible specs.
Instance generate_instance(const GeneratorSpec& spec);

// Uniform integer in [lo, hi] from raw engine output.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

}  // namespace ggap

#endif  // GGAP_GENERATOR_H_
