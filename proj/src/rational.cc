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

#include "ggap/rational.h"

#include <cctype>

#include "ggap/error.h"

namespace ggap {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kBadPartition: return "BadPartition";
    case ErrorCode::kBadSize: return "BadSize";
    case ErrorCode::kBadBin: return "BadBin";
    case ErrorCode::kNegativeProfit: return "NegativeProfit";
    case ErrorCode::kOversizedGroup: return "OversizedGroup";
    case ErrorCode::kInsufficientCapacity: return "InsufficientCapacity";
    case ErrorCode::kElementTooLarge: return "ElementTooLarge";
    case ErrorCode::kDegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::kUnsaturatedInput: return "UnsaturatedInput";
    case ErrorCode::kNoCompleteMatching: return "NoCompleteMatching";
    case ErrorCode::kNotAlmostFeasible: return "NotAlmostFeasible";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kInternalStuck: return "InternalStuck";
    case ErrorCode::kReinsertionFailed: return "ReinsertionFailed";
    case ErrorCode::kLimitExceeded: return "LimitExceeded";
  }
  return "UnknownError";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text, std::string_view field) {
  auto fail = [&](const char* why) -> Rational {
    throw Error(ErrorCode::kParse,
                std::string(field) + ": " + why + " (got \"" + std::string(text) + "\")");
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) return fail("not a rational of the form p/q");
  const Rational n{std::string(num)};
  const Rational d{std::string(den)};
  if (d == 0) return fail("zero denominator");
  Rational q = n / d;
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.str(); }

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace ggap
