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

#ifndef GGAP_RATIONAL_H_
#define GGAP_RATIONAL_H_

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace ggap {

// Exact rational scalar. GMP keeps values reduced with a positive
// denominator, so equal values have equal representations.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// Accepts "p", "p/q" and "-p/q" (decimal integers, q != 0). Throws
// Error(kParse) naming `field` on malformed input.
Rational parse_rational(std::string_view text, std::string_view field = "value");

// Lowest terms, "p/q", or "p" when the value is an integer.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

inline Rational make_rational(long num, long den = 1) {
  return Rational(num) / Rational(den);
}

}  // namespace ggap

#endif  // GGAP_RATIONAL_H_
