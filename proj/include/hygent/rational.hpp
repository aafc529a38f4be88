// Copyright 2026 The hygent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYGENT_RATIONAL_HPP
#define HYGENT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hygent {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

/// Exact conversion: every finite double is a dyadic rational.
inline Rat rat_from_double(double x) { return Rat(x); }

inline Rat pow2(int e) {
  if (e >= 0) return Rat(BigInt(1) << e);
  return Rat(1, BigInt(1) << (-e));
}

/// Parses "a/b", "a", or a decimal like "0.125" into an exact rational.
Rat parse_rational(const std::string& s);

/// Decimal string for CLI/CSV output; exact when the denominator is 2^a*5^b,
/// otherwise falls back to "num/den".
std::string rational_to_string(const Rat& r);

/// The largest double strictly below r (r must be within double range).
/// Used to turn exact rational CDF boundaries into double cutoffs: for a
/// 53-bit dyadic u, `cum > u` iff `u <= largest_double_below(cum)`.
double largest_double_below(const Rat& r);

struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct insufficient_gamma_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace hygent

#endif  // HYGENT_RATIONAL_HPP
