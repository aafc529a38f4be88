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

#include "hygent/rational.hpp"

#include <cctype>
#include <cmath>

namespace hygent {

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rat(num, den);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rat(BigInt(s));
  std::string head = s.substr(0, dot);
  std::string tail = s.substr(dot + 1);
  for (char c : tail) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad decimal literal '" + s + "'");
  }
  bool neg = !head.empty() && head[0] == '-';
  if (neg) head = head.substr(1);
  if (head.empty() || head == "+") head = "0";
  BigInt scale = 1;
  for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
  BigInt num = BigInt(head) * scale + (tail.empty() ? BigInt(0) : BigInt(tail));
  Rat r(num, scale);
  return neg ? -r : r;
}

std::string rational_to_string(const Rat& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  if (den == 1) return num.str();
  // Exact finite decimal exists iff den = 2^a * 5^b.
  BigInt d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) return num.str() + "/" + den.str();
  int digits = std::max(twos, fives);
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt scaled = num * scale / den;
  bool neg = scaled < 0;
  std::string body = BigInt(abs(scaled)).str();
  if (static_cast<int>(body.size()) <= digits)
    body.insert(0, digits + 1 - body.size(), '0');
  body.insert(body.size() - digits, ".");
  return (neg ? "-" : "") + body;
}

double largest_double_below(const Rat& r) {
  double d = to_double(r);
  while (Rat(d) >= r) d = std::nextafter(d, -HUGE_VAL);
  while (true) {
    double up = std::nextafter(d, HUGE_VAL);
    if (Rat(up) >= r) break;
    d = up;
  }
  return d;
}

}  // namespace hygent
