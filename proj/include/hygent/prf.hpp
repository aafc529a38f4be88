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

#ifndef HYGENT_PRF_HPP
#define HYGENT_PRF_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "hygent/rational.hpp"

namespace hygent {

/// splitmix64 finalizer; passes standard statistical batteries and is the
/// usual choice for seeding/stream derivation.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Keyed pseudorandom function: absorb a sequence of words, then squeeze any
/// number of output words. Identical absorb sequences give identical streams.
class Prf {
 public:
  explicit Prf(std::uint64_t seed) : state_(mix64(seed ^ 0x8f1bbcdcbfa53e0bULL)) {}

  Prf& absorb(std::uint64_t w) {
    state_ = mix64(state_ ^ mix64(w));
    return *this;
  }

  Prf& absorb(std::initializer_list<std::uint64_t> ws) {
    for (auto w : ws) absorb(w);
    return *this;
  }

  /// Absorbs a big integer via its magnitude limbs (sign ignored; callers
  /// only pass non-negative values) prefixed by the limb count.
  Prf& absorb_big(const BigInt& v) {
    std::vector<std::uint64_t> limbs;
    BigInt x = v < 0 ? BigInt(-v) : v;
    while (x > 0) {
      limbs.push_back(static_cast<std::uint64_t>(x & 0xffffffffffffffffULL));
      x >>= 64;
    }
    absorb(limbs.size());
    for (auto w : limbs) absorb(w);
    return *this;
  }

  std::uint64_t next_u64() {
    counter_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_ ^ counter_);
  }

  /// Uniform in [0,1) with 53-bit resolution.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [0, bound) for bound > 0. Rejection-free: draws
  /// bitlen(bound) + 64 bits and reduces mod bound (bias < 2^-64).
  BigInt next_below(const BigInt& bound);

 private:
  std::uint64_t state_;
  std::uint64_t counter_ = 0;
};

inline BigInt Prf::next_below(const BigInt& bound) {
  if (bound <= 0) throw std::invalid_argument("next_below: bound must be positive");
  if (bound == 1) return 0;
  if (bound <= UINT64_MAX) {
    // 128 bits mod a 64-bit bound keeps the bias below 2^-64
    unsigned __int128 acc = next_u64();
    acc = (acc << 64) | next_u64();
    return BigInt(static_cast<std::uint64_t>(acc % bound.convert_to<std::uint64_t>()));
  }
  std::size_t bits = msb(bound) + 1 + 64;
  BigInt acc = 0;
  for (std::size_t got = 0; got < bits; got += 64) {
    acc <<= 64;
    acc += next_u64();
  }
  return acc % bound;
}

}  // namespace hygent

#endif  // HYGENT_PRF_HPP
