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

#ifndef HYGENT_SAMPLER_HPP
#define HYGENT_SAMPLER_HPP

#include <cstdint>
#include <mutex>
#include <unordered_map>

#include "hygent/hypergraphon.hpp"
#include "hygent/prf.hpp"
#include "hygent/structure.hpp"

namespace hygent {

/// Per-seed source of the i.i.d. uniforms attached to finite subsets of N.
/// zeta(D) is a pure function of (seed, D) — independent of n — so samples at
/// different universe sizes agree on their common subsets. Queries are
/// memoized; the memo is internally synchronized.
class SampleContext {
 public:
  explicit SampleContext(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform in [0,1) attached to the subset D (sorted, distinct entries).
  double zeta(const Subset& d) const;

 private:
  std::uint64_t seed_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint64_t, double> memo_;
};

/// Draws the random structure on [n] described by W: every strict subset of
/// [n] with fewer than k elements gets a grid cell from its uniform, and
/// every k-set J gets the type sampled from the table entry at its cell
/// vector using J's own uniform. Deterministic in (W, n, seed).
FiniteStructure sample_structure(const StepHypergraphon& w, int n,
                                 std::uint64_t seed);

/// True when sample(n) restricted to [n-1] equals sample(n-1) — the
/// projectivity delivered by keying uniforms on subsets rather than on n.
bool sample_restriction_consistent(const StepHypergraphon& w, int n,
                                   std::uint64_t seed);

}  // namespace hygent

#endif  // HYGENT_SAMPLER_HPP
