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

#ifndef HYGENT_ENTROPY_HPP
#define HYGENT_ENTROPY_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hygent/hypergraphon.hpp"
#include "hygent/structure.hpp"

namespace hygent {

/// A finitely supported probability measure with exact rational masses.
template <class S>
using Measure = std::map<S, Rat>;

/// Shannon entropy in bits of a normalized measure; throws if the masses do
/// not sum to exactly 1.
template <class MapT>
double entropy_bits_of_measure(const MapT& mu) {
  Rat sum = 0;
  double h = 0.0;
  for (const auto& [atom, mass] : mu) {
    if (mass < 0) throw std::invalid_argument("entropy: negative mass");
    sum += mass;
    double p = to_double(mass);
    if (p > 0.0) h -= p * std::log2(p);
  }
  if (sum != 1) throw std::invalid_argument("entropy: measure is not normalized");
  return h;
}

/// Entropy of an explicit probability vector (exact rationals).
double entropy_bits(const std::vector<Rat>& probs);

/// One type index per k-subset of [n], in shortlex order of the subsets;
/// equivalent to a uniform-arity structure on [n], but cheap to hash.
using TypeVector = std::vector<std::uint64_t>;

struct TypeVectorHash {
  std::size_t operator()(const TypeVector& tv) const;
};

FiniteStructure structure_from_type_vector(const Signature& signature, int k,
                                           int n, const TypeVector& tv);
TypeVector type_vector_of_structure(const FiniteStructure& m, int k);

/// Samples the type vector of the structure on [n] drawn from W at `seed`
/// (same draws as sample_structure, without materializing the structure).
TypeVector sample_type_vector(const StepHypergraphon& w, int n,
                              std::uint64_t seed);

constexpr std::uint64_t kDefaultExactBudget = 100'000'000;

/// The exact distribution of the W-sample on [n], keyed by type vector.
/// Enumerates every grid-cell assignment of the strict subsets of [n] and
/// expands the per-k-set type products. Cost is bounded upfront by
/// m^(#strict subsets) * (max table support)^C(n,k) <= budget. Worker
/// threads split the assignment space; exact rational merging makes the
/// result identical for every thread count.
std::map<TypeVector, Rat> exact_type_vector_measure(
    const StepHypergraphon& w, int n,
    std::uint64_t budget = kDefaultExactBudget, int threads = 1);

/// Same distribution, with structures as atoms.
Measure<FiniteStructure> exact_mu_n(const StepHypergraphon& w, int n,
                                    std::uint64_t budget = kDefaultExactBudget,
                                    int threads = 1);

double exact_entropy(const StepHypergraphon& w, int n,
                     std::uint64_t budget = kDefaultExactBudget,
                     int threads = 1);

/// Restriction pushforward of a measure on structures over [n] to [m].
Measure<FiniteStructure> marginalize(const Measure<FiniteStructure>& mu, int m);

struct McEntropy {
  double estimate_bits = 0.0;  // plug-in with Miller-Madow correction
  double stderr_bits = 0.0;    // bootstrap standard error
  std::size_t support = 0;     // distinct structures observed
};

/// Monte Carlo entropy of the W-sample on [n]: plug-in entropy of the
/// empirical distribution over `samples` seeded draws, Miller-Madow
/// bias-corrected, with a 100-resample bootstrap standard error.
/// Deterministic in (w, n, samples, seed) for any thread count.
McEntropy mc_entropy(const StepHypergraphon& w, int n, std::uint64_t samples,
                     std::uint64_t seed, int threads = 1,
                     std::size_t support_budget = 10'000'000);

/// Miller-Madow corrected plug-in entropy plus bootstrap stderr for an
/// observed count vector (shared by the samplers' estimators).
McEntropy empirical_entropy(const std::vector<std::uint64_t>& counts,
                            std::uint64_t seed);

/// Entropy of the uniform measure over non-redundant structures on [n] for
/// a language with arity profile a: sum over r <= n of C(n,r) * r! * a(r).
BigInt uniform_nr_entropy(const ArityProfile& profile, int n);

struct EntropyPoint {
  int n;
  double h_bits;
  std::string method;  // "exact" or "mc"
  double stderr_bits;  // 0 for exact
};

struct EntropyCurve {
  std::vector<EntropyPoint> points;    // n = k .. n_max
  double leading_coefficient;          // h(n_max) / C(n_max, k)
  double integral_entropy;             // the limit value computed from W
};

enum class EntropyMethod { Exact, MonteCarlo };

EntropyCurve entropy_curve(const StepHypergraphon& w, int n_max,
                           EntropyMethod method,
                           std::uint64_t samples = 10'000,
                           std::uint64_t seed = 0,
                           std::uint64_t budget = kDefaultExactBudget);

/// exact_entropy(w, n) <= uniform_nr_entropy(profile, n), up to a relative
/// float tolerance on the left-hand side.
bool max_entropy_check(const StepHypergraphon& w, const ArityProfile& profile,
                       int n, std::uint64_t budget = kDefaultExactBudget);

}  // namespace hygent

#endif  // HYGENT_ENTROPY_HPP
