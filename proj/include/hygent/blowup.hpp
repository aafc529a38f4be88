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

#ifndef HYGENT_BLOWUP_HPP
#define HYGENT_BLOWUP_HPP

#include <cstdint>
#include <vector>

#include "hygent/entropy.hpp"
#include "hygent/hypergraphon.hpp"
#include "hygent/rado.hpp"
#include "hygent/structure.hpp"

namespace hygent {

/// gamma values on an initial segment of N; zero beyond the table.
struct GammaTable {
  std::vector<std::pair<long long, Rat>> entries;  // sorted by n, values in [0,1]

  static GammaTable zero() { return {}; }
  static GammaTable from_pairs(std::vector<std::pair<long long, Rat>> pairs);
  Rat value(long long n) const;
  long long max_n() const;  // -1 when empty
};

/// The generation weights used to blow the Rado hypergraph up into a unit
/// interval partition: generations are grouped into consecutive blocks of
/// length g_r, every generation in block r getting mass 1/(g_r * 2^r). The
/// blocks stop at r_max, leaving mass 2^-r_max unassigned.
struct BlowupSchedule {
  int k = 0;
  int r_max = 0;
  GammaTable gamma;                                         // source table
  std::vector<long long> g;                                 // g[r-1] = g_r
  std::vector<Rat> alpha;                                   // alpha[r-1], per generation
  std::vector<std::pair<long long, long long>> gen_ranges;  // block r-1 = [lo, hi)

  long long generation_count() const { return gen_ranges.back().second; }
  int block_of(long long ell) const;  // r with ell in block r
  Rat alpha_of(long long ell) const { return alpha[block_of(ell) - 1]; }
  Rat total_mass() const;  // sum of alpha over all generations = 1 - 2^-r_max
};

/// g_r = max({2^(r+3) k} u {n : gamma(n) > 2^(-(r+1)k - 3k - 1) k^-k}).
/// Rejects tables whose final entry still exceeds the threshold (the zero
/// tail cannot be trusted to have started).
BlowupSchedule build_schedule(const GammaTable& gamma, int k, int r_max);

/// The interval partition realizing the schedule. The truncation remainder
/// 2^-r_max is reassigned proportionally across the first block, so the
/// effective generation masses sum to exactly 1 while same-generation
/// vertices keep equal mass.
class BlowupMap {
 public:
  explicit BlowupMap(const BlowupSchedule& schedule);

  const std::vector<Rat>& effective_alpha() const { return effective_alpha_; }
  long long generation_count() const {
    return static_cast<long long>(effective_alpha_.size());
  }
  /// Inverse-CDF generation lookup for a uniform in [0,1).
  long long generation_of(double u) const;
  /// Mass of one vertex of generation ell (explicit generations only).
  Rat effective_vertex_mass(const RadoHypergraph& rado, long long ell) const;

 private:
  std::vector<Rat> effective_alpha_;
  std::vector<double> cutoffs_;
};

/// The vertex image of each element of [n]: the generation comes from the
/// element's uniform through the interval partition, the index is uniform
/// within the generation. Keyed by element, so assignments are projective
/// across n for a fixed seed.
std::vector<RadoVertex> blowup_vertex_assignment(const BlowupSchedule& schedule,
                                                 const RadoHypergraph& rado,
                                                 int n, std::uint64_t seed);

/// The random k-uniform hypergraph on [n] sampled from the blow-up of the
/// Rado hypergraph: each j gets a generation through the interval partition
/// and a uniform vertex within it, and each k-set is an edge iff its image
/// vertices are distinct and joined. Deterministic in seed.
FiniteStructure sample_blowup(const BlowupSchedule& schedule,
                              const RadoHypergraph& rado, int n,
                              std::uint64_t seed);

struct UniformityReport {
  std::vector<std::uint64_t> counts;  // one per labeled hypergraph on [s]
  double chi_square = 0.0;
  double p_value = 0.0;
  std::uint64_t trials = 0;
};

/// Samples one uniform vertex per generation rho[j] (rho injective) per
/// trial, records the induced hypergraph on [s], and chi-square-tests the
/// empirical distribution against the uniform one.
UniformityReport conditional_uniformity(const BlowupSchedule& schedule,
                                        const RadoHypergraph& rado,
                                        const std::vector<long long>& rho,
                                        std::uint64_t trials,
                                        std::uint64_t seed);

struct ConditionalEntropyReport {
  double estimate_bits = 0.0;
  double stderr_bits = 0.0;
  double bound_bits = 0.0;  // C(|image of rho|, k)
  std::size_t support = 0;
};

/// Monte Carlo estimate of the entropy of the sampled hypergraph on [n]
/// conditioned on the generation assignment rho (not necessarily
/// injective), reported against the binomial lower bound.
ConditionalEntropyReport conditional_entropy_bound(
    const BlowupSchedule& schedule, const RadoHypergraph& rado,
    const std::vector<long long>& rho, std::uint64_t trials,
    std::uint64_t seed);

/// Materializes the blow-up of the explicit part (generations <= gen_cap)
/// as a step hypergraphon: one grid cell per explicit vertex plus one
/// remainder cell, point-mass outputs decided by the explicit edges, with
/// the remainder cell joined to nothing.
StepHypergraphon truncated_step_form(const BlowupSchedule& schedule,
                                     const RadoHypergraph& rado, int gen_cap);

}  // namespace hygent

#endif  // HYGENT_BLOWUP_HPP
