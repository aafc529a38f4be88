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

#ifndef HYGENT_RADO_HPP
#define HYGENT_RADO_HPP

#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hygent/combinatorics.hpp"
#include "hygent/rational.hpp"

namespace hygent {

/// A vertex of the generational Rado k-hypergraph: generation number plus the
/// index within that generation. For explicit generations the index IS the
/// subset encoding: bit r set means the r-th (k-1)-subset of the earlier
/// vertices (in lexicographic order of sorted global ids) is joined.
struct RadoVertex {
  long long generation = 0;
  BigInt index = 0;

  bool operator==(const RadoVertex& o) const {
    return generation == o.generation && index == o.index;
  }
  bool operator<(const RadoVertex& o) const {
    if (generation != o.generation) return generation < o.generation;
    return index < o.index;
  }
};

/// The generation-by-generation universal homogeneous k-uniform hypergraph.
/// Generation 0 is a single vertex; generation l adds one vertex per subset
/// of the (k-1)-subsets of the earlier vertices, joined to exactly those.
/// The first `explicit_gens` generations after 0 are materialized; beyond
/// them, a vertex's joined subsets are realized lazily by independent fair
/// coins keyed on (seed, vertex, tuple), which matches the distribution of a
/// uniformly drawn vertex of that generation. Edge queries are memoized.
class RadoHypergraph {
 public:
  explicit RadoHypergraph(int k, int explicit_gens = -1);

  static int default_explicit_gens(int k) { return k == 2 ? 2 : 3; }

  int k() const { return k_; }
  int explicit_gens() const { return explicit_gens_; }

  /// |A_ell|. The sizes grow as an exponential tower; beyond the point where
  /// the exponent itself is astronomical the exact value is not
  /// representable and a resource_limit_error is raised.
  BigInt generation_size(long long ell) const;
  /// |V_ell| = |A_0| + ... + |A_ell|.
  BigInt cumulative_size(long long ell) const;

  /// min(|A_ell|, 2^4096): the exact range used for uniform vertex draws.
  /// Truncation changes the sampled-edge law by < 2^-4000 total variation.
  BigInt sampling_bound(long long ell) const;

  /// Edge test: true iff exactly one vertex sits in a strictly maximal
  /// generation, the rest are strictly earlier, and the (k-1)-tuple of the
  /// rest belongs to the maximal vertex's subset encoding (explicitly for
  /// materialized generations, by memoized keyed coin otherwise).
  bool has_edge(const std::vector<RadoVertex>& vertices, std::uint64_t seed) const;

  /// Number of vertices in the explicit part (as ordinary integers).
  int explicit_vertex_count() const { return explicit_count_; }
  int global_id(const RadoVertex& v) const;       // explicit vertices only
  RadoVertex vertex_of_global(int id) const;
  /// The joined (k-1)-subsets of an explicit vertex, as global-id subsets.
  std::vector<Subset> explicit_subsets(const RadoVertex& v) const;

  /// One-vertex-extension completeness over V_ell: every induced
  /// subhypergraph D of V_ell and every subset of P_{k-1}(D) is realized by
  /// some vertex of A_{ell+1}. Requires ell+1 <= explicit_gens.
  bool check_alice(long long ell, std::uint64_t budget = 100'000'000) const;

 private:
  bool explicit_edge(const RadoVertex& top, const std::vector<int>& rest_globals) const;

  int k_;
  int explicit_gens_;
  int explicit_count_;
  std::vector<BigInt> gen_sizes_;  // exact prefix of |A_ell|
  std::vector<BigInt> cum_sizes_;  // exact prefix of |V_ell|
  std::vector<int> offsets_;       // global id base per explicit generation
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint64_t, bool> coin_memo_;
};

}  // namespace hygent

#endif  // HYGENT_RADO_HPP
