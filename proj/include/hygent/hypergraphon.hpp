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

#ifndef HYGENT_HYPERGRAPHON_HPP
#define HYGENT_HYPERGRAPHON_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hygent/combinatorics.hpp"
#include "hygent/qf_type.hpp"
#include "hygent/rational.hpp"
#include "hygent/signature.hpp"

namespace hygent {

/// Interval partition of [0,1]: cell i carries mass weights[i]. Weights are
/// positive rationals summing to exactly 1.
class Grid {
 public:
  explicit Grid(std::vector<Rat> weights);
  static Grid uniform(int m);

  int size() const { return static_cast<int>(weights_.size()); }
  const std::vector<Rat>& weights() const { return weights_; }
  const Rat& weight(int cell) const { return weights_.at(cell); }

  /// Inverse-CDF cell lookup: the first cell whose cumulative weight
  /// exceeds u (exact rational comparison against the dyadic value of u).
  int cell_of(double u) const;

  bool operator==(const Grid& other) const { return weights_ == other.weights_; }

 private:
  std::vector<Rat> weights_;
  std::vector<Rat> cumulative_;  // cumulative_[i] = sum of weights_[0..i]
  std::vector<double> cutoffs_;  // largest double below each cumulative sum
};

/// A probability distribution over quantifier-free k-types, sparse over
/// canonical type indices, with exact rational weights.
class TypeDistribution {
 public:
  TypeDistribution() = default;
  /// Entries must be sorted by index, duplicate-free, positive, summing to 1.
  explicit TypeDistribution(std::vector<std::pair<std::uint64_t, Rat>> entries);

  static TypeDistribution point_mass(std::uint64_t type_index);
  static TypeDistribution uniform(std::vector<std::uint64_t> type_indices);

  const std::vector<std::pair<std::uint64_t, Rat>>& entries() const { return entries_; }
  Rat weight(std::uint64_t type_index) const;
  bool is_point_mass() const { return entries_.size() == 1; }

  /// Inverse-CDF sample: first type index whose cumulative weight exceeds u.
  std::uint64_t quantile(double u) const;

  /// Shannon entropy in bits.
  double entropy_bits() const;

  /// The Sym(k) action carried over from types: the result gives to each
  /// type u the weight this distribution gives to sigma(u).
  TypeDistribution acted_by(const Permutation& sigma, int k, int relation_count,
                            const std::vector<Permutation>& perms) const;

  bool operator==(const TypeDistribution& other) const {
    return entries_ == other.entries_;
  }

 private:
  std::vector<std::pair<std::uint64_t, Rat>> entries_;
  std::vector<double> cutoffs_;  // largest double below each cumulative sum
};

struct CoherenceViolation {
  Permutation sigma;
  std::vector<int> cells;  // cell vector, one coordinate per F in shortlex order
  std::string describe() const;
};

/// A piecewise-constant extended hypergraphon for a uniform-arity-k
/// signature: all coordinates share one Grid, and the table assigns a type
/// distribution to every cell vector indexed by the strict subsets of [k]
/// in shortlex order.
class StepHypergraphon {
 public:
  /// `table` must be complete: size grid.size()^(2^k - 1), flat-indexed by
  /// sum_i c_i * m^i over coordinate positions i.
  StepHypergraphon(Signature signature, int k, Grid grid,
                   std::vector<TypeDistribution> table);

  const Signature& signature() const { return sig_; }
  int k() const { return k_; }
  const Grid& grid() const { return grid_; }
  /// Strict subsets of [k] in shortlex order (the coordinate axes).
  const std::vector<Subset>& coordinates() const { return coords_; }
  int coordinate_count() const { return static_cast<int>(coords_.size()); }
  const std::vector<TypeDistribution>& table() const { return table_; }

  std::size_t flat_index(const std::vector<int>& cells) const;
  std::vector<int> cells_of_flat(std::size_t flat) const;

  const TypeDistribution& evaluate(const std::vector<int>& cells) const;
  /// Type index sampled by inverse CDF at the table entry for `cells`.
  std::uint64_t randomize(const std::vector<int>& cells, double u) const;

  /// Checks the Sym(k) coherence identity at every cell vector; empty
  /// result means the table is a genuine extended hypergraphon.
  std::vector<CoherenceViolation> validate() const;
  bool is_coherent() const { return validate().empty(); }
  /// Throws std::invalid_argument on incoherent tables. The verdict is
  /// cached; warm the cache before sharing the object across threads.
  void ensure_coherent() const;

  /// Integral of the entry entropies against the product cell measure:
  /// the leading coefficient of the entropy function.
  double integral_entropy() const;

  /// True when every entry is a point mass and the table depends only on
  /// the k singleton coordinates.
  bool induces_borel_hypergraph() const;

  bool operator==(const StepHypergraphon& other) const {
    return sig_ == other.sig_ && k_ == other.k_ && grid_ == other.grid_ &&
           table_ == other.table_;
  }

 private:
  Signature sig_;
  int k_;
  Grid grid_;
  std::vector<Subset> coords_;
  std::vector<TypeDistribution> table_;
  mutable int coherence_cache_ = 0;  // 0 unknown, 1 coherent, 2 incoherent
};

/// Constant hypergraphon: uniform on {complete, empty} types; the density-1/2
/// random k-hypergraph. Signature must consist of one k-ary relation.
StepHypergraphon make_er(const Signature& signature, int k);

/// k=3 hypergraph whose 3-edges are the triangles of a latent density-1/2
/// graph on the pair coordinates.
StepHypergraphon make_triangle();

/// Constant-table hypergraphon with the given output distribution.
StepHypergraphon make_constant(const Signature& signature, int k,
                               const TypeDistribution& dist);

/// Two-cell mixture: complete structure if the empty-set coordinate falls in
/// the first half of [0,1], empty structure otherwise.
StepHypergraphon make_complete_or_empty(const Signature& signature, int k);

/// Averages every table entry over the coordinate-and-type action of Sym(k).
/// The result is always coherent, and coherent inputs are fixed points; use
/// it to turn an arbitrary table into a genuine hypergraphon.
StepHypergraphon symmetrize(const StepHypergraphon& w);

}  // namespace hygent

#endif  // HYGENT_HYPERGRAPHON_HPP
