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

#ifndef HYGENT_COMBINATORICS_HPP
#define HYGENT_COMBINATORICS_HPP

#include <cstdint>
#include <vector>

#include "hygent/rational.hpp"

namespace hygent {

using Subset = std::vector<int>;       // strictly increasing elements
using Permutation = std::vector<int>;  // image list: sigma[i] = sigma(i)

BigInt binomial(const BigInt& n, int k);
std::uint64_t binomial_u64(int n, int k);

/// All k-subsets of [n] in lexicographic order of their sorted element lists.
std::vector<Subset> subsets_of_size(int n, int k);

/// Subsets of [n] of size < k (shortlex: by size, then lexicographically).
std::vector<Subset> shortlex_below(int n, int k);
/// Subsets of [n] of size <= k, shortlex.
std::vector<Subset> shortlex_upto(int n, int k);

/// Lexicographic rank of a k-subset of [n] within subsets_of_size(n, k).
std::uint64_t combination_rank(int n, const Subset& s);

/// Shortlex enumerations of subsets of [n] bounded by k, with rank lookup.
class SubsetIndex {
 public:
  SubsetIndex(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<Subset>& below() const { return below_; }  // sizes < k
  const std::vector<Subset>& exact() const { return exact_; }  // size == k
  const std::vector<Subset>& upto() const { return upto_; }    // sizes <= k

  /// Position of a strict subset (|s| < k) within below().
  std::size_t rank_below(const Subset& s) const;

 private:
  int n_, k_;
  std::vector<Subset> below_, exact_, upto_;
  std::vector<std::uint64_t> size_offsets_;  // offset of each size stratum
};

/// The unique increasing bijection [k] -> J, as the sorted element list.
std::vector<int> increasing_enumeration(const Subset& j);

std::vector<Permutation> all_permutations(int k);  // lexicographic order
std::uint64_t permutation_rank(const Permutation& p);
Permutation compose(const Permutation& a, const Permutation& b);  // a after b
Permutation inverse_permutation(const Permutation& p);
bool is_permutation(const Permutation& p);

/// Image of a subset under a permutation of its ambient set, re-sorted.
Subset apply_to_subset(const Permutation& sigma, const Subset& s);

/// All set partitions of [k], each as a restricted-growth string
/// (block_of[i] = index of i's block, blocks numbered by first appearance),
/// in lexicographic order of the strings.
std::vector<std::vector<int>> all_set_partitions(int k);
BigInt bell_number(int k);

}  // namespace hygent

#endif  // HYGENT_COMBINATORICS_HPP
