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

#ifndef HYGENT_QF_TYPE_HPP
#define HYGENT_QF_TYPE_HPP

#include <cstdint>
#include <vector>

#include "hygent/combinatorics.hpp"
#include "hygent/signature.hpp"

namespace hygent {

/// A complete non-redundant quantifier-free k-type over a uniform-arity
/// signature: one boolean per (relation, permutation of [k]) pair, true when
/// R(x_{sigma(0)}, ..., x_{sigma(k-1)}) belongs to the type. Atoms with
/// repeated variables are implicitly false. Bit order: relations in signature
/// order, permutations in lexicographic order; the canonical index reads the
/// bits as a binary number with bit (0, identity) least significant.
class QfType {
 public:
  QfType(int k, int relation_count);

  int k() const { return k_; }
  int relation_count() const { return relation_count_; }
  int bit_count() const { return static_cast<int>(bits_.size()); }

  bool get(int relation, std::uint64_t perm_rank) const;
  void set(int relation, std::uint64_t perm_rank, bool value);

  std::uint64_t index() const;  // requires bit_count() <= 63
  static QfType from_index(int k, int relation_count, std::uint64_t index);

  /// All k! orientation bits set for every relation (u_top when |L| = 1).
  static QfType complete(int k, int relation_count);
  /// The all-false type (u_bot when |L| = 1).
  static QfType empty(int k, int relation_count);

  bool operator==(const QfType&) const = default;

 private:
  int k_;
  int relation_count_;
  std::uint64_t factorial_;
  std::vector<bool> bits_;
};

/// Number of bits in a type over `signature` at arity k, i.e. |L| * k!.
int qf_type_bits(const Signature& signature, int k);

/// All complete non-redundant quantifier-free k-types, in canonical index
/// order. Requires every relation to have arity k.
std::vector<QfType> enumerate_qf_types(const Signature& signature, int k);

/// The Sym(k) relabeling action on types: an atom over variable tuple pi
/// maps to the atom over sigma o pi.
QfType sym_act_type(const Permutation& sigma, const QfType& u);

/// Index-level version of sym_act_type; `perms` = all_permutations(k).
std::uint64_t sym_act_type_index(const Permutation& sigma, std::uint64_t index,
                                 int k, int relation_count,
                                 const std::vector<Permutation>& perms);

}  // namespace hygent

#endif  // HYGENT_QF_TYPE_HPP
