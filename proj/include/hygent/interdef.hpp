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

#ifndef HYGENT_INTERDEF_HPP
#define HYGENT_INTERDEF_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "hygent/entropy.hpp"
#include "hygent/structure.hpp"

namespace hygent {

/// A set partition of [k] with the derived data used by the redundancy
/// translation: the map sending each position to the least member of its
/// block, and the increasing enumeration of that map's image.
struct EquivalenceRelation {
  int k = 0;
  std::vector<int> block_of;  // restricted-growth string

  int class_count() const;
  /// f_E: position -> least position in the same block.
  std::vector<int> selector_map() const;
  /// y^E: sorted image of selector_map (one representative per block).
  std::vector<int> representatives() const;
  bool is_discrete() const { return class_count() == k; }
  std::string suffix() const;  // the growth string as digits, e.g. "010"
};

/// All set partitions of [k] in restricted-growth-string order; the count is
/// the k-th Bell number.
std::vector<EquivalenceRelation> enumerate_eq_rels(int k);

/// Replaces every function symbol f of arity l with l relation symbols
/// "f#i" of the same arity, where f#i holds of a tuple when the function
/// value equals the i-th argument and no earlier argument. Requires every
/// function to be a total selector (the value is always one of the inputs);
/// constants are rejected outright since no constant is a selector.
class FunctionEliminator {
 public:
  explicit FunctionEliminator(Signature source);

  const Signature& source() const { return source_; }
  const Signature& target() const { return target_; }

  RedundantStructure forward(const FiniteStructure& m) const;
  FiniteStructure backward(const RedundantStructure& n) const;

 private:
  Signature source_;
  Signature target_;
};

/// Replaces every relation symbol R of arity k with one symbol "R#rgs" per
/// set partition of [k], of arity = block count, holding on the distinct
/// compressed tuple exactly when R holds of the reconstituted redundant
/// tuple. Forward images are non-redundant by construction.
class RedundancyEliminator {
 public:
  explicit RedundancyEliminator(Signature source);  // relational source

  const Signature& source() const { return source_; }
  const Signature& target() const { return target_; }

  FiniteStructure forward(const RedundantStructure& m) const;
  RedundantStructure backward(const FiniteStructure& n) const;

 private:
  Signature source_;
  Signature target_;
  std::vector<std::vector<EquivalenceRelation>> partitions_;  // per relation
};

/// Pushforward of a finitely supported measure along a structure map.
template <class SIn, class Fn>
auto pushforward(const Measure<SIn>& mu, Fn&& map) {
  using SOut = std::decay_t<decltype(map(mu.begin()->first))>;
  Measure<SOut> nu;
  for (const auto& [atom, mass] : mu) nu[map(atom)] += mass;
  return nu;
}

/// Exact entropy preservation: the sorted multisets of atom masses of mu and
/// of its pushforward coincide (rational equality, no floating point).
template <class SIn, class Fn>
bool entropy_preserved(const Measure<SIn>& mu, Fn&& map) {
  if (mu.empty()) throw std::invalid_argument("entropy_preserved: empty measure");
  auto nu = pushforward(mu, std::forward<Fn>(map));
  std::vector<Rat> a, b;
  a.reserve(mu.size());
  b.reserve(nu.size());
  for (const auto& [atom, mass] : mu) a.push_back(mass);
  for (const auto& [atom, mass] : nu) b.push_back(mass);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace hygent

#endif  // HYGENT_INTERDEF_HPP
