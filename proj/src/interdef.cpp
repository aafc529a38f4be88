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

#include "hygent/interdef.hpp"

#include <stdexcept>

namespace hygent {

namespace {
std::string tuple_str(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

/// Enumerates all tuples in [n]^arity in lexicographic order.
bool next_tuple(Tuple& t, int n) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (t[i] + 1 < n) {
      ++t[i];
      std::fill(t.begin() + i + 1, t.end(), 0);
      return true;
    }
  }
  return false;
}
}  // namespace

int EquivalenceRelation::class_count() const {
  int m = 0;
  for (int b : block_of) m = std::max(m, b + 1);
  return m;
}

std::vector<int> EquivalenceRelation::selector_map() const {
  std::vector<int> first(class_count(), -1);
  for (int i = 0; i < k; ++i)
    if (first[block_of[i]] < 0) first[block_of[i]] = i;
  std::vector<int> f(k);
  for (int i = 0; i < k; ++i) f[i] = first[block_of[i]];
  return f;
}

std::vector<int> EquivalenceRelation::representatives() const {
  std::vector<int> first(class_count(), -1);
  for (int i = 0; i < k; ++i)
    if (first[block_of[i]] < 0) first[block_of[i]] = i;
  // Restricted-growth numbering makes first occurrences increase with the
  // block id, so this is already the increasing enumeration.
  return first;
}

std::string EquivalenceRelation::suffix() const {
  std::string s;
  for (int b : block_of) s += std::to_string(b);
  return s;
}

std::vector<EquivalenceRelation> enumerate_eq_rels(int k) {
  std::vector<EquivalenceRelation> out;
  for (auto& rgs : all_set_partitions(k)) out.push_back({k, std::move(rgs)});
  return out;
}

FunctionEliminator::FunctionEliminator(Signature source) : source_(std::move(source)) {
  std::vector<RelationSymbol> rels = source_.relations();
  for (const auto& f : source_.functions()) {
    if (f.arity == 0)
      throw std::invalid_argument(
          "FunctionEliminator: constant symbol '" + f.name +
          "' cannot be a selector; eliminate constants first");
    for (int i = 0; i < f.arity; ++i)
      rels.push_back({f.name + "#" + std::to_string(i), f.arity});
  }
  target_ = Signature(std::move(rels));
}

RedundantStructure FunctionEliminator::forward(const FiniteStructure& m) const {
  if (!(m.signature() == source_))
    throw std::invalid_argument("FunctionEliminator: wrong source signature");
  if (!m.functions_total())
    throw std::invalid_argument("FunctionEliminator: functions must be total");
  RedundantStructure out(target_, m.n());
  for (int r = 0; r < source_.relation_count(); ++r)
    for (const Tuple& t : m.tuples(r)) out.add_tuple(r, t);
  int rel = source_.relation_count();
  for (int f = 0; f < source_.function_count(); ++f) {
    const int arity = source_.functions()[f].arity;
    for (const auto& [args, value] : m.function_table(f)) {
      int witness = -1;
      for (int i = 0; i < arity; ++i)
        if (args[i] == value) {
          witness = i;
          break;
        }
      if (witness < 0)
        throw std::invalid_argument(
            "FunctionEliminator: function '" + source_.functions()[f].name +
            "' is not a selector at " + tuple_str(args));
      out.add_tuple(rel + witness, args);
    }
    rel += arity;
  }
  return out;
}

FiniteStructure FunctionEliminator::backward(const RedundantStructure& n) const {
  if (!(n.signature() == target_))
    throw std::invalid_argument("FunctionEliminator: wrong target signature");
  FiniteStructure out(source_, n.n());
  for (int r = 0; r < source_.relation_count(); ++r)
    for (const Tuple& t : n.tuples(r)) out.add_tuple(r, t);
  int rel = source_.relation_count();
  for (int f = 0; f < source_.function_count(); ++f) {
    const int arity = source_.functions()[f].arity;
    Tuple args(arity, 0);
    if (n.n() > 0) {
      do {
        int witness = -1;
        for (int i = 0; i < arity; ++i) {
          if (!n.holds(rel + i, args)) continue;
          if (witness >= 0)
            throw std::invalid_argument(
                "FunctionEliminator: two markers claim " + tuple_str(args));
          witness = i;
        }
        if (witness < 0)
          throw std::invalid_argument(
              "FunctionEliminator: no marker covers " + tuple_str(args));
        out.set_function_value(f, args, args[witness]);
      } while (next_tuple(args, n.n()));
    }
    rel += arity;
  }
  return out;
}

RedundancyEliminator::RedundancyEliminator(Signature source)
    : source_(std::move(source)) {
  if (source_.function_count() > 0)
    throw std::invalid_argument("RedundancyEliminator: source must be relational");
  std::vector<RelationSymbol> rels;
  partitions_.resize(source_.relation_count());
  for (int r = 0; r < source_.relation_count(); ++r) {
    const auto& rel = source_.relations()[r];
    partitions_[r] = enumerate_eq_rels(rel.arity);
    for (const auto& eq : partitions_[r])
      rels.push_back({rel.name + "#" + eq.suffix(), eq.class_count()});
  }
  target_ = Signature(std::move(rels));
}

FiniteStructure RedundancyEliminator::forward(const RedundantStructure& m) const {
  if (!(m.signature() == source_))
    throw std::invalid_argument("RedundancyEliminator: wrong source signature");
  FiniteStructure out(target_, m.n());
  int target_rel = 0;
  for (int r = 0; r < source_.relation_count(); ++r) {
    const int k = source_.relations()[r].arity;
    // kernel partition of each tuple decides which compressed symbol it feeds
    for (const Tuple& t : m.tuples(r)) {
      std::vector<int> block(k, -1);
      int blocks = 0;
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < i; ++j)
          if (t[j] == t[i]) {
            block[i] = block[j];
            break;
          }
        if (block[i] < 0) block[i] = blocks++;
      }
      // locate the partition among the enumerated ones
      int found = -1;
      for (std::size_t e = 0; e < partitions_[r].size(); ++e)
        if (partitions_[r][e].block_of == block) {
          found = static_cast<int>(e);
          break;
        }
      if (found < 0)
        throw std::logic_error("RedundancyEliminator: kernel partition not enumerated");
      const auto& eq = partitions_[r][found];
      Tuple compressed;
      compressed.reserve(eq.class_count());
      for (int rep : eq.representatives()) compressed.push_back(t[rep]);
      out.add_tuple(target_rel + found, compressed);
    }
    target_rel += static_cast<int>(partitions_[r].size());
  }
  return out;
}

RedundantStructure RedundancyEliminator::backward(const FiniteStructure& n) const {
  if (!(n.signature() == target_))
    throw std::invalid_argument("RedundancyEliminator: wrong target signature");
  RedundantStructure out(source_, n.n());
  int target_rel = 0;
  for (int r = 0; r < source_.relation_count(); ++r) {
    const int k = source_.relations()[r].arity;
    for (std::size_t e = 0; e < partitions_[r].size(); ++e) {
      const auto& eq = partitions_[r][e];
      auto f = eq.selector_map();
      auto reps = eq.representatives();
      std::vector<int> pos_of_rep(k, -1);
      for (std::size_t i = 0; i < reps.size(); ++i) pos_of_rep[reps[i]] = static_cast<int>(i);
      for (const Tuple& compressed : n.tuples(target_rel + static_cast<int>(e))) {
        Tuple t(k);
        for (int i = 0; i < k; ++i) t[i] = compressed[pos_of_rep[f[i]]];
        out.add_tuple(r, t);
      }
    }
    target_rel += static_cast<int>(partitions_[r].size());
  }
  return out;
}

}  // namespace hygent
