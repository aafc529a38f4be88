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

#ifndef HYGENT_STRUCTURE_HPP
#define HYGENT_STRUCTURE_HPP

#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "hygent/qf_type.hpp"
#include "hygent/signature.hpp"

namespace hygent {

using Tuple = std::vector<int>;

/// An L-structure on universe [n]. Relation tuples must have pairwise
/// distinct entries (non-redundance is enforced structurally); tuples with
/// repeats belong in RedundantStructure. Functions are total maps
/// [n]^arity -> [n], populated via set_function_value.
class FiniteStructure {
 public:
  FiniteStructure(Signature signature, int n);

  const Signature& signature() const { return sig_; }
  int n() const { return n_; }

  void add_tuple(int relation, const Tuple& t);
  void add_tuple(const std::string& relation, const Tuple& t);
  bool holds(int relation, const Tuple& t) const;
  const std::set<Tuple>& tuples(int relation) const { return relations_.at(relation); }

  void set_function_value(int function, const Tuple& args, int value);
  int function_value(int function, const Tuple& args) const;
  const std::map<Tuple, int>& function_table(int function) const {
    return functions_.at(function);
  }
  /// True when every function is defined on every argument tuple.
  bool functions_total() const;
  /// True when every function output is one of its inputs (vacuous for 0-ary).
  bool functions_are_selectors() const;

  /// Relabeling by sigma in Sym(n): the image holds R(t) iff this holds
  /// R(sigma^-1(t)), and similarly for functions.
  FiniteStructure relabel(const Permutation& sigma) const;
  /// Restriction to [m]: keeps tuples inside [m]; functions restricted
  /// (requires function values on [m]-tuples to lie in [m]).
  FiniteStructure restrict_to(int m) const;

  bool operator<(const FiniteStructure& other) const {
    return std::tie(n_, relations_, functions_) <
           std::tie(other.n_, other.relations_, other.functions_);
  }
  bool operator==(const FiniteStructure& other) const {
    return n_ == other.n_ && relations_ == other.relations_ &&
           functions_ == other.functions_;
  }

 private:
  void check_tuple(int relation, const Tuple& t, bool allow_repeats) const;

  Signature sig_;
  int n_;
  std::vector<std::set<Tuple>> relations_;
  std::vector<std::map<Tuple, int>> functions_;
};

/// A relational structure whose relation tuples may repeat entries.
class RedundantStructure {
 public:
  RedundantStructure(Signature signature, int n);

  const Signature& signature() const { return sig_; }
  int n() const { return n_; }

  void add_tuple(int relation, const Tuple& t);
  void add_tuple(const std::string& relation, const Tuple& t);
  bool holds(int relation, const Tuple& t) const;
  const std::set<Tuple>& tuples(int relation) const { return relations_.at(relation); }

  bool is_non_redundant() const;

  RedundantStructure relabel(const Permutation& sigma) const;

  bool operator<(const RedundantStructure& other) const {
    return std::tie(n_, relations_) < std::tie(other.n_, other.relations_);
  }
  bool operator==(const RedundantStructure& other) const {
    return n_ == other.n_ && relations_ == other.relations_;
  }

 private:
  Signature sig_;
  int n_;
  std::vector<std::set<Tuple>> relations_;
};

/// The logic action of Sym(n) on structures.
FiniteStructure logic_act(const Permutation& sigma, const FiniteStructure& m);
RedundantStructure logic_act(const Permutation& sigma, const RedundantStructure& m);

/// Quantifier-free type of the increasing enumeration of the k-set J in M.
/// Requires a uniform-arity-k signature.
QfType qf_type_of(const FiniteStructure& m, const Subset& j);

/// Installs the atoms of `u` on the k-set J (adds tuples; does not clear).
void apply_qf_type(FiniteStructure& m, const Subset& j, const QfType& u);

}  // namespace hygent

#endif  // HYGENT_STRUCTURE_HPP
