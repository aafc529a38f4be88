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

#include "hygent/structure.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

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

void check_entries(const Tuple& t, int arity, int n, bool allow_repeats,
                   const std::string& what) {
  if (static_cast<int>(t.size()) != arity)
    throw std::invalid_argument(what + ": tuple " + tuple_str(t) +
                                " has wrong arity (expected " +
                                std::to_string(arity) + ")");
  for (int v : t)
    if (v < 0 || v >= n)
      throw std::invalid_argument(what + ": tuple " + tuple_str(t) +
                                  " leaves the universe [" + std::to_string(n) + ")");
  if (!allow_repeats) {
    Tuple sorted = t;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument(what + ": tuple " + tuple_str(t) +
                                  " has repeated entries");
  }
}

int resolve_relation(const Signature& sig, const std::string& name) {
  int idx = sig.relation_index(name);
  if (idx < 0) throw std::invalid_argument("unknown relation '" + name + "'");
  return idx;
}

}  // namespace

FiniteStructure::FiniteStructure(Signature signature, int n)
    : sig_(std::move(signature)), n_(n) {
  if (n < 0) throw std::invalid_argument("FiniteStructure: negative universe size");
  relations_.resize(sig_.relation_count());
  functions_.resize(sig_.function_count());
}

void FiniteStructure::check_tuple(int relation, const Tuple& t,
                                  bool allow_repeats) const {
  const auto& rel = sig_.relations().at(relation);
  check_entries(t, rel.arity, n_, allow_repeats, "relation " + rel.name);
}

void FiniteStructure::add_tuple(int relation, const Tuple& t) {
  check_tuple(relation, t, /*allow_repeats=*/false);
  relations_[relation].insert(t);
}

void FiniteStructure::add_tuple(const std::string& relation, const Tuple& t) {
  add_tuple(resolve_relation(sig_, relation), t);
}

bool FiniteStructure::holds(int relation, const Tuple& t) const {
  return relations_.at(relation).count(t) > 0;
}

void FiniteStructure::set_function_value(int function, const Tuple& args, int value) {
  const auto& fn = sig_.functions().at(function);
  check_entries(args, fn.arity, n_, /*allow_repeats=*/true, "function " + fn.name);
  if (value < 0 || value >= n_)
    throw std::invalid_argument("function " + fn.name + ": value out of universe");
  functions_[function][args] = value;
}

int FiniteStructure::function_value(int function, const Tuple& args) const {
  const auto& table = functions_.at(function);
  auto it = table.find(args);
  if (it == table.end())
    throw std::invalid_argument("function " + sig_.functions()[function].name +
                                " undefined at " + tuple_str(args));
  return it->second;
}

bool FiniteStructure::functions_total() const {
  for (int f = 0; f < sig_.function_count(); ++f) {
    std::size_t want = 1;
    for (int i = 0; i < sig_.functions()[f].arity; ++i) want *= n_;
    if (functions_[f].size() != want) return false;
  }
  return true;
}

bool FiniteStructure::functions_are_selectors() const {
  for (int f = 0; f < sig_.function_count(); ++f) {
    if (sig_.functions()[f].arity == 0) return false;  // no constant is a selector
    for (const auto& [args, value] : functions_[f])
      if (std::find(args.begin(), args.end(), value) == args.end()) return false;
  }
  return true;
}

FiniteStructure FiniteStructure::relabel(const Permutation& sigma) const {
  if (static_cast<int>(sigma.size()) != n_ || !is_permutation(sigma))
    throw std::invalid_argument("relabel: sigma is not a permutation of [n]");
  FiniteStructure out(sig_, n_);
  for (int r = 0; r < sig_.relation_count(); ++r) {
    for (const Tuple& t : relations_[r]) {
      Tuple img(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) img[i] = sigma[t[i]];
      out.relations_[r].insert(std::move(img));
    }
  }
  for (int f = 0; f < sig_.function_count(); ++f) {
    for (const auto& [args, value] : functions_[f]) {
      Tuple img(args.size());
      for (std::size_t i = 0; i < args.size(); ++i) img[i] = sigma[args[i]];
      out.functions_[f][img] = sigma[value];
    }
  }
  return out;
}

FiniteStructure FiniteStructure::restrict_to(int m) const {
  if (m < 0 || m > n_) throw std::invalid_argument("restrict_to: bad size");
  FiniteStructure out(sig_, m);
  auto inside = [m](const Tuple& t) {
    return std::all_of(t.begin(), t.end(), [m](int v) { return v < m; });
  };
  for (int r = 0; r < sig_.relation_count(); ++r)
    for (const Tuple& t : relations_[r])
      if (inside(t)) out.relations_[r].insert(t);
  for (int f = 0; f < sig_.function_count(); ++f) {
    for (const auto& [args, value] : functions_[f]) {
      if (!inside(args)) continue;
      if (value >= m)
        throw std::invalid_argument("restrict_to: function escapes the substructure");
      out.functions_[f][args] = value;
    }
  }
  return out;
}

RedundantStructure::RedundantStructure(Signature signature, int n)
    : sig_(std::move(signature)), n_(n) {
  if (n < 0) throw std::invalid_argument("RedundantStructure: negative universe size");
  if (sig_.function_count() > 0)
    throw std::invalid_argument("RedundantStructure: signature must be relational");
  relations_.resize(sig_.relation_count());
}

void RedundantStructure::add_tuple(int relation, const Tuple& t) {
  const auto& rel = sig_.relations().at(relation);
  check_entries(t, rel.arity, n_, /*allow_repeats=*/true, "relation " + rel.name);
  relations_[relation].insert(t);
}

void RedundantStructure::add_tuple(const std::string& relation, const Tuple& t) {
  add_tuple(resolve_relation(sig_, relation), t);
}

bool RedundantStructure::holds(int relation, const Tuple& t) const {
  return relations_.at(relation).count(t) > 0;
}

bool RedundantStructure::is_non_redundant() const {
  for (const auto& rel : relations_) {
    for (const Tuple& t : rel) {
      Tuple sorted = t;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    }
  }
  return true;
}

RedundantStructure RedundantStructure::relabel(const Permutation& sigma) const {
  if (static_cast<int>(sigma.size()) != n_ || !is_permutation(sigma))
    throw std::invalid_argument("relabel: sigma is not a permutation of [n]");
  RedundantStructure out(sig_, n_);
  for (int r = 0; r < sig_.relation_count(); ++r) {
    for (const Tuple& t : relations_[r]) {
      Tuple img(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) img[i] = sigma[t[i]];
      out.relations_[r].insert(std::move(img));
    }
  }
  return out;
}

FiniteStructure logic_act(const Permutation& sigma, const FiniteStructure& m) {
  return m.relabel(sigma);
}

RedundantStructure logic_act(const Permutation& sigma, const RedundantStructure& m) {
  return m.relabel(sigma);
}

QfType qf_type_of(const FiniteStructure& m, const Subset& j) {
  auto uniform = m.signature().uniform_arity();
  if (!uniform)
    throw std::invalid_argument("qf_type_of: signature is not uniform-arity");
  const int k = *uniform;
  if (static_cast<int>(j.size()) != k)
    throw std::invalid_argument("qf_type_of: |J| != k");
  auto tau = increasing_enumeration(j);
  auto perms = all_permutations(k);
  QfType u(k, m.signature().relation_count());
  Tuple t(k);
  for (int r = 0; r < m.signature().relation_count(); ++r) {
    for (std::size_t p = 0; p < perms.size(); ++p) {
      for (int i = 0; i < k; ++i) t[i] = tau[perms[p][i]];
      if (m.holds(r, t)) u.set(r, p, true);
    }
  }
  return u;
}

void apply_qf_type(FiniteStructure& m, const Subset& j, const QfType& u) {
  const int k = u.k();
  auto tau = increasing_enumeration(j);
  if (static_cast<int>(tau.size()) != k)
    throw std::invalid_argument("apply_qf_type: |J| != k");
  auto perms = all_permutations(k);
  Tuple t(k);
  for (int r = 0; r < u.relation_count(); ++r) {
    for (std::size_t p = 0; p < perms.size(); ++p) {
      if (!u.get(r, p)) continue;
      for (int i = 0; i < k; ++i) t[i] = tau[perms[p][i]];
      m.add_tuple(r, t);
    }
  }
}

}  // namespace hygent
