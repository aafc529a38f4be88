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

#include "hygent/signature.hpp"

#include <set>
#include <stdexcept>

namespace hygent {

Signature::Signature(std::vector<RelationSymbol> relations,
                     std::vector<FunctionSymbol> functions)
    : relations_(std::move(relations)), functions_(std::move(functions)) {
  std::set<std::string> names;
  for (const auto& r : relations_) {
    if (r.arity < 1)
      throw std::invalid_argument("relation '" + r.name + "' must have arity >= 1");
    if (!names.insert(r.name).second)
      throw std::invalid_argument("duplicate symbol name '" + r.name + "'");
  }
  for (const auto& f : functions_) {
    if (f.arity < 0)
      throw std::invalid_argument("function '" + f.name + "' has negative arity");
    if (!names.insert(f.name).second)
      throw std::invalid_argument("duplicate symbol name '" + f.name + "'");
  }
}

Signature Signature::single_relation(const std::string& name, int arity) {
  return Signature({RelationSymbol{name, arity}});
}

Signature Signature::from_profile(const ArityProfile& profile) {
  std::vector<RelationSymbol> rels;
  int counter = 0;
  for (const auto& [arity, count] : profile) {
    if (count < 0) throw std::invalid_argument("negative count in arity profile");
    for (int i = 0; i < count; ++i)
      rels.push_back({"R" + std::to_string(counter++), arity});
  }
  return Signature(std::move(rels));
}

int Signature::relation_index(const std::string& name) const {
  for (std::size_t i = 0; i < relations_.size(); ++i)
    if (relations_[i].name == name) return static_cast<int>(i);
  return -1;
}

int Signature::function_index(const std::string& name) const {
  for (std::size_t i = 0; i < functions_.size(); ++i)
    if (functions_[i].name == name) return static_cast<int>(i);
  return -1;
}

std::optional<int> Signature::uniform_arity() const {
  if (relations_.empty() || !functions_.empty()) return std::nullopt;
  int k = relations_[0].arity;
  for (const auto& r : relations_)
    if (r.arity != k) return std::nullopt;
  return k;
}

void Signature::require_uniform_arity(int k) const {
  auto u = uniform_arity();
  if (!u || *u != k)
    throw std::invalid_argument(
        "signature must consist of relations of arity " + std::to_string(k) +
        " only");
}

ArityProfile Signature::arity_profile() const {
  ArityProfile p;
  for (const auto& r : relations_) ++p[r.arity];
  return p;
}

int Signature::max_arity() const {
  int m = 0;
  for (const auto& r : relations_) m = std::max(m, r.arity);
  for (const auto& f : functions_) m = std::max(m, f.arity);
  return m;
}

}  // namespace hygent
