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

#ifndef HYGENT_SIGNATURE_HPP
#define HYGENT_SIGNATURE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hygent {

struct RelationSymbol {
  std::string name;
  int arity;  // >= 1
  bool operator==(const RelationSymbol&) const = default;
};

struct FunctionSymbol {
  std::string name;
  int arity;  // >= 0 (0 = constant symbol)
  bool operator==(const FunctionSymbol&) const = default;
};

/// Number of relation symbols per arity.
using ArityProfile = std::map<int, int>;

/// A finite relational (optionally functional) language.
class Signature {
 public:
  Signature() = default;
  Signature(std::vector<RelationSymbol> relations,
            std::vector<FunctionSymbol> functions = {});

  /// Convenience: single k-ary relation named `name`.
  static Signature single_relation(const std::string& name, int arity);
  /// One relation per (arity, count) profile entry, named R0, R1, ...
  static Signature from_profile(const ArityProfile& profile);

  const std::vector<RelationSymbol>& relations() const { return relations_; }
  const std::vector<FunctionSymbol>& functions() const { return functions_; }
  int relation_count() const { return static_cast<int>(relations_.size()); }
  int function_count() const { return static_cast<int>(functions_.size()); }

  int relation_index(const std::string& name) const;  // -1 if absent
  int function_index(const std::string& name) const;

  /// Set when every relation has the same arity and functions are absent.
  std::optional<int> uniform_arity() const;
  /// Throws unless uniform_arity() == k.
  void require_uniform_arity(int k) const;

  ArityProfile arity_profile() const;
  int max_arity() const;  // over relations and functions; 0 if empty

  bool operator==(const Signature&) const = default;

 private:
  std::vector<RelationSymbol> relations_;
  std::vector<FunctionSymbol> functions_;
};

}  // namespace hygent

#endif  // HYGENT_SIGNATURE_HPP
