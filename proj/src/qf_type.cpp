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

#include "hygent/qf_type.hpp"

#include <stdexcept>

namespace hygent {

namespace {
std::uint64_t factorial_u64(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}
}  // namespace

QfType::QfType(int k, int relation_count)
    : k_(k), relation_count_(relation_count), factorial_(factorial_u64(k)) {
  if (k < 1) throw std::invalid_argument("QfType: k must be >= 1");
  if (relation_count < 0) throw std::invalid_argument("QfType: negative relation count");
  bits_.assign(relation_count_ * factorial_, false);
}

bool QfType::get(int relation, std::uint64_t perm_rank) const {
  return bits_.at(relation * factorial_ + perm_rank);
}

void QfType::set(int relation, std::uint64_t perm_rank, bool value) {
  bits_.at(relation * factorial_ + perm_rank) = value;
}

std::uint64_t QfType::index() const {
  if (bits_.size() > 63)
    throw std::overflow_error("QfType::index: more than 63 atom bits");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) idx |= (std::uint64_t{1} << i);
  return idx;
}

QfType QfType::from_index(int k, int relation_count, std::uint64_t index) {
  QfType u(k, relation_count);
  if (u.bits_.size() < 64 && index >= (std::uint64_t{1} << u.bits_.size()))
    throw std::invalid_argument("QfType::from_index: index out of range");
  for (std::size_t i = 0; i < u.bits_.size(); ++i)
    u.bits_[i] = (index >> i) & 1;
  return u;
}

QfType QfType::complete(int k, int relation_count) {
  QfType u(k, relation_count);
  u.bits_.assign(u.bits_.size(), true);
  return u;
}

QfType QfType::empty(int k, int relation_count) { return QfType(k, relation_count); }

int qf_type_bits(const Signature& signature, int k) {
  signature.require_uniform_arity(k);
  std::uint64_t bits = signature.relation_count() * factorial_u64(k);
  return static_cast<int>(bits);
}

std::vector<QfType> enumerate_qf_types(const Signature& signature, int k) {
  int bits = qf_type_bits(signature, k);
  if (bits > 20)
    throw resource_limit_error(
        "enumerate_qf_types: 2^" + std::to_string(bits) +
        " types exceed the enumeration limit (2^20)");
  std::uint64_t count = std::uint64_t{1} << bits;
  std::vector<QfType> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i)
    out.push_back(QfType::from_index(k, signature.relation_count(), i));
  return out;
}

QfType sym_act_type(const Permutation& sigma, const QfType& u) {
  if (static_cast<int>(sigma.size()) != u.k() || !is_permutation(sigma))
    throw std::invalid_argument("sym_act_type: sigma is not a permutation of [k]");
  auto perms = all_permutations(u.k());
  QfType out(u.k(), u.relation_count());
  for (int r = 0; r < u.relation_count(); ++r) {
    for (std::size_t p = 0; p < perms.size(); ++p) {
      if (!u.get(r, p)) continue;
      out.set(r, permutation_rank(compose(sigma, perms[p])), true);
    }
  }
  return out;
}

std::uint64_t sym_act_type_index(const Permutation& sigma, std::uint64_t index,
                                 int k, int relation_count,
                                 const std::vector<Permutation>& perms) {
  const std::uint64_t fact = factorial_u64(k);
  std::uint64_t out = 0;
  for (int r = 0; r < relation_count; ++r) {
    for (std::uint64_t p = 0; p < fact; ++p) {
      if (!((index >> (r * fact + p)) & 1)) continue;
      std::uint64_t q = permutation_rank(compose(sigma, perms[p]));
      out |= std::uint64_t{1} << (r * fact + q);
    }
  }
  return out;
}

}  // namespace hygent
