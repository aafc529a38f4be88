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

#include "hygent/rado.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hygent/prf.hpp"

namespace hygent {

namespace {
constexpr int kIndexBitCap = 4096;
constexpr std::uint64_t kCoinStreamTag = 0x7261646f636f696eULL;
// Exact |A_ell| is kept while the exponent C(|V_{ell-1}|, k-1) stays below
// this; the next generation's exponent would already exceed memory.
constexpr std::uint64_t kSizeExponentCap = 1u << 22;
}  // namespace

RadoHypergraph::RadoHypergraph(int k, int explicit_gens)
    : k_(k),
      explicit_gens_(explicit_gens < 0 ? default_explicit_gens(k) : explicit_gens) {
  if (k < 2) throw std::invalid_argument("RadoHypergraph: k must be >= 2");
  if (explicit_gens_ < 1)
    throw std::invalid_argument("RadoHypergraph: needs at least one explicit generation");

  gen_sizes_ = {BigInt(1)};
  cum_sizes_ = {BigInt(1)};
  while (true) {
    const BigInt& v_prev = cum_sizes_.back();
    BigInt exponent = binomial(v_prev, k_ - 1);
    if (exponent > kSizeExponentCap) break;
    BigInt a = BigInt(1) << exponent.convert_to<unsigned>();
    gen_sizes_.push_back(a);
    cum_sizes_.push_back(v_prev + a);
    if (static_cast<long long>(gen_sizes_.size()) > explicit_gens_ + 64) break;
  }

  if (static_cast<long long>(gen_sizes_.size()) <= explicit_gens_)
    throw std::invalid_argument("RadoHypergraph: explicit generations too large");
  offsets_.resize(explicit_gens_ + 1);
  int acc = 0;
  for (int ell = 0; ell <= explicit_gens_; ++ell) {
    offsets_[ell] = acc;
    if (gen_sizes_[ell] > 1'000'000 - acc)
      throw resource_limit_error("RadoHypergraph: explicit part too large");
    acc += gen_sizes_[ell].convert_to<int>();
  }
  explicit_count_ = acc;
}

BigInt RadoHypergraph::generation_size(long long ell) const {
  if (ell < 0) throw std::invalid_argument("generation_size: negative generation");
  if (ell >= static_cast<long long>(gen_sizes_.size()))
    throw resource_limit_error(
        "generation_size: |A_" + std::to_string(ell) +
        "| is an exponential tower beyond exact representation");
  return gen_sizes_[ell];
}

BigInt RadoHypergraph::cumulative_size(long long ell) const {
  if (ell < 0) throw std::invalid_argument("cumulative_size: negative generation");
  if (ell >= static_cast<long long>(cum_sizes_.size()))
    throw resource_limit_error(
        "cumulative_size: |V_" + std::to_string(ell) +
        "| is an exponential tower beyond exact representation");
  return cum_sizes_[ell];
}

BigInt RadoHypergraph::sampling_bound(long long ell) const {
  if (ell < 0) throw std::invalid_argument("sampling_bound: negative generation");
  static const BigInt cap = BigInt(1) << kIndexBitCap;
  if (ell < static_cast<long long>(gen_sizes_.size()))
    return std::min(gen_sizes_[ell], cap);
  return cap;
}

int RadoHypergraph::global_id(const RadoVertex& v) const {
  if (v.generation < 0 || v.generation > explicit_gens_)
    throw std::invalid_argument("global_id: vertex is not explicit");
  if (v.index < 0 || v.index >= gen_sizes_[v.generation])
    throw std::invalid_argument("global_id: index out of range");
  return offsets_[v.generation] + v.index.convert_to<int>();
}

RadoVertex RadoHypergraph::vertex_of_global(int id) const {
  if (id < 0 || id >= explicit_count_)
    throw std::invalid_argument("vertex_of_global: id out of range");
  int ell = explicit_gens_;
  while (offsets_[ell] > id) --ell;
  return RadoVertex{ell, BigInt(id - offsets_[ell])};
}

std::vector<Subset> RadoHypergraph::explicit_subsets(const RadoVertex& v) const {
  global_id(v);  // validates that the vertex is explicit and in range
  if (v.generation == 0) return {};
  int v_prev = cum_sizes_[v.generation - 1].convert_to<int>();
  auto tuples = subsets_of_size(v_prev, k_ - 1);
  std::vector<Subset> joined;
  for (std::size_t r = 0; r < tuples.size(); ++r)
    if (bit_test(v.index, static_cast<unsigned>(r))) joined.push_back(tuples[r]);
  return joined;
}

bool RadoHypergraph::explicit_edge(const RadoVertex& top,
                                   const std::vector<int>& rest_globals) const {
  int v_prev = cum_sizes_[top.generation - 1].convert_to<int>();
  for (int g : rest_globals)
    if (g >= v_prev)
      throw std::logic_error("explicit_edge: lower vertex beyond V_{ell-1}");
  std::uint64_t rank = combination_rank(v_prev, rest_globals);
  return bit_test(top.index, static_cast<unsigned>(rank));
}

bool RadoHypergraph::has_edge(const std::vector<RadoVertex>& vertices,
                              std::uint64_t seed) const {
  if (static_cast<int>(vertices.size()) != k_)
    throw std::invalid_argument("has_edge: expected k vertices");
  for (const auto& v : vertices) {
    if (v.generation < 0 || v.index < 0)
      throw std::invalid_argument("has_edge: bad vertex id");
    if (v.index >= sampling_bound(v.generation))
      throw std::invalid_argument("has_edge: vertex index out of range");
  }
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j])
        throw std::invalid_argument("has_edge: repeated vertex");

  // Exactly one vertex must sit in a strictly maximal generation.
  std::size_t top_pos = 0;
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i].generation > vertices[top_pos].generation) top_pos = i;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (i != top_pos && vertices[i].generation >= vertices[top_pos].generation)
      return false;
  const RadoVertex& top = vertices[top_pos];

  std::vector<RadoVertex> rest;
  rest.reserve(k_ - 1);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (i != top_pos) rest.push_back(vertices[i]);
  std::sort(rest.begin(), rest.end());

  if (top.generation <= explicit_gens_) {
    std::vector<int> rest_globals;
    rest_globals.reserve(rest.size());
    for (const auto& v : rest) rest_globals.push_back(global_id(v));
    std::sort(rest_globals.begin(), rest_globals.end());
    return explicit_edge(top, rest_globals);
  }

  Prf prf(seed);
  prf.absorb(kCoinStreamTag);
  prf.absorb(static_cast<std::uint64_t>(top.generation));
  prf.absorb_big(top.index);
  for (const auto& v : rest) {
    prf.absorb(static_cast<std::uint64_t>(v.generation));
    prf.absorb_big(v.index);
  }
  std::uint64_t key = prf.next_u64();
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = coin_memo_.find(key);
    if (it != coin_memo_.end()) return it->second;
  }
  bool coin = (key & 1) != 0;
  std::lock_guard<std::mutex> lock(mutex_);
  coin_memo_.emplace(key, coin);
  return coin;
}

bool RadoHypergraph::check_alice(long long ell, std::uint64_t budget) const {
  if (ell < 0 || ell + 1 > explicit_gens_)
    throw std::invalid_argument("check_alice: ell+1 must be an explicit generation");
  const int v_ell = cum_sizes_[ell].convert_to<int>();
  const BigInt& a_next = gen_sizes_[ell + 1];

  long double cost = 0.0L;
  for (int d_size = 0; d_size <= v_ell; ++d_size)
    cost += static_cast<long double>(binomial_u64(v_ell, d_size)) *
            a_next.convert_to<long double>() *
            std::max<std::uint64_t>(1, binomial_u64(std::max(d_size, k_ - 1), k_ - 1));
  if (cost > static_cast<long double>(budget))
    throw resource_limit_error("check_alice: enumeration over the budget");

  int a_next_int = a_next.convert_to<int>();
  // Every D and every extension pattern over P_{k-1}(D) must be realized by
  // some vertex of A_{ell+1}; collect realized traces and count them.
  for (int d_size = 0; d_size <= v_ell; ++d_size) {
    for (const Subset& d_set : subsets_of_size(v_ell, d_size)) {
      auto d_tuples = (d_size >= k_ - 1)
                          ? subsets_of_size(d_size, k_ - 1)
                          : std::vector<Subset>{};
      // translate position subsets into global-id subsets
      std::vector<std::vector<int>> tuples_global;
      tuples_global.reserve(d_tuples.size());
      for (const auto& t : d_tuples) {
        std::vector<int> g;
        g.reserve(t.size());
        for (int pos : t) g.push_back(d_set[pos]);
        tuples_global.push_back(std::move(g));
      }
      if (tuples_global.size() > 20)
        throw resource_limit_error("check_alice: too many extension patterns");
      std::set<std::uint64_t> realized;
      for (int a = 0; a < a_next_int; ++a) {
        RadoVertex cand{ell + 1, BigInt(a)};
        std::uint64_t trace = 0;
        for (std::size_t t = 0; t < tuples_global.size(); ++t)
          if (explicit_edge(cand, tuples_global[t])) trace |= std::uint64_t{1} << t;
        realized.insert(trace);
      }
      if (realized.size() != (std::uint64_t{1} << tuples_global.size()))
        return false;
    }
  }
  return true;
}

}  // namespace hygent
