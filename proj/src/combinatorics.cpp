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

#include "hygent/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hygent {

BigInt binomial(const BigInt& n, int k) {
  if (k < 0 || n < 0) throw std::invalid_argument("binomial: negative argument");
  if (k > n) return 0;
  BigInt result = 1;
  for (int i = 0; i < k; ++i) {
    result *= (n - i);
    result /= (i + 1);
  }
  return result;
}

std::uint64_t binomial_u64(int n, int k) {
  BigInt b = binomial(BigInt(n), k);
  if (b > BigInt(UINT64_MAX))
    throw std::overflow_error("binomial does not fit in 64 bits");
  return b.convert_to<std::uint64_t>();
}

std::vector<Subset> subsets_of_size(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("subsets_of_size: negative argument");
  std::vector<Subset> out;
  if (k > n) return out;
  Subset cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    // next combination in lexicographic order
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<Subset> shortlex_below(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("shortlex: negative argument");
  std::vector<Subset> out;
  for (int s = 0; s < k; ++s) {
    auto layer = subsets_of_size(n, s);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<Subset> shortlex_upto(int n, int k) {
  auto out = shortlex_below(n, k);
  auto layer = subsets_of_size(n, k);
  out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

std::uint64_t combination_rank(int n, const Subset& s) {
  const int k = static_cast<int>(s.size());
  std::uint64_t rank = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    if (s[i] <= prev || s[i] >= n)
      throw std::invalid_argument("combination_rank: not a sorted subset of [n]");
    for (int v = prev + 1; v < s[i]; ++v)
      rank += binomial_u64(n - v - 1, k - i - 1);
    prev = s[i];
  }
  return rank;
}

SubsetIndex::SubsetIndex(int n, int k) : n_(n), k_(k) {
  if (n < 0 || k < 0) throw std::invalid_argument("SubsetIndex: negative argument");
  below_ = shortlex_below(n, k);
  exact_ = subsets_of_size(n, k);
  upto_ = below_;
  upto_.insert(upto_.end(), exact_.begin(), exact_.end());
  size_offsets_.assign(k + 1, 0);
  for (int s = 1; s <= k; ++s)
    size_offsets_[s] = size_offsets_[s - 1] + binomial_u64(n, s - 1);
}

std::size_t SubsetIndex::rank_below(const Subset& s) const {
  const int sz = static_cast<int>(s.size());
  if (sz >= k_) throw std::invalid_argument("rank_below: subset too large");
  return size_offsets_[sz] + combination_rank(n_, s);
}

std::vector<int> increasing_enumeration(const Subset& j) {
  Subset sorted = j;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1])
      throw std::invalid_argument("increasing_enumeration: duplicate elements");
  return sorted;
}

std::vector<Permutation> all_permutations(int k) {
  if (k < 0) throw std::invalid_argument("all_permutations: negative k");
  Permutation p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::uint64_t permutation_rank(const Permutation& p) {
  const int k = static_cast<int>(p.size());
  std::uint64_t rank = 0;
  std::uint64_t fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  std::vector<bool> used(k, false);
  for (int i = 0; i < k; ++i) {
    fact /= (k - i);
    int smaller = 0;
    for (int v = 0; v < p[i]; ++v)
      if (!used[v]) ++smaller;
    rank += smaller * fact;
    used[p[i]] = true;
  }
  return rank;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
  Permutation c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Permutation inverse_permutation(const Permutation& p) {
  Permutation inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Subset apply_to_subset(const Permutation& sigma, const Subset& s) {
  Subset out;
  out.reserve(s.size());
  for (int v : s) out.push_back(sigma[v]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> all_set_partitions(int k) {
  if (k < 1) throw std::invalid_argument("all_set_partitions: k must be >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(k, 0);
  while (true) {
    out.push_back(rgs);
    // next restricted-growth string in lexicographic order
    int i = k - 1;
    for (; i > 0; --i) {
      int maxprefix = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[i] <= maxprefix) break;
    }
    if (i == 0) break;
    ++rgs[i];
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  return out;
}

BigInt bell_number(int k) {
  // Bell triangle
  if (k < 0) throw std::invalid_argument("bell_number: negative k");
  if (k == 0) return 1;
  std::vector<BigInt> row = {1};
  for (int i = 1; i < k; ++i) {
    std::vector<BigInt> next = {row.back()};
    for (const BigInt& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.back();
}

}  // namespace hygent
