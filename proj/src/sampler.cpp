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

#include "hygent/sampler.hpp"

#include <stdexcept>

namespace hygent {

namespace {
// Key a subset by hashing (tag, |D|, elements); the size prefix keeps the
// encoding prefix-free, so distinct subsets get independent streams.
std::uint64_t subset_key(std::uint64_t seed, const Subset& d) {
  Prf prf(seed);
  prf.absorb(0x5a65746153657473ULL);  // stream tag
  prf.absorb(d.size());
  for (int v : d) prf.absorb(static_cast<std::uint64_t>(v));
  return prf.next_u64();
}
}  // namespace

double SampleContext::zeta(const Subset& d) const {
  for (std::size_t i = 1; i < d.size(); ++i)
    if (d[i] <= d[i - 1])
      throw std::invalid_argument("zeta: subset must be sorted and distinct");
  std::uint64_t key = subset_key(seed_, d);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  double u = static_cast<double>(key >> 11) * 0x1.0p-53;
  std::lock_guard<std::mutex> lock(mutex_);
  memo_.emplace(key, u);
  return u;
}

FiniteStructure sample_structure(const StepHypergraphon& w, int n,
                                 std::uint64_t seed) {
  const int k = w.k();
  if (n < k) throw std::invalid_argument("sample_structure: n must be >= k");
  w.ensure_coherent();
  SampleContext ctx(seed);
  SubsetIndex idx(n, k);

  // Cell of every strict subset of [n].
  std::vector<int> cell(idx.below().size());
  for (std::size_t i = 0; i < idx.below().size(); ++i)
    cell[i] = w.grid().cell_of(ctx.zeta(idx.below()[i]));

  FiniteStructure m(w.signature(), n);
  const auto& coords = w.coordinates();
  std::vector<int> cellvec(coords.size());
  for (const Subset& j : idx.exact()) {
    // hat{c}_J: the cell of tau_J(F) for each strict F subset of [k].
    for (std::size_t i = 0; i < coords.size(); ++i) {
      Subset image;
      image.reserve(coords[i].size());
      for (int v : coords[i]) image.push_back(j[v]);
      cellvec[i] = cell[idx.rank_below(image)];
    }
    std::uint64_t type_index = w.randomize(cellvec, ctx.zeta(j));
    apply_qf_type(m, j, QfType::from_index(k, w.signature().relation_count(),
                                           type_index));
  }
  return m;
}

bool sample_restriction_consistent(const StepHypergraphon& w, int n,
                                   std::uint64_t seed) {
  if (n < w.k() + 1)
    throw std::invalid_argument("sample_restriction_consistent: n must be >= k+1");
  FiniteStructure big = sample_structure(w, n, seed);
  FiniteStructure small = sample_structure(w, n - 1, seed);
  return big.restrict_to(n - 1) == small;
}

}  // namespace hygent
