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

#include "hygent/hypergraphon.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace hygent {

namespace {
constexpr std::size_t kMaxTableSize = 10'000'000;

double entropy_of_weights(const std::vector<std::pair<std::uint64_t, Rat>>& entries) {
  double h = 0.0;
  for (const auto& [idx, w] : entries) {
    double p = to_double(w);
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}
}  // namespace

Grid::Grid(std::vector<Rat> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("Grid: needs at least one cell");
  Rat sum = 0;
  cumulative_.reserve(weights_.size());
  for (const Rat& w : weights_) {
    if (w <= 0) throw std::invalid_argument("Grid: weights must be positive");
    sum += w;
    cumulative_.push_back(sum);
  }
  if (sum != 1) throw std::invalid_argument("Grid: weights must sum to exactly 1");
  cutoffs_.reserve(cumulative_.size());
  for (const Rat& c : cumulative_) cutoffs_.push_back(largest_double_below(c));
}

Grid Grid::uniform(int m) {
  if (m < 1) throw std::invalid_argument("Grid::uniform: m must be >= 1");
  return Grid(std::vector<Rat>(m, Rat(1, m)));
}

int Grid::cell_of(double u) const {
  if (!(u >= 0.0 && u < 1.0)) throw std::invalid_argument("cell_of: u outside [0,1)");
  // cumulative_[i] > u iff u <= cutoffs_[i]; exact because u is dyadic.
  for (std::size_t i = 0; i < cutoffs_.size(); ++i)
    if (u <= cutoffs_[i]) return static_cast<int>(i);
  return static_cast<int>(cutoffs_.size()) - 1;  // unreachable: cum back == 1 > u
}

TypeDistribution::TypeDistribution(
    std::vector<std::pair<std::uint64_t, Rat>> entries)
    : entries_(std::move(entries)) {
  Rat sum = 0;
  std::uint64_t prev = 0;
  bool first = true;
  for (const auto& [idx, w] : entries_) {
    if (!first && idx <= prev)
      throw std::invalid_argument("TypeDistribution: entries must be sorted by index");
    if (w <= 0)
      throw std::invalid_argument("TypeDistribution: weights must be positive");
    sum += w;
    prev = idx;
    first = false;
  }
  if (sum != 1)
    throw std::invalid_argument("TypeDistribution: weights must sum to exactly 1");
  Rat cum = 0;
  cutoffs_.reserve(entries_.size());
  for (const auto& [idx, w] : entries_) {
    cum += w;
    cutoffs_.push_back(largest_double_below(cum));
  }
}

TypeDistribution TypeDistribution::point_mass(std::uint64_t type_index) {
  return TypeDistribution({{type_index, Rat(1)}});
}

TypeDistribution TypeDistribution::uniform(std::vector<std::uint64_t> type_indices) {
  std::sort(type_indices.begin(), type_indices.end());
  type_indices.erase(std::unique(type_indices.begin(), type_indices.end()),
                     type_indices.end());
  std::vector<std::pair<std::uint64_t, Rat>> entries;
  entries.reserve(type_indices.size());
  for (auto idx : type_indices)
    entries.emplace_back(idx, Rat(1, static_cast<long long>(type_indices.size())));
  return TypeDistribution(std::move(entries));
}

Rat TypeDistribution::weight(std::uint64_t type_index) const {
  for (const auto& [idx, w] : entries_)
    if (idx == type_index) return w;
  return Rat(0);
}

std::uint64_t TypeDistribution::quantile(double u) const {
  if (entries_.empty()) throw std::logic_error("quantile: empty distribution");
  if (!(u >= 0.0 && u < 1.0)) throw std::invalid_argument("quantile: u outside [0,1)");
  // Cumulative weight exceeds u iff u <= cutoff; exact because u is dyadic.
  for (std::size_t i = 0; i < cutoffs_.size(); ++i)
    if (u <= cutoffs_[i]) return entries_[i].first;
  return entries_.back().first;  // unreachable: cum == 1 > u
}

double TypeDistribution::entropy_bits() const { return entropy_of_weights(entries_); }

TypeDistribution TypeDistribution::acted_by(
    const Permutation& sigma, int k, int relation_count,
    const std::vector<Permutation>& perms) const {
  // (sigma . nu)({u}) = nu({sigma . u}), so mass at index i moves to the
  // index of sigma^-1 . u_i.
  Permutation inv = inverse_permutation(sigma);
  std::vector<std::pair<std::uint64_t, Rat>> entries;
  entries.reserve(entries_.size());
  for (const auto& [idx, w] : entries_)
    entries.emplace_back(sym_act_type_index(inv, idx, k, relation_count, perms), w);
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return TypeDistribution(std::move(entries));
}

std::string CoherenceViolation::describe() const {
  std::string s = "sigma=(";
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(sigma[i]);
  }
  s += ") cells=(";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(cells[i]);
  }
  return s + ")";
}

StepHypergraphon::StepHypergraphon(Signature signature, int k, Grid grid,
                                   std::vector<TypeDistribution> table)
    : sig_(std::move(signature)), k_(k), grid_(std::move(grid)) {
  sig_.require_uniform_arity(k_);
  if (qf_type_bits(sig_, k_) > 63)
    throw std::invalid_argument("StepHypergraphon: type space too large (needs > 63 bits)");
  coords_ = shortlex_below(k_, k_);
  std::size_t want = 1;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    want *= grid_.size();
    if (want > kMaxTableSize)
      throw resource_limit_error("StepHypergraphon: table too large");
  }
  if (table.size() != want)
    throw std::invalid_argument(
        "StepHypergraphon: incomplete table (expected " + std::to_string(want) +
        " entries, got " + std::to_string(table.size()) + ")");
  const int bits = qf_type_bits(sig_, k_);
  const std::uint64_t type_bound = std::uint64_t{1} << bits;
  for (const auto& dist : table)
    for (const auto& [idx, weight] : dist.entries())
      if (idx >= type_bound)
        throw std::invalid_argument(
            "StepHypergraphon: type index " + std::to_string(idx) +
            " outside the 2^" + std::to_string(bits) + " type space");
  table_ = std::move(table);
}

std::size_t StepHypergraphon::flat_index(const std::vector<int>& cells) const {
  if (cells.size() != coords_.size())
    throw std::invalid_argument("flat_index: wrong coordinate count");
  std::size_t idx = 0;
  std::size_t stride = 1;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i] < 0 || cells[i] >= grid_.size())
      throw std::invalid_argument("flat_index: cell out of range");
    idx += static_cast<std::size_t>(cells[i]) * stride;
    stride *= grid_.size();
  }
  return idx;
}

std::vector<int> StepHypergraphon::cells_of_flat(std::size_t flat) const {
  std::vector<int> cells(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    cells[i] = static_cast<int>(flat % grid_.size());
    flat /= grid_.size();
  }
  return cells;
}

const TypeDistribution& StepHypergraphon::evaluate(const std::vector<int>& cells) const {
  return table_[flat_index(cells)];
}

std::uint64_t StepHypergraphon::randomize(const std::vector<int>& cells, double u) const {
  return evaluate(cells).quantile(u);
}

std::vector<CoherenceViolation> StepHypergraphon::validate() const {
  std::vector<CoherenceViolation> violations;
  auto perms = all_permutations(k_);
  const int nrel = sig_.relation_count();
  // For each sigma, coordinate position i (subset F) maps to the position of
  // sigma(F): permuted_cells[i] = cells[position of sigma(coords[i])].
  std::map<Subset, int> pos;
  for (std::size_t i = 0; i < coords_.size(); ++i) pos[coords_[i]] = static_cast<int>(i);
  for (const auto& sigma : perms) {
    std::vector<int> source(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i)
      source[i] = pos.at(apply_to_subset(sigma, coords_[i]));
    for (std::size_t flat = 0; flat < table_.size(); ++flat) {
      auto cells = cells_of_flat(flat);
      std::vector<int> permuted(cells.size());
      for (std::size_t i = 0; i < cells.size(); ++i) permuted[i] = cells[source[i]];
      const TypeDistribution& lhs = table_[flat_index(permuted)];
      TypeDistribution rhs = table_[flat].acted_by(sigma, k_, nrel, perms);
      if (!(lhs == rhs)) violations.push_back({sigma, cells});
    }
  }
  return violations;
}

void StepHypergraphon::ensure_coherent() const {
  if (coherence_cache_ == 0) coherence_cache_ = validate().empty() ? 1 : 2;
  if (coherence_cache_ == 2)
    throw std::invalid_argument(
        "hypergraphon table violates the coordinate-permutation coherence law");
}

double StepHypergraphon::integral_entropy() const {
  double total = 0.0;
  for (std::size_t flat = 0; flat < table_.size(); ++flat) {
    auto cells = cells_of_flat(flat);
    Rat mass = 1;
    for (int c : cells) mass *= grid_.weight(c);
    total += to_double(mass) * table_[flat].entropy_bits();
  }
  return total;
}

bool StepHypergraphon::induces_borel_hypergraph() const {
  for (const auto& d : table_)
    if (!d.is_point_mass()) return false;
  // Group cell vectors by their singleton coordinates only.
  std::vector<std::size_t> singleton_pos;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i].size() == 1) singleton_pos.push_back(i);
  std::map<std::vector<int>, const TypeDistribution*> rep;
  for (std::size_t flat = 0; flat < table_.size(); ++flat) {
    auto cells = cells_of_flat(flat);
    std::vector<int> key;
    key.reserve(singleton_pos.size());
    for (auto p : singleton_pos) key.push_back(cells[p]);
    auto [it, inserted] = rep.try_emplace(key, &table_[flat]);
    if (!inserted && !(*it->second == table_[flat])) return false;
  }
  return true;
}

StepHypergraphon make_er(const Signature& signature, int k) {
  signature.require_uniform_arity(k);
  if (signature.relation_count() != 1)
    throw std::invalid_argument("make_er: signature must have exactly one relation");
  QfType top = QfType::complete(k, 1);
  QfType bot = QfType::empty(k, 1);
  TypeDistribution d = TypeDistribution::uniform({bot.index(), top.index()});
  return make_constant(signature, k, d);
}

StepHypergraphon make_constant(const Signature& signature, int k,
                               const TypeDistribution& dist) {
  return StepHypergraphon(signature, k, Grid::uniform(1), {dist});
}

StepHypergraphon make_triangle() {
  Signature sig = Signature::single_relation("E", 3);
  const int k = 3;
  Grid grid = Grid::uniform(2);
  auto coords = shortlex_below(k, k);  // sizes 0,1,2
  std::vector<std::size_t> pair_pos;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i].size() == 2) pair_pos.push_back(i);
  std::uint64_t top = QfType::complete(k, 1).index();
  std::uint64_t bot = QfType::empty(k, 1).index();
  std::size_t total = std::size_t{1} << coords.size();
  std::vector<TypeDistribution> table;
  table.reserve(total);
  for (std::size_t flat = 0; flat < total; ++flat) {
    bool all_low = true;
    for (auto p : pair_pos)
      if ((flat >> p) & 1) all_low = false;
    table.push_back(TypeDistribution::point_mass(all_low ? top : bot));
  }
  return StepHypergraphon(sig, k, grid, std::move(table));
}

StepHypergraphon symmetrize(const StepHypergraphon& w) {
  const int k = w.k();
  const int nrel = w.signature().relation_count();
  auto perms = all_permutations(k);
  const auto& coords = w.coordinates();
  std::map<Subset, int> pos;
  for (std::size_t i = 0; i < coords.size(); ++i) pos[coords[i]] = static_cast<int>(i);

  std::vector<TypeDistribution> table;
  table.reserve(w.table().size());
  const Rat share(1, static_cast<long long>(perms.size()));
  for (std::size_t flat = 0; flat < w.table().size(); ++flat) {
    auto cells = w.cells_of_flat(flat);
    // (1/k!) * sum over sigma of sigma^-1 . T(c o sigma)
    std::map<std::uint64_t, Rat> mixed;
    for (const auto& sigma : perms) {
      std::vector<int> permuted(cells.size());
      for (std::size_t i = 0; i < cells.size(); ++i)
        permuted[i] = cells[pos.at(apply_to_subset(sigma, coords[i]))];
      TypeDistribution acted = w.evaluate(permuted).acted_by(
          inverse_permutation(sigma), k, nrel, perms);
      for (const auto& [idx, weight] : acted.entries()) mixed[idx] += weight * share;
    }
    std::vector<std::pair<std::uint64_t, Rat>> entries(mixed.begin(), mixed.end());
    table.push_back(TypeDistribution(std::move(entries)));
  }
  return StepHypergraphon(w.signature(), k, w.grid(), std::move(table));
}

StepHypergraphon make_complete_or_empty(const Signature& signature, int k) {
  signature.require_uniform_arity(k);
  std::uint64_t top = QfType::complete(k, signature.relation_count()).index();
  std::uint64_t bot = QfType::empty(k, signature.relation_count()).index();
  Grid grid = Grid::uniform(2);
  auto coords = shortlex_below(k, k);
  // The empty set is the first shortlex coordinate; depend on it alone.
  std::size_t total = std::size_t{1} << coords.size();
  std::vector<TypeDistribution> table;
  table.reserve(total);
  for (std::size_t flat = 0; flat < total; ++flat) {
    bool low = ((flat >> 0) & 1) == 0;
    table.push_back(TypeDistribution::point_mass(low ? top : bot));
  }
  return StepHypergraphon(signature, k, grid, std::move(table));
}

}  // namespace hygent
