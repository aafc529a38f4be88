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

#include "hygent/blowup.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hygent/prf.hpp"
#include "hygent/sampler.hpp"

namespace hygent {

namespace {
constexpr std::uint64_t kVertexStreamTag = 0x626c6f7775707665ULL;
constexpr std::uint64_t kTrialStreamTag = 0x747269616c766572ULL;
constexpr long long kMaxGenerations = 1'000'000;

RadoVertex draw_vertex(const RadoHypergraph& rado, long long ell, Prf& prf) {
  return RadoVertex{ell, prf.next_below(rado.sampling_bound(ell))};
}
}  // namespace

GammaTable GammaTable::from_pairs(std::vector<std::pair<long long, Rat>> pairs) {
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0 && pairs[i].first == pairs[i - 1].first)
      throw std::invalid_argument("GammaTable: duplicate n");
    if (pairs[i].first < 0 || pairs[i].second < 0 || pairs[i].second > 1)
      throw std::invalid_argument("GammaTable: entries must be n >= 0, value in [0,1]");
  }
  return GammaTable{std::move(pairs)};
}

Rat GammaTable::value(long long n) const {
  for (const auto& [m, v] : entries)
    if (m == n) return v;
  return Rat(0);
}

long long GammaTable::max_n() const {
  return entries.empty() ? -1 : entries.back().first;
}

int BlowupSchedule::block_of(long long ell) const {
  for (std::size_t r = 0; r < gen_ranges.size(); ++r)
    if (ell >= gen_ranges[r].first && ell < gen_ranges[r].second)
      return static_cast<int>(r) + 1;
  throw std::invalid_argument("block_of: generation beyond the schedule");
}

Rat BlowupSchedule::total_mass() const {
  Rat total = 0;
  for (std::size_t r = 0; r < g.size(); ++r) total += Rat(g[r]) * alpha[r];
  return total;
}

BlowupSchedule build_schedule(const GammaTable& gamma, int k, int r_max) {
  if (k < 2) throw std::invalid_argument("build_schedule: k must be >= 2");
  if (r_max < 1) throw std::invalid_argument("build_schedule: r_max must be >= 1");
  BlowupSchedule sched;
  sched.k = k;
  sched.r_max = r_max;
  sched.gamma = gamma;
  BigInt k_pow_k = 1;
  for (int i = 0; i < k; ++i) k_pow_k *= k;
  long long offset = 0;
  for (int r = 1; r <= r_max; ++r) {
    // threshold 2^(-(r+1)k - 3k - 1) * k^-k
    int exponent = (r + 1) * k + 3 * k + 1;
    Rat threshold = Rat(1, (BigInt(1) << exponent) * k_pow_k);
    long long above = -1;
    for (const auto& [n, v] : gamma.entries)
      if (v > threshold) above = std::max(above, n);
    if (!gamma.entries.empty() && gamma.entries.back().second > threshold)
      throw insufficient_gamma_error(
          "build_schedule: gamma table still above the block-" +
          std::to_string(r) + " threshold at its last entry; extend the table");
    long long base = (1LL << (r + 3)) * k;
    long long g_r = std::max(base, above);
    sched.g.push_back(g_r);
    sched.alpha.push_back(Rat(1, BigInt(g_r) * (BigInt(1) << r)));
    sched.gen_ranges.emplace_back(offset, offset + g_r);
    offset += g_r;
    if (offset > kMaxGenerations)
      throw resource_limit_error("build_schedule: too many generations");
  }
  return sched;
}

BlowupMap::BlowupMap(const BlowupSchedule& schedule) {
  // Reassign the truncation remainder 2^-r_max proportionally across the
  // first block so the masses partition [0,1].
  Rat remainder = Rat(1) - schedule.total_mass();
  Rat first_block_mass = Rat(schedule.g[0]) * schedule.alpha[0];
  Rat scale = (first_block_mass + remainder) / first_block_mass;
  effective_alpha_.reserve(schedule.generation_count());
  for (long long ell = 0; ell < schedule.generation_count(); ++ell) {
    Rat a = schedule.alpha_of(ell);
    if (ell < schedule.gen_ranges[0].second) a *= scale;
    effective_alpha_.push_back(a);
  }
  Rat cum = 0;
  cutoffs_.reserve(effective_alpha_.size());
  for (const Rat& a : effective_alpha_) {
    cum += a;
    cutoffs_.push_back(largest_double_below(cum));
  }
  if (cum != 1)
    throw std::logic_error("BlowupMap: effective masses do not sum to 1");
}

long long BlowupMap::generation_of(double u) const {
  if (!(u >= 0.0 && u < 1.0))
    throw std::invalid_argument("generation_of: u outside [0,1)");
  auto it = std::lower_bound(cutoffs_.begin(), cutoffs_.end(), u);
  if (it == cutoffs_.end()) --it;  // unreachable: last cumulative is 1 > u
  return static_cast<long long>(it - cutoffs_.begin());
}

Rat BlowupMap::effective_vertex_mass(const RadoHypergraph& rado,
                                     long long ell) const {
  if (ell < 0 || ell >= generation_count())
    throw std::invalid_argument("effective_vertex_mass: generation out of range");
  return effective_alpha_[ell] / Rat(rado.generation_size(ell));
}

std::vector<RadoVertex> blowup_vertex_assignment(const BlowupSchedule& schedule,
                                                 const RadoHypergraph& rado,
                                                 int n, std::uint64_t seed) {
  if (schedule.k != rado.k())
    throw std::invalid_argument("blow-up: schedule and hypergraph disagree on k");
  if (n < 1) throw std::invalid_argument("blow-up: n must be >= 1");
  BlowupMap map(schedule);
  SampleContext ctx(seed);
  std::vector<RadoVertex> image;
  image.reserve(n);
  for (int j = 0; j < n; ++j) {
    long long ell = map.generation_of(ctx.zeta({j}));
    Prf prf(seed);
    prf.absorb({kVertexStreamTag, static_cast<std::uint64_t>(j)});
    image.push_back(draw_vertex(rado, ell, prf));
  }
  return image;
}

FiniteStructure sample_blowup(const BlowupSchedule& schedule,
                              const RadoHypergraph& rado, int n,
                              std::uint64_t seed) {
  const int k = rado.k();
  if (n < k) throw std::invalid_argument("sample_blowup: n must be >= k");
  std::vector<RadoVertex> image = blowup_vertex_assignment(schedule, rado, n, seed);

  FiniteStructure m(Signature::single_relation("E", k), n);
  std::vector<RadoVertex> picks(k);
  for (const Subset& j : subsets_of_size(n, k)) {
    bool distinct = true;
    for (int i = 0; i < k; ++i) picks[i] = image[j[i]];
    for (int a = 0; a < k && distinct; ++a)
      for (int b = a + 1; b < k; ++b)
        if (picks[a] == picks[b]) {
          distinct = false;
          break;
        }
    if (distinct && rado.has_edge(picks, seed))
      apply_qf_type(m, j, QfType::complete(k, 1));
  }
  return m;
}

UniformityReport conditional_uniformity(const BlowupSchedule& schedule,
                                        const RadoHypergraph& rado,
                                        const std::vector<long long>& rho,
                                        std::uint64_t trials,
                                        std::uint64_t seed) {
  const int k = rado.k();
  if (schedule.k != k)
    throw std::invalid_argument("conditional_uniformity: k mismatch");
  const int s = static_cast<int>(rho.size());
  if (s < k) throw std::invalid_argument("conditional_uniformity: need at least k slots");
  std::set<long long> distinct(rho.begin(), rho.end());
  if (static_cast<int>(distinct.size()) != s)
    throw std::invalid_argument("conditional_uniformity: rho must be injective");
  for (long long ell : rho)
    if (ell < 0 || ell >= schedule.generation_count())
      throw std::invalid_argument("conditional_uniformity: generation beyond schedule");

  auto ksets = subsets_of_size(s, k);
  if (ksets.size() > 12)
    throw resource_limit_error("conditional_uniformity: more than 2^12 hypergraphs");
  const std::size_t graph_count = std::size_t{1} << ksets.size();

  UniformityReport report;
  report.trials = trials;
  report.counts.assign(graph_count, 0);
  std::vector<RadoVertex> image(s), picks(k);
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (int j = 0; j < s; ++j) {
      Prf prf(seed);
      prf.absorb({kTrialStreamTag, t, static_cast<std::uint64_t>(j)});
      image[j] = draw_vertex(rado, rho[j], prf);
    }
    std::size_t mask = 0;
    for (std::size_t e = 0; e < ksets.size(); ++e) {
      for (int i = 0; i < k; ++i) picks[i] = image[ksets[e][i]];
      if (rado.has_edge(picks, seed)) mask |= std::size_t{1} << e;
    }
    ++report.counts[mask];
  }

  const double expected = static_cast<double>(trials) / static_cast<double>(graph_count);
  double chi2 = 0.0;
  for (std::uint64_t c : report.counts) {
    double d = static_cast<double>(c) - expected;
    chi2 += d * d / expected;
  }
  report.chi_square = chi2;
  boost::math::chi_squared dist(static_cast<double>(graph_count - 1));
  report.p_value = boost::math::cdf(boost::math::complement(dist, chi2));
  return report;
}

ConditionalEntropyReport conditional_entropy_bound(
    const BlowupSchedule& schedule, const RadoHypergraph& rado,
    const std::vector<long long>& rho, std::uint64_t trials,
    std::uint64_t seed) {
  const int k = rado.k();
  if (schedule.k != k)
    throw std::invalid_argument("conditional_entropy_bound: k mismatch");
  const int n = static_cast<int>(rho.size());
  if (n < k)
    throw std::invalid_argument("conditional_entropy_bound: need at least k slots");
  for (long long ell : rho)
    if (ell < 0 || ell >= schedule.generation_count())
      throw std::invalid_argument("conditional_entropy_bound: generation beyond schedule");

  auto ksets = subsets_of_size(n, k);
  if (ksets.size() > 12)
    throw resource_limit_error("conditional_entropy_bound: support over 2^12");

  std::set<long long> image_gens(rho.begin(), rho.end());
  const int image_size = static_cast<int>(image_gens.size());

  std::vector<std::uint64_t> counts(std::size_t{1} << ksets.size(), 0);
  std::vector<RadoVertex> image(n), picks(k);
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (int j = 0; j < n; ++j) {
      Prf prf(seed);
      prf.absorb({kTrialStreamTag, t, static_cast<std::uint64_t>(j)});
      image[j] = draw_vertex(rado, rho[j], prf);
    }
    std::size_t mask = 0;
    for (std::size_t e = 0; e < ksets.size(); ++e) {
      bool distinct = true;
      for (int i = 0; i < k; ++i) picks[i] = image[ksets[e][i]];
      for (int a = 0; a < k && distinct; ++a)
        for (int b = a + 1; b < k; ++b)
          if (picks[a] == picks[b]) {
            distinct = false;
            break;
          }
      if (distinct && rado.has_edge(picks, seed)) mask |= std::size_t{1} << e;
    }
    ++counts[mask];
  }

  McEntropy est = empirical_entropy(counts, seed);
  ConditionalEntropyReport report;
  report.estimate_bits = est.estimate_bits;
  report.stderr_bits = est.stderr_bits;
  report.support = est.support;
  report.bound_bits =
      image_size >= k ? static_cast<double>(binomial_u64(image_size, k)) : 0.0;
  return report;
}

StepHypergraphon truncated_step_form(const BlowupSchedule& schedule,
                                     const RadoHypergraph& rado, int gen_cap) {
  const int k = rado.k();
  if (schedule.k != k)
    throw std::invalid_argument("truncated_step_form: k mismatch");
  if (gen_cap < 0 || gen_cap > rado.explicit_gens())
    throw std::invalid_argument(
        "truncated_step_form: gen_cap exceeds the explicit generations");
  BlowupMap map(schedule);
  if (gen_cap >= map.generation_count())
    throw std::invalid_argument("truncated_step_form: gen_cap beyond the schedule");
  const int vertex_count = rado.cumulative_size(gen_cap).convert_to<int>();
  if (vertex_count > 16)
    throw std::invalid_argument("truncated_step_form: more than 16 vertices");

  std::vector<Rat> weights;
  weights.reserve(vertex_count + 1);
  Rat assigned = 0;
  for (int id = 0; id < vertex_count; ++id) {
    RadoVertex v = rado.vertex_of_global(id);
    Rat mass = map.effective_vertex_mass(rado, v.generation);
    weights.push_back(mass);
    assigned += mass;
  }
  weights.push_back(Rat(1) - assigned);  // remainder cell, joined to nothing
  Grid grid(std::move(weights));

  Signature sig = Signature::single_relation("E", k);
  const std::uint64_t top = QfType::complete(k, 1).index();
  const std::uint64_t bot = QfType::empty(k, 1).index();
  auto coords = shortlex_below(k, k);
  // Singleton coordinates sit right after the empty set in shortlex order.
  std::vector<std::size_t> singleton_pos;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i].size() == 1) singleton_pos.push_back(i);

  std::size_t total = 1;
  for (std::size_t i = 0; i < coords.size(); ++i) total *= (vertex_count + 1);
  std::vector<TypeDistribution> table;
  table.reserve(total);
  std::vector<RadoVertex> picks(k);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    std::vector<int> cells(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
      cells[i] = static_cast<int>(rem % (vertex_count + 1));
      rem /= (vertex_count + 1);
    }
    bool ok = true;
    std::set<int> seen;
    for (int i = 0; i < k && ok; ++i) {
      int cell = cells[singleton_pos[i]];
      if (cell >= vertex_count || !seen.insert(cell).second) ok = false;
      else picks[i] = rado.vertex_of_global(cell);
    }
    bool edge = ok && rado.has_edge(picks, /*seed=*/0);
    table.push_back(TypeDistribution::point_mass(edge ? top : bot));
  }
  return StepHypergraphon(sig, k, grid, std::move(table));
}

}  // namespace hygent
