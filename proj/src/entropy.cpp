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

#include "hygent/entropy.hpp"

#include <algorithm>
#include <numbers>
#include <thread>
#include <unordered_map>

#include "hygent/prf.hpp"
#include "hygent/sampler.hpp"

namespace hygent {

namespace {

constexpr std::uint64_t kSampleStreamTag = 0x73616d706c657374ULL;
constexpr std::uint64_t kBootstrapStreamTag = 0x626f6f7473747261ULL;

double plugin_mm_entropy(const std::vector<std::uint64_t>& counts,
                         std::uint64_t n_total) {
  double h = 0.0;
  std::size_t observed = 0;
  const double n = static_cast<double>(n_total);
  for (std::uint64_t c : counts) {
    if (c == 0) continue;
    ++observed;
    double p = static_cast<double>(c) / n;
    h -= p * std::log2(p);
  }
  if (observed > 0)
    h += static_cast<double>(observed - 1) / (2.0 * n * std::numbers::ln2);
  return h;
}

}  // namespace

double entropy_bits(const std::vector<Rat>& probs) {
  Rat sum = 0;
  double h = 0.0;
  for (const Rat& p : probs) {
    if (p < 0) throw std::invalid_argument("entropy: negative probability");
    sum += p;
    double pd = to_double(p);
    if (pd > 0.0) h -= pd * std::log2(pd);
  }
  if (sum != 1)
    throw std::invalid_argument("entropy: probabilities must sum to exactly 1");
  return h;
}

std::size_t TypeVectorHash::operator()(const TypeVector& tv) const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint64_t w : tv) h = mix64(h ^ w);
  return static_cast<std::size_t>(h);
}

FiniteStructure structure_from_type_vector(const Signature& signature, int k,
                                           int n, const TypeVector& tv) {
  auto ksets = subsets_of_size(n, k);
  if (tv.size() != ksets.size())
    throw std::invalid_argument("structure_from_type_vector: length mismatch");
  FiniteStructure m(signature, n);
  for (std::size_t i = 0; i < ksets.size(); ++i)
    apply_qf_type(m, ksets[i],
                  QfType::from_index(k, signature.relation_count(), tv[i]));
  return m;
}

TypeVector type_vector_of_structure(const FiniteStructure& m, int k) {
  auto ksets = subsets_of_size(m.n(), k);
  TypeVector tv;
  tv.reserve(ksets.size());
  for (const auto& j : ksets) tv.push_back(qf_type_of(m, j).index());
  return tv;
}

TypeVector sample_type_vector(const StepHypergraphon& w, int n,
                              std::uint64_t seed) {
  const int k = w.k();
  if (n < k) throw std::invalid_argument("sample_type_vector: n must be >= k");
  w.ensure_coherent();
  SampleContext ctx(seed);
  SubsetIndex idx(n, k);
  std::vector<int> cell(idx.below().size());
  for (std::size_t i = 0; i < idx.below().size(); ++i)
    cell[i] = w.grid().cell_of(ctx.zeta(idx.below()[i]));
  const auto& coords = w.coordinates();
  std::vector<int> cellvec(coords.size());
  TypeVector tv;
  tv.reserve(idx.exact().size());
  for (const Subset& j : idx.exact()) {
    for (std::size_t i = 0; i < coords.size(); ++i) {
      Subset image;
      image.reserve(coords[i].size());
      for (int v : coords[i]) image.push_back(j[v]);
      cellvec[i] = cell[idx.rank_below(image)];
    }
    tv.push_back(w.randomize(cellvec, ctx.zeta(j)));
  }
  return tv;
}

std::map<TypeVector, Rat> exact_type_vector_measure(const StepHypergraphon& w,
                                                    int n, std::uint64_t budget,
                                                    int threads) {
  if (threads < 1)
    throw std::invalid_argument("exact measure: threads must be >= 1");
  const int k = w.k();
  if (n < k) throw std::invalid_argument("exact measure: n must be >= k");
  SubsetIndex idx(n, k);
  const int m = w.grid().size();
  const std::size_t n_below = idx.below().size();
  const std::size_t n_ksets = idx.exact().size();

  // Upfront budget check: assignments * (max table support)^|P_k(n)|.
  std::size_t max_support = 1;
  for (const auto& d : w.table()) max_support = std::max(max_support, d.entries().size());
  long double estimate = 1.0L;
  for (std::size_t i = 0; i < n_below; ++i) estimate *= m;
  for (std::size_t i = 0; i < n_ksets; ++i) estimate *= max_support;
  if (estimate > static_cast<long double>(budget))
    throw resource_limit_error(
        "exact measure: needs about " + std::to_string(estimate) +
        " elementary operations, over the budget of " + std::to_string(budget) +
        "; raise the budget or use the Monte Carlo estimator");

  // Coordinate lookup per k-set: positions of tau_J(F) within below().
  const auto& coords = w.coordinates();
  std::vector<std::vector<std::size_t>> jpos(n_ksets,
                                             std::vector<std::size_t>(coords.size()));
  for (std::size_t ji = 0; ji < n_ksets; ++ji) {
    const Subset& j = idx.exact()[ji];
    for (std::size_t i = 0; i < coords.size(); ++i) {
      Subset image;
      image.reserve(coords[i].size());
      for (int v : coords[i]) image.push_back(j[v]);
      jpos[ji][i] = idx.rank_below(image);
    }
  }

  std::uint64_t total_assignments = 1;
  for (std::size_t i = 0; i < n_below; ++i) total_assignments *= m;

  // Masses over a range of cell assignments (flat base-m indices). Rational
  // addition is exact and commutative, so any partition of the assignment
  // space merges to the same measure.
  auto run_range = [&](std::uint64_t lo, std::uint64_t hi,
                       std::map<TypeVector, Rat>& measure) {
    std::vector<int> assignment(n_below);
    std::uint64_t rem = lo;
    for (std::size_t i = 0; i < n_below; ++i) {
      assignment[i] = static_cast<int>(rem % m);
      rem /= m;
    }
    std::vector<const TypeDistribution*> dists(n_ksets);
    TypeVector tv(n_ksets);
    std::vector<int> cellvec(coords.size());
    for (std::uint64_t flat = lo; flat < hi; ++flat) {
      Rat cell_mass = 1;
      for (std::size_t i = 0; i < n_below; ++i)
        cell_mass *= w.grid().weight(assignment[i]);
      for (std::size_t ji = 0; ji < n_ksets; ++ji) {
        for (std::size_t i = 0; i < coords.size(); ++i)
          cellvec[i] = assignment[jpos[ji][i]];
        dists[ji] = &w.evaluate(cellvec);
      }
      // Expand the product over k-sets depth-first.
      std::vector<std::size_t> choice(n_ksets, 0);
      std::vector<Rat> prefix(n_ksets + 1);
      prefix[0] = cell_mass;
      std::size_t depth = 0;
      while (true) {
        if (depth == n_ksets) {
          measure[tv] += prefix[n_ksets];
          // backtrack to the next choice
          while (depth > 0 &&
                 choice[depth - 1] + 1 >= dists[depth - 1]->entries().size())
            --depth;
          if (depth == 0) break;
          ++choice[depth - 1];
          std::fill(choice.begin() + depth, choice.end(), 0);
          --depth;
        }
        const auto& entry = dists[depth]->entries()[choice[depth]];
        tv[depth] = entry.first;
        prefix[depth + 1] = prefix[depth] * entry.second;
        ++depth;
      }
      std::size_t i = 0;
      while (i < n_below && assignment[i] == m - 1) assignment[i++] = 0;
      if (i < n_below) ++assignment[i];
    }
  };

  if (threads <= 1 || total_assignments < 64) {
    std::map<TypeVector, Rat> measure;
    run_range(0, total_assignments, measure);
    return measure;
  }
  std::vector<std::map<TypeVector, Rat>> partial(threads);
  std::vector<std::thread> pool;
  std::uint64_t chunk = total_assignments / threads;
  for (int t = 0; t < threads; ++t) {
    std::uint64_t lo = t * chunk;
    std::uint64_t hi = (t == threads - 1) ? total_assignments : lo + chunk;
    pool.emplace_back(run_range, lo, hi, std::ref(partial[t]));
  }
  for (auto& th : pool) th.join();
  std::map<TypeVector, Rat> measure = std::move(partial[0]);
  for (int t = 1; t < threads; ++t)
    for (const auto& [tv, mass] : partial[t]) measure[tv] += mass;
  return measure;
}

Measure<FiniteStructure> exact_mu_n(const StepHypergraphon& w, int n,
                                    std::uint64_t budget, int threads) {
  auto tv_measure = exact_type_vector_measure(w, n, budget, threads);
  Measure<FiniteStructure> mu;
  for (const auto& [tv, mass] : tv_measure)
    mu[structure_from_type_vector(w.signature(), w.k(), n, tv)] += mass;
  return mu;
}

double exact_entropy(const StepHypergraphon& w, int n, std::uint64_t budget,
                     int threads) {
  auto tv_measure = exact_type_vector_measure(w, n, budget, threads);
  return entropy_bits_of_measure(tv_measure);
}

Measure<FiniteStructure> marginalize(const Measure<FiniteStructure>& mu, int m) {
  Measure<FiniteStructure> out;
  for (const auto& [structure, mass] : mu) out[structure.restrict_to(m)] += mass;
  return out;
}

McEntropy empirical_entropy(const std::vector<std::uint64_t>& counts,
                            std::uint64_t seed) {
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  if (total == 0) throw std::invalid_argument("empirical_entropy: no observations");

  McEntropy out;
  out.estimate_bits = plugin_mm_entropy(counts, total);
  out.support = static_cast<std::size_t>(
      std::count_if(counts.begin(), counts.end(), [](std::uint64_t c) { return c > 0; }));

  // Bootstrap over 100 multinomial resamples of the observed counts.
  constexpr int kResamples = 100;
  std::vector<std::uint64_t> cumulative(counts.size());
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    acc += counts[i];
    cumulative[i] = acc;
  }
  std::vector<double> estimates(kResamples);
  std::vector<std::uint64_t> resampled(counts.size());
  for (int b = 0; b < kResamples; ++b) {
    Prf prf(seed);
    prf.absorb({kBootstrapStreamTag, static_cast<std::uint64_t>(b)});
    std::fill(resampled.begin(), resampled.end(), 0);
    for (std::uint64_t i = 0; i < total; ++i) {
      std::uint64_t pick = prf.next_u64() % total;
      auto it = std::upper_bound(cumulative.begin(), cumulative.end(), pick);
      ++resampled[static_cast<std::size_t>(it - cumulative.begin())];
    }
    estimates[b] = plugin_mm_entropy(resampled, total);
  }
  double mean = 0.0;
  for (double e : estimates) mean += e;
  mean /= kResamples;
  double var = 0.0;
  for (double e : estimates) var += (e - mean) * (e - mean);
  var /= (kResamples - 1);
  out.stderr_bits = std::sqrt(var);
  return out;
}

McEntropy mc_entropy(const StepHypergraphon& w, int n, std::uint64_t samples,
                     std::uint64_t seed, int threads,
                     std::size_t support_budget) {
  if (samples < 100)
    throw std::invalid_argument("mc_entropy: needs at least 100 samples");
  if (threads < 1) throw std::invalid_argument("mc_entropy: threads must be >= 1");
  w.ensure_coherent();  // warm the verdict cache before any worker threads start

  using CountMap = std::unordered_map<TypeVector, std::uint64_t, TypeVectorHash>;
  auto run_range = [&](std::uint64_t lo, std::uint64_t hi, CountMap& local) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      Prf prf(seed);
      prf.absorb({kSampleStreamTag, i});
      std::uint64_t sample_seed = prf.next_u64();
      ++local[sample_type_vector(w, n, sample_seed)];
    }
  };

  CountMap counts;
  if (threads == 1) {
    run_range(0, samples, counts);
  } else {
    std::vector<CountMap> partial(threads);
    std::vector<std::thread> pool;
    std::uint64_t chunk = samples / threads;
    for (int t = 0; t < threads; ++t) {
      std::uint64_t lo = t * chunk;
      std::uint64_t hi = (t == threads - 1) ? samples : lo + chunk;
      pool.emplace_back(run_range, lo, hi, std::ref(partial[t]));
    }
    for (auto& th : pool) th.join();
    for (auto& p : partial)
      for (const auto& [tv, c] : p) counts[tv] += c;
  }
  if (counts.size() > support_budget)
    throw resource_limit_error("mc_entropy: observed support exceeds the budget");

  // Order-independent count vector (sorted keys) so the bootstrap resample
  // indices are deterministic for any thread count.
  std::vector<std::pair<TypeVector, std::uint64_t>> items(counts.begin(), counts.end());
  std::sort(items.begin(), items.end());
  std::vector<std::uint64_t> count_vec;
  count_vec.reserve(items.size());
  for (const auto& [tv, c] : items) count_vec.push_back(c);
  return empirical_entropy(count_vec, seed);
}

BigInt uniform_nr_entropy(const ArityProfile& profile, int n) {
  if (n < 0) throw std::invalid_argument("uniform_nr_entropy: negative n");
  BigInt total = 0;
  for (const auto& [arity, count] : profile) {
    if (arity < 0 || count < 0)
      throw std::invalid_argument("uniform_nr_entropy: bad profile entry");
    if (arity > n) continue;
    BigInt tuples = binomial(BigInt(n), arity);
    for (int i = 2; i <= arity; ++i) tuples *= i;
    total += tuples * count;
  }
  return total;
}

EntropyCurve entropy_curve(const StepHypergraphon& w, int n_max,
                           EntropyMethod method, std::uint64_t samples,
                           std::uint64_t seed, std::uint64_t budget) {
  const int k = w.k();
  if (n_max < k) throw std::invalid_argument("entropy_curve: n_max must be >= k");
  EntropyCurve curve;
  curve.integral_entropy = w.integral_entropy();
  for (int n = k; n <= n_max; ++n) {
    EntropyPoint pt;
    pt.n = n;
    if (method == EntropyMethod::Exact) {
      pt.h_bits = exact_entropy(w, n, budget);
      pt.method = "exact";
      pt.stderr_bits = 0.0;
    } else {
      Prf prf(seed);
      prf.absorb({0x63757276656e7365ULL, static_cast<std::uint64_t>(n)});
      McEntropy mc = mc_entropy(w, n, samples, prf.next_u64());
      pt.h_bits = mc.estimate_bits;
      pt.method = "mc";
      pt.stderr_bits = mc.stderr_bits;
    }
    curve.points.push_back(pt);
  }
  // The entropy function is non-decreasing; tolerate only float noise for
  // exact values and 4 sigma for Monte Carlo ones.
  for (std::size_t i = 1; i < curve.points.size(); ++i) {
    double slack = method == EntropyMethod::Exact
                       ? 1e-9 * (1.0 + std::abs(curve.points[i - 1].h_bits))
                       : 4.0 * (curve.points[i - 1].stderr_bits +
                                curve.points[i].stderr_bits + 1e-9);
    if (curve.points[i].h_bits + slack < curve.points[i - 1].h_bits)
      throw std::logic_error("entropy_curve: entropy decreased with n");
  }
  curve.leading_coefficient =
      curve.points.back().h_bits /
      static_cast<double>(binomial_u64(n_max, k));
  return curve;
}

bool max_entropy_check(const StepHypergraphon& w, const ArityProfile& profile,
                       int n, std::uint64_t budget) {
  double h = exact_entropy(w, n, budget);
  double bound = to_double(Rat(uniform_nr_entropy(profile, n)));
  return h <= bound * (1.0 + 1e-12) + 1e-12;
}

}  // namespace hygent
