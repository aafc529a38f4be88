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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hygent/entropy.hpp"
#include "hygent/sampler.hpp"

using namespace hygent;

namespace {
Signature graph_sig() { return Signature::single_relation("E", 2); }

// Independent oracle: every non-redundant structure over `sig` on [n], by
// enumerating all subsets of the distinct-entry tuple slots.
std::vector<FiniteStructure> all_nonredundant_structures(const Signature& sig, int n) {
  std::vector<std::pair<int, Tuple>> slots;
  for (int r = 0; r < sig.relation_count(); ++r) {
    int arity = sig.relations()[r].arity;
    if (arity > n) continue;
    Tuple t(arity, 0);
    while (true) {
      bool distinct = true;
      for (int i = 0; i < arity && distinct; ++i)
        for (int j = i + 1; j < arity; ++j)
          if (t[i] == t[j]) {
            distinct = false;
            break;
          }
      if (distinct) slots.emplace_back(r, t);
      int i = arity - 1;
      while (i >= 0 && t[i] == n - 1) t[i--] = 0;
      if (i < 0) break;
      ++t[i];
    }
  }
  REQUIRE(slots.size() <= 20);
  std::vector<FiniteStructure> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    FiniteStructure m(sig, n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1) m.add_tuple(slots[i].first, slots[i].second);
    out.push_back(std::move(m));
  }
  return out;
}

// Oracle for the k=3 triangle hypergraphon at n=4: enumerate the 2^6 latent
// pair-coin patterns and read off the triangle indicators.
double triangle_entropy_oracle_n4() {
  std::map<std::vector<int>, Rat> dist;
  auto pairs = subsets_of_size(4, 2);
  auto triples = subsets_of_size(4, 3);
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    std::vector<int> edges;
    for (const auto& t : triples) {
      bool all_low = true;
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (!std::includes(t.begin(), t.end(), pairs[p].begin(), pairs[p].end()))
          continue;
        if ((mask >> p) & 1) all_low = false;
      }
      edges.push_back(all_low ? 1 : 0);
    }
    dist[edges] += Rat(1, 64);
  }
  return entropy_bits_of_measure(dist);
}
}  // namespace

TEST_CASE("entropy of explicit distributions") {
  CHECK(entropy_bits({Rat(1)}) == 0.0);
  CHECK(entropy_bits({Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)}) ==
        doctest::Approx(2.0));
  CHECK(entropy_bits({Rat(1, 8), Rat(7, 8)}) ==
        doctest::Approx(0.5436).epsilon(1e-4));
  CHECK_THROWS_AS(entropy_bits({Rat(1, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(entropy_bits({Rat(3, 2), Rat(-1, 2)}), std::invalid_argument);
}

TEST_CASE("exact law of the density-1/2 graph on 3 vertices") {
  StepHypergraphon er = make_er(graph_sig(), 2);
  auto mu = exact_mu_n(er, 3);
  CHECK(mu.size() == 8);  // symmetric graphs on 3 labeled vertices
  Rat total = 0;
  for (const auto& [m, mass] : mu) {
    CHECK(mass == Rat(1, 8));
    total += mass;
    // only symmetric edge sets appear
    for (const Tuple& t : m.tuples(0)) CHECK(m.holds(0, {t[1], t[0]}));
  }
  CHECK(total == 1);
}

TEST_CASE("point-mass hypergraphon concentrates on one structure") {
  StepHypergraphon full =
      make_constant(graph_sig(), 2, TypeDistribution::point_mass(QfType::complete(2, 1).index()));
  auto mu = exact_mu_n(full, 4);
  REQUIRE(mu.size() == 1);
  CHECK(mu.begin()->second == 1);
  CHECK(mu.begin()->first.tuples(0).size() == 12);
}

TEST_CASE("triangle hypergraphon edge probability is 1/8 at n=3") {
  StepHypergraphon tri = make_triangle();
  auto mu = exact_mu_n(tri, 3);
  Rat edge_mass = 0;
  for (const auto& [m, mass] : mu)
    if (m.holds(0, {0, 1, 2})) edge_mass += mass;
  CHECK(edge_mass == Rat(1, 8));
  CHECK(exact_entropy(tri, 3) == doctest::Approx(0.5436).epsilon(1e-4));
}

TEST_CASE("exact entropy of the density-1/2 graph is the pair count") {
  StepHypergraphon er = make_er(graph_sig(), 2);
  CHECK(exact_entropy(er, 3) == doctest::Approx(3.0));
  CHECK(exact_entropy(er, 4) == doctest::Approx(6.0));
  StepHypergraphon er3 = make_er(Signature::single_relation("E", 3), 3);
  CHECK(exact_entropy(er3, 4) == doctest::Approx(4.0));
}

TEST_CASE("triangle entropy at n=4 against the latent-coin oracle") {
  double oracle = triangle_entropy_oracle_n4();
  CHECK(exact_entropy(make_triangle(), 4) == doctest::Approx(oracle));
}

TEST_CASE("exact entropies are monotone in n") {
  StepHypergraphon tri = make_triangle();
  double prev = exact_entropy(tri, 3);
  for (int n = 4; n <= 5; ++n) {
    double next = exact_entropy(tri, n);
    CHECK(next >= prev - 1e-9);
    prev = next;
  }
}

TEST_CASE("budget guard reports resource exhaustion") {
  CHECK_THROWS_AS(exact_entropy(make_triangle(), 9), resource_limit_error);
  CHECK_THROWS_AS(exact_entropy(make_triangle(), 5, /*budget=*/1000),
                  resource_limit_error);
}

TEST_CASE("measure invariance under the logic action (n <= 4)") {
  for (const StepHypergraphon& w :
       {make_er(graph_sig(), 2), make_complete_or_empty(graph_sig(), 2)}) {
    for (int n = 2; n <= 4; ++n) {
      auto mu = exact_mu_n(w, n);
      for (const auto& sigma : all_permutations(n)) {
        for (const auto& [m, mass] : mu) {
          auto it = mu.find(logic_act(sigma, m));
          REQUIRE(it != mu.end());
          CHECK(it->second == mass);
        }
      }
    }
  }
}

TEST_CASE("marginal consistency from n+1 to n") {
  for (const StepHypergraphon& w : {make_er(graph_sig(), 2), make_triangle()}) {
    int k = w.k();
    auto big = exact_mu_n(w, k + 1);
    auto small = exact_mu_n(w, k);
    CHECK(marginalize(big, k) == small);
  }
  StepHypergraphon er = make_er(graph_sig(), 2);
  CHECK(marginalize(exact_mu_n(er, 5), 4) == exact_mu_n(er, 4));
}

TEST_CASE("exact masses always sum to one") {
  for (const StepHypergraphon& w :
       {make_er(graph_sig(), 2), make_triangle(), make_complete_or_empty(graph_sig(), 2)}) {
    auto mu = exact_type_vector_measure(w, w.k() + 1);
    Rat total = 0;
    for (const auto& [key, mass] : mu) total += mass;
    CHECK(total == 1);
  }
}

TEST_CASE("monte carlo entropy of a point mass is exactly zero") {
  StepHypergraphon full =
      make_constant(graph_sig(), 2, TypeDistribution::point_mass(QfType::complete(2, 1).index()));
  McEntropy mc = mc_entropy(full, 5, 1000, 3);
  CHECK(mc.estimate_bits == 0.0);
  CHECK(mc.stderr_bits == 0.0);
  CHECK(mc.support == 1);
}

TEST_CASE("monte carlo entropy approaches the exact value") {
  StepHypergraphon er = make_er(graph_sig(), 2);
  McEntropy mc = mc_entropy(er, 3, 100'000, 17);
  CHECK(std::abs(mc.estimate_bits - 3.0) <= 0.05);
  CHECK(std::abs(mc.estimate_bits - 3.0) <= 3 * mc.stderr_bits + 0.01);

  StepHypergraphon tri = make_triangle();
  double exact = exact_entropy(tri, 4);
  McEntropy mc_tri = mc_entropy(tri, 4, 50'000, 23);
  CHECK(std::abs(mc_tri.estimate_bits - exact) <= 3 * mc_tri.stderr_bits + 0.01);
}

TEST_CASE("monte carlo entropy is deterministic and thread-invariant") {
  StepHypergraphon er = make_er(graph_sig(), 2);
  McEntropy a = mc_entropy(er, 4, 2000, 99, 1);
  McEntropy b = mc_entropy(er, 4, 2000, 99, 4);
  CHECK(a.estimate_bits == b.estimate_bits);
  CHECK(a.stderr_bits == b.stderr_bits);
  CHECK(mc_entropy(er, 4, 2000, 100, 2).estimate_bits != a.estimate_bits);
  CHECK_THROWS_AS(mc_entropy(er, 4, 50, 1), std::invalid_argument);
}

TEST_CASE("two-relation signatures flow through sampling and entropy") {
  // constant table, uniform on {all-false, all-true} over {R, S}: one fair
  // coin per pair decides both relations in both orientations at once
  Signature sig({{"R", 2}, {"S", 2}});
  std::uint64_t top = QfType::complete(2, 2).index();
  StepHypergraphon w = make_constant(sig, 2, TypeDistribution::uniform({0, top}));
  CHECK(w.validate().empty());
  CHECK(w.integral_entropy() == doctest::Approx(1.0));
  for (int n = 2; n <= 4; ++n)
    CHECK(exact_entropy(w, n) ==
          doctest::Approx(static_cast<double>(binomial_u64(n, 2))));
  FiniteStructure m = sample_structure(w, 6, 31);
  for (const auto& j : subsets_of_size(6, 2)) {
    bool r01 = m.holds(0, {j[0], j[1]});
    CHECK(r01 == m.holds(0, {j[1], j[0]}));
    CHECK(r01 == m.holds(1, {j[0], j[1]}));
    CHECK(r01 == m.holds(1, {j[1], j[0]}));
  }
  // exact law: each pair's coin independent, so 2^C(n,2) equal atoms
  auto mu = exact_mu_n(w, 3);
  CHECK(mu.size() == 8);
  for (const auto& [atom, mass] : mu) CHECK(mass == Rat(1, 8));

  // an asymmetric single-relation mixture: one directed edge choice per
  // pair, uniform over {R(x0,x1) only, R(x1,x0) only}
  StepHypergraphon tourney = make_constant(
      Signature::single_relation("R", 2), 2, TypeDistribution::uniform({1, 2}));
  CHECK(tourney.validate().empty());
  CHECK(exact_entropy(tourney, 4) == doctest::Approx(6.0));
  FiniteStructure t = sample_structure(tourney, 5, 8);
  for (const auto& j : subsets_of_size(5, 2))
    CHECK((t.holds(0, {j[0], j[1]}) ? 1 : 0) + (t.holds(0, {j[1], j[0]}) ? 1 : 0) == 1);
}

TEST_CASE("complete-or-empty mixture has constant entropy one") {
  // half complete, half empty at every n: a bounded, non-trivial mixture
  StepHypergraphon w = make_complete_or_empty(graph_sig(), 2);
  for (int n = 2; n <= 5; ++n) {
    auto mu = exact_mu_n(w, n);
    REQUIRE(mu.size() == 2);
    for (const auto& [m, mass] : mu) CHECK(mass == Rat(1, 2));
    CHECK(exact_entropy(w, n) == doctest::Approx(1.0));
  }
}

TEST_CASE("exact measure is identical for every thread count") {
  StepHypergraphon tri = make_triangle();
  auto solo = exact_type_vector_measure(tri, 4, kDefaultExactBudget, 1);
  auto pooled = exact_type_vector_measure(tri, 4, kDefaultExactBudget, 4);
  CHECK(solo == pooled);
  StepHypergraphon er = make_er(graph_sig(), 2);
  CHECK(exact_entropy(er, 5, kDefaultExactBudget, 3) == doctest::Approx(10.0));
}

TEST_CASE("monte carlo support budget") {
  StepHypergraphon er = make_er(graph_sig(), 2);
  CHECK_THROWS_AS(mc_entropy(er, 3, 1000, 5, 1, /*support_budget=*/2),
                  resource_limit_error);
}

TEST_CASE("monte carlo entropy curves carry standard errors") {
  StepHypergraphon er = make_er(graph_sig(), 2);
  EntropyCurve curve = entropy_curve(er, 4, EntropyMethod::MonteCarlo, 2000, 5);
  REQUIRE(curve.points.size() == 3);
  for (const auto& pt : curve.points) {
    CHECK(pt.method == "mc");
    CHECK(pt.stderr_bits > 0.0);
    double expected = static_cast<double>(binomial_u64(pt.n, 2));
    CHECK(std::abs(pt.h_bits - expected) <= 5 * pt.stderr_bits + 0.05);
  }
}

TEST_CASE("uniform non-redundant entropy formula") {
  CHECK(uniform_nr_entropy({{2, 1}}, 3) == 6);
  CHECK(uniform_nr_entropy({{0, 3}}, 0) == 3);
  CHECK(uniform_nr_entropy({{1, 2}, {2, 1}}, 2) == 6);
  CHECK(uniform_nr_entropy({{2, 1}}, 0) == 0);  // arity above n contributes nothing
  CHECK(uniform_nr_entropy({{4, 5}}, 20) ==
        binomial(BigInt(20), 4) * 24 * 5);
}

TEST_CASE("uniform non-redundant entropy against brute-force enumeration") {
  // profiles {1:1}, {2:1}, {1:2,2:1}; uniform measure over all
  // non-redundant structures, entropy computed from the explicit measure
  std::vector<ArityProfile> profiles = {{{1, 1}}, {{2, 1}}, {{1, 2}, {2, 1}}};
  for (const auto& profile : profiles) {
    Signature sig = Signature::from_profile(profile);
    for (int n = 0; n <= 3; ++n) {
      auto structures = all_nonredundant_structures(sig, n);
      Measure<FiniteStructure> uniform;
      for (const auto& m : structures)
        uniform[m] = Rat(1, static_cast<long long>(structures.size()));
      double h = entropy_bits_of_measure(uniform);
      BigInt formula = uniform_nr_entropy(profile, n);
      CHECK(h == doctest::Approx(formula.convert_to<double>()));
      // integer-valued by construction: 2^formula structures
      bool power_matches =
          (BigInt(1) << formula.convert_to<unsigned>()) == BigInt(structures.size());
      CHECK(power_matches);
    }
  }
}

TEST_CASE("entropy curve of the density-1/2 graph hits the pair count") {
  StepHypergraphon er = make_er(graph_sig(), 2);
  EntropyCurve curve = entropy_curve(er, 6, EntropyMethod::Exact);
  CHECK(curve.integral_entropy == doctest::Approx(1.0));
  CHECK(curve.leading_coefficient == doctest::Approx(1.0));
  for (const auto& pt : curve.points) {
    double ratio = pt.h_bits / static_cast<double>(binomial_u64(pt.n, 2));
    CHECK(ratio == doctest::Approx(1.0));
  }
}

TEST_CASE("entropy curve of the triangle hypergraphon decays toward zero") {
  EntropyCurve curve = entropy_curve(make_triangle(), 5, EntropyMethod::Exact);
  CHECK(curve.integral_entropy == doctest::Approx(0.0));
  double prev = 1e9;
  for (const auto& pt : curve.points) {
    double ratio = pt.h_bits / static_cast<double>(binomial_u64(pt.n, 3));
    CHECK(ratio < prev);
    prev = ratio;
  }
}

TEST_CASE("constant tables give exactly linear curves in the pair count") {
  TypeDistribution quarter(
      {{0, Rat(1, 4)}, {1, Rat(1, 4)}, {2, Rat(1, 4)}, {3, Rat(1, 4)}});
  StepHypergraphon w = make_constant(graph_sig(), 2, quarter);
  for (int n = 2; n <= 5; ++n)
    CHECK(exact_entropy(w, n) ==
          doctest::Approx(2.0 * static_cast<double>(binomial_u64(n, 2))));
}

TEST_CASE("maximal entropy bound against the uniform non-redundant measure") {
  CHECK(max_entropy_check(make_er(graph_sig(), 2), {{2, 1}}, 4));
  StepHypergraphon bot =
      make_constant(graph_sig(), 2, TypeDistribution::point_mass(0));
  CHECK(max_entropy_check(bot, {{2, 1}}, 5));
  StepHypergraphon top = make_constant(
      graph_sig(), 2, TypeDistribution::point_mass(QfType::complete(2, 1).index()));
  CHECK(max_entropy_check(top, {{2, 1}}, 5));  // 0 <= bound
  CHECK(max_entropy_check(make_triangle(), {{3, 1}}, 4));
  // the uniform-over-all-types table meets the bound with equality
  TypeDistribution quarter(
      {{0, Rat(1, 4)}, {1, Rat(1, 4)}, {2, Rat(1, 4)}, {3, Rat(1, 4)}});
  CHECK(max_entropy_check(make_constant(graph_sig(), 2, quarter), {{2, 1}}, 4));
}

TEST_CASE("unary point-mass hypergraphons have bounded entropy in n") {
  // one unary relation, three cells, point-mass outputs; all vertices share
  // the single empty-set coordinate, so at most m structures ever occur
  Signature sig = Signature::single_relation("P", 1);
  std::vector<TypeDistribution> table = {TypeDistribution::point_mass(0),
                                         TypeDistribution::point_mass(1),
                                         TypeDistribution::point_mass(0)};
  StepHypergraphon w(sig, 1, Grid({Rat(1, 4), Rat(1, 4), Rat(1, 2)}), table);
  CHECK(w.validate().empty());
  for (int n = 1; n <= 6; ++n) {
    CHECK(exact_entropy(w, n) <= std::log2(3.0) + 1e-9);
    CHECK(exact_mu_n(w, n).size() <= 3);
  }
  // here cells 0 and 2 give identical structures: exactly h(3/4, 1/4)
  CHECK(exact_entropy(w, 6) ==
        doctest::Approx(entropy_bits({Rat(3, 4), Rat(1, 4)})));
}

TEST_CASE("joint entropy facts on small cases") {
  // chain rule h(X,Y) = h(X) + E h(Y|X), subadditivity with equality iff
  // independent; checked on explicit rational tables
  Measure<std::pair<int, int>> joint;
  joint[{0, 0}] = Rat(1, 2);
  joint[{1, 0}] = Rat(1, 4);
  joint[{1, 1}] = Rat(1, 4);
  double h_joint = entropy_bits_of_measure(joint);
  // marginals
  std::map<int, Rat> x, y;
  for (const auto& [key, mass] : joint) {
    x[key.first] += mass;
    y[key.second] += mass;
  }
  double h_x = entropy_bits_of_measure(x);
  double h_y = entropy_bits_of_measure(y);
  // conditional entropy of Y given X, averaged
  double h_y_given_x = 0.0;
  for (const auto& [xv, px] : x) {
    std::vector<Rat> cond;
    for (const auto& [key, mass] : joint)
      if (key.first == xv) cond.push_back(mass / px);
    h_y_given_x += to_double(px) * entropy_bits(cond);
  }
  CHECK(h_joint == doctest::Approx(h_x + h_y_given_x));
  CHECK(h_joint <= h_x + h_y + 1e-12);
  CHECK(h_y_given_x <= h_y + 1e-12);

  // independent product: equality in subadditivity
  Measure<std::pair<int, int>> prod;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 3; ++b) prod[{a, b}] = Rat(1, 6);
  CHECK(entropy_bits_of_measure(prod) ==
        doctest::Approx(std::log2(2.0) + std::log2(3.0)));
}
