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

#include <random>

#include "hygent/qf_type.hpp"
#include "hygent/structure.hpp"

using namespace hygent;

namespace {
Signature graph_sig() { return Signature::single_relation("E", 2); }

FiniteStructure random_structure(const Signature& sig, int n, std::mt19937& rng) {
  FiniteStructure m(sig, n);
  std::bernoulli_distribution coin(0.4);
  for (int r = 0; r < sig.relation_count(); ++r) {
    int arity = sig.relations()[r].arity;
    // enumerate distinct-entry tuples by filtering the full cube
    std::vector<int> t(arity, 0);
    while (true) {
      bool distinct = true;
      for (int i = 0; i < arity && distinct; ++i)
        for (int j = i + 1; j < arity; ++j)
          if (t[i] == t[j]) {
            distinct = false;
            break;
          }
      if (distinct && coin(rng)) m.add_tuple(r, t);
      int i = arity - 1;
      while (i >= 0 && t[i] == n - 1) t[i--] = 0;
      if (i < 0) break;
      ++t[i];
    }
  }
  return m;
}

Permutation random_permutation(int n, std::mt19937& rng) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}
}  // namespace

TEST_CASE("signature invariants") {
  CHECK_THROWS_AS(Signature({{"E", 2}, {"E", 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Signature({{"E", 0}}), std::invalid_argument);
  Signature sig({{"R", 2}, {"S", 2}});
  CHECK(sig.uniform_arity() == 2);
  Signature mixed({{"R", 1}, {"S", 2}});
  CHECK(!mixed.uniform_arity().has_value());
  CHECK(mixed.arity_profile() == ArityProfile{{1, 1}, {2, 1}});
  Signature with_fn({{"R", 2}}, {{"f", 1}});
  CHECK(!with_fn.uniform_arity().has_value());
  CHECK(with_fn.max_arity() == 2);
}

TEST_CASE("qf type enumeration counts") {
  CHECK(enumerate_qf_types(graph_sig(), 2).size() == 4);
  CHECK(enumerate_qf_types(Signature::single_relation("E", 3), 3).size() == 64);
  CHECK(enumerate_qf_types(Signature({{"R", 2}, {"S", 2}}), 2).size() == 16);
  CHECK_THROWS_AS(enumerate_qf_types(Signature({{"R", 1}, {"S", 2}}), 2),
                  std::invalid_argument);
}

TEST_CASE("qf type canonical order for one binary relation") {
  auto types = enumerate_qf_types(graph_sig(), 2);
  // index 0: all false; index 1: E(x0,x1); index 2: E(x1,x0); index 3: both
  CHECK(!types[0].get(0, 0));
  CHECK(!types[0].get(0, 1));
  CHECK(types[1].get(0, 0));
  CHECK(!types[1].get(0, 1));
  CHECK(!types[2].get(0, 0));
  CHECK(types[2].get(0, 1));
  CHECK(types[3].get(0, 0));
  CHECK(types[3].get(0, 1));
}

TEST_CASE("qf types round-trip through their canonical index") {
  auto types = enumerate_qf_types(Signature({{"R", 2}, {"S", 2}}), 2);
  for (std::size_t i = 0; i < types.size(); ++i) {
    CHECK(types[i].index() == i);
    CHECK(QfType::from_index(2, 2, i) == types[i]);
  }
  // no duplicates
  for (std::size_t i = 0; i < types.size(); ++i)
    for (std::size_t j = i + 1; j < types.size(); ++j) CHECK(!(types[i] == types[j]));
}

TEST_CASE("sym action: identity, swap, and invariance of the complete type") {
  auto types = enumerate_qf_types(graph_sig(), 2);
  Permutation id = {0, 1};
  Permutation swap = {1, 0};
  for (const auto& u : types) CHECK(sym_act_type(id, u) == u);
  // swap maps E(x0,x1) to E(x1,x0)
  CHECK(sym_act_type(swap, types[1]) == types[2]);
  CHECK(sym_act_type(swap, types[2]) == types[1]);
  // the complete and empty types are fixed by every permutation
  for (int k = 2; k <= 3; ++k) {
    QfType top = QfType::complete(k, 1);
    QfType bot = QfType::empty(k, 1);
    for (const auto& sigma : all_permutations(k)) {
      CHECK(sym_act_type(sigma, top) == top);
      CHECK(sym_act_type(sigma, bot) == bot);
    }
  }
}

TEST_CASE("sym action satisfies the group law") {
  std::mt19937 rng(11);
  for (int k = 2; k <= 3; ++k) {
    auto perms = all_permutations(k);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    int bits = k == 2 ? 2 : 6;
    std::uniform_int_distribution<std::uint64_t> pick_type(0, (1u << bits) - 1);
    for (int trial = 0; trial < 100; ++trial) {
      const auto& sigma = perms[pick(rng)];
      const auto& pi = perms[pick(rng)];
      QfType u = QfType::from_index(k, 1, pick_type(rng));
      CHECK(sym_act_type(compose(sigma, pi), u) ==
            sym_act_type(sigma, sym_act_type(pi, u)));
    }
  }
}

TEST_CASE("index-level sym action agrees with the type-level one") {
  auto perms = all_permutations(3);
  for (std::uint64_t idx = 0; idx < 64; idx += 7) {
    QfType u = QfType::from_index(3, 1, idx);
    for (const auto& sigma : perms)
      CHECK(sym_act_type_index(sigma, idx, 3, 1, perms) ==
            sym_act_type(sigma, u).index());
  }
}

TEST_CASE("structures reject malformed tuples") {
  FiniteStructure m(graph_sig(), 3);
  CHECK_THROWS_AS(m.add_tuple(0, {0, 0}), std::invalid_argument);  // repeated entries
  CHECK_THROWS_AS(m.add_tuple(0, {0, 3}), std::invalid_argument);  // out of range
  CHECK_THROWS_AS(m.add_tuple(0, {0}), std::invalid_argument);     // wrong arity
  RedundantStructure r(graph_sig(), 3);
  r.add_tuple(0, {0, 0});  // loops allowed here
  CHECK(!r.is_non_redundant());
}

TEST_CASE("logic action: identity, relabeling, orbit of the 2-cycle") {
  FiniteStructure m(graph_sig(), 2);
  m.add_tuple(0, {0, 1});
  CHECK(logic_act({0, 1}, m) == m);
  FiniteStructure swapped = logic_act({1, 0}, m);
  CHECK(swapped.holds(0, {1, 0}));
  CHECK(!swapped.holds(0, {0, 1}));

  // the directed 2-cycle is fixed by both permutations of [2]
  FiniteStructure cycle(graph_sig(), 2);
  cycle.add_tuple(0, {0, 1});
  cycle.add_tuple(0, {1, 0});
  std::set<FiniteStructure> orbit;
  orbit.insert(logic_act({0, 1}, cycle));
  orbit.insert(logic_act({1, 0}, cycle));
  CHECK(orbit.size() == 1);
}

TEST_CASE("logic action is a group action on random structures") {
  std::mt19937 rng(23);
  Signature sig({{"R", 2}, {"S", 1}});
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + trial % 4;
    FiniteStructure m = random_structure(sig, n, rng);
    Permutation a = random_permutation(n, rng);
    Permutation b = random_permutation(n, rng);
    Permutation id(n);
    std::iota(id.begin(), id.end(), 0);
    CHECK(logic_act(id, m) == m);
    CHECK(logic_act(a, logic_act(b, m)) == logic_act(compose(a, b), m));
  }
}

TEST_CASE("qf_type_of reads off atomic truth") {
  FiniteStructure empty(graph_sig(), 4);
  CHECK(qf_type_of(empty, {1, 3}) == QfType::empty(2, 1));

  FiniteStructure complete(Signature::single_relation("E", 2), 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a != b) complete.add_tuple(0, {a, b});
  CHECK(qf_type_of(complete, {0, 2}) == QfType::complete(2, 1));

  FiniteStructure one_edge(graph_sig(), 2);
  one_edge.add_tuple(0, {1, 0});
  QfType u = qf_type_of(one_edge, {0, 1});
  CHECK(!u.get(0, 0));  // E(x0,x1) absent
  CHECK(u.get(0, 1));   // E(x1,x0) present
}

TEST_CASE("type of a relabeled structure is the acted type") {
  // brute force over n <= 5, k <= 3
  std::mt19937 rng(5);
  for (int k = 2; k <= 3; ++k) {
    Signature sig = Signature::single_relation("E", k);
    for (int n = k; n <= 5; ++n) {
      FiniteStructure m = random_structure(sig, n, rng);
      for (int trial = 0; trial < 20; ++trial) {
        Permutation sigma = random_permutation(n, rng);
        FiniteStructure acted = logic_act(sigma, m);
        for (const Subset& j : subsets_of_size(n, k)) {
          Subset sj;
          for (int v : j) sj.push_back(sigma[v]);
          std::sort(sj.begin(), sj.end());
          // rho = tau_{sigma(J)}^{-1} o sigma o tau_J
          auto tau_j = increasing_enumeration(j);
          auto tau_sj = increasing_enumeration(sj);
          Permutation rho(k);
          for (int i = 0; i < k; ++i) {
            int image = sigma[tau_j[i]];
            rho[i] = static_cast<int>(
                std::find(tau_sj.begin(), tau_sj.end(), image) - tau_sj.begin());
          }
          CHECK(qf_type_of(acted, sj) == sym_act_type(rho, qf_type_of(m, j)));
        }
      }
    }
  }
}

TEST_CASE("restriction keeps inner tuples only") {
  FiniteStructure m(graph_sig(), 4);
  m.add_tuple(0, {0, 1});
  m.add_tuple(0, {1, 3});
  FiniteStructure r = m.restrict_to(2);
  CHECK(r.n() == 2);
  CHECK(r.holds(0, {0, 1}));
  CHECK(r.tuples(0).size() == 1);
}

TEST_CASE("functions: totality, selectors, relabeling") {
  Signature sig({{"R", 1}}, {{"f", 2}});
  FiniteStructure m(sig, 2);
  CHECK(!m.functions_total());
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) m.set_function_value(0, {a, b}, std::min(a, b));
  CHECK(m.functions_total());
  CHECK(m.functions_are_selectors());
  m.set_function_value(0, {0, 1}, 1);  // still a selector (max)
  CHECK(m.functions_are_selectors());

  FiniteStructure swapped = logic_act({1, 0}, m);
  // f(x,y) = min under relabeling 0<->1: f'(1,0) = 1 - f(0,1)
  CHECK(swapped.function_value(0, {1, 0}) == 1 - m.function_value(0, {0, 1}));
}
