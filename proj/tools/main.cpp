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

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "hygent/blowup.hpp"
#include "hygent/entropy.hpp"
#include "hygent/interdef.hpp"
#include "hygent/json_io.hpp"
#include "hygent/rado.hpp"
#include "hygent/sampler.hpp"

namespace {

constexpr const char* kVersion = "hygent 0.1.0";

using namespace hygent;

ArityProfile parse_profile(const std::string& text) {
  // "2:1" or "1:2,2:1"
  ArityProfile profile;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("profile: expected 'arity:count' items");
    int arity = std::stoi(item.substr(0, colon));
    int count = std::stoi(item.substr(colon + 1));
    profile[arity] += count;
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (profile.empty()) throw std::invalid_argument("profile: empty");
  return profile;
}

/// Reconstructs the source signature of a function elimination from the
/// marker names f#0..f#(l-1) in the target signature.
Signature infer_function_elim_source(const Signature& target) {
  std::vector<RelationSymbol> rels;
  std::map<std::string, int> arity_of;
  std::map<std::string, int> markers;
  for (const auto& r : target.relations()) {
    auto hash = r.name.rfind('#');
    if (hash == std::string::npos) {
      rels.push_back(r);
      continue;
    }
    std::string base = r.name.substr(0, hash);
    arity_of[base] = r.arity;
    ++markers[base];
  }
  std::vector<FunctionSymbol> fns;
  for (const auto& [name, count] : markers) {
    if (count != arity_of[name])
      throw std::invalid_argument("cannot invert: incomplete marker family for '" +
                                  name + "'");
    fns.push_back({name, arity_of[name]});
  }
  return Signature(std::move(rels), std::move(fns));
}

/// Reconstructs the source signature of a redundancy elimination from the
/// partition-suffixed names R#rgs in the target signature.
Signature infer_redundancy_source(const Signature& target) {
  std::map<std::string, int> base_arity;
  for (const auto& r : target.relations()) {
    auto hash = r.name.rfind('#');
    if (hash == std::string::npos)
      throw std::invalid_argument("cannot invert: '" + r.name +
                                  "' lacks a partition suffix");
    std::string base = r.name.substr(0, hash);
    int k = static_cast<int>(r.name.size() - hash - 1);
    auto [it, inserted] = base_arity.try_emplace(base, k);
    if (!inserted && it->second != k)
      throw std::invalid_argument("cannot invert: inconsistent arity for '" + base + "'");
  }
  std::vector<RelationSymbol> rels;
  for (const auto& [name, k] : base_arity) rels.push_back({name, k});
  return Signature(std::move(rels));
}

int run(int argc, char** argv) {
  CLI::App app{"Sampling and entropy analysis of exchangeable random structures"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "worker threads for Monte Carlo estimators")
      ->check(CLI::PositiveNumber);

  // --- sample ---
  auto* sample_cmd = app.add_subcommand("sample", "draw a structure from a hypergraphon");
  std::string sample_w, sample_out;
  int sample_n = 0;
  std::uint64_t sample_seed = 0;
  sample_cmd->add_option("--hypergraphon", sample_w)->required();
  sample_cmd->add_option("--n", sample_n)->required();
  sample_cmd->add_option("--seed", sample_seed)->required();
  sample_cmd->add_option("--out", sample_out);

  // --- entropy ---
  auto* entropy_cmd = app.add_subcommand("entropy", "entropy of the sampled distribution");
  std::string entropy_w, entropy_method = "exact", entropy_csv;
  int entropy_n = 0;
  std::uint64_t entropy_samples = 10'000, entropy_seed = 0;
  std::uint64_t entropy_budget = kDefaultExactBudget;
  entropy_cmd->add_option("--hypergraphon", entropy_w)->required();
  entropy_cmd->add_option("--n", entropy_n)->required();
  entropy_cmd->add_option("--method", entropy_method)
      ->check(CLI::IsMember({"exact", "mc"}));
  entropy_cmd->add_option("--samples", entropy_samples);
  entropy_cmd->add_option("--seed", entropy_seed);
  entropy_cmd->add_option("--budget", entropy_budget);
  entropy_cmd->add_option("--csv", entropy_csv,
                          "write the entropy curve for k..n to this file");

  // --- uniform-entropy ---
  auto* uniform_cmd =
      app.add_subcommand("uniform-entropy", "entropy of the uniform non-redundant measure");
  std::string uniform_profile;
  int uniform_n = 0;
  uniform_cmd->add_option("--profile", uniform_profile, "arity:count[,arity:count...]")
      ->required();
  uniform_cmd->add_option("--n", uniform_n)->required();

  // --- rado ---
  auto* rado_cmd = app.add_subcommand("rado", "emit the explicit generations");
  int rado_k = 2, rado_gens = -1;
  std::string rado_out;
  rado_cmd->add_option("--k", rado_k)->required();
  rado_cmd->add_option("--gens", rado_gens);
  rado_cmd->add_option("--out", rado_out);

  // --- blowup-schedule ---
  auto* sched_cmd = app.add_subcommand("blowup-schedule", "build the generation weights");
  int sched_k = 2, sched_rmax = 4;
  std::string sched_gamma, sched_out;
  sched_cmd->add_option("--k", sched_k)->required();
  sched_cmd->add_option("--gamma", sched_gamma, "csv with n,gamma rows (zero beyond)");
  sched_cmd->add_option("--rmax", sched_rmax)->required();
  sched_cmd->add_option("--out", sched_out);

  // --- blowup-sample ---
  auto* bsample_cmd = app.add_subcommand("blowup-sample", "sample from a blown-up structure");
  std::string bsample_sched, bsample_out;
  int bsample_n = 0, bsample_gens = -1;
  std::uint64_t bsample_seed = 0;
  bsample_cmd->add_option("--sched", bsample_sched)->required();
  bsample_cmd->add_option("--n", bsample_n)->required();
  bsample_cmd->add_option("--seed", bsample_seed)->required();
  bsample_cmd->add_option("--gens", bsample_gens, "explicit generations to materialize");
  bsample_cmd->add_option("--out", bsample_out);

  // --- interdef ---
  auto* interdef_cmd = app.add_subcommand("interdef", "translate structures between languages");
  std::string interdef_kind, interdef_in, interdef_out;
  bool interdef_inverse = false;
  interdef_cmd->add_option("--kind", interdef_kind)
      ->check(CLI::IsMember({"functions", "redundancy"}))
      ->required();
  interdef_cmd->add_option("--in", interdef_in)->required();
  interdef_cmd->add_option("--out", interdef_out)->required();
  interdef_cmd->add_flag("--inverse", interdef_inverse);

  // --- validate ---
  auto* validate_cmd = app.add_subcommand("validate", "check hypergraphon coherence");
  std::string validate_w;
  validate_cmd->add_option("--hypergraphon", validate_w)->required();

  CLI11_PARSE(app, argc, argv);

  if (sample_cmd->parsed()) {
    auto w = hypergraphon_from_json(load_json_file(sample_w));
    auto violations = w.validate();
    if (!violations.empty())
      throw std::invalid_argument("hypergraphon is incoherent; run `validate` for details");
    FiniteStructure m = sample_structure(w, sample_n, sample_seed);
    Json j = structure_to_json(m);
    if (sample_out.empty()) std::cout << to_json_text(j);
    else save_json_file(sample_out, j);
    return 0;
  }

  if (entropy_cmd->parsed()) {
    auto w = hypergraphon_from_json(load_json_file(entropy_w));
    double h;
    if (entropy_method == "exact") {
      h = exact_entropy(w, entropy_n, entropy_budget, threads);
    } else {
      McEntropy mc = mc_entropy(w, entropy_n, entropy_samples, entropy_seed, threads);
      h = mc.estimate_bits;
    }
    std::cout << format_double(h) << "\n";
    if (!entropy_csv.empty()) {
      EntropyCurve curve = entropy_curve(
          w, entropy_n,
          entropy_method == "exact" ? EntropyMethod::Exact : EntropyMethod::MonteCarlo,
          entropy_samples, entropy_seed, entropy_budget);
      std::ofstream out(entropy_csv);
      if (!out) throw std::invalid_argument("cannot open '" + entropy_csv + "'");
      out << "n,h_bits,method,stderr\n";
      for (const auto& pt : curve.points)
        out << pt.n << "," << format_double(pt.h_bits) << "," << pt.method << ","
            << format_double(pt.stderr_bits) << "\n";
    }
    return 0;
  }

  if (uniform_cmd->parsed()) {
    std::cout << uniform_nr_entropy(parse_profile(uniform_profile), uniform_n).str()
              << "\n";
    return 0;
  }

  if (rado_cmd->parsed()) {
    RadoHypergraph rado(rado_k, rado_gens);
    Json j = rado_to_json(rado);
    if (rado_out.empty()) std::cout << to_json_text(j);
    else save_json_file(rado_out, j);
    return 0;
  }

  if (sched_cmd->parsed()) {
    GammaTable gamma = GammaTable::zero();
    if (!sched_gamma.empty()) {
      std::ifstream in(sched_gamma);
      if (!in) throw std::invalid_argument("cannot open '" + sched_gamma + "'");
      gamma = gamma_table_from_csv(in);
    }
    BlowupSchedule sched = build_schedule(gamma, sched_k, sched_rmax);
    Json j = schedule_to_json(sched);
    if (sched_out.empty()) std::cout << to_json_text(j);
    else save_json_file(sched_out, j);
    return 0;
  }

  if (bsample_cmd->parsed()) {
    BlowupSchedule sched = schedule_from_json(load_json_file(bsample_sched));
    RadoHypergraph rado(sched.k, bsample_gens);
    FiniteStructure m = sample_blowup(sched, rado, bsample_n, bsample_seed);
    Json j = structure_to_json(m);
    if (bsample_out.empty()) std::cout << to_json_text(j);
    else save_json_file(bsample_out, j);
    return 0;
  }

  if (interdef_cmd->parsed()) {
    Json in = load_json_file(interdef_in);
    Json out;
    if (interdef_kind == "functions") {
      if (!interdef_inverse) {
        FiniteStructure m = structure_from_json(in);
        FunctionEliminator elim(m.signature());
        out = structure_to_json(elim.forward(m));
      } else {
        RedundantStructure n = redundant_structure_from_json(in);
        FunctionEliminator elim(infer_function_elim_source(n.signature()));
        out = structure_to_json(elim.backward(n));
      }
    } else {
      if (!interdef_inverse) {
        RedundantStructure m = redundant_structure_from_json(in);
        RedundancyEliminator elim(m.signature());
        out = structure_to_json(elim.forward(m));
      } else {
        FiniteStructure n = structure_from_json(in);
        RedundancyEliminator elim(infer_redundancy_source(n.signature()));
        out = structure_to_json(elim.backward(n));
      }
    }
    save_json_file(interdef_out, out);
    return 0;
  }

  if (validate_cmd->parsed()) {
    auto w = hypergraphon_from_json(load_json_file(validate_w));
    auto violations = w.validate();
    if (violations.empty()) {
      std::cout << "ok\n";
      return 0;
    }
    std::cerr << violations.size() << " coherence violation(s):\n";
    for (const auto& v : violations) std::cerr << "  " << v.describe() << "\n";
    return 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hygent::resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
