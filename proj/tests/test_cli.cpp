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

#include <nlohmann/json.hpp>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hygent/entropy.hpp"
#include "hygent/json_io.hpp"
#include "hygent/sampler.hpp"

using namespace hygent;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(HYGENT_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buffer;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buffer.data(), buffer.size(), pipe)) out += buffer.data();
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path temp_dir() {
  fs::path dir = fs::temp_directory_path() / "hygent_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

TEST_CASE("version flag") {
  RunResult r = run_cli("--version");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("hygent") != std::string::npos);
}

TEST_CASE("uniform-entropy evaluates the formula") {
  RunResult r = run_cli("uniform-entropy --profile 2:1 --n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "6\n");
  RunResult mixed = run_cli("uniform-entropy --profile 1:2,2:1 --n 2");
  CHECK(mixed.out == "6\n");
  RunResult big = run_cli("uniform-entropy --profile 5:2 --n 30");
  CHECK(big.exit_code == 0);
  CHECK(big.out == (binomial(BigInt(30), 5) * 120 * 2).str() + "\n");
}

TEST_CASE("entropy subcommand on the density-1/2 graph") {
  fs::path dir = temp_dir();
  fs::path er_path = dir / "er.json";
  save_json_file(er_path.string(),
                 hypergraphon_to_json(make_er(Signature::single_relation("E", 2), 2)));

  RunResult r = run_cli("entropy --hypergraphon " + er_path.string() +
                        " --n 4 --method exact");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "6\n");

  fs::path csv_path = dir / "curve.csv";
  RunResult curve = run_cli("entropy --hypergraphon " + er_path.string() +
                            " --n 5 --method exact --csv " + csv_path.string());
  CHECK(curve.exit_code == 0);
  std::string csv = slurp(csv_path);
  CHECK(csv.find("n,h_bits,method,stderr") == 0);
  CHECK(csv.find("3,3,exact,0") != std::string::npos);
  CHECK(csv.find("5,10,exact,0") != std::string::npos);

  RunResult mc = run_cli("entropy --hypergraphon " + er_path.string() +
                         " --n 3 --method mc --samples 2000 --seed 11");
  CHECK(mc.exit_code == 0);
  double est = std::stod(mc.out);
  CHECK(est > 2.5);
  CHECK(est < 3.5);
}

TEST_CASE("entropy budget overruns exit with code 2") {
  fs::path dir = temp_dir();
  fs::path tri_path = dir / "tri.json";
  save_json_file(tri_path.string(), hypergraphon_to_json(make_triangle()));
  RunResult r = run_cli("entropy --hypergraphon " + tri_path.string() +
                        " --n 12 --method exact");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("resource limit") != std::string::npos);
}

TEST_CASE("sample subcommand is deterministic and projective") {
  fs::path dir = temp_dir();
  fs::path er_path = dir / "er2.json";
  save_json_file(er_path.string(),
                 hypergraphon_to_json(make_er(Signature::single_relation("E", 2), 2)));
  fs::path out1 = dir / "s1.json";
  fs::path out2 = dir / "s2.json";
  RunResult r1 = run_cli("sample --hypergraphon " + er_path.string() +
                         " --n 20 --seed 42 --out " + out1.string());
  RunResult r2 = run_cli("sample --hypergraphon " + er_path.string() +
                         " --n 20 --seed 42 --out " + out2.string());
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);
  CHECK(slurp(out1) == slurp(out2));  // byte-identical across runs

  FiniteStructure m = structure_from_json(load_json_file(out1.string()));
  CHECK(m.n() == 20);
  CHECK(m == sample_structure(make_er(Signature::single_relation("E", 2), 2), 20, 42));
}

TEST_CASE("validate reports coherence violations") {
  fs::path dir = temp_dir();
  // build an incoherent table by hand
  std::uint64_t top = QfType::complete(2, 1).index();
  std::vector<TypeDistribution> table;
  for (std::size_t flat = 0; flat < 8; ++flat)
    table.push_back(TypeDistribution::point_mass(flat == 2 ? top : 0));
  StepHypergraphon bad(Signature::single_relation("E", 2), 2, Grid::uniform(2), table);
  fs::path bad_path = dir / "bad.json";
  save_json_file(bad_path.string(), hypergraphon_to_json(bad));

  RunResult r = run_cli("validate --hypergraphon " + bad_path.string());
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("violation") != std::string::npos);
  CHECK(r.out.find("sigma=(1 0)") != std::string::npos);

  fs::path good_path = dir / "good.json";
  save_json_file(good_path.string(),
                 hypergraphon_to_json(make_er(Signature::single_relation("E", 2), 2)));
  RunResult ok = run_cli("validate --hypergraphon " + good_path.string());
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == "ok\n");

  // sampling from an incoherent table is refused
  RunResult refuse = run_cli("sample --hypergraphon " + bad_path.string() +
                             " --n 5 --seed 1");
  CHECK(refuse.exit_code == 1);
}

TEST_CASE("rado subcommand emits the explicit generations") {
  RunResult r = run_cli("rado --k 2 --gens 2");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("k") == 2);
  CHECK(j.at("generations").size() == 3);
  CHECK(j.at("generations")[2].at("size") == "8");
  CHECK(j.at("generations")[2].at("vertices").size() == 8);
}

TEST_CASE("blowup schedule and sampling round trip through files") {
  fs::path dir = temp_dir();
  fs::path gamma_path = dir / "gamma.csv";
  {
    std::ofstream gamma(gamma_path);
    gamma << "n,gamma\n";
    for (int n = 0; n <= 25; ++n) gamma << n << ",1/" << (1LL << n) << "\n";
  }
  fs::path sched_path = dir / "sched.json";
  RunResult r = run_cli("blowup-schedule --k 2 --gamma " + gamma_path.string() +
                        " --rmax 4 --out " + sched_path.string());
  CHECK(r.exit_code == 0);
  BlowupSchedule sched = schedule_from_json(load_json_file(sched_path.string()));
  CHECK(sched.g == std::vector<long long>{32, 64, 128, 256});
  CHECK(sched.alpha[0] == Rat(1, 64));
  CHECK(sched.total_mass() == Rat(15, 16));

  fs::path sample_path = dir / "blow.json";
  RunResult s = run_cli("blowup-sample --sched " + sched_path.string() +
                        " --n 12 --seed 9 --out " + sample_path.string());
  CHECK(s.exit_code == 0);
  FiniteStructure m = structure_from_json(load_json_file(sample_path.string()));
  CHECK(m.n() == 12);
  RadoHypergraph rado(2);
  CHECK(m == sample_blowup(sched, rado, 12, 9));
}

TEST_CASE("interdef subcommand round trips through files") {
  fs::path dir = temp_dir();
  Signature sig({{"R", 2}}, {{"f", 2}});
  FiniteStructure m(sig, 2);
  m.add_tuple(0, {0, 1});
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) m.set_function_value(0, {a, b}, std::max(a, b));
  fs::path in_path = dir / "m.json";
  save_json_file(in_path.string(), structure_to_json(m));

  fs::path fwd_path = dir / "fwd.json";
  RunResult fwd = run_cli("interdef --kind functions --in " + in_path.string() +
                          " --out " + fwd_path.string());
  CHECK(fwd.exit_code == 0);

  fs::path back_path = dir / "back.json";
  RunResult back = run_cli("interdef --kind functions --inverse --in " +
                           fwd_path.string() + " --out " + back_path.string());
  CHECK(back.exit_code == 0);
  CHECK(structure_from_json(load_json_file(back_path.string())) == m);

  // redundancy elimination the same way
  RedundantStructure r(Signature({{"R", 2}}), 2);
  r.add_tuple(0, {0, 0});
  r.add_tuple(0, {1, 0});
  fs::path rin = dir / "r.json";
  save_json_file(rin.string(), structure_to_json(r));
  fs::path rfwd = dir / "rfwd.json";
  CHECK(run_cli("interdef --kind redundancy --in " + rin.string() + " --out " +
                rfwd.string())
            .exit_code == 0);
  fs::path rback = dir / "rback.json";
  CHECK(run_cli("interdef --kind redundancy --inverse --in " + rfwd.string() +
                " --out " + rback.string())
            .exit_code == 0);
  CHECK(redundant_structure_from_json(load_json_file(rback.string())) == r);
}

TEST_CASE("monte carlo output is independent of the thread count") {
  fs::path dir = temp_dir();
  fs::path er_path = dir / "er_threads.json";
  save_json_file(er_path.string(),
                 hypergraphon_to_json(make_er(Signature::single_relation("E", 2), 2)));
  std::string base = "entropy --hypergraphon " + er_path.string() +
                     " --n 3 --method mc --samples 4000 --seed 21";
  RunResult one = run_cli("--threads 1 " + base);
  RunResult four = run_cli("--threads 4 " + base);
  CHECK(one.exit_code == 0);
  CHECK(four.exit_code == 0);
  CHECK(one.out == four.out);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_cli("entropy --n 3").exit_code != 0);
  CHECK(run_cli("nonsense").exit_code != 0);
  CHECK(run_cli("uniform-entropy --profile nope --n 3").exit_code == 1);
}
