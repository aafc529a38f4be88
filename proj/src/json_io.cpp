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

#include "hygent/json_io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace hygent {

namespace {

std::int64_t to_int64_checked(const BigInt& v, const char* what) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max())
    throw std::invalid_argument(std::string(what) + ": value does not fit in 64 bits");
  return v.convert_to<std::int64_t>();
}

Json rat_to_json(const Rat& r) {
  return Json::array({to_int64_checked(numerator(r), "rational numerator"),
                      to_int64_checked(denominator(r), "rational denominator")});
}

Rat rat_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("expected [numerator, denominator]");
  std::int64_t num = j[0].get<std::int64_t>();
  std::int64_t den = j[1].get<std::int64_t>();
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rat(num, den);
}

Tuple tuple_from_json(const Json& j) {
  Tuple t;
  for (const auto& v : j) t.push_back(v.get<int>());
  return t;
}

template <class StructureT>
void fill_relations_from_json(const Json& j, StructureT& m) {
  if (!j.contains("relations")) return;
  for (const auto& [name, tuples] : j.at("relations").items()) {
    int rel = m.signature().relation_index(name);
    if (rel < 0) throw std::invalid_argument("relations: unknown symbol '" + name + "'");
    for (const auto& t : tuples) m.add_tuple(rel, tuple_from_json(t));
  }
}

template <class StructureT>
Json relations_to_json(const StructureT& m) {
  Json rels = Json::object();
  for (int r = 0; r < m.signature().relation_count(); ++r) {
    Json list = Json::array();
    for (const Tuple& t : m.tuples(r)) list.push_back(t);  // std::set: lex sorted
    rels[m.signature().relations()[r].name] = std::move(list);
  }
  return rels;
}

}  // namespace

Json signature_to_json(const Signature& sig) {
  Json rels = Json::array();
  for (const auto& r : sig.relations())
    rels.push_back(Json{{"name", r.name}, {"arity", r.arity}});
  return rels;
}

Signature signature_from_json(const Json& j) {
  std::vector<RelationSymbol> rels;
  for (const auto& r : j)
    rels.push_back({r.at("name").get<std::string>(), r.at("arity").get<int>()});
  return Signature(std::move(rels));
}

Json structure_to_json(const FiniteStructure& m) {
  Json j;
  j["signature"] = signature_to_json(m.signature());
  j["n"] = m.n();
  j["relations"] = relations_to_json(m);
  if (m.signature().function_count() > 0) {
    Json fns = Json::object();
    for (int f = 0; f < m.signature().function_count(); ++f) {
      Json table = Json::array();
      for (const auto& [args, value] : m.function_table(f)) {
        Json row = Json::array();
        for (int a : args) row.push_back(a);
        row.push_back(value);
        table.push_back(std::move(row));
      }
      fns[m.signature().functions()[f].name] =
          Json{{"arity", m.signature().functions()[f].arity}, {"table", table}};
    }
    j["functions"] = std::move(fns);
  }
  return j;
}

FiniteStructure structure_from_json(const Json& j) {
  Signature sig = signature_from_json(j.at("signature"));
  if (j.contains("functions")) {
    std::vector<FunctionSymbol> fns;
    for (const auto& [name, spec] : j.at("functions").items())
      fns.push_back({name, spec.at("arity").get<int>()});
    sig = Signature(sig.relations(), std::move(fns));
  }
  FiniteStructure m(sig, j.at("n").get<int>());
  fill_relations_from_json(j, m);
  if (j.contains("functions")) {
    for (const auto& [name, spec] : j.at("functions").items()) {
      int f = m.signature().function_index(name);
      for (const auto& row : spec.at("table")) {
        Tuple all = tuple_from_json(row);
        if (all.empty()) throw std::invalid_argument("function table row is empty");
        int value = all.back();
        all.pop_back();
        m.set_function_value(f, all, value);
      }
    }
    if (!m.functions_total())
      throw std::invalid_argument("functions: table is not total");
  }
  return m;
}

Json structure_to_json(const RedundantStructure& m) {
  Json j;
  j["signature"] = signature_to_json(m.signature());
  j["n"] = m.n();
  j["relations"] = relations_to_json(m);
  j["redundant"] = true;
  return j;
}

RedundantStructure redundant_structure_from_json(const Json& j) {
  Signature sig = signature_from_json(j.at("signature"));
  RedundantStructure m(sig, j.at("n").get<int>());
  fill_relations_from_json(j, m);
  return m;
}

Json hypergraphon_to_json(const StepHypergraphon& w) {
  Json j;
  j["k"] = w.k();
  j["signature"] = signature_to_json(w.signature());
  Json grid = Json::array();
  for (const Rat& wt : w.grid().weights()) grid.push_back(rat_to_json(wt));
  j["grid"] = std::move(grid);
  Json table = Json::array();
  for (std::size_t flat = 0; flat < w.table().size(); ++flat) {
    Json entry;
    entry["cells"] = w.cells_of_flat(flat);
    Json dist = Json::array();
    for (const auto& [idx, weight] : w.table()[flat].entries())
      dist.push_back(Json::array({idx, to_int64_checked(numerator(weight), "weight"),
                                  to_int64_checked(denominator(weight), "weight")}));
    entry["dist"] = std::move(dist);
    table.push_back(std::move(entry));
  }
  j["table"] = std::move(table);
  return j;
}

StepHypergraphon hypergraphon_from_json(const Json& j) {
  int k = j.at("k").get<int>();
  Signature sig = signature_from_json(j.at("signature"));
  std::vector<Rat> weights;
  for (const auto& w : j.at("grid")) weights.push_back(rat_from_json(w));
  Grid grid(std::move(weights));

  auto coords = shortlex_below(k, k);
  std::size_t want = 1;
  for (std::size_t i = 0; i < coords.size(); ++i) want *= grid.size();
  std::vector<TypeDistribution> table(want);
  std::vector<bool> seen(want, false);
  for (const auto& entry : j.at("table")) {
    auto cells = entry.at("cells").get<std::vector<int>>();
    if (cells.size() != coords.size())
      throw std::invalid_argument("table entry: wrong number of cell coordinates");
    std::size_t flat = 0, stride = 1;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i] < 0 || cells[i] >= grid.size())
        throw std::invalid_argument("table entry: cell out of range");
      flat += static_cast<std::size_t>(cells[i]) * stride;
      stride *= grid.size();
    }
    if (seen[flat]) throw std::invalid_argument("table entry: duplicate cell vector");
    seen[flat] = true;
    std::vector<std::pair<std::uint64_t, Rat>> entries;
    for (const auto& d : entry.at("dist")) {
      if (!d.is_array() || d.size() != 3)
        throw std::invalid_argument("dist entry: expected [type_index, num, den]");
      entries.emplace_back(d[0].get<std::uint64_t>(),
                           Rat(d[1].get<std::int64_t>(), d[2].get<std::int64_t>()));
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    table[flat] = TypeDistribution(std::move(entries));
  }
  for (std::size_t flat = 0; flat < want; ++flat)
    if (!seen[flat])
      throw std::invalid_argument("hypergraphon table: missing cell vector (no defaults)");
  return StepHypergraphon(sig, k, grid, std::move(table));
}

Json schedule_to_json(const BlowupSchedule& sched) {
  Json j;
  j["k"] = sched.k;
  j["r_max"] = sched.r_max;
  j["g"] = sched.g;
  Json alpha = Json::array();
  for (const Rat& a : sched.alpha) alpha.push_back(rat_to_json(a));
  j["alpha"] = std::move(alpha);
  Json ranges = Json::array();
  for (const auto& [lo, hi] : sched.gen_ranges)
    ranges.push_back(Json::array({lo, hi}));
  j["gen_ranges"] = std::move(ranges);
  Json gamma = Json::array();
  for (const auto& [n, value] : sched.gamma.entries)
    gamma.push_back(Json::array({n, to_int64_checked(numerator(value), "gamma"),
                                 to_int64_checked(denominator(value), "gamma")}));
  j["gamma"] = std::move(gamma);
  return j;
}

BlowupSchedule schedule_from_json(const Json& j) {
  BlowupSchedule sched;
  sched.k = j.at("k").get<int>();
  sched.r_max = j.at("r_max").get<int>();
  sched.g = j.at("g").get<std::vector<long long>>();
  for (const auto& a : j.at("alpha")) sched.alpha.push_back(rat_from_json(a));
  for (const auto& r : j.at("gen_ranges"))
    sched.gen_ranges.emplace_back(r[0].get<long long>(), r[1].get<long long>());
  if (j.contains("gamma")) {
    std::vector<std::pair<long long, Rat>> pairs;
    for (const auto& g : j.at("gamma"))
      pairs.emplace_back(g[0].get<long long>(),
                         Rat(g[1].get<std::int64_t>(), g[2].get<std::int64_t>()));
    sched.gamma = GammaTable::from_pairs(std::move(pairs));
  }
  if (sched.g.size() != sched.alpha.size() ||
      sched.g.size() != sched.gen_ranges.size() ||
      sched.g.size() != static_cast<std::size_t>(sched.r_max))
    throw std::invalid_argument("schedule: inconsistent block data");
  return sched;
}

Json rado_to_json(const RadoHypergraph& rado) {
  Json j;
  j["k"] = rado.k();
  j["explicit_gens"] = rado.explicit_gens();
  Json gens = Json::array();
  for (int ell = 0; ell <= rado.explicit_gens(); ++ell) {
    Json gen;
    gen["generation"] = ell;
    gen["size"] = rado.generation_size(ell).str();
    Json vertices = Json::array();
    int count = rado.generation_size(ell).convert_to<int>();
    for (int i = 0; i < count; ++i) {
      RadoVertex v{ell, BigInt(i)};
      Json vj;
      vj["id"] = rado.global_id(v);
      vj["index"] = BigInt(i).str();
      Json joined = Json::array();
      for (const Subset& s : rado.explicit_subsets(v)) joined.push_back(s);
      vj["joined"] = std::move(joined);
      vertices.push_back(std::move(vj));
    }
    gen["vertices"] = std::move(vertices);
    gens.push_back(std::move(gen));
  }
  j["generations"] = std::move(gens);
  return j;
}

GammaTable gamma_table_from_csv(std::istream& in) {
  std::vector<std::pair<long long, Rat>> pairs;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("gamma csv: expected 'n,gamma' rows");
    std::string head = line.substr(0, comma);
    std::string tail = line.substr(comma + 1);
    if (first && head == "n") {  // optional header
      first = false;
      continue;
    }
    first = false;
    pairs.emplace_back(std::stoll(head), parse_rational(tail));
  }
  return GammaTable::from_pairs(std::move(pairs));
}

std::string to_json_text(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
  out << to_json_text(j);
}

std::string format_double(double x) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, p);
}

}  // namespace hygent
