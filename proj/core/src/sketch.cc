// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vsketch/sketch.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"
#include "vsketch/error.h"
#include "vsketch/numeric.h"

namespace vsketch {

using json = nlohmann::json;

GridParams GridParams::ForN(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidParams, "grid needs n >= 1");
  GridParams grid;
  int root = 1;
  while (static_cast<long long>(root) * root < n) ++root;
  for (long long k = root; k < n; k *= 2) {
    grid.k_grid.push_back(static_cast<int>(k));
  }
  grid.k_grid.push_back(n);
  const int top = CeilLog2(static_cast<long long>(n) * n);
  for (int t = 0; t <= top; ++t) grid.r_grid.push_back(std::ldexp(1.0, t));
  return grid;
}

double EvaluateGroup(const Sketch& sketch, const SketchGroup& group,
                     const Bundle& s) {
  double best = 0.0;
  const Bundle inside = s & group.members;
  if (inside.Empty()) return 0.0;
  for (int j : inside.Items()) {
    best = std::max(best, sketch.singleton_values[j]);
  }
  for (const SketchFamily& family : group.families) {
    const double unit = group.UnitWeight(family.r);
    for (const Bundle& member : family.members) {
      best = std::max(best, member.IntersectionCount(inside) * unit);
    }
  }
  return best;
}

double Evaluate(const Sketch& sketch, const Bundle& s) {
  if (s.n() != sketch.n) {
    throw Error(ErrorCode::kMalformedBundle,
                "bundle over " + std::to_string(s.n()) +
                    " items evaluated on a sketch over " +
                    std::to_string(sketch.n));
  }
  double best = 0.0;
  for (const SketchGroup& group : sketch.groups) {
    best = std::max(best, EvaluateGroup(sketch, group, s));
  }
  return best;
}

long long ReferenceCount(const SketchGroup& group) {
  long long total = 0;
  for (const SketchFamily& family : group.families) {
    for (const Bundle& member : family.members) total += member.Count();
  }
  return total;
}

double RoundToFileDigits(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", x);
  return std::strtod(buffer, nullptr);
}

namespace {

json LedgerToJson(const LedgerSnapshot& ledger) {
  json values = json::object();
  json demands = json::object();
  for (int p = 0; p < kNumPhases; ++p) {
    const std::string name(PhaseName(static_cast<Phase>(p)));
    values[name] = ledger.value_queries[p];
    demands[name] = ledger.demand_queries[p];
  }
  return {{"value_queries", values},
          {"demand_queries", demands},
          {"card_calls", ledger.card_calls},
          {"xos_calls", ledger.xos_calls}};
}

LedgerSnapshot LedgerFromJson(const json& j) {
  LedgerSnapshot ledger;
  for (int p = 0; p < kNumPhases; ++p) {
    const std::string name(PhaseName(static_cast<Phase>(p)));
    ledger.value_queries[p] = j.at("value_queries").at(name).get<uint64_t>();
    ledger.demand_queries[p] = j.at("demand_queries").at(name).get<uint64_t>();
  }
  ledger.card_calls = j.at("card_calls").get<uint64_t>();
  ledger.xos_calls = j.at("xos_calls").get<uint64_t>();
  return ledger;
}

double ReadFinite(const json& j) {
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw Error(ErrorCode::kParse, "non-finite number");
  return x;
}

}  // namespace

std::string SerializeSketch(const Sketch& sketch) {
  const GridParams grid = GridParams::ForN(sketch.n);
  const long long cap = static_cast<long long>(sketch.n) *
                        static_cast<long long>(grid.k_grid.size()) *
                        static_cast<long long>(grid.r_grid.size());
  json singletons = json::array();
  for (double x : sketch.singleton_values) {
    singletons.push_back(RoundToFileDigits(x));
  }
  json groups = json::array();
  for (const SketchGroup& group : sketch.groups) {
    if (ReferenceCount(group) > cap) {
      throw Error(ErrorCode::kInvalidParams,
                  "group " + std::to_string(group.leader) + " stores " +
                      std::to_string(ReferenceCount(group)) +
                      " item references, more than " + std::to_string(cap));
    }
    json families = json::array();
    for (const SketchFamily& family : group.families) {
      json members = json::array();
      for (const Bundle& m : family.members) members.push_back(m.ToHex());
      families.push_back({{"k", family.k},
                          {"r", RoundToFileDigits(family.r)},
                          {"members", members}});
    }
    groups.push_back({{"leader", group.leader},
                      {"members", group.members.ToHex()},
                      {"scale", RoundToFileDigits(group.scale)},
                      {"alpha", RoundToFileDigits(group.alpha)},
                      {"beta_certified", RoundToFileDigits(group.beta_certified)},
                      {"families", families}});
  }
  json doc = {{"schema_version", sketch.schema_version},
              {"n", sketch.n},
              {"singleton_values", singletons},
              {"groups", groups},
              {"ledger", LedgerToJson(sketch.ledger)}};
  return doc.dump() + "\n";
}

Sketch DeserializeSketch(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("sketch JSON: ") + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("schema_version")) {
      throw Error(ErrorCode::kParse, "sketch JSON lacks schema_version");
    }
    const int version = doc.at("schema_version").get<int>();
    if (version != kSketchSchemaVersion) {
      throw Error(ErrorCode::kSchemaVersion,
                  "sketch schema version " + std::to_string(version) +
                      ", expected " + std::to_string(kSketchSchemaVersion));
    }
    Sketch sketch;
    sketch.schema_version = version;
    sketch.n = doc.at("n").get<int>();
    if (sketch.n < 1) throw Error(ErrorCode::kParse, "sketch n must be >= 1");
    const int n = sketch.n;
    for (const json& x : doc.at("singleton_values")) {
      const double value = ReadFinite(x);
      if (value < 0) throw Error(ErrorCode::kParse, "negative singleton");
      sketch.singleton_values.push_back(value);
    }
    if (static_cast<int>(sketch.singleton_values.size()) != n) {
      throw Error(ErrorCode::kParse, "singleton_values has the wrong length");
    }
    for (const json& g : doc.at("groups")) {
      SketchGroup group;
      group.leader = g.at("leader").get<int>();
      group.members = Bundle::FromHex(n, g.at("members").get<std::string>());
      if (!group.members.Contains(group.leader)) {
        throw Error(ErrorCode::kParse, "group leader outside its members");
      }
      group.scale = ReadFinite(g.at("scale"));
      group.alpha = ReadFinite(g.at("alpha"));
      group.beta_certified = ReadFinite(g.at("beta_certified"));
      if (!(group.scale > 0 && group.alpha >= 1 && group.beta_certified > 0)) {
        throw Error(ErrorCode::kParse, "group scale, alpha or beta invalid");
      }
      for (const json& f : g.at("families")) {
        SketchFamily family;
        family.k = f.at("k").get<int>();
        family.r = ReadFinite(f.at("r"));
        if (family.k < 1 || !(family.r > 0)) {
          throw Error(ErrorCode::kParse, "family k or r invalid");
        }
        for (const json& m : f.at("members")) {
          family.members.push_back(Bundle::FromHex(n, m.get<std::string>()));
        }
        group.families.push_back(std::move(family));
      }
      sketch.groups.push_back(std::move(group));
    }
    sketch.ledger = LedgerFromJson(doc.at("ledger"));
    return sketch;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("sketch JSON: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kMalformedBundle) {
      throw Error(ErrorCode::kParse, std::string("sketch JSON: ") + e.what());
    }
    throw;
  }
}

}  // namespace vsketch
