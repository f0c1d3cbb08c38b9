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

#include "vsketch/instance.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "json.hpp"
#include "vsketch/error.h"
#include "vsketch/families.h"

namespace vsketch {

using nlohmann::json;

namespace {

struct FamilyEntry {
  Family family;
  std::string_view name;
};

constexpr FamilyEntry kFamilies[] = {
    {Family::kAdditive, "additive"},
    {Family::kCoverage, "coverage"},
    {Family::kUniformMatroid, "uniform-matroid"},
    {Family::kPartitionMatroid, "partition-matroid"},
    {Family::kGraphicMatroid, "graphic-matroid"},
    {Family::kXos, "xos"},
    {Family::kSubadditiveTable, "subadditive-table"},
};

// mt19937_64 is fully specified by the standard; the distributions are not,
// so draws are reduced by hand to stay identical across toolchains.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}
  int Uniform(int lo, int hi) {
    return lo + static_cast<int>(gen_() % static_cast<uint64_t>(hi - lo + 1));
  }
  bool Coin() { return (gen_() >> 63) != 0; }

 private:
  std::mt19937_64 gen_;
};

int CeilSqrt(int n) {
  int r = static_cast<int>(std::sqrt(static_cast<double>(n)));
  while (r * r < n) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= n) --r;
  return r;
}

std::vector<int> DistinctSample(Rng& rng, int universe, int count) {
  std::vector<int> picked;
  while (static_cast<int>(picked.size()) < count) {
    const int e = rng.Uniform(0, universe - 1);
    if (std::find(picked.begin(), picked.end(), e) == picked.end()) {
      picked.push_back(e);
    }
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

std::vector<double> GenerateSubadditiveTable(int n, Rng& rng) {
  const uint64_t size = uint64_t{1} << n;
  std::vector<double> v(size, 0.0);
  for (uint64_t s = 1; s < size; ++s) {
    v[s] = rng.Uniform(1, 10 * std::popcount(s));
  }
  // Ascending masks visit every proper submask first, so each entry is
  // capped by already-repaired splits.
  for (uint64_t u = 1; u < size; ++u) {
    const uint64_t low = u & (~u + 1);
    const uint64_t rest = u ^ low;
    for (uint64_t sub = 0; sub != rest; sub = (sub - rest) & rest) {
      const uint64_t a = sub | low;
      v[u] = std::min(v[u], v[a] + v[u ^ a]);
    }
  }
  // Downward max-propagation keeps subadditivity and adds monotonicity.
  for (uint64_t u = 1; u < size; ++u) {
    for (uint64_t rest = u; rest != 0; rest &= rest - 1) {
      const uint64_t without = u & ~(rest & (~rest + 1));
      v[u] = std::max(v[u], v[without]);
    }
  }
  return v;
}

json ClauseToJson(const AdditiveClause& c) {
  json items = json::array();
  json weights = json::array();
  for (int j : c.support().Items()) {
    items.push_back(j);
    weights.push_back(c.weight(j));
  }
  return json{{"items", items}, {"weights", weights}};
}

AdditiveClause ClauseFromJson(int n, const json& j) {
  const auto items = j.at("items").get<std::vector<int>>();
  const auto weights = j.at("weights").get<std::vector<double>>();
  if (items.size() != weights.size()) {
    throw Error(ErrorCode::kInvalidParams, "clause items/weights mismatch");
  }
  AdditiveClause c(n);
  for (size_t i = 0; i < items.size(); ++i) {
    if (items[i] < 0 || items[i] >= n) {
      throw Error(ErrorCode::kInvalidParams, "clause item out of range");
    }
    c.Set(items[i], weights[i]);
  }
  return c;
}

json ParamsToJson(const ValuationInstance& inst) {
  const Valuation& v = *inst.valuation;
  switch (inst.family) {
    case Family::kAdditive:
      return {{"weights", dynamic_cast<const AdditiveValuation&>(v).weights()}};
    case Family::kCoverage: {
      const auto& c = dynamic_cast<const CoverageValuation&>(v);
      return {{"universe_weights", c.universe_weights()},
              {"covers", c.covers()}};
    }
    case Family::kUniformMatroid:
      return {{"cap", dynamic_cast<const UniformMatroidRank&>(v).cap()}};
    case Family::kPartitionMatroid: {
      const auto& p = dynamic_cast<const PartitionMatroidRank&>(v);
      return {{"blocks", p.blocks()}, {"caps", p.caps()}};
    }
    case Family::kGraphicMatroid: {
      const auto& g = dynamic_cast<const GraphicMatroidRank&>(v);
      json edges = json::array();
      for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
      return {{"vertices", g.vertices()}, {"edges", edges}};
    }
    case Family::kXos: {
      json clauses = json::array();
      for (const auto& c : dynamic_cast<const XosValuation&>(v).clauses()) {
        clauses.push_back(ClauseToJson(c));
      }
      return {{"clauses", clauses}};
    }
    case Family::kSubadditiveTable:
      return {{"values", dynamic_cast<const SubadditiveTable&>(v).values()}};
  }
  throw Error(ErrorCode::kInvalidParams, "unknown family");
}

std::shared_ptr<const Valuation> ValuationFromParams(Family family, int n,
                                                     const json& p) {
  switch (family) {
    case Family::kAdditive: {
      auto weights = p.at("weights").get<std::vector<double>>();
      if (static_cast<int>(weights.size()) != n) {
        throw Error(ErrorCode::kInvalidParams, "weights length != n");
      }
      return std::make_shared<AdditiveValuation>(std::move(weights));
    }
    case Family::kCoverage: {
      auto covers = p.at("covers").get<std::vector<std::vector<int>>>();
      if (static_cast<int>(covers.size()) != n) {
        throw Error(ErrorCode::kInvalidParams, "covers length != n");
      }
      return std::make_shared<CoverageValuation>(
          p.at("universe_weights").get<std::vector<double>>(),
          std::move(covers));
    }
    case Family::kUniformMatroid:
      return std::make_shared<UniformMatroidRank>(n, p.at("cap").get<int>());
    case Family::kPartitionMatroid:
      return std::make_shared<PartitionMatroidRank>(
          n, p.at("blocks").get<std::vector<std::vector<int>>>(),
          p.at("caps").get<std::vector<int>>());
    case Family::kGraphicMatroid: {
      std::vector<std::pair<int, int>> edges;
      for (const auto& e : p.at("edges")) {
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      }
      if (static_cast<int>(edges.size()) != n) {
        throw Error(ErrorCode::kInvalidParams, "edge count != n");
      }
      return std::make_shared<GraphicMatroidRank>(p.at("vertices").get<int>(),
                                                  std::move(edges));
    }
    case Family::kXos: {
      std::vector<AdditiveClause> clauses;
      for (const auto& c : p.at("clauses")) {
        clauses.push_back(ClauseFromJson(n, c));
      }
      return std::make_shared<XosValuation>(n, std::move(clauses));
    }
    case Family::kSubadditiveTable:
      if (n > SubadditiveTable::kMaxItems) {
        throw Error(ErrorCode::kScale, "value table limited to n <= 22");
      }
      return std::make_shared<SubadditiveTable>(
          n, p.at("values").get<std::vector<double>>());
  }
  throw Error(ErrorCode::kInvalidParams, "unknown family");
}

}  // namespace

std::string_view FamilyName(Family f) {
  for (const auto& e : kFamilies) {
    if (e.family == f) return e.name;
  }
  return "unknown";
}

Family ParseFamily(std::string_view name) {
  for (const auto& e : kFamilies) {
    if (e.name == name) return e.family;
  }
  throw Error(ErrorCode::kInvalidParams,
              "unknown family '" + std::string(name) + "'");
}

bool IsMatroidFamily(Family f) {
  return f == Family::kUniformMatroid || f == Family::kPartitionMatroid ||
         f == Family::kGraphicMatroid;
}

ValuationInstance GenerateInstance(Family family, const GenParams& params,
                                   uint64_t seed) {
  const int n = params.n;
  if (n < 1) throw Error(ErrorCode::kInvalidParams, "n must be >= 1");
  for (int knob : {params.cap, params.blocks, params.vertices, params.universe,
                   params.clauses}) {
    if (knob < 0) throw Error(ErrorCode::kInvalidParams, "negative parameter");
  }
  Rng rng(seed);
  std::shared_ptr<const Valuation> v;
  switch (family) {
    case Family::kAdditive: {
      std::vector<double> w(n);
      for (double& x : w) x = rng.Uniform(1, 100);
      v = std::make_shared<AdditiveValuation>(std::move(w));
      break;
    }
    case Family::kCoverage: {
      const int universe = params.universe > 0 ? params.universe : 2 * n;
      std::vector<double> uw(universe);
      for (double& x : uw) x = rng.Uniform(1, 10);
      std::vector<std::vector<int>> covers(n);
      for (auto& c : covers) {
        c = DistinctSample(rng, universe, rng.Uniform(1, std::min(4, universe)));
      }
      v = std::make_shared<CoverageValuation>(std::move(uw), std::move(covers));
      break;
    }
    case Family::kUniformMatroid:
      v = std::make_shared<UniformMatroidRank>(
          n, params.cap > 0 ? params.cap : CeilSqrt(n));
      break;
    case Family::kPartitionMatroid: {
      const int b = params.blocks > 0 ? params.blocks : CeilSqrt(n);
      std::vector<std::vector<int>> blocks(b);
      for (int j = 0; j < n; ++j) blocks[rng.Uniform(0, b - 1)].push_back(j);
      std::vector<int> caps(b);
      for (int& c : caps) c = rng.Uniform(1, 3);
      v = std::make_shared<PartitionMatroidRank>(n, std::move(blocks),
                                                 std::move(caps));
      break;
    }
    case Family::kGraphicMatroid: {
      const int vertices =
          params.vertices > 0 ? params.vertices : std::max(2, n / 2 + 1);
      if (vertices < 2) {
        throw Error(ErrorCode::kInvalidParams, "graphic matroid needs >= 2 vertices");
      }
      std::vector<std::pair<int, int>> edges;
      while (static_cast<int>(edges.size()) < n) {
        const int a = rng.Uniform(0, vertices - 1);
        const int b = rng.Uniform(0, vertices - 1);
        if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
      }
      v = std::make_shared<GraphicMatroidRank>(vertices, std::move(edges));
      break;
    }
    case Family::kXos: {
      const int count =
          params.clauses > 0 ? params.clauses : std::clamp(n / 2, 2, 8);
      std::vector<AdditiveClause> clauses;
      for (int c = 0; c < count; ++c) {
        AdditiveClause clause(n);
        for (int j = 0; j < n; ++j) {
          if (rng.Coin()) clause.Set(j, rng.Uniform(1, 10));
        }
        clauses.push_back(std::move(clause));
      }
      // Every item gets a positive weight somewhere.
      for (int j = 0; j < n; ++j) {
        bool seen = false;
        for (const auto& c : clauses) seen = seen || c.weight(j) > 0;
        if (!seen) clauses[j % count].Set(j, rng.Uniform(1, 10));
      }
      v = std::make_shared<XosValuation>(n, std::move(clauses));
      break;
    }
    case Family::kSubadditiveTable:
      if (n > SubadditiveTable::kMaxItems) {
        throw Error(ErrorCode::kScale, "value table limited to n <= 22");
      }
      v = std::make_shared<SubadditiveTable>(n,
                                             GenerateSubadditiveTable(n, rng));
      break;
  }
  return ValuationInstance{family, seed, std::move(v)};
}

std::string InstanceToJson(const ValuationInstance& instance) {
  json j;
  j["schema_version"] = kInstanceSchemaVersion;
  j["family"] = std::string(FamilyName(instance.family));
  j["n"] = instance.n();
  j["params"] = ParamsToJson(instance);
  j["seed"] = instance.seed;
  return j.dump() + "\n";
}

ValuationInstance InstanceFromJson(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  try {
    if (j.at("schema_version").get<int>() != kInstanceSchemaVersion) {
      throw Error(ErrorCode::kSchemaVersion,
                  "instance schema_version " + j.at("schema_version").dump());
    }
    const Family family = ParseFamily(j.at("family").get<std::string>());
    const int n = j.at("n").get<int>();
    if (n < 1) throw Error(ErrorCode::kInvalidParams, "n must be >= 1");
    ValuationInstance inst{family, j.at("seed").get<uint64_t>(),
                           ValuationFromParams(family, n, j.at("params"))};
    if (inst.n() != n) {
      throw Error(ErrorCode::kInvalidParams, "n disagrees with params");
    }
    return inst;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

}  // namespace vsketch
