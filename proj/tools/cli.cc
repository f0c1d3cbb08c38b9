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

#include "cli.h"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vsketch/error.h"
#include "vsketch/instance.h"
#include "vsketch/pipeline.h"
#include "vsketch/sketch.h"
#include "vsketch/sketcher.h"
#include "vsketch/verify.h"

namespace vsketch::cli {
namespace {

using json = nlohmann::json;

inline constexpr int kMaxEvalAllItems = 20;

struct RunConfig {
  std::string family;
  GenParams params;
  std::string instance_path;
  std::string sketch_path;
  std::string bundles_path;
  std::string out_path;
  std::string pipeline = "submodular";
  double epsilon = 0.1;
  uint64_t seed = 1;
  std::string format;
  int verbosity = 0;
  bool all = false;
  std::vector<int> n_list;
  bool double_weights = false;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteOutput(const std::string& path, const std::string& text,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kInvalidParams, "cannot write " + path);
  file << text;
}

std::string Num(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", x);
  return buffer;
}

ValuationOracle FreshOracle(const ValuationInstance& instance) {
  return ValuationOracle(instance.valuation, std::make_shared<QueryLedger>(),
                         Phase::kBuild);
}

// Parses "{0,2,5}", "0 2 5" or "{}" into a bundle over n items.
Bundle ParseBundleLine(const std::string& line, int n) {
  std::string cleaned;
  for (char c : line) {
    if (c == '{' || c == '}' || c == ',') {
      cleaned += ' ';
    } else {
      cleaned += c;
    }
  }
  std::istringstream in(cleaned);
  Bundle b(n);
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int item = -1;
    try {
      item = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw Error(ErrorCode::kParse, "bad item '" + token + "' in bundle");
    }
    b.Insert(item);
  }
  return b;
}

int CmdGen(const RunConfig& cfg, std::ostream& out) {
  GenParams params = cfg.params;
  const ValuationInstance instance =
      GenerateInstance(ParseFamily(cfg.family), params, cfg.seed);
  WriteOutput(cfg.out_path, InstanceToJson(instance), out);
  return kExitOk;
}

int CmdSketch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ValuationInstance instance =
      InstanceFromJson(ReadFile(cfg.instance_path));
  const Pipeline pipeline = ParsePipeline(cfg.pipeline);
  CheckCompatible(pipeline, instance);
  if (cfg.verbosity > 0) {
    err << "building " << PipelineName(pipeline) << " sketch for "
        << FamilyName(instance.family) << " n=" << instance.n() << "\n";
  }
  const Sketch sketch = BuildFullSketch(
      FreshOracle(instance), PipelineOptions(pipeline, cfg.epsilon));
  WriteOutput(cfg.out_path, SerializeSketch(sketch), out);
  const LedgerSnapshot& l = sketch.ledger;
  if (cfg.format == "json") {
    json summary = {{"groups", sketch.groups.size()},
                    {"value_queries", l.TotalValueQueries()},
                    {"demand_queries", l.TotalDemandQueries()},
                    {"card_calls", l.card_calls},
                    {"xos_calls", l.xos_calls}};
    out << summary.dump() << "\n";
  } else {
    out << "groups=" << sketch.groups.size() << "\n"
        << "value_queries=" << l.TotalValueQueries() << "\n"
        << "demand_queries=" << l.TotalDemandQueries() << "\n"
        << "card_calls=" << l.card_calls << "\n"
        << "xos_calls=" << l.xos_calls << "\n";
  }
  return kExitOk;
}

int CmdEval(const RunConfig& cfg, std::ostream& out) {
  const Sketch sketch = DeserializeSketch(ReadFile(cfg.sketch_path));
  const int n = sketch.n;
  std::string csv = "bundle,estimate\n";
  auto row = [&](const Bundle& s) {
    csv += s.ToHex() + "," + Num(Evaluate(sketch, s)) + "\n";
  };
  if (cfg.all) {
    if (n > kMaxEvalAllItems) {
      throw Error(ErrorCode::kScale, "--all enumerates 2^n bundles and is "
                                     "limited to n <= 20");
    }
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
      row(Bundle::FromMask(n, mask));
    }
  } else {
    std::istringstream lines(ReadFile(cfg.bundles_path));
    std::string line;
    while (std::getline(lines, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      row(ParseBundleLine(line, n));
    }
  }
  WriteOutput(cfg.out_path, csv, out);
  return kExitOk;
}

int CmdVerify(const RunConfig& cfg, std::ostream& out) {
  const ValuationInstance instance =
      InstanceFromJson(ReadFile(cfg.instance_path));
  if (instance.n() > kMaxVerifyItems) {
    throw Error(ErrorCode::kScale,
                "verify is exhaustive and limited to n <= " +
                    std::to_string(kMaxVerifyItems));
  }
  const Pipeline pipeline = ParsePipeline(cfg.pipeline);
  CheckCompatible(pipeline, instance);
  const BuildOptions options = PipelineOptions(pipeline, cfg.epsilon);

  BuildTrace trace;
  Sketch sketch = BuildFullSketch(FreshOracle(instance), options, &trace);
  const ValuationOracle requery = FreshOracle(instance);
  FamilyReport families = FamilyInvariantCheck(sketch, &requery);
  for (std::string& v : CardBudgetViolations(sketch, trace)) {
    families.violations.push_back(std::move(v));
  }
  if (cfg.double_weights) {
    for (double& x : sketch.singleton_values) x *= 2.0;
    for (SketchGroup& g : sketch.groups) g.scale *= 2.0;
  }
  const RatioReport ratio =
      CompareSketch(FreshOracle(instance), sketch, options.card.alpha(),
                    MaxCertifiedBeta(sketch, trace));
  const CoreClaimReport core = CheckCoreClaim(instance.valuation, options.xos);
  const bool passed = ratio.passed() && core.passed() && families.passed();

  std::string report;
  if (cfg.format == "json") {
    json doc = {{"family", std::string(FamilyName(instance.family))},
                {"pipeline", std::string(PipelineName(pipeline))},
                {"seed", instance.seed},
                {"ratio", json::parse(ToJson(ratio))},
                {"core", json::parse(ToJson(core))},
                {"families", json::parse(ToJson(families))},
                {"passed", passed}};
    report = doc.dump() + "\n";
  } else {
    report = "instance: " + std::string(FamilyName(instance.family)) +
             " n=" + std::to_string(instance.n()) +
             " pipeline=" + std::string(PipelineName(pipeline)) + "\n" +
             ToText(ratio) + ToText(core) + ToText(families) +
             (passed ? "PASS\n" : "FAIL\n");
  }
  WriteOutput(cfg.out_path, report, out);
  return passed ? kExitOk : kExitVerifyFailed;
}

int CmdBench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Pipeline pipeline = ParsePipeline(cfg.pipeline);
  PipelineOptions(pipeline, cfg.epsilon);
  std::vector<BudgetRow> rows;
  for (int n : cfg.n_list) {
    if (n < 1) throw Error(ErrorCode::kInvalidParams, "n must be >= 1");
    rows.push_back(MeasureBuild(pipeline, n, cfg.seed, cfg.epsilon));
    if (cfg.verbosity > 0) {
      err << "n=" << n << " done in " << Num(rows.back().wall_ms) << " ms\n";
    }
  }
  std::string text;
  if (cfg.format == "json") {
    json doc = json::array();
    for (const BudgetRow& r : rows) {
      doc.push_back({{"n", r.n},
                     {"value_queries", r.value_queries},
                     {"demand_queries", r.demand_queries},
                     {"wall_ms", RoundToFileDigits(r.wall_ms)}});
    }
    text = doc.dump() + "\n";
  } else {
    text = "n,value_queries,demand_queries,wall_ms\n";
    for (const BudgetRow& r : rows) {
      char wall[32];
      std::snprintf(wall, sizeof(wall), "%.3f", r.wall_ms);
      text += std::to_string(r.n) + "," + std::to_string(r.value_queries) +
              "," + std::to_string(r.demand_queries) + "," + wall + "\n";
    }
  }
  WriteOutput(cfg.out_path, text, out);
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Build, evaluate and check valuation sketches.", "vsketch"};
  app.require_subcommand(1);
  app.add_flag("-v,--verbose", cfg.verbosity, "Progress messages on stderr");

  CLI::App* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("family", cfg.family,
                  "additive | coverage | uniform-matroid | partition-matroid "
                  "| graphic-matroid | xos | subadditive-table")
      ->required();
  gen->add_option("--n", cfg.params.n, "Number of items")->required();
  gen->add_option("--cap", cfg.params.cap, "Uniform matroid rank");
  gen->add_option("--blocks", cfg.params.blocks, "Partition matroid blocks");
  gen->add_option("--vertices", cfg.params.vertices, "Graphic matroid vertices");
  gen->add_option("--universe", cfg.params.universe, "Coverage universe size");
  gen->add_option("--clauses", cfg.params.clauses, "XOS clause count");
  gen->add_option("--seed", cfg.seed, "Generator seed");
  gen->add_option("--out", cfg.out_path, "Output path (default stdout)");

  const std::vector<std::string> pipelines = {"submodular", "subadditive",
                                              "matroid"};
  CLI::App* sketch = app.add_subcommand("sketch", "Build a sketch");
  sketch->add_option("--instance", cfg.instance_path, "Instance JSON")
      ->required();
  sketch->add_option("--pipeline", cfg.pipeline, "Oracle pipeline")
      ->check(CLI::IsMember(pipelines));
  sketch->add_option("--epsilon", cfg.epsilon, "Threshold greedy epsilon");
  sketch->add_option("--out", cfg.out_path, "Sketch JSON path")->required();
  sketch->add_option("--format", cfg.format, "Summary format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a sketch");
  eval->add_option("--sketch", cfg.sketch_path, "Sketch JSON")->required();
  auto* bundles = eval->add_option("--bundles", cfg.bundles_path,
                                   "File with one bundle per line");
  auto* all = eval->add_flag("--all", cfg.all, "Every bundle (n <= 20)");
  bundles->excludes(all);
  eval->add_option("--out", cfg.out_path, "CSV path (default stdout)");

  CLI::App* verify =
      app.add_subcommand("verify", "Exhaustively check a sketch build");
  verify->add_option("--instance", cfg.instance_path, "Instance JSON")
      ->required();
  verify->add_option("--pipeline", cfg.pipeline, "Oracle pipeline")
      ->check(CLI::IsMember(pipelines));
  verify->add_option("--epsilon", cfg.epsilon, "Threshold greedy epsilon");
  verify->add_option("--format", cfg.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", cfg.out_path, "Report path (default stdout)");
  verify->add_flag("--double-weights", cfg.double_weights)->group("");

  CLI::App* bench = app.add_subcommand("bench", "Count queries across sizes");
  bench->add_option("--pipeline", cfg.pipeline, "Oracle pipeline")
      ->check(CLI::IsMember(pipelines));
  bench->add_option("--n-list", cfg.n_list, "Comma-separated sizes")
      ->delimiter(',')
      ->required();
  bench->add_option("--seed", cfg.seed, "Instance seed");
  bench->add_option("--epsilon", cfg.epsilon, "Threshold greedy epsilon");
  bench->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  bench->add_option("--out", cfg.out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return CmdGen(cfg, out);
    if (sketch->parsed()) return CmdSketch(cfg, out, err);
    if (eval->parsed()) {
      if (!cfg.all && cfg.bundles_path.empty()) {
        err << "eval needs --bundles or --all\n";
        return kExitUsage;
      }
      return CmdEval(cfg, out);
    }
    if (verify->parsed()) return CmdVerify(cfg, out);
    if (bench->parsed()) return CmdBench(cfg, out, err);
  } catch (const Error& e) {
    const bool mismatch = e.code() == ErrorCode::kClassMismatch ||
                          e.code() == ErrorCode::kCapability;
    err << (mismatch ? "validation warning: " : "error: ") << e.what()
        << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace vsketch::cli
