// Copyright 2026 The mtsca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// mtsca: metamorphic testing of static code analyzers.
//
//   mtsca mutate <file> --operators E1,E2 --seed 0 --out variants/
//   mtsca analyze <file-or-dir> [--weakness W_R1_SKIP_NESTED] [--out report.ndjson]
//   mtsca campaign --config campaign.ini [--operators E] [--jobs 4] [--out run/]
//   mtsca report run/results.ndjson [--out report.md]

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "mtsca/adapters/adapters.h"
#include "mtsca/campaign/campaign.h"
#include "mtsca/java/parser.h"
#include "mtsca/java/printer.h"
#include "mtsca/java/walk.h"
#include "mtsca/mutation/mutation.h"
#include "mtsca/rules/rules.h"

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace mtsca;

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteText(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

void Emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    WriteText(out_path, text);
  }
}

struct MutateArgs {
  std::string file;
  std::string operators = "all";
  uint64_t seed = 0;
  std::string out = "variants";
};

int RunMutate(const MutateArgs& args) {
  auto unit = java::Parse(ReadText(args.file), args.file);
  std::string printed = java::Print(unit);
  unit = java::Parse(printed, args.file);
  int total = 0;
  for (auto op : mutation::ParseOperatorList(args.operators)) {
    auto sites = mutation::EnumerateSites(unit, op);
    for (const auto& site : sites) {
      auto v = mutation::Apply(unit, site, args.seed);
      fs::path base = fs::path(args.out) / v.id;
      WriteText(base.string() + ".java", v.text);
      json origin = json::array();
      for (const auto& o : v.origin_map) origin.push_back(o ? json(*o) : json(nullptr));
      json meta = {
          {"variant_id", v.id},
          {"original", args.file},
          {"operator", mutation::OperatorName(op)},
          {"equivalence", mutation::Operator(op).family == mutation::Family::kEquivalent
                              ? "Certified"
                              : "Unverified"},
          {"seed", args.seed},
          {"site",
           {{"index", v.index},
            {"label", site.label},
            {"anchor", java::PathToString(site.anchor)},
            {"start_line", site.span.start_line},
            {"start_col", site.span.start_col},
            {"end_line", site.span.end_line},
            {"end_col", site.span.end_col}}},
          {"origin_map", origin}};
      WriteText(base.string() + ".json", meta.dump(2) + "\n");
      ++total;
    }
    std::cerr << mutation::OperatorName(op) << ": " << sites.size() << " variant(s)\n";
  }
  std::cerr << total << " variant(s) written to " << args.out << "\n";
  return 0;
}

struct AnalyzeArgs {
  std::string path;
  std::string weakness;
  std::string rules = "all";
  std::string analyzer = "mini";
  std::string report;
  std::string format;
  std::string out;
};

int RunAnalyze(const AnalyzeArgs& args) {
  verdict::WarningReport report;
  if (!args.report.empty()) {
    if (args.format.empty()) throw CLI::ValidationError("--report needs --format");
    report = adapters::ParseReport(
        {adapters::ParseFormat(args.format), ReadText(args.report), 0});
  } else if (args.analyzer.rfind("external:", 0) == 0) {
    auto spec = adapters::AnalyzerSpec::Load(args.analyzer.substr(9));
    report = adapters::ParseReport(adapters::RunExternal(spec, args.path));
  } else if (args.analyzer == "mini") {
    auto cfg = analysis::WeaknessConfig::FromString(args.weakness);
    auto ruleset = rules::ParseRuleList(args.rules);
    std::vector<std::string> files;
    if (fs::is_directory(args.path)) {
      for (const auto& e : fs::recursive_directory_iterator(args.path)) {
        if (e.is_regular_file() && e.path().extension() == ".java") {
          files.push_back(e.path().string());
        }
      }
      std::sort(files.begin(), files.end());
    } else {
      files.push_back(args.path);
    }
    std::vector<rules::Warning> all;
    int failures = 0;
    for (const auto& f : files) {
      try {
        auto unit = java::Parse(ReadText(f), f);
        for (auto& w : rules::RunRules(unit, ruleset, cfg)) all.push_back(std::move(w));
      } catch (const java::SyntaxError& e) {
        std::cerr << f << ":" << e.what() << "\n";
        ++failures;
      }
    }
    report = verdict::WarningReport::FromWarnings("mini", "", std::move(all));
    if (failures > 0 && files.size() == 1) return 1;
  } else {
    throw CLI::ValidationError("--analyzer must be 'mini' or 'external:<spec-file>'");
  }
  Emit(args.out, adapters::WriteMiniJson(report));
  std::cerr << report.size() << " warning(s)\n";
  return 0;
}

struct CampaignArgs {
  std::string config;
  std::vector<std::pair<std::string, std::string>> overrides;
};

int RunCampaignCommand(const CampaignArgs& args) {
  campaign::CampaignConfig config;
  if (!args.config.empty()) config = campaign::CampaignConfig::Load(args.config);
  for (const auto& [k, v] : args.overrides) config.Set(k, v);
  if (config.out_dir.empty()) config.out_dir = "mtsca-out";
  auto result = campaign::RunCampaign(config);
  size_t skipped = 0;
  for (const auto& v : result.variants) skipped += v.skipped;
  std::cout << result.programs.size() << " program(s), " << result.variants.size()
            << " variant(s), " << skipped << " skipped, " << result.DiscrepancyCount()
            << " discrepanc" << (result.DiscrepancyCount() == 1 ? "y" : "ies") << "\n";
  for (const auto& [key, n] : result.Summary()) {
    std::cout << "  " << mutation::OperatorName(key.first) << " " << key.second << ": " << n
              << "\n";
  }
  std::cout << "results: " << (fs::path(config.out_dir) / "results.ndjson").string() << "\n";
  std::cout << "report:  " << (fs::path(config.out_dir) / "report.md").string() << "\n";
  return 0;
}

int RunReport(const std::string& results, const std::string& out) {
  auto result = campaign::ReadResults(ReadText(results));
  Emit(out, campaign::RenderReport(result));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metamorphic testing of static code analyzers"};
  app.require_subcommand(1);

  MutateArgs mutate;
  auto* m = app.add_subcommand("mutate", "Write every variant of one Java file");
  m->add_option("file", mutate.file, "Java source file")->required()->check(CLI::ExistingFile);
  m->add_option("--operators", mutate.operators, "all, E, X or a list such as E1,E4b");
  m->add_option("--seed", mutate.seed, "Seed for E3 and E5 choices");
  m->add_option("--out", mutate.out, "Output directory");

  AnalyzeArgs analyze;
  auto* a = app.add_subcommand("analyze", "Run an analyzer and print MiniJSON warnings");
  a->add_option("path", analyze.path, "Java file or directory");
  a->add_option("--weakness", analyze.weakness, "Comma-separated weaknesses to enable");
  a->add_option("--rules", analyze.rules, "all or a list of rule ids");
  a->add_option("--analyzer", analyze.analyzer, "mini or external:<spec-file>");
  a->add_option("--report", analyze.report, "Normalize an existing report instead");
  a->add_option("--format", analyze.format, "PMD-XML, SpotBugs-XML, SARIF or MiniJSON");
  a->add_option("--out", analyze.out, "Output file (stdout by default)");

  CampaignArgs camp;
  auto* c = app.add_subcommand("campaign", "Mutate a corpus, analyze and compare");
  c->add_option("--config", camp.config, "Key-value config file")->check(CLI::ExistingFile);
  auto flag = [&](const std::string& name, const std::string& key, const std::string& help) {
    c->add_option_function<std::string>(
        name, [&camp, key](const std::string& v) { camp.overrides.emplace_back(key, v); }, help);
  };
  flag("--corpus", "corpus", "Corpus directory");
  flag("--operators", "operators", "Operators to apply");
  flag("--seed", "seed", "Deterministic seed");
  flag("--weakness", "weakness", "Weaknesses of the mini analyzer");
  flag("--rules", "rules", "Rules of the mini analyzer");
  flag("--analyzer", "analyzer", "mini or external:<spec-file>");
  flag("--out", "out", "Output directory");
  flag("--jobs", "jobs", "Worker threads (default MTSCA_JOBS or the core count)");
  c->add_flag_callback(
      "--strict-location", [&camp] { camp.overrides.emplace_back("strict_location", "true"); },
      "Compare per original line through the origin map");

  std::string results, report_out;
  auto* r = app.add_subcommand("report", "Render report.md from results.ndjson");
  r->add_option("results", results, "results.ndjson")->required()->check(CLI::ExistingFile);
  r->add_option("--out", report_out, "Output file (stdout by default)");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*m) return RunMutate(mutate);
    if (*a) {
      if (analyze.path.empty() && analyze.report.empty()) {
        throw CLI::ValidationError("analyze needs a path or --report");
      }
      return RunAnalyze(analyze);
    }
    if (*c) return RunCampaignCommand(camp);
    if (*r) return RunReport(results, report_out);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const campaign::ConfigError& e) {
    std::cerr << "mtsca: config: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "mtsca: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
