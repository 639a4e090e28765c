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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "mtsca/campaign/campaign.h"
#include "mtsca/java/parser.h"
#include "mtsca/java/printer.h"
#include "mtsca/java/walk.h"
#include "mtsca/rules/rules.h"

namespace mtsca::campaign {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using mutation::OperatorId;
using verdict::WarningReport;

double Millis(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

template <typename Fn>
void ParallelFor(size_t n, int jobs, Fn fn) {
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < n;) fn(i);
  };
  size_t threads = std::min<size_t>(static_cast<size_t>(std::max(jobs, 1)), n);
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

std::string ReadText(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteText(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + p.string());
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string Excerpt(const std::vector<std::string>& lines, int first, int last) {
  constexpr int kMaxLines = 24;
  first = std::max(first, 1);
  last = std::min({last, static_cast<int>(lines.size()), first + kMaxLines - 1});
  std::string out;
  for (int l = first; l <= last; ++l) {
    std::string num = std::to_string(l);
    out += std::string(num.size() < 4 ? 4 - num.size() : 0, ' ') + num + " | " + lines[l - 1] +
           "\n";
  }
  return out;
}

// Largest run of variant lines that are new or come from the site.
std::pair<int, int> ChangedRun(const std::vector<std::optional<int>>& origin, int start,
                               int end) {
  std::pair<int, int> best{0, -1};
  int run_start = 0, last = -10;
  for (int i = 0; i < static_cast<int>(origin.size()); ++i) {
    const auto& o = origin[i];
    bool changed = !o || (*o >= start && *o <= end);
    if (!changed) continue;
    if (i - last > 3) run_start = i;
    last = i;
    if (last - run_start > best.second - best.first) best = {run_start, last};
  }
  return {best.first + 1, best.second + 1};
}

struct Program {
  std::string name;  // relative to the corpus
  std::string key;   // file of the printed original, relative to out
  std::string text;
  java::CompilationUnit unit;
  WarningReport report;
};

class Runner {
 public:
  explicit Runner(const CampaignConfig& config) : config_(config) {
    if (!config.analyzer.external) ruleset_ = rules::ParseRuleList(config.analyzer.rules);
  }

  WarningReport Analyze(const java::CompilationUnit& unit, const std::string& key) const {
    if (!config_.analyzer.external) {
      auto ws = rules::RunRules(unit, ruleset_, config_.analyzer.weaknesses);
      for (auto& w : ws) {
        w.file = key;
        w.analyzer = "mini";
      }
      return WarningReport::FromWarnings("mini", "", std::move(ws));
    }
    fs::path input = fs::path(config_.out_dir) / fs::path(key).parent_path();
    auto raw = adapters::RunExternal(config_.analyzer.spec, input.string(),
                                     (fs::path(config_.out_dir) / "work").string());
    auto parsed = adapters::ParseReport(raw);
    std::string want = fs::path(key).filename().string();
    WarningReport out;
    out.analyzer = parsed.analyzer;
    out.version = parsed.version;
    for (auto w : parsed.All()) {
      if (fs::path(w.file).filename() == want) w.file = key;
      out.Add(std::move(w));
    }
    out.Sort();
    return out;
  }

  void Persist(const std::string& key, const std::string& text) const {
    if (!config_.out_dir.empty()) WriteText(fs::path(config_.out_dir) / key, text);
  }

 private:
  const CampaignConfig& config_;
  std::vector<rules::Rule> ruleset_;
};

std::vector<std::string> CorpusFiles(const std::string& dir) {
  std::vector<std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".java") {
      out.push_back(fs::relative(e.path(), dir).generic_string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string StemDir(const std::string& program) {
  fs::path p(program);
  return (fs::path("variants") / p.parent_path() / p.stem()).generic_string();
}

}  // namespace

CampaignResult RunCampaign(const CampaignConfig& config) {
  config.Validate();
  auto start = Clock::now();
  if (!config.out_dir.empty()) {
    fs::create_directories(config.out_dir);
    fs::remove_all(fs::path(config.out_dir) / "variants");
  }
  std::vector<OperatorId> ops = config.operators;
  std::sort(ops.begin(), ops.end());

  CampaignResult result;
  result.analyzer = config.analyzer.Describe();
  result.corpus_dir = config.corpus_dir;
  result.operators = ops;
  result.seed = config.seed;
  result.strict_location = config.strict_location;

  Runner runner(config);
  auto files = CorpusFiles(config.corpus_dir);
  std::vector<Program> programs(files.size());
  result.programs.resize(files.size());
  std::vector<std::vector<std::vector<mutation::MutationSite>>> sites(files.size());

  ParallelFor(files.size(), config.jobs, [&](size_t i) {
    auto t0 = Clock::now();
    Program& p = programs[i];
    ProgramRecord& rec = result.programs[i];
    p.name = rec.program = files[i];
    p.key = (fs::path(StemDir(p.name)) / "original" / fs::path(p.name).filename()).generic_string();
    try {
      std::string source = ReadText(fs::path(config.corpus_dir) / p.name);
      p.text = java::Print(java::Parse(source, p.name));
      p.unit = java::Parse(p.text, p.key);
      rec.parsed = true;
      runner.Persist(p.key, p.text);
      p.report = runner.Analyze(p.unit, p.key);
      rec.counts = p.report.RuleCounts();
      for (auto op : ops) {
        sites[i].push_back(mutation::EnumerateSites(p.unit, op));
        rec.sites += static_cast<int>(sites[i].back().size());
      }
    } catch (const std::exception& e) {
      rec.error = rec.parsed ? std::string("analysis failed: ") + e.what()
                             : std::string("parse failed: ") + e.what();
      sites[i].clear();
    }
    rec.elapsed_ms = Millis(t0);
  });

  struct Task {
    size_t program;
    OperatorId op;
    int index;
    const mutation::MutationSite* site;
  };
  std::vector<Task> tasks;
  for (size_t i = 0; i < files.size(); ++i) {
    for (size_t k = 0; k < sites[i].size(); ++k) {
      for (size_t s = 0; s < sites[i][k].size(); ++s) {
        tasks.push_back({i, ops[k], static_cast<int>(s), &sites[i][k][s]});
      }
    }
  }
  result.variants.resize(tasks.size());

  ParallelFor(tasks.size(), config.jobs, [&](size_t t) {
    auto t0 = Clock::now();
    const Task& task = tasks[t];
    const Program& p = programs[task.program];
    VariantRecord& rec = result.variants[t];
    rec.program = p.name;
    rec.op = task.op;
    rec.site = {task.index, task.site->label, java::PathToString(task.site->anchor),
                task.site->span.start_line, task.site->span.end_line};
    rec.variant_id = mutation::VariantId(p.key, task.op, task.index);
    rec.original_counts = p.report.RuleCounts();
    try {
      auto v = mutation::Apply(p.unit, *task.site, config.seed);
      rec.variant_id = v.id;
      std::string key = (fs::path(StemDir(p.name)) / v.id / fs::path(p.name).filename())
                            .generic_string();
      if (!config.out_dir.empty()) rec.variant_file = key;
      runner.Persist(key, v.text);
      auto report = runner.Analyze(v.unit, key);
      rec.variant_counts = report.RuleCounts();
      auto meta = verdict::CompareMeta::For(v, p.key, key);
      rec.discrepancies = verdict::Compare(p.report, report, meta, {config.strict_location});
      if (!rec.discrepancies.empty()) {
        int first = task.site->span.start_line, last = task.site->span.end_line;
        rec.original_excerpt = Excerpt(Lines(p.text), first - 2, last + 2);
        auto [a, b] = ChangedRun(v.origin_map, first, last);
        rec.variant_excerpt = Excerpt(Lines(v.text), a - 2, b + 2);
      }
    } catch (const std::exception& e) {
      rec.skipped = true;
      rec.reason = e.what();
      rec.discrepancies.clear();
    }
    rec.elapsed_ms = Millis(t0);
  });

  result.elapsed_ms = Millis(start);
  if (!config.out_dir.empty()) {
    fs::remove_all(fs::path(config.out_dir) / "work");
    WriteText(fs::path(config.out_dir) / "results.ndjson", WriteResults(result));
    WriteText(fs::path(config.out_dir) / "report.md", RenderReport(result));
  }
  return result;
}

}  // namespace mtsca::campaign
