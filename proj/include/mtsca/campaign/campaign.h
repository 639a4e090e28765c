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

#ifndef MTSCA_CAMPAIGN_CAMPAIGN_H_
#define MTSCA_CAMPAIGN_CAMPAIGN_H_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mtsca/adapters/adapters.h"
#include "mtsca/analysis/weakness.h"
#include "mtsca/mutation/mutation.h"
#include "mtsca/verdict/verdict.h"

namespace mtsca::campaign {

struct AnalyzerTarget {
  bool external = false;
  analysis::WeaknessConfig weaknesses;  // mini analyzer only
  std::string rules = "all";            // mini analyzer only
  adapters::AnalyzerSpec spec;          // external only

  std::string Describe() const;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CampaignConfig {
  std::string corpus_dir;
  std::vector<mutation::OperatorId> operators = mutation::ParseOperatorList("E");
  uint64_t seed = 0;
  AnalyzerTarget analyzer;
  int jobs = DefaultJobs();
  std::string out_dir;
  bool strict_location = false;

  // Keys: corpus, operators, seed, analyzer ("mini" or "external:<spec>"),
  // weakness, rules, jobs, out, strict_location. Relative paths resolve
  // against `base_dir`. Throws ConfigError.
  void Set(std::string_view key, std::string_view value, const std::string& base_dir = "");
  // Flat key = value file, '#' comments.
  static CampaignConfig Load(const std::string& path);
  // Throws ConfigError; "corpus nonempty" when the corpus has no .java file.
  void Validate() const;

  // MTSCA_JOBS when set, else the hardware thread count.
  static int DefaultJobs();
};

struct SiteInfo {
  int index = 0;
  std::string label;
  std::string anchor;
  int start_line = 0;
  int end_line = 0;
};

struct ProgramRecord {
  std::string program;  // file name inside the corpus
  bool parsed = false;
  std::string error;
  std::map<std::string, int> counts;
  int sites = 0;
  double elapsed_ms = 0;
};

struct VariantRecord {
  std::string program;
  std::string variant_id;
  mutation::OperatorId op = mutation::OperatorId::kE1;
  SiteInfo site;
  bool skipped = false;
  std::string reason;
  std::string variant_file;  // relative to the output dir
  std::map<std::string, int> original_counts;
  std::map<std::string, int> variant_counts;
  std::vector<verdict::Discrepancy> discrepancies;
  std::string original_excerpt;
  std::string variant_excerpt;
  double elapsed_ms = 0;
};

struct CampaignResult {
  std::string analyzer;
  std::string corpus_dir;
  std::vector<mutation::OperatorId> operators;
  uint64_t seed = 0;
  bool strict_location = false;
  std::vector<ProgramRecord> programs;  // sorted by program
  std::vector<VariantRecord> variants;  // by (program, operator, site)
  double elapsed_ms = 0;

  size_t DiscrepancyCount() const;
  // (operator, rule id) -> discrepancies.
  std::map<std::pair<mutation::OperatorId, std::string>, int> Summary() const;
};

// Runs the whole pipeline. Writes results.ndjson, report.md and variants/
// under config.out_dir when it is set.
CampaignResult RunCampaign(const CampaignConfig& config);

std::string RenderReport(const CampaignResult& result);

// Newline-delimited records: a campaign header, one record per program, one
// per variant, and a summary. Round-trips through ReadResults.
std::string WriteResults(const CampaignResult& result);
CampaignResult ReadResults(std::string_view ndjson);

// Drops the elapsed_ms fields.
std::string StripTimings(std::string_view ndjson);

}  // namespace mtsca::campaign

#endif  // MTSCA_CAMPAIGN_CAMPAIGN_H_
