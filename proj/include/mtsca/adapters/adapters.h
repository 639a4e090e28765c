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

#ifndef MTSCA_ADAPTERS_ADAPTERS_H_
#define MTSCA_ADAPTERS_ADAPTERS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mtsca/verdict/verdict.h"

namespace mtsca::adapters {

enum class ReportFormat { kPmdXml, kSpotBugsXml, kSarif, kMiniJson };

std::string_view FormatName(ReportFormat f);  // "PMD-XML", ...
// Case-insensitive; accepts "pmd-xml", "spotbugs-xml", "sarif", "minijson".
// Throws std::invalid_argument.
ReportFormat ParseFormat(std::string_view name);

class FormatError : public std::runtime_error {
 public:
  FormatError(size_t offset, const std::string& reason)
      : std::runtime_error("byte " + std::to_string(offset) + ": " + reason), offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

struct RawReport {
  ReportFormat format = ReportFormat::kMiniJson;
  std::string content;
  int exit_status = 0;
};

// Rule ids of external formats are prefixed with the tool ("pmd/CloseResource",
// "spotbugs/ES_COMPARING_STRINGS_WITH_EQ", "<driver>/<ruleId>" for SARIF).
// MiniJSON keeps the ids it was written with. Empty content is an empty report.
verdict::WarningReport ParseReport(const RawReport& raw);

// MiniJSON: one object per warning, newline-delimited.
std::string WriteMiniJson(const verdict::WarningReport& report);

inline constexpr std::string_view kInputPlaceholder = "{input}";
inline constexpr std::string_view kOutputPlaceholder = "{output}";

struct AnalyzerSpec {
  std::string name;
  std::string command;  // contains {input} and {output} exactly once each
  ReportFormat format = ReportFormat::kMiniJson;
  int timeout_seconds = 60;

  // Throws std::invalid_argument.
  void Validate() const;
  // Substitutes shell-quoted paths for the placeholders.
  std::string Render(const std::string& input_dir, const std::string& output_file) const;
  // Flat key-value file with keys name, command, format, timeout.
  static AnalyzerSpec Load(const std::string& path);
};

class Timeout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SpawnFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Runs the analyzer through /bin/sh in a fresh working directory under
// `work_root` (the system temp dir when empty). The whole process group is
// killed on timeout. A nonzero exit that leaves no report is a SpawnFailure;
// a zero exit without a report yields empty content.
RawReport RunExternal(const AnalyzerSpec& spec, const std::string& input_dir,
                      const std::string& work_root = "");

}  // namespace mtsca::adapters

#endif  // MTSCA_ADAPTERS_ADAPTERS_H_
