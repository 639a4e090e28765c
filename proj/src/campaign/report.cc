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

#include <map>
#include <sstream>
#include <tuple>

#include "mtsca/campaign/campaign.h"

namespace mtsca::campaign {
namespace {

using mutation::OperatorId;
using verdict::Direction;

template <typename T, typename Fn>
std::string Join(const std::vector<T>& items, Fn name) {
  std::string out;
  for (const auto& x : items) {
    if (!out.empty()) out += ", ";
    out += std::string(name(x));
  }
  return out.empty() ? "none" : out;
}

struct Finding {
  const VariantRecord* variant;
  const verdict::Discrepancy* discrepancy;
  std::vector<std::string> duplicates;
};

}  // namespace

std::string RenderReport(const CampaignResult& r) {
  std::ostringstream md;
  size_t parsed = 0, skipped = 0;
  for (const auto& p : r.programs) parsed += p.parsed && p.error.empty();
  for (const auto& v : r.variants) skipped += v.skipped;
  size_t total = r.DiscrepancyCount();

  md << "# Metamorphic testing report\n\n";
  md << "- Analyzer: " << r.analyzer << "\n";
  md << "- Corpus: `" << r.corpus_dir << "` (" << r.programs.size() << " programs, " << parsed
     << " analyzed)\n";
  md << "- Operators: " << Join(r.operators, mutation::OperatorName) << "\n";
  md << "- Seed: " << r.seed << (r.strict_location ? " (strict location matching)" : "") << "\n";
  md << "- Variants: " << r.variants.size() << " generated, " << skipped << " skipped\n";
  md << "- Discrepancies: " << total << "\n\n";
  if (total == 0) {
    md << "Metamorphic soundness held: no variant changed the warning count of any rule.\n\n";
  }

  auto summary = r.Summary();
  if (!summary.empty()) {
    std::map<std::pair<OperatorId, std::string>, std::pair<int, int>> dirs;
    for (const auto& v : r.variants) {
      for (const auto& d : v.discrepancies) {
        auto& c = dirs[{v.op, d.rule_id}];
        (d.direction == Direction::kLost ? c.first : c.second)++;
      }
    }
    md << "## Summary\n\n| Operator | Rule | Lost | Gained |\n|---|---|---|---|\n";
    for (const auto& [key, c] : dirs) {
      md << "| " << mutation::OperatorName(key.first) << " | " << key.second << " | " << c.first
         << " | " << c.second << " |\n";
    }
    md << "\n";
  }

  bool failures = false;
  for (const auto& p : r.programs) failures |= !p.error.empty();
  if (failures) {
    md << "## Programs not analyzed\n\n";
    for (const auto& p : r.programs) {
      if (!p.error.empty()) md << "- `" << p.program << "`: " << p.error << "\n";
    }
    md << "\n";
  }

  for (auto op : r.operators) {
    const auto& info = mutation::Operator(op);
    bool exploratory = info.family == mutation::Family::kExploratory;
    std::vector<Finding> findings;
    std::map<std::tuple<std::string, std::string, std::string, Direction>, size_t> seen;
    int count = 0, skips = 0;
    for (const auto& v : r.variants) {
      if (v.op != op) continue;
      ++count;
      skips += v.skipped;
      for (const auto& d : v.discrepancies) {
        auto key = std::make_tuple(v.program, v.site.anchor, d.rule_id, d.direction);
        if (auto it = seen.find(key); it != seen.end()) {
          findings[it->second].duplicates.push_back(v.variant_id);
          continue;
        }
        seen[key] = findings.size();
        findings.push_back({&v, &d, {}});
      }
    }
    md << "## " << info.name << " " << info.title << "\n\n";
    md << "- Family: " << (exploratory ? "exploratory (Unverified)" : "equivalent (Certified)")
       << "\n";
    md << "- Targeted root causes: " << Join(info.targeted_root_causes, RootCauseName) << "\n";
    md << "- Targeted input characteristics: "
       << Join(info.targeted_characteristics, CharacteristicName) << "\n";
    md << "- Variants: " << count << " (" << skips << " skipped), findings: " << findings.size()
       << "\n\n";
    if (findings.empty()) {
      md << "No discrepancies.\n\n";
      continue;
    }
    for (const auto& f : findings) {
      const auto& v = *f.variant;
      const auto& d = *f.discrepancy;
      md << "### " << d.rule_id << " " << verdict::DirectionName(d.direction) << " in `"
         << v.program << "` (`" << v.variant_id << "`)\n\n";
      if (exploratory) {
        md << "> **Candidate, needs manual confirmation.** This operator does not certify that "
              "the variant is equivalent to the original.\n\n";
      }
      md << "- Site: " << v.site.label << " (lines " << v.site.start_line << "-"
         << v.site.end_line << ")\n";
      md << "- Warning count: " << d.original_count << " in the original, " << d.variant_count
         << " in the variant";
      if (d.line) md << " (original line " << *d.line << ")";
      md << "\n";
      md << "- Direction: " << verdict::DirectionName(d.direction) << "\n";
      md << "- Equivalence: " << verdict::EquivalenceName(d.equivalence) << "\n";
      md << "- Suggested root causes: " << Join(d.suggested_root_causes, RootCauseName) << "\n";
      md << "- Input characteristics: " << Join(info.targeted_characteristics, CharacteristicName)
         << "\n";
      if (!f.duplicates.empty()) {
        md << "- Also seen in: " << Join(f.duplicates, [](const std::string& s) { return s; })
           << "\n";
      }
      md << "\nOriginal:\n\n```java\n" << v.original_excerpt << "```\n\n";
      md << "Variant:\n\n```java\n" << v.variant_excerpt << "```\n\n";
    }
  }

  if (skipped > 0) {
    md << "## Skipped variants\n\n";
    for (const auto& v : r.variants) {
      if (v.skipped) md << "- `" << v.variant_id << "`: " << v.reason << "\n";
    }
    md << "\n";
  }
  return md.str();
}

}  // namespace mtsca::campaign
