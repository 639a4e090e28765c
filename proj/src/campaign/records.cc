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

#include <json.hpp>

#include "mtsca/campaign/campaign.h"

namespace mtsca::campaign {
namespace {

using json = nlohmann::json;
using mutation::OperatorId;
using verdict::Direction;
using verdict::Discrepancy;
using verdict::Equivalence;

OperatorId OpFromName(const std::string& name) {
  auto op = mutation::ParseOperatorId(name);
  if (!op) throw std::invalid_argument("unknown operator '" + name + "'");
  return *op;
}

json DiscrepancyJson(const Discrepancy& d) {
  json causes = json::array();
  for (auto c : d.suggested_root_causes) causes.push_back(RootCauseName(c));
  json j = {{"rule", d.rule_id},
            {"direction", verdict::DirectionName(d.direction)},
            {"original_count", d.original_count},
            {"variant_count", d.variant_count},
            {"equivalence", verdict::EquivalenceName(d.equivalence)},
            {"suggested_root_causes", causes}};
  if (d.line) j["line"] = *d.line;
  return j;
}

Discrepancy DiscrepancyFrom(const json& j, const VariantRecord& v) {
  Discrepancy d;
  d.variant_id = v.variant_id;
  d.op = v.op;
  d.rule_id = j.at("rule").get<std::string>();
  d.direction = j.at("direction") == "Lost" ? Direction::kLost : Direction::kGained;
  d.original_count = j.at("original_count").get<int>();
  d.variant_count = j.at("variant_count").get<int>();
  d.equivalence =
      j.at("equivalence") == "Certified" ? Equivalence::kCertified : Equivalence::kUnverified;
  for (const auto& c : j.at("suggested_root_causes")) {
    auto rc = ParseRootCause(c.get<std::string>());
    if (!rc) throw std::invalid_argument("unknown root cause " + c.dump());
    d.suggested_root_causes.push_back(*rc);
  }
  if (j.contains("line")) d.line = j["line"].get<int>();
  return d;
}

}  // namespace

size_t CampaignResult::DiscrepancyCount() const {
  size_t n = 0;
  for (const auto& v : variants) n += v.discrepancies.size();
  return n;
}

std::map<std::pair<OperatorId, std::string>, int> CampaignResult::Summary() const {
  std::map<std::pair<OperatorId, std::string>, int> out;
  for (const auto& v : variants) {
    for (const auto& d : v.discrepancies) ++out[{v.op, d.rule_id}];
  }
  return out;
}

std::string WriteResults(const CampaignResult& r) {
  std::string out;
  auto emit = [&](const json& j) {
    out += j.dump();
    out += '\n';
  };
  json ops = json::array();
  for (auto op : r.operators) ops.push_back(mutation::OperatorName(op));
  emit({{"kind", "campaign"},
        {"analyzer", r.analyzer},
        {"corpus", r.corpus_dir},
        {"operators", ops},
        {"seed", r.seed},
        {"strict_location", r.strict_location}});
  for (const auto& p : r.programs) {
    json j = {{"kind", "program"},
              {"program", p.program},
              {"parsed", p.parsed},
              {"counts", p.counts},
              {"sites", p.sites},
              {"elapsed_ms", p.elapsed_ms}};
    if (!p.error.empty()) j["error"] = p.error;
    emit(j);
  }
  for (const auto& v : r.variants) {
    json ds = json::array();
    for (const auto& d : v.discrepancies) ds.push_back(DiscrepancyJson(d));
    const auto& info = mutation::Operator(v.op);
    json j = {{"kind", "variant"},
              {"program", v.program},
              {"variant_id", v.variant_id},
              {"operator", info.name},
              {"equivalence", verdict::EquivalenceName(verdict::EquivalenceOf(v.op))},
              {"site",
               {{"index", v.site.index},
                {"label", v.site.label},
                {"anchor", v.site.anchor},
                {"start_line", v.site.start_line},
                {"end_line", v.site.end_line}}},
              {"status", v.skipped ? "skipped" : "ok"},
              {"original_counts", v.original_counts},
              {"variant_counts", v.variant_counts},
              {"discrepancies", ds},
              {"elapsed_ms", v.elapsed_ms}};
    if (v.skipped) j["reason"] = v.reason;
    if (!v.variant_file.empty()) j["variant_file"] = v.variant_file;
    if (!v.original_excerpt.empty() || !v.variant_excerpt.empty()) {
      j["excerpt"] = {{"original", v.original_excerpt}, {"variant", v.variant_excerpt}};
    }
    emit(j);
  }
  size_t skipped = 0;
  for (const auto& v : r.variants) skipped += v.skipped;
  emit({{"kind", "summary"},
        {"programs", r.programs.size()},
        {"variants", r.variants.size()},
        {"skipped", skipped},
        {"discrepancies", r.DiscrepancyCount()},
        {"elapsed_ms", r.elapsed_ms}});
  return out;
}

CampaignResult ReadResults(std::string_view ndjson) {
  CampaignResult r;
  size_t pos = 0;
  int line_no = 0;
  while (pos < ndjson.size()) {
    size_t nl = ndjson.find('\n', pos);
    size_t end = nl == std::string_view::npos ? ndjson.size() : nl;
    std::string_view line = ndjson.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      json j = json::parse(line);
      std::string kind = j.at("kind");
      if (kind == "campaign") {
        r.analyzer = j.at("analyzer");
        r.corpus_dir = j.at("corpus");
        for (const auto& op : j.at("operators")) r.operators.push_back(OpFromName(op));
        r.seed = j.at("seed").get<uint64_t>();
        r.strict_location = j.at("strict_location").get<bool>();
      } else if (kind == "program") {
        ProgramRecord p;
        p.program = j.at("program");
        p.parsed = j.at("parsed");
        p.counts = j.at("counts").get<std::map<std::string, int>>();
        p.sites = j.at("sites");
        p.elapsed_ms = j.value("elapsed_ms", 0.0);
        p.error = j.value("error", "");
        r.programs.push_back(std::move(p));
      } else if (kind == "variant") {
        VariantRecord v;
        v.program = j.at("program");
        v.variant_id = j.at("variant_id");
        v.op = OpFromName(j.at("operator"));
        const json& s = j.at("site");
        v.site = {s.at("index"), s.at("label"), s.at("anchor"), s.at("start_line"),
                  s.at("end_line")};
        v.skipped = j.at("status") == "skipped";
        v.reason = j.value("reason", "");
        v.variant_file = j.value("variant_file", "");
        v.original_counts = j.at("original_counts").get<std::map<std::string, int>>();
        v.variant_counts = j.at("variant_counts").get<std::map<std::string, int>>();
        for (const auto& d : j.at("discrepancies")) v.discrepancies.push_back(DiscrepancyFrom(d, v));
        if (j.contains("excerpt")) {
          v.original_excerpt = j["excerpt"].value("original", "");
          v.variant_excerpt = j["excerpt"].value("variant", "");
        }
        v.elapsed_ms = j.value("elapsed_ms", 0.0);
        r.variants.push_back(std::move(v));
      } else if (kind == "summary") {
        r.elapsed_ms = j.value("elapsed_ms", 0.0);
      } else {
        throw std::invalid_argument("unknown record kind '" + kind + "'");
      }
    } catch (const std::exception& e) {
      throw std::invalid_argument("results line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return r;
}

std::string StripTimings(std::string_view ndjson) {
  std::string out;
  size_t pos = 0;
  while (pos < ndjson.size()) {
    size_t nl = ndjson.find('\n', pos);
    size_t end = nl == std::string_view::npos ? ndjson.size() : nl;
    std::string_view line = ndjson.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty()) continue;
    json j = json::parse(line);
    j.erase("elapsed_ms");
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace mtsca::campaign
