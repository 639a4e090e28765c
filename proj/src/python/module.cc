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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "mtsca/adapters/adapters.h"
#include "mtsca/analysis/weakness.h"
#include "mtsca/campaign/campaign.h"
#include "mtsca/java/parser.h"
#include "mtsca/java/printer.h"
#include "mtsca/mutation/mutation.h"
#include "mtsca/rules/rules.h"
#include "mtsca/taxonomy.h"
#include "mtsca/verdict/verdict.h"

namespace py = pybind11;

namespace mtsca {
namespace {

template <typename T, typename F>
py::list Names(const std::vector<T>& items, F name) {
  py::list out;
  for (const auto& item : items) out.append(std::string(name(item)));
  return out;
}

py::dict WarningDict(const rules::Warning& w) {
  py::dict d;
  d["analyzer"] = w.analyzer;
  d["rule"] = w.rule_id;
  d["file"] = w.file;
  d["line"] = w.line;
  d["message"] = w.message;
  return d;
}

py::list WarningList(const std::vector<rules::Warning>& ws) {
  py::list out;
  for (const auto& w : ws) out.append(WarningDict(w));
  return out;
}

verdict::WarningReport ReportFromDicts(const py::list& items, const std::string& file) {
  verdict::WarningReport report;
  for (const auto& item : items) {
    auto d = item.cast<py::dict>();
    rules::Warning w;
    w.rule_id = d["rule"].cast<std::string>();
    w.file = file;
    w.line = d.contains("line") ? d["line"].cast<int>() : 0;
    if (d.contains("message")) w.message = d["message"].cast<std::string>();
    report.Add(std::move(w));
  }
  report.Sort();
  return report;
}

mutation::OperatorId OperatorOrThrow(const std::string& name) {
  auto op = mutation::ParseOperatorId(name);
  if (!op) throw py::value_error("unknown operator: " + name);
  return *op;
}

java::CompilationUnit ParsePrinted(const std::string& text, const std::string& path) {
  return java::Parse(java::Print(java::Parse(text, path)), path);
}

py::dict DiscrepancyDict(const verdict::Discrepancy& d) {
  py::dict out;
  out["variant_id"] = d.variant_id;
  out["operator"] = std::string(mutation::OperatorName(d.op));
  out["rule"] = d.rule_id;
  out["direction"] = std::string(verdict::DirectionName(d.direction));
  out["original_count"] = d.original_count;
  out["variant_count"] = d.variant_count;
  out["equivalence"] = std::string(verdict::EquivalenceName(d.equivalence));
  out["root_causes"] = Names(d.suggested_root_causes, RootCauseName);
  out["line"] = d.line ? py::object(py::int_(*d.line)) : py::object(py::none());
  return out;
}

std::string Format(const std::string& text, const std::string& path) {
  return java::Print(java::Parse(text, path));
}

py::list Analyze(const std::string& text, const std::string& path, const std::string& weaknesses,
                 const std::string& rules) {
  auto unit = ParsePrinted(text, path);
  auto cfg = analysis::WeaknessConfig::FromString(weaknesses);
  auto ws = rules::RunRules(unit, rules::ParseRuleList(rules), cfg);
  for (auto& w : ws) w.file = path;
  return WarningList(ws);
}

py::list Mutate(const std::string& text, const std::string& op_name, const std::string& path,
                uint64_t seed) {
  auto unit = ParsePrinted(text, path);
  auto op = OperatorOrThrow(op_name);
  py::list out;
  auto sites = mutation::EnumerateSites(unit, op);
  for (const auto& site : sites) {
    auto v = mutation::Apply(unit, site, seed);
    py::dict d;
    d["id"] = v.id;
    d["operator"] = op_name;
    d["site"] = site.label;
    d["index"] = v.index;
    d["text"] = v.text;
    py::list origin;
    for (const auto& o : v.origin_map) {
      origin.append(o ? py::object(py::int_(*o)) : py::object(py::none()));
    }
    d["origin_map"] = origin;
    out.append(d);
  }
  return out;
}

py::list CompareWarnings(const py::list& original, const py::list& variant,
                         const std::string& op_name, const std::string& variant_id) {
  verdict::CompareMeta meta;
  meta.variant_id = variant_id;
  meta.op = OperatorOrThrow(op_name);
  meta.original_file = meta.variant_file = "input";
  py::list out;
  for (const auto& d : verdict::Compare(ReportFromDicts(original, "input"),
                                        ReportFromDicts(variant, "input"), meta)) {
    out.append(DiscrepancyDict(d));
  }
  return out;
}

py::list ParseReport(const std::string& content, const std::string& format) {
  return WarningList(adapters::ParseReport({adapters::ParseFormat(format), content, 0}).All());
}

py::dict RunCampaign(const std::string& corpus, const std::string& operators,
                     const std::string& weaknesses, uint64_t seed, int jobs,
                     const std::string& out, bool strict_location) {
  campaign::CampaignConfig c;
  c.corpus_dir = corpus;
  c.Set("operators", operators);
  c.Set("weakness", weaknesses);
  c.seed = seed;
  if (jobs > 0) c.jobs = jobs;
  c.out_dir = out;
  c.strict_location = strict_location;
  campaign::CampaignResult r;
  {
    py::gil_scoped_release release;
    r = campaign::RunCampaign(c);
  }
  py::dict d;
  d["analyzer"] = r.analyzer;
  d["programs"] = r.programs.size();
  d["variants"] = r.variants.size();
  py::list discrepancies;
  for (const auto& v : r.variants) {
    for (const auto& x : v.discrepancies) {
      auto item = DiscrepancyDict(x);
      item["program"] = v.program;
      item["site"] = v.site.label;
      discrepancies.append(item);
    }
  }
  d["discrepancies"] = discrepancies;
  d["report"] = campaign::RenderReport(r);
  d["results"] = campaign::WriteResults(r);
  return d;
}

py::list OperatorCatalog() {
  py::list out;
  for (const auto& op : mutation::AllOperators()) {
    py::dict d;
    d["name"] = std::string(op.name);
    d["title"] = std::string(op.title);
    d["family"] = op.family == mutation::Family::kEquivalent ? "Equivalent" : "Exploratory";
    d["root_causes"] = Names(op.targeted_root_causes, RootCauseName);
    d["characteristics"] = Names(op.targeted_characteristics, CharacteristicName);
    out.append(d);
  }
  return out;
}

py::list WeaknessCatalog() {
  py::list out;
  for (const auto& w : analysis::AllWeaknesses()) {
    py::dict d;
    d["name"] = std::string(w.name);
    d["root_cause"] = std::string(RootCauseName(w.root_cause));
    d["direction"] = w.direction == analysis::Direction::kFalseNegative ? "FN" : "FP";
    d["rule"] = std::string(w.owning_rule);
    d["summary"] = std::string(w.summary);
    out.append(d);
  }
  return out;
}

py::list RuleCatalog() {
  py::list out;
  for (const auto& r : rules::AllRules()) out.append(py::make_tuple(r.id, r.name));
  return out;
}

}  // namespace
}  // namespace mtsca

PYBIND11_MODULE(_mtsca, m) {
  using namespace mtsca;
  m.doc() = "Metamorphic testing of static analyzers";

  py::register_exception<java::SyntaxError>(m, "JavaSyntaxError", PyExc_ValueError);
  py::register_exception<adapters::FormatError>(m, "ReportFormatError", PyExc_ValueError);

  m.def("format", &Format, py::arg("text"), py::arg("path") = "Input.java",
        "Parse and pretty-print one Java source file.");
  m.def("analyze", &Analyze, py::arg("text"), py::arg("path") = "Input.java",
        py::arg("weaknesses") = "", py::arg("rules") = "all",
        "Run the mini analyzer; returns warning dicts.");
  m.def("mutate", &Mutate, py::arg("text"), py::arg("operator"), py::arg("path") = "Input.java",
        py::arg("seed") = 0, "All variants of one operator, in site order.");
  m.def("compare", &CompareWarnings, py::arg("original"), py::arg("variant"), py::arg("operator"),
        py::arg("variant_id") = "variant",
        "Count discrepancies between two warning lists for one file.");
  m.def("parse_report", &ParseReport, py::arg("content"), py::arg("format"),
        "Normalize a PMD-XML, SpotBugs-XML, SARIF or MiniJSON report.");
  m.def("run_campaign", &RunCampaign, py::arg("corpus"), py::arg("operators") = "E",
        py::arg("weaknesses") = "", py::arg("seed") = 0, py::arg("jobs") = 0,
        py::arg("out") = "", py::arg("strict_location") = false);
  m.def("operators", &OperatorCatalog);
  m.def("weaknesses", &WeaknessCatalog);
  m.def("rules", &RuleCatalog);
}
