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
#include <cctype>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <json.hpp>

#include "mtsca/adapters/adapters.h"

namespace mtsca::adapters {
namespace {

namespace pt = boost::property_tree;
using json = nlohmann::json;
using verdict::Warning;
using verdict::WarningReport;

bool Blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

size_t LineOffset(std::string_view text, long line) {
  size_t off = 0;
  for (long l = 1; l < line && off < text.size(); ++l) {
    size_t nl = text.find('\n', off);
    if (nl == std::string_view::npos) return text.size();
    off = nl + 1;
  }
  return off;
}

// Offset of the k-th (0-based) occurrence of `<tag` followed by a delimiter.
size_t TagOffset(std::string_view text, std::string_view tag, size_t k) {
  std::string open = "<" + std::string(tag);
  size_t pos = 0;
  while ((pos = text.find(open, pos)) != std::string_view::npos) {
    size_t after = pos + open.size();
    bool whole = after >= text.size() || std::isspace(static_cast<unsigned char>(text[after])) ||
                 text[after] == '>' || text[after] == '/';
    if (whole && k-- == 0) return pos;
    pos = after;
  }
  return 0;
}

pt::ptree ReadXml(const std::string& content) {
  pt::ptree tree;
  std::istringstream in(content);
  try {
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error& e) {
    throw FormatError(LineOffset(content, static_cast<long>(e.line())), e.message());
  }
  return tree;
}

const pt::ptree& Root(const pt::ptree& tree, const char* name) {
  auto it = tree.find(name);
  if (it == tree.not_found()) {
    throw FormatError(0, std::string("missing <") + name + "> root element");
  }
  return it->second;
}

std::string Attr(const pt::ptree& node, const char* name, const std::string& fallback = "") {
  return node.get<std::string>(std::string("<xmlattr>.") + name, fallback);
}

int IntAttr(const pt::ptree& node, const char* name, size_t offset, bool required) {
  auto v = node.get_optional<std::string>(std::string("<xmlattr>.") + name);
  if (!v) {
    if (required) throw FormatError(offset, std::string("missing attribute ") + name);
    return 0;
  }
  try {
    size_t used = 0;
    int n = std::stoi(*v, &used);
    if (used != v->size()) throw std::invalid_argument(*v);
    return n;
  } catch (const std::exception&) {
    throw FormatError(offset, std::string("attribute ") + name + " is not an integer: '" + *v +
                                  "'");
  }
}

WarningReport ParsePmd(const std::string& content) {
  WarningReport report;
  report.analyzer = "pmd";
  auto tree = ReadXml(content);
  const auto& root = Root(tree, "pmd");
  report.version = Attr(root, "version");
  size_t k = 0;
  for (const auto& [tag, file] : root) {
    if (tag != "file") continue;
    std::string name = Attr(file, "name");
    for (const auto& [vtag, v] : file) {
      if (vtag != "violation") continue;
      size_t off = TagOffset(content, "violation", k++);
      std::string rule = Attr(v, "rule");
      if (rule.empty()) throw FormatError(off, "violation without rule attribute");
      std::string message = v.get_value<std::string>();
      message.erase(0, message.find_first_not_of(" \t\r\n"));
      message.erase(message.find_last_not_of(" \t\r\n") + 1);
      report.Add(Warning{"pmd", "pmd/" + rule, name, IntAttr(v, "beginline", off, true), message});
    }
  }
  report.Sort();
  return report;
}

// The primary SourceLine of a BugInstance: a direct child marked primary, else
// the first direct child, else the one under the primary Class.
const pt::ptree* PrimarySourceLine(const pt::ptree& bug) {
  const pt::ptree* first = nullptr;
  for (const auto& [tag, child] : bug) {
    if (tag != "SourceLine") continue;
    if (Attr(child, "primary") == "true") return &child;
    if (!first) first = &child;
  }
  if (first) return first;
  for (const auto& [tag, child] : bug) {
    if (tag != "Class") continue;
    if (auto it = child.find("SourceLine"); it != child.not_found()) return &it->second;
  }
  return nullptr;
}

WarningReport ParseSpotBugs(const std::string& content) {
  WarningReport report;
  report.analyzer = "spotbugs";
  auto tree = ReadXml(content);
  const auto& root = Root(tree, "BugCollection");
  report.version = Attr(root, "version");
  size_t k = 0;
  for (const auto& [tag, bug] : root) {
    if (tag != "BugInstance") continue;
    size_t off = TagOffset(content, "BugInstance", k++);
    std::string type = Attr(bug, "type");
    if (type.empty()) throw FormatError(off, "BugInstance without type attribute");
    const pt::ptree* sl = PrimarySourceLine(bug);
    if (!sl) throw FormatError(off, "BugInstance without SourceLine");
    std::string file = Attr(*sl, "sourcepath", Attr(*sl, "sourcefile"));
    std::string message = bug.get<std::string>("ShortMessage", "");
    report.Add(Warning{"spotbugs", "spotbugs/" + type, file, IntAttr(*sl, "start", off, false),
                       message});
  }
  report.Sort();
  return report;
}

json ReadJson(std::string_view text, size_t base) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw FormatError(base + at, e.what());
  } catch (const json::exception& e) {
    throw FormatError(base, e.what());
  }
}

std::string Lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

WarningReport ParseSarif(const std::string& content) {
  WarningReport report;
  report.analyzer = "sarif";
  json doc = ReadJson(content, 0);
  auto fail = [](const std::string& why) -> FormatError { return FormatError(0, why); };
  if (!doc.is_object() || !doc.contains("runs") || !doc["runs"].is_array()) {
    throw fail("SARIF document without a runs array");
  }
  try {
    for (size_t r = 0; r < doc["runs"].size(); ++r) {
      const json& run = doc["runs"][r];
      std::string tool = "sarif";
      if (run.contains("tool") && run["tool"].contains("driver")) {
        const json& driver = run["tool"]["driver"];
        tool = Lower(driver.value("name", "sarif"));
        if (r == 0) report.version = driver.value("version", "");
      }
      if (r == 0) report.analyzer = tool;
      if (!run.contains("results")) continue;
      const json& results = run["results"];
      if (!results.is_array()) throw fail("runs[" + std::to_string(r) + "].results is not an array");
      for (size_t i = 0; i < results.size(); ++i) {
        const json& res = results[i];
        std::string where = "runs[" + std::to_string(r) + "].results[" + std::to_string(i) + "]";
        std::string rule;
        if (res.contains("ruleId")) {
          rule = res["ruleId"].get<std::string>();
        } else if (res.contains("rule") && res["rule"].contains("id")) {
          rule = res["rule"]["id"].get<std::string>();
        } else {
          throw fail(where + " has no ruleId");
        }
        std::string file;
        int line = 0;
        if (res.contains("locations") && !res["locations"].empty()) {
          const json& loc = res["locations"][0];
          if (loc.contains("physicalLocation")) {
            const json& phys = loc["physicalLocation"];
            if (phys.contains("artifactLocation")) {
              file = phys["artifactLocation"].value("uri", "");
              if (file.rfind("file://", 0) == 0) file.erase(0, 7);
            }
            if (phys.contains("region")) line = phys["region"].value("startLine", 0);
          }
        }
        std::string message;
        if (res.contains("message")) message = res["message"].value("text", "");
        report.Add(Warning{tool, tool + "/" + rule, file, line, message});
      }
    }
  } catch (const json::exception& e) {
    throw fail(std::string("malformed SARIF: ") + e.what());
  }
  report.Sort();
  return report;
}

WarningReport ParseMiniJson(const std::string& content) {
  WarningReport report;
  report.analyzer = "mini";
  size_t pos = 0;
  bool first = true;
  while (pos < content.size()) {
    size_t nl = content.find('\n', pos);
    size_t end = nl == std::string::npos ? content.size() : nl;
    std::string_view line(content.data() + pos, end - pos);
    if (!Blank(line)) {
      json rec = ReadJson(line, pos);
      if (!rec.is_object()) throw FormatError(pos, "record is not an object");
      Warning w;
      try {
        w.analyzer = rec.at("analyzer").get<std::string>();
        w.rule_id = rec.at("rule").get<std::string>();
        w.file = rec.at("file").get<std::string>();
        w.line = rec.at("line").get<int>();
        w.message = rec.value("message", "");
      } catch (const json::exception& e) {
        throw FormatError(pos, std::string("bad warning record: ") + e.what());
      }
      if (first) report.analyzer = w.analyzer;
      first = false;
      report.Add(std::move(w));
    }
    pos = end + 1;
  }
  report.Sort();
  return report;
}

}  // namespace

std::string_view FormatName(ReportFormat f) {
  switch (f) {
    case ReportFormat::kPmdXml: return "PMD-XML";
    case ReportFormat::kSpotBugsXml: return "SpotBugs-XML";
    case ReportFormat::kSarif: return "SARIF";
    case ReportFormat::kMiniJson: return "MiniJSON";
  }
  return "?";
}

ReportFormat ParseFormat(std::string_view name) {
  std::string n = Lower(std::string(name));
  for (auto f : {ReportFormat::kPmdXml, ReportFormat::kSpotBugsXml, ReportFormat::kSarif,
                 ReportFormat::kMiniJson}) {
    if (Lower(std::string(FormatName(f))) == n) return f;
  }
  throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

WarningReport ParseReport(const RawReport& raw) {
  if (Blank(raw.content)) {
    WarningReport empty;
    switch (raw.format) {
      case ReportFormat::kPmdXml: empty.analyzer = "pmd"; break;
      case ReportFormat::kSpotBugsXml: empty.analyzer = "spotbugs"; break;
      case ReportFormat::kSarif: empty.analyzer = "sarif"; break;
      case ReportFormat::kMiniJson: empty.analyzer = "mini"; break;
    }
    return empty;
  }
  switch (raw.format) {
    case ReportFormat::kPmdXml: return ParsePmd(raw.content);
    case ReportFormat::kSpotBugsXml: return ParseSpotBugs(raw.content);
    case ReportFormat::kSarif: return ParseSarif(raw.content);
    case ReportFormat::kMiniJson: return ParseMiniJson(raw.content);
  }
  return {};
}

std::string WriteMiniJson(const WarningReport& report) {
  std::string out;
  for (const auto& w : report.All()) {
    json rec = {{"analyzer", w.analyzer.empty() ? report.analyzer : w.analyzer},
                {"rule", w.rule_id},
                {"file", w.file},
                {"line", w.line},
                {"message", w.message}};
    out += rec.dump();
    out += '\n';
  }
  return out;
}

}  // namespace mtsca::adapters
