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
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cstdlib>
#include <filesystem>
#include <thread>

#include "mtsca/campaign/campaign.h"
#include "mtsca/rules/rules.h"

namespace mtsca::campaign {
namespace {

namespace fs = std::filesystem;

std::string Trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string Resolve(std::string_view value, const std::string& base_dir) {
  fs::path p{std::string(value)};
  if (p.is_relative() && !base_dir.empty()) p = fs::path(base_dir) / p;
  return p.lexically_normal().string();
}

long long ToInt(std::string_view key, const std::string& value) {
  try {
    size_t used = 0;
    long long n = std::stoll(value, &used);
    if (used == value.size()) return n;
  } catch (const std::exception&) {
  }
  throw ConfigError(std::string(key) + ": not an integer: '" + value + "'");
}

bool ToBool(std::string_view key, const std::string& value) {
  std::string v = value;
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(std::string(key) + ": not a boolean: '" + value + "'");
}

}  // namespace

std::string AnalyzerTarget::Describe() const {
  if (external) return spec.name + " (" + std::string(adapters::FormatName(spec.format)) + ")";
  std::string out = "mini";
  if (rules != "all") out += " rules=" + rules;
  out += weaknesses.empty() ? " (correct mode)" : " (weaknesses: " + weaknesses.ToString() + ")";
  return out;
}

int CampaignConfig::DefaultJobs() {
  if (const char* env = std::getenv("MTSCA_JOBS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void CampaignConfig::Set(std::string_view key_in, std::string_view value_in,
                         const std::string& base_dir) {
  std::string key = Trim(key_in);
  std::string value = Trim(value_in);
  try {
    if (key == "corpus") {
      corpus_dir = Resolve(value, base_dir);
    } else if (key == "operators") {
      operators = mutation::ParseOperatorList(value);
    } else if (key == "seed") {
      long long n = ToInt(key, value);
      if (n < 0) throw ConfigError("seed: must be non-negative");
      seed = static_cast<uint64_t>(n);
    } else if (key == "analyzer") {
      if (value == "mini") {
        analyzer.external = false;
      } else if (value.rfind("external:", 0) == 0) {
        analyzer.external = true;
        analyzer.spec = adapters::AnalyzerSpec::Load(Resolve(value.substr(9), base_dir));
      } else {
        throw ConfigError("analyzer: expected 'mini' or 'external:<spec-file>', got '" + value +
                          "'");
      }
    } else if (key == "weakness" || key == "weaknesses") {
      analyzer.weaknesses = value.empty() || value == "none"
                                ? analysis::WeaknessConfig{}
                                : analysis::WeaknessConfig::FromString(value);
    } else if (key == "rules") {
      rules::ParseRuleList(value);
      analyzer.rules = value;
    } else if (key == "jobs") {
      long long n = ToInt(key, value);
      if (n < 1) throw ConfigError("jobs: must be at least 1");
      jobs = static_cast<int>(n);
    } else if (key == "out") {
      out_dir = Resolve(value, base_dir);
    } else if (key == "strict_location") {
      strict_location = ToBool(key, value);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(key + ": " + e.what());
  }
}

CampaignConfig CampaignConfig::Load(const std::string& path) {
  boost::property_tree::ptree kv;
  try {
    boost::property_tree::read_ini(path, kv);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(e.what());
  }
  CampaignConfig config;
  std::string base = fs::path(path).parent_path().string();
  for (const auto& [key, node] : kv) {
    if (!node.empty()) throw ConfigError(path + ": sections are not supported ([" + key + "])");
    config.Set(key, node.data(), base);
  }
  return config;
}

void CampaignConfig::Validate() const {
  if (operators.empty()) throw ConfigError("operators: empty list");
  if (jobs < 1) throw ConfigError("jobs: must be at least 1");
  if (analyzer.external) {
    analyzer.spec.Validate();
    if (out_dir.empty()) throw ConfigError("out: required with an external analyzer");
  }
  std::error_code ec;
  bool any = false;
  if (!corpus_dir.empty() && fs::is_directory(corpus_dir, ec)) {
    for (auto it = fs::recursive_directory_iterator(corpus_dir, ec);
         !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
      if (it->is_regular_file() && it->path().extension() == ".java") {
        any = true;
        break;
      }
    }
  }
  if (!any) {
    throw ConfigError("corpus nonempty: no .java files under '" + corpus_dir + "'");
  }
}

}  // namespace mtsca::campaign
