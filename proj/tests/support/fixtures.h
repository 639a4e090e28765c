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

#ifndef MTSCA_TESTS_SUPPORT_FIXTURES_H_
#define MTSCA_TESTS_SUPPORT_FIXTURES_H_

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "support/corpus.h"

namespace mtsca::testing {

// Tab-separated rows, '#' lines skipped.
inline std::vector<std::vector<std::string>> ReadTsv(const std::string& path) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(ReadFile(path));
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream cols(line);
    for (std::string cell; std::getline(cols, cell, '\t');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

struct ExpectedVerdict {
  std::string file;
  int line;
  std::string rule;
  bool operator<(const ExpectedVerdict& o) const {
    return std::tie(file, line, rule) < std::tie(o.file, o.line, o.rule);
  }
  bool operator==(const ExpectedVerdict& o) const {
    return std::tie(file, line, rule) == std::tie(o.file, o.line, o.rule);
  }
};

inline std::vector<ExpectedVerdict> VerdictTable() {
  std::vector<ExpectedVerdict> out;
  for (const auto& r : ReadTsv(SourceDir() + "/tests/fixtures/verdicts.tsv")) {
    out.push_back({r.at(0), std::stoi(r.at(1)), r.at(2)});
  }
  return out;
}

struct MatrixRow {
  std::string weakness;
  std::string op;  // "-" when no operator is expected
  std::string rule;
  std::string direction;
  std::string witness;
};

inline std::vector<MatrixRow> WeaknessMatrix() {
  std::vector<MatrixRow> out;
  for (const auto& r : ReadTsv(SourceDir() + "/tests/fixtures/weakness_matrix.tsv")) {
    out.push_back({r.at(0), r.at(1), r.at(2), r.at(3), r.at(4)});
  }
  return out;
}

}  // namespace mtsca::testing

#endif  // MTSCA_TESTS_SUPPORT_FIXTURES_H_
