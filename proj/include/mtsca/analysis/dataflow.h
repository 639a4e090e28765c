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

#ifndef MTSCA_ANALYSIS_DATAFLOW_H_
#define MTSCA_ANALYSIS_DATAFLOW_H_

#include <map>
#include <set>
#include <vector>

#include "mtsca/analysis/scopes.h"
#include "mtsca/analysis/weakness.h"
#include "mtsca/java/ast.h"

namespace mtsca::analysis {

struct DefUseEvent {
  enum class Kind { kDef, kUse };

  Kind kind = Kind::kUse;
  int symbol = -1;  // ScopeTree symbol id of a local or parameter
  int node = -1;    // CFG node holding the event
  java::Span span;
  // Defining or using construct: a Name, Assign or Unary expression, a
  // LocalVarDecl statement, a Param or a CatchClause.
  const void* site = nullptr;
  bool at_entry = false;    // parameter value on method entry
  bool synthetic = false;   // declaration without initializer
};

// Reaching definitions over a statement-level control-flow graph. Node 0 is
// the method entry and node 1 the exit. Events of one node are stored
// contiguously in evaluation order.
struct DefUseInfo {
  std::vector<DefUseEvent> events;
  std::vector<std::vector<int>> succ;       // CFG edges
  std::vector<std::set<int>> reach_in;      // def event ids reaching each node
  std::map<int, std::vector<int>> use_defs;  // use event -> reaching defs
  std::vector<int> unused_defs;             // defs that reach no use

  bool empty() const { return events.empty(); }
  std::vector<int> DefsOf(int symbol) const;
};

// Correct mode orders the right-hand side of an assignment before the
// definition of its target. With W_DF_LTR the target is defined first. With
// W_R8_INIT_ONLY a declaration without initializer also counts as a
// definition. Uses inside lambdas and anonymous class bodies count at the
// enclosing statement.
DefUseInfo ReachingDefs(const java::MethodDecl& method, const ScopeTree& scopes,
                        const WeaknessConfig& cfg);
DefUseInfo ReachingDefs(const java::ConstructorDecl& ctor, const ScopeTree& scopes,
                        const WeaknessConfig& cfg);
// Lambda bodies are analyzed like method bodies; the enclosing method only
// sees the captured uses.
DefUseInfo ReachingDefs(const java::Lambda& lambda, const ScopeTree& scopes,
                        const WeaknessConfig& cfg);
DefUseInfo ReachingDefs(const std::vector<java::Param>& params, const java::Stmt* body,
                        const ScopeTree& scopes, const WeaknessConfig& cfg);

}  // namespace mtsca::analysis

#endif  // MTSCA_ANALYSIS_DATAFLOW_H_
