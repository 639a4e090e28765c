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

#ifndef MTSCA_JAVA_PRINTER_H_
#define MTSCA_JAVA_PRINTER_H_

#include <string>

#include "mtsca/java/ast.h"

namespace mtsca::java {

// Canonical, deterministic rendering: four-space indentation, one statement
// per line, braces on the opening line. Parentheses appear exactly where the
// tree has Paren nodes. Parse(Print(u)) == u for every parsed unit u.
std::string Print(const CompilationUnit& unit);

std::string PrintType(const TypeRef& type);
// Single-line rendering where possible; nested bodies use `indent` levels.
std::string PrintExpr(const Expr& expr, int indent = 0);
std::string PrintStmt(const Stmt& stmt, int indent = 0);
std::string PrintMember(const Member& member, int indent = 0);

}  // namespace mtsca::java

#endif  // MTSCA_JAVA_PRINTER_H_
