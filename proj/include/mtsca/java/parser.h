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

#ifndef MTSCA_JAVA_PARSER_H_
#define MTSCA_JAVA_PARSER_H_

#include <string_view>

#include "mtsca/java/ast.h"
#include "mtsca/java/lexer.h"

namespace mtsca::java {

// Parses one source file of the supported Java subset. Every node gets a Span,
// parentheses are kept as Paren nodes and comments are dropped.
//
// Throws SyntaxError (with line, column and the expected construct) on input
// outside the subset.
CompilationUnit Parse(const SourceFile& source);
CompilationUnit Parse(std::string_view text, std::string_view path = "");

}  // namespace mtsca::java

#endif  // MTSCA_JAVA_PARSER_H_
