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

#ifndef MTSCA_JAVA_LEXER_H_
#define MTSCA_JAVA_LEXER_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mtsca::java {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(int line, int col, const std::string& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) +
                           ": " + what),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

enum class TokenKind { kIdent, kInt, kString, kChar, kPunct, kEof };

struct Token {
  TokenKind kind = TokenKind::kEof;
  std::string text;  // literal contents exclude the quotes
  int line = 1;
  int col = 1;
  int end_line = 1;
  int end_col = 1;  // inclusive

  bool Is(std::string_view s) const {
    return (kind == TokenKind::kPunct || kind == TokenKind::kIdent) && text == s;
  }
};

// Comments and whitespace are dropped. Throws SyntaxError on malformed input.
std::vector<Token> Lex(std::string_view text);

bool IsKeyword(std::string_view word);

}  // namespace mtsca::java

#endif  // MTSCA_JAVA_LEXER_H_
