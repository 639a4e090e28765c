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

#include "mtsca/java/lexer.h"

#include <array>
#include <cctype>
#include <set>
#include <string>

namespace mtsca::java {
namespace {

// Longest first, so that maximal munch falls out of a linear scan.
constexpr std::array<std::string_view, 38> kPuncts = {
    "...", "->", "++", "--", "&&", "||", "==", "!=", "<=", ">=", "+=", "-=",
    "*=",  "/=", "%=", "::", "(",  ")",  "{",  "}",  "[",  "]",  ";",  ",",
    ".",   "@",  "=",  "<",  ">",  "!",  "+",  "-",  "*",  "/",  "%",  "?",
    ":",   "|"};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> Run() {
    std::vector<Token> tokens;
    while (true) {
      SkipTrivia();
      if (pos_ >= text_.size()) break;
      tokens.push_back(Next());
    }
    Token eof;
    eof.kind = TokenKind::kEof;
    eof.line = eof.end_line = line_;
    eof.col = eof.end_col = col_;
    tokens.push_back(eof);
    return tokens;
  }

 private:
  char Peek(size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void SkipTrivia() {
    while (pos_ < text_.size()) {
      char c = Peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f') {
        Advance();
      } else if (c == '/' && Peek(1) == '/') {
        while (pos_ < text_.size() && Peek() != '\n') Advance();
      } else if (c == '/' && Peek(1) == '*') {
        int line = line_, col = col_;
        Advance();
        Advance();
        while (!(Peek() == '*' && Peek(1) == '/')) {
          if (pos_ >= text_.size()) {
            throw SyntaxError(line, col, "unterminated block comment");
          }
          Advance();
        }
        Advance();
        Advance();
      } else {
        break;
      }
    }
  }

  Token Next() {
    Token tok;
    tok.line = line_;
    tok.col = col_;
    char c = Peek();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$') {
      tok.kind = TokenKind::kIdent;
      while (std::isalnum(static_cast<unsigned char>(Peek())) || Peek() == '_' ||
             Peek() == '$') {
        tok.text.push_back(Peek());
        Advance();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      tok.kind = TokenKind::kInt;
      bool hex = c == '0' && (Peek(1) == 'x' || Peek(1) == 'X');
      if (hex) {
        tok.text.push_back(Peek());
        Advance();
        tok.text.push_back(Peek());
        Advance();
      }
      while (std::isxdigit(static_cast<unsigned char>(Peek())) || Peek() == '_') {
        if (!hex && !std::isdigit(static_cast<unsigned char>(Peek())) &&
            Peek() != '_') {
          break;
        }
        tok.text.push_back(Peek());
        Advance();
      }
      if (Peek() == 'L' || Peek() == 'l') {
        tok.text.push_back(Peek());
        Advance();
      }
      if (Peek() == '.' || std::isalpha(static_cast<unsigned char>(Peek()))) {
        throw SyntaxError(line_, col_,
                          "unsupported numeric literal (only integer literals "
                          "are in the subset)");
      }
    } else if (c == '"' || c == '\'') {
      tok.kind = c == '"' ? TokenKind::kString : TokenKind::kChar;
      Advance();
      while (Peek() != c) {
        if (pos_ >= text_.size() || Peek() == '\n') {
          throw SyntaxError(tok.line, tok.col, "unterminated literal");
        }
        if (Peek() == '\\') {
          tok.text.push_back(Peek());
          Advance();
          if (pos_ >= text_.size()) {
            throw SyntaxError(tok.line, tok.col, "unterminated literal");
          }
        }
        tok.text.push_back(Peek());
        Advance();
      }
      Advance();
    } else {
      tok.kind = TokenKind::kPunct;
      for (std::string_view p : kPuncts) {
        if (text_.substr(pos_, p.size()) == p) {
          tok.text = std::string(p);
          for (size_t i = 0; i < p.size(); ++i) Advance();
          break;
        }
      }
      if (tok.text.empty()) {
        throw SyntaxError(line_, col_,
                          std::string("unexpected character '") + c + "'");
      }
    }
    tok.end_line = line_;
    tok.end_col = col_ - 1;
    return tok;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<Token> Lex(std::string_view text) { return Lexer(text).Run(); }

bool IsKeyword(std::string_view word) {
  static const std::set<std::string_view> kKeywords = {
      "abstract", "boolean",  "break",     "byte",       "case",    "catch",
      "char",     "class",    "continue",  "default",    "do",      "double",
      "else",     "enum",     "extends",   "final",      "finally", "float",
      "for",      "if",       "implements", "import",    "instanceof",
      "int",      "interface", "long",     "native",     "new",     "package",
      "private",  "protected", "public",   "return",     "short",   "static",
      "super",    "switch",   "synchronized", "this",    "throw",   "throws",
      "transient", "try",     "void",      "volatile",   "while",   "true",
      "false",    "null"};
  return kKeywords.count(word) > 0;
}

}  // namespace mtsca::java
