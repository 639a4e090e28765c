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

#ifndef MTSCA_TESTS_SUPPORT_PROGRAM_GEN_H_
#define MTSCA_TESTS_SUPPORT_PROGRAM_GEN_H_

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace mtsca::testing {

// Random Java programs inside the supported subset. They are well scoped
// (every name is declared before use) and type-correct for the shapes the
// rules and operators look at, which is all the properties need.
class ProgramGen {
 public:
  explicit ProgramGen(std::uint64_t seed) : rng_(seed), seed_(seed) {}

  std::string Generate() {
    out_.clear();
    int_fields_.clear();
    bool_fields_.clear();
    array_fields_.clear();
    methods_.clear();
    next_local_ = 0;
    std::string cls = "Gen" + std::to_string(seed_);
    Line(0, "public class " + cls + " {");
    int nfields = Range(1, 4);
    for (int i = 0; i < nfields; ++i) Field(i);
    if (Chance(2)) Line(1, "private static final int LIMIT = " + Literal() + ";");
    int nmethods = Range(1, 4);
    for (int i = 0; i < nmethods; ++i) methods_.push_back({"m" + std::to_string(i), Range(0, 2)});
    if (!array_fields_.empty() && Chance(2)) Getter();
    for (const auto& m : methods_) Method(m);
    if (Chance(2)) {
      Line(1, "");
      Line(1, "static int twice(int x) {");
      Line(2, "return 2 * x;");
      Line(1, "}");
    }
    if (Chance(3)) Nested();
    Line(0, "}");
    return out_;
  }

 private:
  struct MethodSig {
    std::string name;
    int arity;
  };

  int Range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool Chance(int one_in) { return Range(1, one_in) == 1; }
  template <typename T>
  const T& Pick(const std::vector<T>& xs) { return xs[static_cast<size_t>(Range(0, static_cast<int>(xs.size()) - 1))]; }

  void Line(int indent, const std::string& s) {
    out_ += std::string(static_cast<size_t>(indent) * 4, ' ') + s + "\n";
  }

  std::string Literal() { return std::to_string(Range(0, 3) == 0 ? Range(6, 1000) : Range(0, 9)); }

  void Field(int i) {
    std::string name = "f" + std::to_string(i);
    switch (Range(0, 2)) {
      case 0:
        Line(1, std::string(Chance(3) ? "private final " : "private ") + "int " + name + " = " + Literal() + ";");
        int_fields_.push_back(name);
        break;
      case 1:
        Line(1, std::string("private boolean ") + name + " = " + (Chance(2) ? "false" : "true") + ";");
        bool_fields_.push_back(name);
        break;
      default:
        Line(1, "private int[] " + name + " = new int[" + std::to_string(Range(1, 8)) + "];");
        array_fields_.push_back(name);
        break;
    }
  }

  std::string IntExpr(int depth) {
    std::vector<std::string> atoms = locals_;
    for (const auto& f : int_fields_) atoms.push_back(f);
    int choice = depth <= 0 ? Range(0, 1) : Range(0, 5);
    switch (choice) {
      case 0: return Literal();
      case 1: return atoms.empty() ? Literal() : Pick(atoms);
      case 2: return IntExpr(depth - 1) + " " + Pick<std::string>({"+", "-", "*"}) + " " + IntExpr(depth - 1);
      case 3: return "(" + IntExpr(depth - 1) + ")";
      case 4: return array_fields_.empty() ? Literal() : Pick(array_fields_) + ".length";
      default: {
        if (array_fields_.empty()) return Literal();
        return Pick(array_fields_) + "[0]";
      }
    }
  }

  std::string BoolExpr(int depth) {
    int choice = depth <= 0 ? Range(0, 1) : Range(0, 4);
    switch (choice) {
      case 0: return Chance(2) ? "false" : (bool_fields_.empty() ? "true" : Pick(bool_fields_));
      case 1: return IntExpr(1) + " " + Pick<std::string>({"<", ">", "<=", ">=", "==", "!="}) + " " + IntExpr(1);
      case 2: return BoolExpr(depth - 1) + " " + Pick<std::string>({"&&", "||"}) + " " + BoolExpr(depth - 1);
      case 3: return "!(" + BoolExpr(depth - 1) + ")";
      default: return "(" + BoolExpr(depth - 1) + ")";
    }
  }

  std::string Call() {
    const MethodSig& m = Pick(methods_);
    std::string args;
    for (int i = 0; i < m.arity; ++i) args += (i ? ", " : "") + IntExpr(1);
    return m.name + "(" + args + ")";
  }

  void Statement(int indent, int depth) {
    int choice = depth <= 0 ? Range(0, 3) : Range(0, 8);
    switch (choice) {
      case 0: {
        std::string name = "v" + std::to_string(next_local_++);
        if (Chance(4)) {
          Line(indent, "int " + name + ";");
          Line(indent, name + " = " + IntExpr(1) + ";");
        } else {
          Line(indent, std::string(Chance(3) ? "final " : "") + "int " + name + " = " + IntExpr(2) + ";");
        }
        locals_.push_back(name);
        break;
      }
      case 1:
        if (!int_fields_.empty() && Chance(2)) {
          Line(indent, Pick(int_fields_) + (Chance(2) ? "++;" : " += " + IntExpr(1) + ";"));
        } else if (!locals_.empty()) {
          Line(indent, Pick(locals_) + (Chance(2) ? "--;" : " = " + IntExpr(2) + ";"));
        } else {
          Line(indent, Call() + ";");
        }
        break;
      case 2:
        Line(indent, Call() + ";");
        break;
      case 3:
        if (!bool_fields_.empty()) {
          Line(indent, Pick(bool_fields_) + " = " + BoolExpr(1) + ";");
        } else {
          Line(indent, "System.out.println(" + IntExpr(1) + ");");
        }
        break;
      case 4: {
        Line(indent, "if (" + BoolExpr(2) + ") {");
        Block(indent + 1, depth - 1);
        if (Chance(2)) {
          Line(indent, "} else {");
          Block(indent + 1, depth - 1);
        }
        Line(indent, "}");
        break;
      }
      case 5: {
        std::string j = "j" + std::to_string(next_local_++);
        Line(indent, "for (int " + j + " = 0; " + j + " < " + IntExpr(1) + "; " + j + (Chance(2) ? "++" : " += 1") + ") {");
        locals_.push_back(j);
        Block(indent + 1, depth - 1);
        locals_.pop_back();
        Line(indent, "}");
        break;
      }
      case 6: {
        Line(indent, "while (" + BoolExpr(1) + ") {");
        Block(indent + 1, depth - 1);
        Line(indent, "break;");
        Line(indent, "}");
        break;
      }
      case 7: {
        Line(indent, "StringBuilder sb" + std::to_string(next_local_) + " = new StringBuilder();");
        Line(indent, "sb" + std::to_string(next_local_++) + ".append(" + (Chance(2) ? "\"x\"" : "\"xy\"") + ");");
        break;
      }
      default: {
        Line(indent, "Runnable r" + std::to_string(next_local_++) + " = new Runnable() {");
        Line(indent + 1, "public void run() {");
        Line(indent + 2, "System.out.println(" + Literal() + ");");
        Line(indent + 1, "}");
        Line(indent, "};");
        break;
      }
    }
  }

  void Block(int indent, int depth) {
    size_t saved = locals_.size();
    int n = Range(1, 3);
    for (int i = 0; i < n; ++i) Statement(indent, depth);
    locals_.resize(saved);
  }

  void Method(const MethodSig& sig) {
    locals_.clear();
    std::string params;
    for (int i = 0; i < sig.arity; ++i) {
      params += (i ? ", " : "") + std::string("int p") + std::to_string(i);
      locals_.push_back("p" + std::to_string(i));
    }
    std::string mods = Chance(3) ? "private " : "public ";
    Line(1, "");
    Line(1, mods + "int " + sig.name + "(" + params + ") {");
    Block(2, 2);
    Line(2, "return " + IntExpr(2) + ";");
    Line(1, "}");
  }

  void Getter() {
    Line(1, "");
    Line(1, "public int[] getArr() {");
    Line(2, "return " + Pick(array_fields_) + ";");
    Line(1, "}");
  }

  void Nested() {
    Line(1, "");
    Line(1, "static class Inner {");
    Line(2, "private int count = " + Literal() + ";");
    Line(2, "");
    Line(2, "int next() {");
    Line(3, "count++;");
    Line(3, "return count;");
    Line(2, "}");
    Line(1, "}");
  }

  std::mt19937_64 rng_;
  std::uint64_t seed_;
  std::string out_;
  std::vector<std::string> int_fields_;
  std::vector<std::string> bool_fields_;
  std::vector<std::string> array_fields_;
  std::vector<MethodSig> methods_;
  std::vector<std::string> locals_;
  int next_local_ = 0;
};

}  // namespace mtsca::testing

#endif  // MTSCA_TESTS_SUPPORT_PROGRAM_GEN_H_
