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

#include "mtsca/java/parser.h"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mtsca::java {
namespace {

const std::set<std::string, std::less<>> kPrimitiveNames = {
    "int", "long", "boolean", "char", "byte", "short", "float", "double"};

std::optional<Modifier> ModifierFor(std::string_view word) {
  for (const auto& [mod, spelling] : ModifierSpellings()) {
    if (word == spelling) return mod;
  }
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  CompilationUnit ParseUnit() {
    CompilationUnit unit;
    if (At("package")) {
      Advance();
      unit.package_name = ParseQualifiedName("package name");
      Expect(";");
    }
    while (At("import")) {
      Advance();
      Import imp;
      if (At("static")) {
        Advance();
        imp.is_static = true;
      }
      imp.name = ExpectIdent("imported name");
      while (At(".")) {
        Advance();
        if (At("*")) {
          Advance();
          imp.wildcard = true;
          break;
        }
        imp.name += "." + ExpectIdent("imported name");
      }
      Expect(";");
      unit.imports.push_back(std::move(imp));
    }
    while (!AtEof()) {
      if (At(";")) {
        Advance();
        continue;
      }
      const Token& start = Peek();
      std::vector<Annotation> annotations;
      ModifierSet mods = ParseModifiers(&annotations);
      if (!AtTypeKeyword()) Fail("class, interface or enum declaration");
      unit.types.push_back(ParseTypeDecl(start, std::move(annotations), mods));
    }
    if (unit.types.empty()) Fail("at least one type declaration");
    return unit;
  }

 private:
  // ---- token helpers -----------------------------------------------------

  const Token& Peek(size_t ahead = 0) const {
    size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& Prev() const { return toks_[pos_ - 1]; }
  bool AtEof() const { return Peek().kind == TokenKind::kEof; }
  bool At(std::string_view s, size_t ahead = 0) const { return Peek(ahead).Is(s); }
  bool AtIdent(size_t ahead = 0) const {
    const Token& t = Peek(ahead);
    return t.kind == TokenKind::kIdent && !IsKeyword(t.text);
  }
  bool AtTypeKeyword() const {
    return At("class") || At("interface") || At("enum");
  }
  bool AtPrimitive(size_t ahead = 0) const {
    const Token& t = Peek(ahead);
    return t.kind == TokenKind::kIdent && kPrimitiveNames.count(t.text) > 0;
  }
  void Advance() {
    if (pos_ < toks_.size() - 1) ++pos_;
  }

  [[noreturn]] void Fail(const std::string& expected) const {
    const Token& t = Peek();
    std::string found = t.kind == TokenKind::kEof ? "end of input"
                                                  : "'" + t.text + "'";
    throw SyntaxError(t.line, t.col, "expected " + expected + ", found " + found);
  }

  void Expect(std::string_view s) {
    if (!At(s)) Fail("'" + std::string(s) + "'");
    Advance();
  }

  std::string ExpectIdent(const std::string& what) {
    if (!AtIdent()) Fail(what);
    std::string text = Peek().text;
    Advance();
    return text;
  }

  Span SpanFrom(const Token& start) const {
    const Token& end = Prev();
    return Span{start.line, start.col, end.end_line, end.end_col};
  }

  std::string ParseQualifiedName(const std::string& what) {
    std::string name = ExpectIdent(what);
    while (At(".") && AtIdent(1)) {
      Advance();
      name += "." + ExpectIdent(what);
    }
    return name;
  }

  // ---- declarations ------------------------------------------------------

  Annotation ParseAnnotation() {
    Expect("@");
    if (At("interface")) Fail("annotation name (annotation types are unsupported)");
    Annotation ann;
    ann.name = ParseQualifiedName("annotation name");
    if (At("(")) {
      Advance();
      std::vector<std::string> run;
      int depth = 0;
      while (depth > 0 || !At(")")) {
        if (AtEof()) Fail("')' closing annotation arguments");
        const Token& t = Peek();
        if (t.Is("(")) ++depth;
        if (t.Is(")")) --depth;
        if (t.kind == TokenKind::kString) {
          run.push_back("\"" + t.text + "\"");
        } else if (t.kind == TokenKind::kChar) {
          run.push_back("'" + t.text + "'");
        } else {
          run.push_back(t.text);
        }
        Advance();
      }
      Advance();
      ann.args = std::move(run);
    }
    return ann;
  }

  ModifierSet ParseModifiers(std::vector<Annotation>* annotations) {
    ModifierSet mods;
    while (true) {
      if (At("@") && !At("interface", 1)) {
        annotations->push_back(ParseAnnotation());
        continue;
      }
      if (Peek().kind != TokenKind::kIdent) break;
      if (Peek().text == "transient" || Peek().text == "native" ||
          Peek().text == "strictfp") {
        Fail("a supported modifier");
      }
      auto mod = ModifierFor(Peek().text);
      if (!mod) break;
      // `default` only acts as a modifier when a declaration follows.
      if (*mod == Modifier::kDefault && At(":", 1)) break;
      if (mods.Has(*mod)) Fail("no repeated modifier");
      mods.Add(*mod);
      if (mods.AccessCount() > 1) Fail("at most one access modifier");
      Advance();
    }
    return mods;
  }

  std::vector<std::string> ParseTypeParams() {
    std::vector<std::string> params;
    Expect("<");
    params.push_back(ExpectIdent("type parameter"));
    while (At(",")) {
      Advance();
      params.push_back(ExpectIdent("type parameter"));
    }
    if (At("extends")) Fail("'>' (type parameter bounds are unsupported)");
    Expect(">");
    return params;
  }

  std::vector<TypeRef> ParseTypeList() {
    std::vector<TypeRef> types;
    types.push_back(ParseType());
    while (At(",")) {
      Advance();
      types.push_back(ParseType());
    }
    return types;
  }

  TypeDecl ParseTypeDecl(const Token& start, std::vector<Annotation> annotations,
                         ModifierSet mods) {
    TypeDecl decl;
    decl.annotations = std::move(annotations);
    decl.mods = mods;
    if (At("class")) {
      decl.kind = TypeKind::kClass;
    } else if (At("interface")) {
      decl.kind = TypeKind::kInterface;
    } else {
      decl.kind = TypeKind::kEnum;
    }
    Advance();
    decl.name = ExpectIdent("type name");
    if (At("<")) decl.type_params = ParseTypeParams();
    if (At("extends")) {
      Advance();
      if (decl.kind == TypeKind::kInterface) {
        decl.interfaces = ParseTypeList();
      } else if (decl.kind == TypeKind::kClass) {
        decl.superclass = ParseType();
      } else {
        Fail("enum body");
      }
    }
    if (At("implements")) {
      if (decl.kind == TypeKind::kInterface) Fail("interface body");
      Advance();
      decl.interfaces = ParseTypeList();
    }
    Expect("{");
    if (decl.kind == TypeKind::kEnum) {
      while (AtIdent()) {
        decl.enum_constants.push_back(ExpectIdent("enum constant"));
        if (At("(") || At("{")) Fail("',' (enum constant bodies are unsupported)");
        if (!At(",")) break;
        Advance();
      }
      if (At(";")) {
        Advance();
      } else if (!At("}")) {
        Fail("';' or '}' after enum constants");
      }
    }
    decl.members = ParseMembers(decl.name);
    Expect("}");
    decl.span = SpanFrom(start);
    return decl;
  }

  std::vector<Member> ParseMembers(const std::string& class_name) {
    std::vector<Member> members;
    while (!At("}")) {
      if (AtEof()) Fail("'}' closing class body");
      if (At(";")) {
        Advance();
        continue;
      }
      members.push_back(ParseMember(class_name));
    }
    return members;
  }

  Member ParseMember(const std::string& class_name) {
    const Token& start = Peek();
    if (At("{") || (At("static") && At("{", 1))) {
      InitializerBlock init;
      if (At("static")) {
        init.is_static = true;
        Advance();
      }
      init.body = Box<Stmt>(ParseBlock());
      init.span = SpanFrom(start);
      return Member{std::move(init)};
    }
    std::vector<Annotation> annotations;
    ModifierSet mods = ParseModifiers(&annotations);
    if (AtTypeKeyword()) {
      return Member{Box<TypeDecl>(ParseTypeDecl(start, std::move(annotations), mods))};
    }
    std::vector<std::string> type_params;
    if (At("<")) type_params = ParseTypeParams();
    if (AtIdent() && Peek().text == class_name && At("(", 1)) {
      if (!type_params.empty()) Fail("constructor without type parameters");
      ConstructorDecl ctor;
      ctor.mods = mods;
      ctor.annotations = std::move(annotations);
      ctor.name = ExpectIdent("constructor name");
      ctor.params = ParseParams();
      if (At("throws")) {
        Advance();
        ctor.throws = ParseTypeList();
      }
      ctor.body = Box<Stmt>(ParseBlock());
      ctor.span = SpanFrom(start);
      return Member{std::move(ctor)};
    }
    TypeRef type = ParseTypeOrVoid();
    std::string name = ExpectIdent("member name");
    if (At("(")) {
      MethodDecl method;
      method.mods = mods;
      method.annotations = std::move(annotations);
      method.type_params = std::move(type_params);
      method.return_type = std::move(type);
      method.name = std::move(name);
      method.params = ParseParams();
      if (At("throws")) {
        Advance();
        method.throws = ParseTypeList();
      }
      if (At(";")) {
        Advance();
      } else {
        method.body = Box<Stmt>(ParseBlock());
      }
      method.span = SpanFrom(start);
      return Member{std::move(method)};
    }
    if (!type_params.empty()) Fail("'(' after generic method name");
    if (type.name == "void") Fail("'(' (fields cannot be void)");
    FieldDecl field;
    field.mods = mods;
    field.annotations = std::move(annotations);
    field.type = std::move(type);
    field.name = std::move(name);
    if (At("[")) Fail("'=' or ';' (C-style array declarators are unsupported)");
    if (At(",")) Fail("';' (one declarator per field)");
    if (At("=")) {
      Advance();
      field.init = Box<Expr>(ParseVarInit());
    }
    Expect(";");
    field.span = SpanFrom(start);
    return Member{std::move(field)};
  }

  std::vector<Param> ParseParams() {
    std::vector<Param> params;
    std::set<std::string> seen;
    Expect("(");
    while (!At(")")) {
      if (!params.empty()) Expect(",");
      Param p;
      while (At("final") || At("@")) {
        if (At("final")) {
          if (p.is_final) Fail("no repeated modifier");
          p.is_final = true;
          Advance();
        } else {
          p.annotations.push_back(ParseAnnotation());
        }
      }
      p.type = ParseType();
      if (At("...")) Fail("parameter name (varargs are unsupported)");
      p.name = ExpectIdent("parameter name");
      if (!seen.insert(p.name).second) Fail("a unique parameter name");
      params.push_back(std::move(p));
    }
    Expect(")");
    return params;
  }

  // ---- types -------------------------------------------------------------

  TypeRef ParseTypeOrVoid() {
    if (At("void")) {
      Advance();
      return TypeRef{"void", {}, 0};
    }
    return ParseType();
  }

  TypeRef ParseType() {
    auto type = TryParseType(/*allow_diamond=*/false);
    if (!type) Fail("type");
    return std::move(*type);
  }

  std::optional<TypeRef> TryParseType(bool allow_diamond, bool* diamond = nullptr) {
    size_t saved = pos_;
    TypeRef type;
    if (AtPrimitive()) {
      type.name = Peek().text;
      Advance();
    } else if (AtIdent()) {
      type.name = Peek().text;
      Advance();
      while (At(".") && AtIdent(1)) {
        Advance();
        type.name += "." + Peek().text;
        Advance();
      }
      if (At("<")) {
        Advance();
        if (At(">") && allow_diamond) {
          Advance();
          if (diamond) *diamond = true;
        } else {
          while (true) {
            auto arg = TryParseType(false);
            if (!arg) {
              pos_ = saved;
              return std::nullopt;
            }
            type.args.push_back(std::move(*arg));
            if (At(",")) {
              Advance();
              continue;
            }
            break;
          }
          if (!At(">")) {
            pos_ = saved;
            return std::nullopt;
          }
          Advance();
        }
      }
    } else {
      return std::nullopt;
    }
    while (At("[") && At("]", 1)) {
      Advance();
      Advance();
      ++type.dims;
    }
    return type;
  }

  // ---- statements --------------------------------------------------------

  Stmt ParseBlock() {
    const Token& start = Peek();
    Expect("{");
    Block block;
    while (!At("}")) {
      if (AtEof()) Fail("'}' closing block");
      block.stmts.push_back(ParseStatement());
    }
    Expect("}");
    return MakeStmt(std::move(block), SpanFrom(start));
  }

  bool AtLocalVarDecl() {
    if (At("final") || At("@")) return true;
    if (AtPrimitive()) return true;
    if (!AtIdent()) return false;
    size_t saved = pos_;
    bool result = false;
    if (TryParseType(false) && AtIdent() && (At("=", 1) || At(";", 1) ||
                                             At(":", 1) || At(",", 1))) {
      result = true;
    }
    pos_ = saved;
    return result;
  }

  LocalVarDecl ParseLocalVarDeclBody() {
    LocalVarDecl decl;
    while (At("final") || At("@")) {
      if (At("final")) {
        if (decl.is_final) Fail("no repeated modifier");
        decl.is_final = true;
        Advance();
      } else {
        decl.annotations.push_back(ParseAnnotation());
      }
    }
    decl.type = ParseType();
    decl.name = ExpectIdent("variable name");
    if (At(":")) Fail("'=' or ';' (enhanced for loops are unsupported)");
    if (At(",")) Fail("';' (one declarator per declaration)");
    if (At("[")) Fail("'=' or ';' (C-style array declarators are unsupported)");
    if (At("=")) {
      Advance();
      decl.init = Box<Expr>(ParseVarInit());
    }
    return decl;
  }

  Stmt ParseStatement() {
    const Token& start = Peek();
    if (At("{")) return ParseBlock();
    if (At(";")) {
      Advance();
      return MakeStmt(EmptyStmt{}, SpanFrom(start));
    }
    if (At("if")) {
      Advance();
      If s;
      s.cond = ParseParenCondition();
      s.then_branch = Box<Stmt>(ParseStatement());
      if (At("else")) {
        Advance();
        s.else_branch = Box<Stmt>(ParseStatement());
      }
      return MakeStmt(std::move(s), SpanFrom(start));
    }
    if (At("while")) {
      Advance();
      While s;
      s.cond = ParseParenCondition();
      s.body = Box<Stmt>(ParseStatement());
      return MakeStmt(std::move(s), SpanFrom(start));
    }
    if (At("for")) return ParseFor();
    if (At("return")) {
      Advance();
      Return s;
      if (!At(";")) s.value = Box<Expr>(ParseExpr());
      Expect(";");
      return MakeStmt(std::move(s), SpanFrom(start));
    }
    if (At("throw")) {
      Advance();
      Throw s{ParseExpr()};
      Expect(";");
      return MakeStmt(std::move(s), SpanFrom(start));
    }
    if (At("break")) {
      Advance();
      if (AtIdent()) Fail("';' (labeled statements are unsupported)");
      Expect(";");
      return MakeStmt(Break{}, SpanFrom(start));
    }
    if (At("continue")) {
      Advance();
      if (AtIdent()) Fail("';' (labeled statements are unsupported)");
      Expect(";");
      return MakeStmt(Continue{}, SpanFrom(start));
    }
    if (At("try")) return ParseTry();
    if (At("switch") || At("do") || At("synchronized") || At("assert") ||
        At("class") || At("interface") || At("enum")) {
      Fail("a supported statement");
    }
    if (AtIdent() && At(":", 1)) Fail("a statement (labels are unsupported)");
    if (AtLocalVarDecl()) {
      LocalVarDecl decl = ParseLocalVarDeclBody();
      Expect(";");
      return MakeStmt(std::move(decl), SpanFrom(start));
    }
    Expr e = ParseExpr();
    CheckStatementExpression(e, start);
    Expect(";");
    return MakeStmt(ExprStmt{std::move(e)}, SpanFrom(start));
  }

  void CheckStatementExpression(const Expr& e, const Token& start) const {
    if (e.Is<Assign>() || e.Is<MethodCall>() || e.Is<ObjectCreation>()) return;
    if (const auto* u = e.As<Unary>()) {
      if (u->op != UnaryOp::kNot && u->op != UnaryOp::kNeg) return;
    }
    throw SyntaxError(start.line, start.col,
                      "expected a statement expression (assignment, "
                      "increment, call or creation)");
  }

  Expr ParseParenCondition() {
    Expect("(");
    Expr cond = ParseExpr();
    Expect(")");
    return cond;
  }

  Stmt ParseFor() {
    const Token& start = Peek();
    Expect("for");
    Expect("(");
    For s;
    if (!At(";")) {
      const Token& init_start = Peek();
      if (AtLocalVarDecl()) {
        LocalVarDecl decl = ParseLocalVarDeclBody();
        s.init.push_back(MakeStmt(std::move(decl), SpanFrom(init_start)));
      } else {
        while (true) {
          const Token& es = Peek();
          Expr e = ParseExpr();
          CheckStatementExpression(e, es);
          s.init.push_back(MakeStmt(ExprStmt{std::move(e)}, SpanFrom(es)));
          if (!At(",")) break;
          Advance();
        }
      }
    }
    Expect(";");
    if (!At(";")) s.cond = Box<Expr>(ParseExpr());
    Expect(";");
    if (!At(")")) {
      while (true) {
        const Token& es = Peek();
        Expr e = ParseExpr();
        CheckStatementExpression(e, es);
        s.update.push_back(std::move(e));
        if (!At(",")) break;
        Advance();
      }
    }
    Expect(")");
    s.body = Box<Stmt>(ParseStatement());
    return MakeStmt(std::move(s), SpanFrom(start));
  }

  Stmt ParseTry() {
    const Token& start = Peek();
    Expect("try");
    Try s;
    if (At("(")) {
      Advance();
      while (!At(")")) {
        const Token& rs = Peek();
        LocalVarDecl decl = ParseLocalVarDeclBody();
        if (!decl.init) Fail("'=' initializing the resource");
        s.resources.push_back(MakeStmt(std::move(decl), SpanFrom(rs)));
        if (At(";")) {
          Advance();
        } else if (!At(")")) {
          Fail("';' or ')' after resource");
        }
      }
      Expect(")");
      if (s.resources.empty()) Fail("at least one resource");
    }
    s.body = Box<Stmt>(ParseBlock());
    while (At("catch")) {
      const Token& cs = Peek();
      Advance();
      Expect("(");
      CatchClause clause;
      if (At("final")) {
        clause.is_final = true;
        Advance();
      }
      clause.types.push_back(ParseType());
      while (At("|")) {
        Advance();
        clause.types.push_back(ParseType());
      }
      clause.name = ExpectIdent("exception variable name");
      Expect(")");
      clause.body = Box<Stmt>(ParseBlock());
      clause.span = SpanFrom(cs);
      s.catches.push_back(std::move(clause));
    }
    if (At("finally")) {
      Advance();
      s.finally_block = Box<Stmt>(ParseBlock());
    }
    if (s.resources.empty() && s.catches.empty() && !s.finally_block) {
      Fail("'catch' or 'finally'");
    }
    return MakeStmt(std::move(s), SpanFrom(start));
  }

  // ---- expressions -------------------------------------------------------

  Expr ParseVarInit() {
    if (At("{")) return ParseArrayInit();
    return ParseExpr();
  }

  Expr ParseArrayInit() {
    const Token& start = Peek();
    Expect("{");
    ArrayInit init;
    while (!At("}")) {
      init.elements.push_back(ParseVarInit());
      if (!At(",")) break;
      Advance();
    }
    Expect("}");
    return MakeExpr(std::move(init), SpanFrom(start));
  }

  Expr ParseExpr() { return ParseAssignment(); }

  bool AtLambda() const {
    if (AtIdent() && At("->", 1)) return true;
    if (!At("(")) return false;
    int depth = 0;
    for (size_t i = pos_; i < toks_.size(); ++i) {
      if (toks_[i].Is("(")) ++depth;
      if (toks_[i].Is(")")) {
        if (--depth == 0) return i + 1 < toks_.size() && toks_[i + 1].Is("->");
      }
      if (toks_[i].kind == TokenKind::kEof || toks_[i].Is(";") ||
          toks_[i].Is("{")) {
        return false;
      }
    }
    return false;
  }

  Expr ParseLambda() {
    const Token& start = Peek();
    Lambda lambda;
    if (AtIdent()) {
      lambda.parenthesized = false;
      lambda.params.push_back(LambdaParam{ExpectIdent("lambda parameter"), {}, false});
    } else {
      Expect("(");
      std::set<std::string> seen;
      while (!At(")")) {
        if (!lambda.params.empty()) Expect(",");
        LambdaParam p;
        if (At("final")) {
          p.is_final = true;
          Advance();
        }
        if (AtIdent() && (At(",", 1) || At(")", 1))) {
          if (p.is_final) Fail("parameter type after 'final'");
          p.name = ExpectIdent("lambda parameter");
        } else {
          p.type = ParseType();
          p.name = ExpectIdent("lambda parameter");
        }
        if (!seen.insert(p.name).second) Fail("a unique lambda parameter name");
        lambda.params.push_back(std::move(p));
      }
      Expect(")");
      bool typed = !lambda.params.empty() && lambda.params[0].type.has_value();
      for (const auto& p : lambda.params) {
        if (p.type.has_value() != typed) {
          throw SyntaxError(start.line, start.col,
                            "expected lambda parameters to be all typed or all "
                            "untyped");
        }
      }
    }
    Expect("->");
    if (At("{")) {
      lambda.block_body = Box<Stmt>(ParseBlock());
    } else {
      lambda.expr_body = Box<Expr>(ParseExpr());
    }
    return MakeExpr(std::move(lambda), SpanFrom(start));
  }

  Expr ParseAssignment() {
    if (AtLambda()) return ParseLambda();
    const Token& start = Peek();
    Expr lhs = ParseOr();
    static const std::pair<const char*, AssignOp> kOps[] = {
        {"=", AssignOp::kAssign}, {"+=", AssignOp::kAdd},
        {"-=", AssignOp::kSub},   {"*=", AssignOp::kMul},
        {"/=", AssignOp::kDiv},   {"%=", AssignOp::kRem}};
    for (const auto& [spelling, op] : kOps) {
      if (At(spelling)) {
        if (!lhs.Is<Name>() && !lhs.Is<FieldAccess>() && !lhs.Is<ArrayAccess>()) {
          Fail("end of expression (left side is not assignable)");
        }
        Advance();
        Expr rhs = ParseAssignment();
        return MakeExpr(Assign{op, Box<Expr>(std::move(lhs)), Box<Expr>(std::move(rhs))},
                        SpanFrom(start));
      }
    }
    if (At("?")) Fail("end of expression (conditional operator is unsupported)");
    return lhs;
  }

  template <typename Next>
  Expr ParseBinaryLevel(Next next,
                        std::initializer_list<std::pair<const char*, BinaryOp>> ops) {
    const Token& start = Peek();
    Expr lhs = (this->*next)();
    while (true) {
      bool matched = false;
      for (const auto& [spelling, op] : ops) {
        if (At(spelling)) {
          Advance();
          Expr rhs = (this->*next)();
          lhs = MakeExpr(Binary{op, Box<Expr>(std::move(lhs)), Box<Expr>(std::move(rhs))},
                         SpanFrom(start));
          matched = true;
          break;
        }
      }
      if (!matched) return lhs;
    }
  }

  Expr ParseOr() { return ParseBinaryLevel(&Parser::ParseAnd, {{"||", BinaryOp::kOr}}); }
  Expr ParseAnd() {
    return ParseBinaryLevel(&Parser::ParseEquality, {{"&&", BinaryOp::kAnd}});
  }
  Expr ParseEquality() {
    return ParseBinaryLevel(&Parser::ParseRelational,
                            {{"==", BinaryOp::kEq}, {"!=", BinaryOp::kNe}});
  }
  Expr ParseRelational() {
    Expr e = ParseBinaryLevel(&Parser::ParseAdditive,
                              {{"<=", BinaryOp::kLe}, {">=", BinaryOp::kGe},
                               {"<", BinaryOp::kLt}, {">", BinaryOp::kGt}});
    if (At("instanceof")) Fail("end of expression (instanceof is unsupported)");
    return e;
  }
  Expr ParseAdditive() {
    return ParseBinaryLevel(&Parser::ParseMultiplicative,
                            {{"+", BinaryOp::kAdd}, {"-", BinaryOp::kSub}});
  }
  Expr ParseMultiplicative() {
    return ParseBinaryLevel(&Parser::ParseUnary, {{"*", BinaryOp::kMul},
                                                  {"/", BinaryOp::kDiv},
                                                  {"%", BinaryOp::kRem}});
  }

  bool StartsCastOperand(const Token& t) const {
    if (t.kind == TokenKind::kInt || t.kind == TokenKind::kString ||
        t.kind == TokenKind::kChar) {
      return true;
    }
    if (t.kind == TokenKind::kIdent) {
      if (!IsKeyword(t.text)) return true;
      return t.text == "this" || t.text == "new" || t.text == "true" ||
             t.text == "false" || t.text == "null";
    }
    return t.Is("(") || t.Is("!");
  }

  std::optional<Expr> TryParseCast() {
    const Token& start = Peek();
    size_t saved = pos_;
    Advance();  // (
    bool primitive = AtPrimitive();
    auto type = TryParseType(false);
    if (type && At(")") && (primitive || StartsCastOperand(Peek(1)))) {
      if (primitive && type->dims == 0 && !StartsCastOperand(Peek(1)) &&
          !At("-", 1)) {
        pos_ = saved;
        return std::nullopt;
      }
      Advance();  // )
      Expr operand = ParseUnary();
      return MakeExpr(Cast{std::move(*type), Box<Expr>(std::move(operand))},
                      SpanFrom(start));
    }
    pos_ = saved;
    return std::nullopt;
  }

  Expr ParseUnary() {
    const Token& start = Peek();
    std::optional<UnaryOp> op;
    if (At("!")) op = UnaryOp::kNot;
    if (At("-")) op = UnaryOp::kNeg;
    if (At("++")) op = UnaryOp::kPreInc;
    if (At("--")) op = UnaryOp::kPreDec;
    if (At("+") || At("~")) Fail("expression (unary plus and bitwise ops are unsupported)");
    if (op) {
      Advance();
      Expr operand = ParseUnary();
      if ((*op == UnaryOp::kPreInc || *op == UnaryOp::kPreDec) &&
          !IsAssignable(operand)) {
        throw SyntaxError(start.line, start.col, "expected assignable operand");
      }
      return MakeExpr(Unary{*op, Box<Expr>(std::move(operand))}, SpanFrom(start));
    }
    if (At("(") && !AtLambda()) {
      if (auto cast = TryParseCast()) return std::move(*cast);
    }
    return ParsePostfix();
  }

  static bool IsAssignable(const Expr& e) {
    return e.Is<Name>() || e.Is<FieldAccess>() || e.Is<ArrayAccess>();
  }

  Expr ParsePostfix() {
    const Token& start = Peek();
    Expr e = ParsePrimary();
    while (true) {
      if (At(".")) {
        Advance();
        std::vector<TypeRef> type_args;
        if (At("<")) {
          Advance();
          type_args = ParseTypeList();
          Expect(">");
        }
        if (At("class")) Fail("member name (class literals are unsupported)");
        std::string name = ExpectIdent("member name");
        if (At("(")) {
          MethodCall call;
          call.receiver = Box<Expr>(std::move(e));
          call.name = std::move(name);
          call.type_args = std::move(type_args);
          call.args = ParseArgs();
          e = MakeExpr(std::move(call), SpanFrom(start));
        } else {
          if (!type_args.empty()) Fail("'(' after explicit type arguments");
          e = MakeExpr(FieldAccess{Box<Expr>(std::move(e)), std::move(name)},
                       SpanFrom(start));
        }
      } else if (At("[")) {
        Advance();
        Expr index = ParseExpr();
        Expect("]");
        e = MakeExpr(ArrayAccess{Box<Expr>(std::move(e)), Box<Expr>(std::move(index))},
                     SpanFrom(start));
      } else if (At("++") || At("--")) {
        if (!IsAssignable(e)) Fail("end of expression (operand not assignable)");
        UnaryOp op = At("++") ? UnaryOp::kPostInc : UnaryOp::kPostDec;
        Advance();
        e = MakeExpr(Unary{op, Box<Expr>(std::move(e))}, SpanFrom(start));
      } else if (At("::")) {
        Fail("end of expression (method references are unsupported)");
      } else {
        return e;
      }
    }
  }

  std::vector<Expr> ParseArgs() {
    std::vector<Expr> args;
    Expect("(");
    while (!At(")")) {
      if (!args.empty()) Expect(",");
      args.push_back(ParseExpr());
    }
    Expect(")");
    return args;
  }

  Expr ParsePrimary() {
    const Token& start = Peek();
    switch (start.kind) {
      case TokenKind::kInt:
        Advance();
        return MakeExpr(IntLit{start.text}, SpanFrom(start));
      case TokenKind::kString:
        Advance();
        return MakeExpr(StringLit{start.text}, SpanFrom(start));
      case TokenKind::kChar:
        Advance();
        return MakeExpr(CharLit{start.text}, SpanFrom(start));
      default:
        break;
    }
    if (At("true") || At("false")) {
      bool value = At("true");
      Advance();
      return MakeExpr(BoolLit{value}, SpanFrom(start));
    }
    if (At("null")) {
      Advance();
      return MakeExpr(NullLit{}, SpanFrom(start));
    }
    if (At("this")) {
      Advance();
      if (At("(")) Fail("member access (constructor chaining is unsupported)");
      return MakeExpr(This{}, SpanFrom(start));
    }
    if (At("(")) {
      Advance();
      Expr inner = ParseExpr();
      Expect(")");
      return MakeExpr(Paren{Box<Expr>(std::move(inner))}, SpanFrom(start));
    }
    if (At("new")) return ParseCreation();
    if (AtIdent()) {
      std::string name = ExpectIdent("identifier");
      if (At("(")) {
        MethodCall call;
        call.name = std::move(name);
        call.args = ParseArgs();
        return MakeExpr(std::move(call), SpanFrom(start));
      }
      return MakeExpr(Name{std::move(name)}, SpanFrom(start));
    }
    if (At("super")) Fail("expression ('super' is unsupported)");
    Fail("expression");
  }

  Expr ParseCreation() {
    const Token& start = Peek();
    Expect("new");
    bool diamond = false;
    TypeRef type;
    if (AtPrimitive()) {
      type.name = Peek().text;
      Advance();
    } else {
      if (!AtIdent()) Fail("type after 'new'");
      type.name = ParseQualifiedName("type after 'new'");
      if (At("<")) {
        Advance();
        if (At(">")) {
          diamond = true;
        } else {
          type.args = ParseTypeList();
        }
        Expect(">");
      }
    }
    if (At("[")) {
      if (diamond) Fail("'(' after diamond");
      ArrayCreation arr;
      arr.element = std::move(type);
      while (At("[")) {
        Advance();
        if (At("]")) {
          Advance();
          ++arr.extra_dims;
        } else {
          if (arr.extra_dims > 0) Fail("']'");
          arr.dim_exprs.push_back(ParseExpr());
          Expect("]");
        }
      }
      if (arr.dim_exprs.empty()) {
        if (!At("{")) Fail("array initializer");
        arr.init = Box<Expr>(ParseArrayInit());
      }
      return MakeExpr(std::move(arr), SpanFrom(start));
    }
    if (type.IsPrimitive()) Fail("'[' after primitive type");
    ObjectCreation creation;
    creation.type = std::move(type);
    creation.diamond = diamond;
    creation.args = ParseArgs();
    if (At("{")) {
      Advance();
      ClassBody body;
      body.members = ParseMembers("");
      Expect("}");
      creation.body = Box<ClassBody>(std::move(body));
    }
    return MakeExpr(std::move(creation), SpanFrom(start));
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace

CompilationUnit Parse(const SourceFile& source) {
  return Parse(source.text, source.path);
}

CompilationUnit Parse(std::string_view text, std::string_view path) {
  Parser parser(Lex(text));
  CompilationUnit unit = parser.ParseUnit();
  unit.path = std::string(path);
  return unit;
}

}  // namespace mtsca::java
