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

// Typed AST for the supported Java subset.
//
// Nodes are plain values: copying a CompilationUnit deep-copies the tree, so a
// mutation can rewrite a private copy while the original stays shared and
// immutable. Parenthesized expressions are kept as explicit Paren nodes.
//
// Every node type has a defaulted operator== that implements structural
// equality. Span deliberately compares equal to every other Span, so trees that
// differ only in source positions are equal.

#ifndef MTSCA_JAVA_AST_H_
#define MTSCA_JAVA_AST_H_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mtsca/util/box.h"

namespace mtsca {

template <typename T>
bool operator==(const Box<T>& a, const Box<T>& b) {
  if (!a || !b) return !a && !b;
  return *a == *b;
}

namespace java {

struct Span {
  int start_line = 0;
  int start_col = 0;
  int end_line = 0;
  int end_col = 0;

  bool valid() const { return start_line > 0; }
  bool Contains(const Span& inner) const;
  // Positions are metadata; see the file comment.
  bool operator==(const Span&) const { return true; }
};

bool SameSpan(const Span& a, const Span& b);

enum class Modifier : std::uint16_t {
  kPublic = 1 << 0,
  kPrivate = 1 << 1,
  kProtected = 1 << 2,
  kStatic = 1 << 3,
  kFinal = 1 << 4,
  kAbstract = 1 << 5,
  kVolatile = 1 << 6,
  kSynchronized = 1 << 7,
  kDefault = 1 << 8,
};

class ModifierSet {
 public:
  ModifierSet() = default;
  bool Has(Modifier m) const { return (bits_ & static_cast<std::uint16_t>(m)) != 0; }
  void Add(Modifier m) { bits_ |= static_cast<std::uint16_t>(m); }
  void Remove(Modifier m) { bits_ &= ~static_cast<std::uint16_t>(m); }
  bool empty() const { return bits_ == 0; }
  int AccessCount() const;
  bool operator==(const ModifierSet&) const = default;

 private:
  std::uint16_t bits_ = 0;
};

// Keyword spelling in canonical print order.
const std::vector<std::pair<Modifier, const char*>>& ModifierSpellings();

struct Annotation {
  std::string name;                      // dotted
  std::optional<std::vector<std::string>> args;  // opaque token run
  bool operator==(const Annotation&) const = default;
};

struct TypeRef {
  std::string name;  // dotted, e.g. "int", "java.util.List"
  std::vector<TypeRef> args;
  int dims = 0;

  bool IsPrimitive() const;
  std::string SimpleName() const;
  bool operator==(const TypeRef&) const = default;
};

struct Expr;
struct Stmt;
struct Member;

enum class UnaryOp { kPreInc, kPostInc, kPreDec, kPostDec, kNot, kNeg };
enum class BinaryOp {
  kEq, kNe, kAnd, kOr, kAdd, kSub, kMul, kDiv, kLt, kGt, kLe, kGe, kRem
};
enum class AssignOp { kAssign, kAdd, kSub, kMul, kDiv, kRem };

const char* Spelling(UnaryOp op);
const char* Spelling(BinaryOp op);
const char* Spelling(AssignOp op);
bool IsComparison(BinaryOp op);
bool IsArithmetic(BinaryOp op);

struct IntLit {
  std::string text;  // as written, including any L suffix
  bool operator==(const IntLit&) const = default;
};
struct BoolLit {
  bool value = false;
  bool operator==(const BoolLit&) const = default;
};
struct StringLit {
  std::string raw;  // between the quotes, escapes untouched
  bool operator==(const StringLit&) const = default;
};
struct CharLit {
  std::string raw;
  bool operator==(const CharLit&) const = default;
};
struct NullLit {
  bool operator==(const NullLit&) const = default;
};
struct Name {
  std::string id;
  bool operator==(const Name&) const = default;
};
struct FieldAccess {
  Box<Expr> target;  // This, a type name, or any expression
  std::string name;
  bool operator==(const FieldAccess&) const = default;
};
struct MethodCall {
  Box<Expr> receiver;  // null for an unqualified call
  std::string name;
  std::vector<TypeRef> type_args;
  std::vector<Expr> args;
  bool operator==(const MethodCall&) const = default;
};
struct ClassBody {
  std::vector<Member> members;
  bool operator==(const ClassBody&) const = default;
};
struct ObjectCreation {
  TypeRef type;
  bool diamond = false;
  std::vector<Expr> args;
  Box<ClassBody> body;  // anonymous class body
  bool operator==(const ObjectCreation&) const = default;
};
struct ArrayAccess {
  Box<Expr> array;
  Box<Expr> index;
  bool operator==(const ArrayAccess&) const = default;
};
struct ArrayInit {
  std::vector<Expr> elements;
  bool operator==(const ArrayInit&) const = default;
};
struct ArrayCreation {
  TypeRef element;  // dims == 0
  std::vector<Expr> dim_exprs;
  int extra_dims = 0;
  Box<Expr> init;  // ArrayInit, when dim_exprs is empty
  bool operator==(const ArrayCreation&) const = default;
};
struct Unary {
  UnaryOp op = UnaryOp::kNot;
  Box<Expr> operand;
  bool operator==(const Unary&) const = default;
};
struct Binary {
  BinaryOp op = BinaryOp::kAdd;
  Box<Expr> lhs;
  Box<Expr> rhs;
  bool operator==(const Binary&) const = default;
};
struct Assign {
  AssignOp op = AssignOp::kAssign;
  Box<Expr> target;
  Box<Expr> value;
  bool operator==(const Assign&) const = default;
};
struct LambdaParam {
  std::string name;
  std::optional<TypeRef> type;
  bool is_final = false;
  bool operator==(const LambdaParam&) const = default;
};
struct Lambda {
  std::vector<LambdaParam> params;
  bool parenthesized = true;
  Box<Expr> expr_body;
  Box<Stmt> block_body;  // a Block statement
  bool operator==(const Lambda&) const = default;
};
struct Cast {
  TypeRef type;
  Box<Expr> operand;
  bool operator==(const Cast&) const = default;
};
struct This {
  bool operator==(const This&) const = default;
};
struct Paren {
  Box<Expr> inner;
  bool operator==(const Paren&) const = default;
};

using ExprNode =
    std::variant<IntLit, BoolLit, StringLit, CharLit, NullLit, Name, FieldAccess,
                 MethodCall, ObjectCreation, ArrayAccess, ArrayCreation, ArrayInit,
                 Unary, Binary, Assign, Lambda, Cast, This, Paren>;

struct Expr {
  Span span;
  ExprNode node;

  template <typename T>
  bool Is() const { return std::holds_alternative<T>(node); }
  template <typename T>
  const T* As() const { return std::get_if<T>(&node); }
  template <typename T>
  T* As() { return std::get_if<T>(&node); }
  bool operator==(const Expr&) const = default;
};

template <typename T>
Expr MakeExpr(T node, Span span = {}) {
  return Expr{span, ExprNode(std::move(node))};
}

// Strips any number of enclosing Paren nodes.
const Expr& StripParens(const Expr& e);

struct LocalVarDecl {
  bool is_final = false;
  std::vector<Annotation> annotations;
  TypeRef type;
  std::string name;
  Box<Expr> init;
  bool operator==(const LocalVarDecl&) const = default;
};
struct ExprStmt {
  Expr expr;
  bool operator==(const ExprStmt&) const = default;
};
struct If {
  Expr cond;
  Box<Stmt> then_branch;
  Box<Stmt> else_branch;
  bool operator==(const If&) const = default;
};
struct While {
  Expr cond;
  Box<Stmt> body;
  bool operator==(const While&) const = default;
};
struct For {
  std::vector<Stmt> init;  // LocalVarDecl or ExprStmt statements
  Box<Expr> cond;
  std::vector<Expr> update;
  Box<Stmt> body;
  bool operator==(const For&) const = default;
};
struct Return {
  Box<Expr> value;
  bool operator==(const Return&) const = default;
};
struct Throw {
  Expr value;
  bool operator==(const Throw&) const = default;
};
struct Block {
  std::vector<Stmt> stmts;
  bool operator==(const Block&) const = default;
};
struct CatchClause {
  bool is_final = false;
  std::vector<TypeRef> types;  // multi-catch alternatives
  std::string name;
  Box<Stmt> body;  // Block
  Span span;
  bool operator==(const CatchClause&) const = default;
};
struct Try {
  std::vector<Stmt> resources;  // LocalVarDecl statements
  Box<Stmt> body;               // Block
  std::vector<CatchClause> catches;
  Box<Stmt> finally_block;      // Block
  bool operator==(const Try&) const = default;
};
struct Break {
  bool operator==(const Break&) const = default;
};
struct Continue {
  bool operator==(const Continue&) const = default;
};
struct EmptyStmt {
  bool operator==(const EmptyStmt&) const = default;
};

using StmtNode = std::variant<LocalVarDecl, ExprStmt, If, While, For, Return,
                              Throw, Block, Try, Break, Continue, EmptyStmt>;

struct Stmt {
  Span span;
  StmtNode node;

  template <typename T>
  bool Is() const { return std::holds_alternative<T>(node); }
  template <typename T>
  const T* As() const { return std::get_if<T>(&node); }
  template <typename T>
  T* As() { return std::get_if<T>(&node); }
  bool operator==(const Stmt&) const = default;
};

template <typename T>
Stmt MakeStmt(T node, Span span = {}) {
  return Stmt{span, StmtNode(std::move(node))};
}

struct Param {
  bool is_final = false;
  std::vector<Annotation> annotations;
  TypeRef type;
  std::string name;
  bool operator==(const Param&) const = default;
};

struct FieldDecl {
  Span span;
  ModifierSet mods;
  std::vector<Annotation> annotations;
  TypeRef type;
  std::string name;
  Box<Expr> init;
  bool operator==(const FieldDecl&) const = default;
};

struct MethodDecl {
  Span span;
  ModifierSet mods;
  std::vector<Annotation> annotations;
  std::vector<std::string> type_params;
  TypeRef return_type;  // "void" for no result
  std::string name;
  std::vector<Param> params;
  std::vector<TypeRef> throws;
  Box<Stmt> body;  // Block; null for abstract and interface methods
  bool operator==(const MethodDecl&) const = default;
};

struct ConstructorDecl {
  Span span;
  ModifierSet mods;
  std::vector<Annotation> annotations;
  std::string name;
  std::vector<Param> params;
  std::vector<TypeRef> throws;
  Box<Stmt> body;  // Block
  bool operator==(const ConstructorDecl&) const = default;
};

struct InitializerBlock {
  Span span;
  bool is_static = false;
  Box<Stmt> body;  // Block
  bool operator==(const InitializerBlock&) const = default;
};

enum class TypeKind { kClass, kInterface, kEnum };

struct TypeDecl {
  Span span;
  TypeKind kind = TypeKind::kClass;
  std::string name;
  ModifierSet mods;
  std::vector<Annotation> annotations;
  std::vector<std::string> type_params;
  std::optional<TypeRef> superclass;
  std::vector<TypeRef> interfaces;
  std::vector<std::string> enum_constants;
  std::vector<Member> members;
  bool operator==(const TypeDecl&) const = default;
};

using MemberNode = std::variant<FieldDecl, MethodDecl, ConstructorDecl,
                                Box<TypeDecl>, InitializerBlock>;

struct Member {
  MemberNode node;

  template <typename T>
  const T* As() const { return std::get_if<T>(&node); }
  template <typename T>
  T* As() { return std::get_if<T>(&node); }
  const TypeDecl* AsType() const;
  TypeDecl* AsType();
  Span span() const;
  bool operator==(const Member&) const = default;
};

struct Import {
  std::string name;
  bool is_static = false;
  bool wildcard = false;
  bool operator==(const Import&) const = default;
};

struct CompilationUnit {
  std::string path;  // not part of structural equality
  std::optional<std::string> package_name;
  std::vector<Import> imports;
  std::vector<TypeDecl> types;

  bool operator==(const CompilationUnit& other) const {
    return package_name == other.package_name && imports == other.imports &&
           types == other.types;
  }
};

struct SourceFile {
  std::string path;
  std::string text;
};

}  // namespace java
}  // namespace mtsca

#endif  // MTSCA_JAVA_AST_H_
