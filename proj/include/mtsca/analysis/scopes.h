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

#ifndef MTSCA_ANALYSIS_SCOPES_H_
#define MTSCA_ANALYSIS_SCOPES_H_

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mtsca/analysis/weakness.h"
#include "mtsca/java/ast.h"

namespace mtsca::analysis {

struct ResolvedType {
  enum class Kind { kUnknown, kPrimitive, kClass, kArray };

  Kind kind = Kind::kUnknown;
  std::string name;  // primitive or class name; element name for arrays
  int dims = 0;      // array dimensions, > 0 only for kArray

  static ResolvedType Unknown() { return {}; }
  static ResolvedType Primitive(std::string n) { return {Kind::kPrimitive, std::move(n), 0}; }
  static ResolvedType Class(std::string n) { return {Kind::kClass, std::move(n), 0}; }
  static ResolvedType Array(std::string element, int dims) {
    return {Kind::kArray, std::move(element), dims};
  }
  // Result of an unresolved member whose value is known to be an object.
  static ResolvedType UnknownObject() { return Class("Object"); }

  bool IsUnknown() const { return kind == Kind::kUnknown; }
  bool IsPrimitive() const { return kind == Kind::kPrimitive; }
  bool IsReference() const { return kind == Kind::kClass || kind == Kind::kArray; }
  bool IsArray() const { return kind == Kind::kArray; }
  bool IsString() const { return kind == Kind::kClass && (name == "String" || name == "java.lang.String"); }
  // Element type of an array; Unknown otherwise.
  ResolvedType Element() const;
  std::string ToString() const;
  bool operator==(const ResolvedType&) const = default;
};

ResolvedType FromTypeRef(const java::TypeRef& type);

enum class SymbolKind { kLocal, kParam, kField, kMethod, kType };

struct SymbolEntry {
  int id = -1;
  SymbolKind kind = SymbolKind::kLocal;
  std::string name;
  ResolvedType declared_type;  // return type for methods
  java::ModifierSet mods;      // locals and params carry kFinal when declared final
  java::Span decl_span;
  bool is_constant = false;    // static final field with constant initializer
  std::vector<ResolvedType> param_types;  // methods only
  int scope = -1;              // scope the symbol is declared in
  int owner_type = -1;         // enclosing type scope of the declaration

  // Declaration node; exactly one is set except for enum constants.
  const java::FieldDecl* field = nullptr;
  const java::MethodDecl* method = nullptr;
  const java::TypeDecl* type = nullptr;
  const java::Stmt* local = nullptr;  // LocalVarDecl statement
  const java::Param* param = nullptr;
  const java::LambdaParam* lambda_param = nullptr;
  const java::CatchClause* catch_clause = nullptr;
  const java::Expr* init = nullptr;   // initializer, when present

  bool IsVariable() const {
    return kind == SymbolKind::kLocal || kind == SymbolKind::kParam ||
           kind == SymbolKind::kField;
  }
  bool IsStatic() const { return mods.Has(java::Modifier::kStatic); }
  bool IsFinal() const { return mods.Has(java::Modifier::kFinal); }
};

enum class ScopeKind { kUnit, kType, kMethod, kBlock, kLambda };

struct Scope {
  int id = -1;
  ScopeKind kind = ScopeKind::kUnit;
  int parent = -1;
  bool is_static = false;   // code here has no enclosing instance
  bool anonymous = false;   // anonymous class body
  std::string type_name;    // type scopes: simple name, or the created type
  const java::TypeDecl* type = nullptr;
  const java::ClassBody* body = nullptr;
  std::map<std::string, int> vars;  // fields, locals and params
  std::map<std::string, std::vector<int>> methods;
  std::map<std::string, int> types;
};

// Scopes, symbols and name bindings of one compilation unit. Bindings are
// keyed by node identity, so the tree must outlive the ScopeTree.
class ScopeTree {
 public:
  const std::vector<Scope>& scopes() const { return scopes_; }
  const std::vector<SymbolEntry>& symbols() const { return symbols_; }
  const Scope& scope(int id) const { return scopes_[static_cast<size_t>(id)]; }
  const SymbolEntry& symbol(int id) const { return symbols_[static_cast<size_t>(id)]; }

  // Symbol a Name, FieldAccess or MethodCall refers to; null when unresolved.
  const SymbolEntry* BindingOf(const java::Expr& e) const;
  // Symbol introduced by a declaration node (FieldDecl, MethodDecl, TypeDecl,
  // LocalVarDecl Stmt, Param, LambdaParam or CatchClause).
  const SymbolEntry* DeclOf(const void* decl) const;
  // Innermost scope containing an expression; -1 when not visited.
  int ScopeOf(const java::Expr& e) const;
  // Innermost type scope enclosing `scope` (itself when it is one).
  int TypeScopeOf(int scope) const;
  int TypeScopeFor(const java::TypeDecl* decl) const;
  int TypeScopeFor(const java::ClassBody* body) const;

  // Lookups from a scope outward, as the builder performs them.
  const SymbolEntry* LookupVar(int scope, std::string_view name) const;
  const SymbolEntry* LookupType(int scope, std::string_view name) const;
  // Type scope of an in-unit class named `name`, seen from `scope`.
  int ClassScopeByName(int scope, std::string_view name) const;
  // Fields of a type scope, following in-unit superclasses.
  const SymbolEntry* MemberField(int type_scope, std::string_view name) const;
  std::vector<const SymbolEntry*> MemberMethods(int type_scope, std::string_view name) const;

  // Everything below is used by the builder.
  int AddScope(Scope s);
  int AddSymbol(SymbolEntry s);
  Scope& mutable_scope(int id) { return scopes_[static_cast<size_t>(id)]; }
  SymbolEntry& mutable_symbol(int id) { return symbols_[static_cast<size_t>(id)]; }
  void Bind(const java::Expr* e, int symbol) { bindings_[e] = symbol; }
  void SetDecl(const void* decl, int symbol) { decls_[decl] = symbol; }
  void SetScope(const java::Expr* e, int scope) { expr_scopes_[e] = scope; }
  void SetTypeScope(const void* decl, int scope) { type_scopes_[decl] = scope; }

 private:
  std::vector<Scope> scopes_;
  std::vector<SymbolEntry> symbols_;
  std::unordered_map<const java::Expr*, int> bindings_;
  std::unordered_map<const void*, int> decls_;
  std::unordered_map<const java::Expr*, int> expr_scopes_;
  std::unordered_map<const void*, int> type_scopes_;
};

// Builds scopes and resolves every Name, FieldAccess and MethodCall that can
// be resolved within the unit. With W_SCOPE_FLAT, all method-level scopes of
// a type collapse into one shared scope where the first declaration of a name
// wins.
ScopeTree BuildScopes(const java::CompilationUnit& unit, const WeaknessConfig& cfg);

}  // namespace mtsca::analysis

#endif  // MTSCA_ANALYSIS_SCOPES_H_
