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

#include "mtsca/analysis/scopes.h"

#include <type_traits>

#include "mtsca/analysis/types.h"

namespace mtsca::analysis {

using namespace java;  // NOLINT(build/namespaces)

ResolvedType ResolvedType::Element() const {
  if (kind != Kind::kArray) return Unknown();
  if (dims > 1) return Array(name, dims - 1);
  TypeRef element{name, {}, 0};
  return element.IsPrimitive() ? Primitive(name) : Class(name);
}

std::string ResolvedType::ToString() const {
  switch (kind) {
    case Kind::kUnknown:
      return "?";
    case Kind::kPrimitive:
    case Kind::kClass:
      return name;
    case Kind::kArray: {
      std::string out = name;
      for (int i = 0; i < dims; ++i) out += "[]";
      return out;
    }
  }
  return "?";
}

ResolvedType FromTypeRef(const TypeRef& type) {
  if (type.dims > 0) return ResolvedType::Array(type.name, type.dims);
  if (type.IsPrimitive() || type.name == "void") return ResolvedType::Primitive(type.name);
  return ResolvedType::Class(type.name);
}

const SymbolEntry* ScopeTree::BindingOf(const Expr& e) const {
  auto it = bindings_.find(&e);
  return it == bindings_.end() ? nullptr : &symbol(it->second);
}

const SymbolEntry* ScopeTree::DeclOf(const void* decl) const {
  auto it = decls_.find(decl);
  return it == decls_.end() ? nullptr : &symbol(it->second);
}

int ScopeTree::ScopeOf(const Expr& e) const {
  auto it = expr_scopes_.find(&e);
  return it == expr_scopes_.end() ? -1 : it->second;
}

int ScopeTree::TypeScopeOf(int s) const {
  while (s >= 0 && scope(s).kind != ScopeKind::kType) s = scope(s).parent;
  return s;
}

int ScopeTree::TypeScopeFor(const TypeDecl* decl) const {
  auto it = type_scopes_.find(decl);
  return it == type_scopes_.end() ? -1 : it->second;
}

int ScopeTree::TypeScopeFor(const ClassBody* body) const {
  auto it = type_scopes_.find(body);
  return it == type_scopes_.end() ? -1 : it->second;
}

const SymbolEntry* ScopeTree::LookupVar(int s, std::string_view name) const {
  for (; s >= 0; s = scope(s).parent) {
    const Scope& sc = scope(s);
    auto it = sc.vars.find(std::string(name));
    if (it != sc.vars.end()) return &symbol(it->second);
    if (sc.kind == ScopeKind::kType) {
      if (const SymbolEntry* inherited = MemberField(s, name)) return inherited;
    }
  }
  return nullptr;
}

const SymbolEntry* ScopeTree::LookupType(int s, std::string_view name) const {
  for (; s >= 0; s = scope(s).parent) {
    const Scope& sc = scope(s);
    auto it = sc.types.find(std::string(name));
    if (it != sc.types.end()) return &symbol(it->second);
  }
  return nullptr;
}

int ScopeTree::ClassScopeByName(int s, std::string_view name) const {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t dot = name.find('.', start);
    parts.emplace_back(name.substr(start, dot == std::string_view::npos ? dot : dot - start));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  int cur = -1;
  if (const SymbolEntry* first = LookupType(s, parts[0])) {
    cur = TypeScopeFor(first->type);
  } else {
    for (const Scope& sc : scopes_) {
      if (sc.kind == ScopeKind::kType && !sc.anonymous && sc.type_name == parts[0]) {
        cur = sc.id;
        break;
      }
    }
  }
  for (size_t i = 1; i < parts.size() && cur >= 0; ++i) {
    auto it = scope(cur).types.find(parts[i]);
    cur = it == scope(cur).types.end() ? -1 : TypeScopeFor(symbol(it->second).type);
  }
  return cur;
}

namespace {

// Supertypes of a type scope that are declared in the unit.
std::vector<int> InUnitSupertypes(const ScopeTree& tree, int type_scope) {
  const Scope& sc = tree.scope(type_scope);
  std::vector<std::string> names;
  if (sc.anonymous) {
    names.push_back(sc.type_name);
  } else if (sc.type) {
    if (sc.type->superclass) names.push_back(sc.type->superclass->name);
    for (const auto& i : sc.type->interfaces) names.push_back(i.name);
  }
  std::vector<int> out;
  for (const auto& n : names) {
    int s = tree.ClassScopeByName(sc.parent, n);
    if (s >= 0 && s != type_scope) out.push_back(s);
  }
  return out;
}

}  // namespace

const SymbolEntry* ScopeTree::MemberField(int type_scope, std::string_view name) const {
  std::vector<int> work{type_scope};
  std::vector<int> seen;
  while (!work.empty()) {
    int s = work.front();
    work.erase(work.begin());
    bool visited = false;
    for (int v : seen) visited |= v == s;
    if (visited) continue;
    seen.push_back(s);
    auto it = scope(s).vars.find(std::string(name));
    if (it != scope(s).vars.end() && symbol(it->second).kind == SymbolKind::kField) {
      return &symbol(it->second);
    }
    for (int sup : InUnitSupertypes(*this, s)) work.push_back(sup);
  }
  return nullptr;
}

std::vector<const SymbolEntry*> ScopeTree::MemberMethods(int type_scope,
                                                         std::string_view name) const {
  std::vector<int> work{type_scope};
  std::vector<int> seen;
  while (!work.empty()) {
    int s = work.front();
    work.erase(work.begin());
    bool visited = false;
    for (int v : seen) visited |= v == s;
    if (visited) continue;
    seen.push_back(s);
    auto it = scope(s).methods.find(std::string(name));
    if (it != scope(s).methods.end()) {
      std::vector<const SymbolEntry*> out;
      for (int id : it->second) out.push_back(&symbol(id));
      return out;
    }
    for (int sup : InUnitSupertypes(*this, s)) work.push_back(sup);
  }
  return {};
}

int ScopeTree::AddScope(Scope s) {
  s.id = static_cast<int>(scopes_.size());
  scopes_.push_back(std::move(s));
  return scopes_.back().id;
}

int ScopeTree::AddSymbol(SymbolEntry s) {
  s.id = static_cast<int>(symbols_.size());
  symbols_.push_back(std::move(s));
  return symbols_.back().id;
}

namespace {

class Builder {
 public:
  Builder(const CompilationUnit& unit, const WeaknessConfig& cfg, ScopeTree& tree)
      : unit_(unit), cfg_(cfg), tree_(tree) {}

  void Run() {
    Scope unit_scope;
    unit_scope.kind = ScopeKind::kUnit;
    unit_scope.is_static = true;
    int root = tree_.AddScope(unit_scope);
    for (const auto& t : unit_.types) DeclareType(t, root, true);
    for (const auto& t : unit_.types) VisitType(t);
    WeaknessConfig correct;
    for (const auto& sym : tree_.symbols()) {
      if (sym.kind == SymbolKind::kField && sym.IsStatic() && sym.IsFinal() && sym.init &&
          ConstEval(*sym.init, tree_, correct)) {
        tree_.mutable_symbol(sym.id).is_constant = true;
      }
    }
  }

 private:
  int DeclareType(const TypeDecl& t, int parent, bool parent_static) {
    SymbolEntry sym;
    sym.kind = SymbolKind::kType;
    sym.name = t.name;
    sym.declared_type = ResolvedType::Class(t.name);
    sym.mods = t.mods;
    sym.decl_span = t.span;
    sym.scope = parent;
    sym.owner_type = tree_.TypeScopeOf(parent);
    sym.type = &t;
    int id = tree_.AddSymbol(sym);
    tree_.SetDecl(&t, id);
    tree_.mutable_scope(parent).types.emplace(t.name, id);

    Scope sc;
    sc.kind = ScopeKind::kType;
    sc.parent = parent;
    sc.type = &t;
    sc.type_name = t.name;
    sc.is_static = parent_static || t.mods.Has(Modifier::kStatic) ||
                   t.kind != TypeKind::kClass;
    int s = tree_.AddScope(sc);
    tree_.SetTypeScope(&t, s);

    ResolvedType self = ResolvedType::Class(t.name);
    for (const auto& constant : t.enum_constants) {
      SymbolEntry c;
      c.kind = SymbolKind::kField;
      c.name = constant;
      c.declared_type = self;
      c.mods.Add(Modifier::kPublic);
      c.mods.Add(Modifier::kStatic);
      c.mods.Add(Modifier::kFinal);
      c.decl_span = t.span;
      c.scope = s;
      c.owner_type = s;
      tree_.mutable_scope(s).vars.emplace(constant, tree_.AddSymbol(c));
    }
    DeclareMembers(t.members, s, t.kind == TypeKind::kInterface);
    return s;
  }

  void DeclareMembers(const std::vector<Member>& members, int s, bool in_interface) {
    for (const auto& m : members) {
      if (const auto* f = m.As<FieldDecl>()) {
        SymbolEntry sym;
        sym.kind = SymbolKind::kField;
        sym.name = f->name;
        sym.declared_type = FromTypeRef(f->type);
        sym.mods = f->mods;
        if (in_interface) {
          sym.mods.Add(Modifier::kStatic);
          sym.mods.Add(Modifier::kFinal);
        }
        sym.decl_span = f->span;
        sym.scope = s;
        sym.owner_type = s;
        sym.field = f;
        sym.init = f->init.get();
        int id = tree_.AddSymbol(sym);
        tree_.SetDecl(f, id);
        tree_.mutable_scope(s).vars.emplace(f->name, id);
      } else if (const auto* md = m.As<MethodDecl>()) {
        SymbolEntry sym;
        sym.kind = SymbolKind::kMethod;
        sym.name = md->name;
        sym.declared_type = FromTypeRef(md->return_type);
        sym.mods = md->mods;
        sym.decl_span = md->span;
        sym.scope = s;
        sym.owner_type = s;
        sym.method = md;
        for (const auto& p : md->params) sym.param_types.push_back(FromTypeRef(p.type));
        int id = tree_.AddSymbol(sym);
        tree_.SetDecl(md, id);
        tree_.mutable_scope(s).methods[md->name].push_back(id);
      } else if (const TypeDecl* nested = m.AsType()) {
        DeclareType(*nested, s, false);
      }
    }
  }

  void VisitType(const TypeDecl& t) { VisitMembers(t.members, tree_.TypeScopeFor(&t)); }

  void VisitMembers(const std::vector<Member>& members, int s) {
    for (const auto& m : members) {
      if (const auto* f = m.As<FieldDecl>()) {
        if (!f->init) continue;
        int fs = NewScope(ScopeKind::kMethod, s, f->mods.Has(Modifier::kStatic));
        VisitExpr(*f->init, fs);
      } else if (const auto* md = m.As<MethodDecl>()) {
        int ms = MethodScope(s, md->mods.Has(Modifier::kStatic));
        for (const auto& p : md->params) DeclareParam(p, ms);
        if (md->body) VisitBlockIn(*md->body, ms);
      } else if (const auto* c = m.As<ConstructorDecl>()) {
        int ms = MethodScope(s, false);
        for (const auto& p : c->params) DeclareParam(p, ms);
        VisitBlockIn(*c->body, ms);
      } else if (const auto* init = m.As<InitializerBlock>()) {
        int ms = MethodScope(s, init->is_static);
        VisitBlockIn(*init->body, ms);
      } else if (const TypeDecl* nested = m.AsType()) {
        VisitType(*nested);
      }
    }
  }

  int NewScope(ScopeKind kind, int parent, bool is_static) {
    Scope sc;
    sc.kind = kind;
    sc.parent = parent;
    sc.is_static = is_static;
    return tree_.AddScope(sc);
  }

  int MethodScope(int type_scope, bool is_static) {
    if (!cfg_.Has(WeaknessId::kScopeFlat)) {
      return NewScope(ScopeKind::kMethod, type_scope, is_static);
    }
    auto it = flat_scopes_.find(type_scope);
    if (it != flat_scopes_.end()) return it->second;
    int s = NewScope(ScopeKind::kMethod, type_scope, false);
    flat_scopes_[type_scope] = s;
    return s;
  }

  // Scope that receives a local declaration made in `s`.
  int DeclScope(int s) const {
    if (!cfg_.Has(WeaknessId::kScopeFlat)) return s;
    int cur = s;
    while (cur >= 0) {
      const Scope& sc = tree_.scope(cur);
      if (sc.kind == ScopeKind::kMethod) {
        return IsFlat(cur) ? cur : s;
      }
      if (sc.kind == ScopeKind::kType || sc.kind == ScopeKind::kLambda) return s;
      cur = sc.parent;
    }
    return s;
  }

  bool IsFlat(int s) const {
    for (const auto& [type_scope, flat] : flat_scopes_) {
      if (flat == s) return true;
    }
    return false;
  }

  int Declare(SymbolEntry sym, const void* decl, int s) {
    int target = DeclScope(s);
    Scope& sc = tree_.mutable_scope(target);
    if (IsFlat(target)) {
      auto it = sc.vars.find(sym.name);
      if (it != sc.vars.end()) {
        tree_.SetDecl(decl, it->second);
        return it->second;
      }
    }
    sym.scope = target;
    sym.owner_type = tree_.TypeScopeOf(target);
    int id = tree_.AddSymbol(sym);
    tree_.SetDecl(decl, id);
    tree_.mutable_scope(target).vars[sym.name] = id;
    return id;
  }

  void DeclareParam(const Param& p, int s) {
    SymbolEntry sym;
    sym.kind = SymbolKind::kParam;
    sym.name = p.name;
    sym.declared_type = FromTypeRef(p.type);
    if (p.is_final) sym.mods.Add(Modifier::kFinal);
    sym.param = &p;
    Declare(sym, &p, s);
  }

  void VisitBlockIn(const Stmt& block, int s) {
    for (const auto& st : block.As<Block>()->stmts) VisitStmt(st, s);
  }

  void VisitStmt(const Stmt& st, int s) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, LocalVarDecl>) {
            if (n.init) VisitExpr(*n.init, s);
            SymbolEntry sym;
            sym.kind = SymbolKind::kLocal;
            sym.name = n.name;
            sym.declared_type = FromTypeRef(n.type);
            if (n.is_final) sym.mods.Add(Modifier::kFinal);
            sym.decl_span = st.span;
            sym.local = &st;
            sym.init = n.init.get();
            Declare(sym, &st, s);
          } else if constexpr (std::is_same_v<T, ExprStmt>) {
            VisitExpr(n.expr, s);
          } else if constexpr (std::is_same_v<T, If>) {
            VisitExpr(n.cond, s);
            VisitStmt(*n.then_branch, s);
            if (n.else_branch) VisitStmt(*n.else_branch, s);
          } else if constexpr (std::is_same_v<T, While>) {
            VisitExpr(n.cond, s);
            VisitStmt(*n.body, s);
          } else if constexpr (std::is_same_v<T, For>) {
            int fs = NewScope(ScopeKind::kBlock, s, tree_.scope(s).is_static);
            for (const auto& init : n.init) VisitStmt(init, fs);
            if (n.cond) VisitExpr(*n.cond, fs);
            for (const auto& u : n.update) VisitExpr(u, fs);
            VisitStmt(*n.body, fs);
          } else if constexpr (std::is_same_v<T, Return>) {
            if (n.value) VisitExpr(*n.value, s);
          } else if constexpr (std::is_same_v<T, Throw>) {
            VisitExpr(n.value, s);
          } else if constexpr (std::is_same_v<T, Block>) {
            int bs = NewScope(ScopeKind::kBlock, s, tree_.scope(s).is_static);
            for (const auto& inner : n.stmts) VisitStmt(inner, bs);
          } else if constexpr (std::is_same_v<T, Try>) {
            int ts = NewScope(ScopeKind::kBlock, s, tree_.scope(s).is_static);
            for (const auto& r : n.resources) VisitStmt(r, ts);
            VisitStmt(*n.body, ts);
            for (const auto& c : n.catches) {
              int cs = NewScope(ScopeKind::kBlock, s, tree_.scope(s).is_static);
              SymbolEntry sym;
              sym.kind = SymbolKind::kLocal;
              sym.name = c.name;
              sym.declared_type = c.types.size() == 1 ? FromTypeRef(c.types[0])
                                                      : ResolvedType::Unknown();
              if (c.is_final) sym.mods.Add(Modifier::kFinal);
              sym.decl_span = c.span;
              sym.catch_clause = &c;
              Declare(sym, &c, cs);
              VisitStmt(*c.body, cs);
            }
            if (n.finally_block) VisitStmt(*n.finally_block, s);
          }
        },
        st.node);
  }

  const SymbolEntry* ChooseOverload(const std::vector<const SymbolEntry*>& cands,
                                    const std::vector<Expr>& args) {
    const SymbolEntry* best = nullptr;
    int best_score = -1;
    for (const SymbolEntry* c : cands) {
      if (c->param_types.size() != args.size()) continue;
      int score = 0;
      for (size_t i = 0; i < args.size(); ++i) {
        if (ResolveType(args[i], tree_, cfg_) == c->param_types[i]) ++score;
      }
      if (score > best_score) {
        best = c;
        best_score = score;
      }
    }
    return best;
  }

  // Type scope a receiver expression designates, or -1.
  int ReceiverScope(const Expr& target, int s) {
    if (target.Is<This>()) return tree_.TypeScopeOf(s);
    if (const SymbolEntry* b = tree_.BindingOf(target)) {
      if (b->kind == SymbolKind::kType) return tree_.TypeScopeFor(b->type);
    }
    ResolvedType t = ResolveType(target, tree_, cfg_);
    if (t.kind == ResolvedType::Kind::kClass) return tree_.ClassScopeByName(s, t.name);
    return -1;
  }

  void VisitExpr(const Expr& e, int s) {
    tree_.SetScope(&e, s);
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Name>) {
            if (const SymbolEntry* v = tree_.LookupVar(s, n.id)) {
              tree_.Bind(&e, v->id);
            } else if (const SymbolEntry* t = tree_.LookupType(s, n.id)) {
              tree_.Bind(&e, t->id);
            }
          } else if constexpr (std::is_same_v<T, FieldAccess>) {
            VisitExpr(*n.target, s);
            int rs = ReceiverScope(*n.target, s);
            if (rs >= 0) {
              if (const SymbolEntry* f = tree_.MemberField(rs, n.name)) {
                tree_.Bind(&e, f->id);
              } else {
                auto it = tree_.scope(rs).types.find(n.name);
                if (it != tree_.scope(rs).types.end()) tree_.Bind(&e, it->second);
              }
            }
          } else if constexpr (std::is_same_v<T, MethodCall>) {
            if (n.receiver) VisitExpr(*n.receiver, s);
            for (const auto& a : n.args) VisitExpr(a, s);
            const SymbolEntry* target = nullptr;
            if (!n.receiver) {
              for (int ts = tree_.TypeScopeOf(s); ts >= 0;
                   ts = tree_.TypeScopeOf(tree_.scope(ts).parent)) {
                auto cands = tree_.MemberMethods(ts, n.name);
                if (!cands.empty()) {
                  target = ChooseOverload(cands, n.args);
                  break;
                }
              }
            } else {
              int rs = ReceiverScope(*n.receiver, s);
              if (rs >= 0) target = ChooseOverload(tree_.MemberMethods(rs, n.name), n.args);
            }
            if (target) tree_.Bind(&e, target->id);
          } else if constexpr (std::is_same_v<T, ObjectCreation>) {
            for (const auto& a : n.args) VisitExpr(a, s);
            if (n.body) {
              Scope sc;
              sc.kind = ScopeKind::kType;
              sc.parent = s;
              sc.anonymous = true;
              sc.type_name = n.type.name;
              sc.body = n.body.get();
              int as = tree_.AddScope(sc);
              tree_.SetTypeScope(n.body.get(), as);
              DeclareMembers(n.body->members, as, false);
              VisitMembers(n.body->members, as);
            }
          } else if constexpr (std::is_same_v<T, Lambda>) {
            int ls = NewScope(ScopeKind::kLambda, s, tree_.scope(s).is_static);
            for (const auto& p : n.params) {
              SymbolEntry sym;
              sym.kind = SymbolKind::kParam;
              sym.name = p.name;
              sym.declared_type = p.type ? FromTypeRef(*p.type) : ResolvedType::Unknown();
              if (p.is_final) sym.mods.Add(Modifier::kFinal);
              sym.lambda_param = &p;
              sym.scope = ls;
              sym.owner_type = tree_.TypeScopeOf(ls);
              int id = tree_.AddSymbol(sym);
              tree_.SetDecl(&p, id);
              tree_.mutable_scope(ls).vars[p.name] = id;
            }
            if (n.expr_body) VisitExpr(*n.expr_body, ls);
            if (n.block_body) VisitBlockIn(*n.block_body, ls);
          } else {
            VisitChildren(n, s);
          }
        },
        e.node);
  }

  template <typename T>
  void VisitChildren(const T& n, int s) {
    if constexpr (std::is_same_v<T, ArrayAccess>) {
      VisitExpr(*n.array, s);
      VisitExpr(*n.index, s);
    } else if constexpr (std::is_same_v<T, ArrayInit>) {
      for (const auto& x : n.elements) VisitExpr(x, s);
    } else if constexpr (std::is_same_v<T, ArrayCreation>) {
      for (const auto& x : n.dim_exprs) VisitExpr(x, s);
      if (n.init) VisitExpr(*n.init, s);
    } else if constexpr (std::is_same_v<T, Unary>) {
      VisitExpr(*n.operand, s);
    } else if constexpr (std::is_same_v<T, Binary>) {
      VisitExpr(*n.lhs, s);
      VisitExpr(*n.rhs, s);
    } else if constexpr (std::is_same_v<T, Assign>) {
      VisitExpr(*n.target, s);
      VisitExpr(*n.value, s);
    } else if constexpr (std::is_same_v<T, Cast>) {
      VisitExpr(*n.operand, s);
    } else if constexpr (std::is_same_v<T, Paren>) {
      VisitExpr(*n.inner, s);
    }
  }

  const CompilationUnit& unit_;
  const WeaknessConfig& cfg_;
  ScopeTree& tree_;
  std::map<int, int> flat_scopes_;
};

}  // namespace

ScopeTree BuildScopes(const CompilationUnit& unit, const WeaknessConfig& cfg) {
  ScopeTree tree;
  Builder(unit, cfg, tree).Run();
  return tree;
}

}  // namespace mtsca::analysis
