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

#include <algorithm>
#include <optional>
#include <set>
#include <string>

#include "mtsca/analysis/types.h"
#include "mtsca/java/printer.h"
#include "src/mutation/internal.h"

namespace mtsca::mutation::internal {
namespace {

using analysis::ResolvedType;
using analysis::ScopeTree;
using analysis::SymbolEntry;
using analysis::SymbolKind;
using analysis::WeaknessConfig;
using namespace java;

bool IsLocalOrParam(const SymbolEntry* b) {
  return b && (b->kind == SymbolKind::kLocal || b->kind == SymbolKind::kParam);
}

// The member holding the code at `ancestors` and the TypeDecl declaring it,
// provided no lambda or anonymous body lies between. `allow_lambda` lets
// lambdas through.
struct Holder {
  const TypeDecl* owner = nullptr;
  const Member* member = nullptr;
};

std::optional<Holder> DirectHolder(const std::vector<NodeRef>& ancestors, bool allow_lambda) {
  for (size_t i = ancestors.size(); i-- > 0;) {
    if (const Member* m = ancestors[i].Get<Member>()) {
      if (i == 0) return std::nullopt;
      const TypeDecl* t = ancestors[i - 1].Get<TypeDecl>();
      if (!t || t->kind == TypeKind::kInterface) return std::nullopt;
      return Holder{t, m};
    }
    const Expr* e = ancestors[i].Get<Expr>();
    if (e && e->Is<Lambda>() && !allow_lambda) return std::nullopt;
  }
  return std::nullopt;
}

bool AssignsLocal(const ScopeTree& scopes, const Expr& root, const SymbolEntry* only = nullptr) {
  bool found = false;
  auto check = [&](const Expr& target) {
    const Expr& t = StripParens(target);
    if (!t.Is<Name>()) return;
    const SymbolEntry* b = scopes.BindingOf(t);
    if (only ? b == only : IsLocalOrParam(b)) found = true;
  };
  ForEachExpr(NodeRef(&root), [&](const Expr& e) {
    if (const auto* a = e.As<Assign>()) check(*a->target);
    if (const auto* u = e.As<Unary>()) {
      if (u->op != UnaryOp::kNot && u->op != UnaryOp::kNeg) check(*u->operand);
    }
  });
  return found;
}

std::set<std::string> TypeNamesOf(const CompilationUnit& unit) {
  std::set<std::string> out;
  for (const TypeDecl* t : AllTypeDecls(unit)) out.insert(t->name);
  return out;
}

// Whether an unbound call named like `md` with matching arity might still
// target it.
bool MaybeCallsTo(const Context& ctx, const Expr& e, const MethodDecl& md,
                  const std::set<std::string>& type_names) {
  const auto* mc = e.As<MethodCall>();
  if (!mc || mc->name != md.name || mc->args.size() != md.params.size()) return false;
  if (ctx.scopes.BindingOf(e)) return false;
  if (!mc->receiver) return true;
  const Expr& recv = StripParens(*mc->receiver);
  if (const auto* n = recv.As<Name>()) {
    if (!ctx.scopes.BindingOf(recv) && !type_names.count(n->id)) return false;
  }
  ResolvedType t = analysis::ResolveType(recv, ctx.scopes, WeaknessConfig{});
  if (t.IsPrimitive() || t.IsArray()) return false;
  return !(t.kind == ResolvedType::Kind::kClass && t.name != "Object" && !type_names.count(t.name));
}

// ---------------------------------------------------------------------------
// X1

struct X1Plan {
  Holder holder;
  const MethodDecl* method = nullptr;
  const Stmt* stmt = nullptr;
  const Block* block = nullptr;
  std::vector<const SymbolEntry*> free;
  std::vector<TypeRef> free_types;
  std::string helper;
};

std::optional<X1Plan> PlanX1(const Context& ctx, const Stmt& s, const std::vector<NodeRef>& ancestors,
                             const std::set<std::string>& ids) {
  const auto* es = s.As<ExprStmt>();
  if (!es || ancestors.empty()) return std::nullopt;
  const Stmt* parent = ancestors.back().Get<Stmt>();
  if (!parent || !parent->Is<Block>()) return std::nullopt;
  auto holder = DirectHolder(ancestors, false);
  if (!holder) return std::nullopt;
  const auto* md = holder->member->As<MethodDecl>();
  if (!md) return std::nullopt;
  X1Plan plan;
  plan.holder = *holder;
  plan.method = md;
  plan.stmt = &s;
  plan.block = parent->As<Block>();
  plan.helper = "__mtc_extract_" + md->name;
  if (ids.count(plan.helper)) return std::nullopt;
  if (AssignsLocal(ctx.scopes, es->expr)) return std::nullopt;
  bool bad = false;
  ForEachExpr(NodeRef(&es->expr), [&](const Expr& e) {
    if (e.Is<Lambda>()) bad = true;
    if (const auto* oc = e.As<ObjectCreation>(); oc && oc->body) bad = true;
    if (!e.Is<Name>()) return;
    const SymbolEntry* b = ctx.scopes.BindingOf(e);
    if (!IsLocalOrParam(b)) return;
    if (std::find(plan.free.begin(), plan.free.end(), b) != plan.free.end()) return;
    std::optional<TypeRef> type;
    if (b->local) type = b->local->As<LocalVarDecl>()->type;
    if (b->param) type = b->param->type;
    if (b->catch_clause && b->catch_clause->types.size() == 1) type = b->catch_clause->types[0];
    if (!type) {
      bad = true;
      return;
    }
    plan.free.push_back(b);
    plan.free_types.push_back(*type);
  });
  if (bad) return std::nullopt;
  return plan;
}

// ---------------------------------------------------------------------------
// X2

struct X2Plan {
  Holder holder;
  const Stmt* stmt = nullptr;
  const Block* block = nullptr;
};

std::optional<X2Plan> PlanX2(const Context& ctx, const Stmt& s, const std::vector<NodeRef>& ancestors) {
  const auto* d = s.As<LocalVarDecl>();
  if (!d || !d->init || ancestors.empty()) return std::nullopt;
  const Stmt* parent = ancestors.back().Get<Stmt>();
  if (!parent || !parent->Is<Block>()) return std::nullopt;
  if (d->type.dims != 0 || !(d->type.IsPrimitive() || d->type.SimpleName() == "String")) {
    return std::nullopt;
  }
  auto holder = DirectHolder(ancestors, true);
  if (!holder) return std::nullopt;
  const SymbolEntry* sym = ctx.scopes.DeclOf(&s);
  if (!sym) return std::nullopt;
  if (!analysis::ConstEval(*d->init, ctx.scopes, WeaknessConfig{})) return std::nullopt;
  bool bad = false;
  ForEachExpr(NodeRef(d->init.get()), [&](const Expr& e) {
    if (e.Is<Name>() && IsLocalOrParam(ctx.scopes.BindingOf(e))) bad = true;
  });
  const TypeDecl& owner = *holder->owner;
  for (const auto& c : owner.enum_constants) bad = bad || c == d->name;
  for (const auto& m : owner.members) {
    if (const auto* f = m.As<FieldDecl>(); f && f->name == d->name) bad = true;
  }
  Walk(NodeRef(&owner), [&](NodeRef node, const std::vector<NodeRef>&) {
    const Expr* e = node.Get<Expr>();
    if (!e) return true;
    if (const auto* n = e->As<Name>(); n && n->id == d->name) {
      if (!IsLocalOrParam(ctx.scopes.BindingOf(*e))) bad = true;
    }
    if (const auto* fa = e->As<FieldAccess>(); fa && fa->name == d->name) bad = true;
    if (const auto* a = e->As<Assign>()) {
      const Expr& t = StripParens(*a->target);
      if (t.Is<Name>() && ctx.scopes.BindingOf(t) == sym) bad = true;
    }
    if (const auto* u = e->As<Unary>(); u && u->op != UnaryOp::kNot && u->op != UnaryOp::kNeg) {
      const Expr& t = StripParens(*u->operand);
      if (t.Is<Name>() && ctx.scopes.BindingOf(t) == sym) bad = true;
    }
    return true;
  });
  if (bad) return std::nullopt;
  return X2Plan{*holder, &s, parent->As<Block>()};
}

// ---------------------------------------------------------------------------
// X3

struct X3Plan {
  const MethodDecl* method = nullptr;
  // Calls that need an instance, with the type to instantiate.
  std::vector<std::pair<const Expr*, std::string>> calls;
};

std::optional<X3Plan> PlanX3(const Context& ctx, const TypeDecl& c, const Member& m) {
  const auto* md = m.As<MethodDecl>();
  if (!md || !md->body || !md->mods.Has(Modifier::kStatic) || md->name == "main") {
    return std::nullopt;
  }
  if (c.kind != TypeKind::kClass || c.mods.Has(Modifier::kAbstract) || !c.type_params.empty()) {
    return std::nullopt;
  }
  int cs = ctx.scopes.TypeScopeFor(&c);
  if (cs < 0 || !ctx.scopes.scope(cs).is_static) return std::nullopt;
  int same_name = 0;
  bool has_ctor = false, usable_ctor = false;
  for (const auto& other : c.members) {
    if (const auto* o = other.As<MethodDecl>(); o && o->name == md->name) ++same_name;
    if (const auto* k = other.As<ConstructorDecl>()) {
      has_ctor = true;
      if (k->params.empty() && !k->mods.Has(Modifier::kPrivate)) usable_ctor = true;
    }
  }
  if (same_name != 1 || (has_ctor && !usable_ctor)) return std::nullopt;
  auto type_names = TypeNamesOf(ctx.unit);
  for (const TypeDecl* t : AllTypeDecls(ctx.unit)) {
    if (t == &c || !t->superclass || t->superclass->SimpleName() != c.name) continue;
    for (const auto& other : t->members) {
      if (const auto* o = other.As<MethodDecl>(); o && o->name == md->name) return std::nullopt;
    }
  }
  const SymbolEntry* self = ctx.scopes.DeclOf(md);
  if (!self) return std::nullopt;
  X3Plan plan;
  plan.method = md;
  bool uncertain = false;
  Walk(ctx.unit, [&](NodeRef node, const std::vector<NodeRef>&) {
    const Expr* e = node.Get<Expr>();
    if (!e || !e->Is<MethodCall>()) return true;
    if (MaybeCallsTo(ctx, *e, *md, type_names)) uncertain = true;
    if (ctx.scopes.BindingOf(*e) != self) return true;
    const auto& mc = *e->As<MethodCall>();
    if (!mc.receiver) {
      int sc = ctx.scopes.ScopeOf(*e);
      if (sc >= 0 && ctx.scopes.TypeScopeOf(sc) == cs && !InStaticContext(ctx.scopes, sc)) {
        return true;
      }
      plan.calls.emplace_back(e, c.name);
      return true;
    }
    const Expr& recv = StripParens(*mc.receiver);
    const SymbolEntry* rb = ctx.scopes.BindingOf(recv);
    bool type_receiver = (rb && rb->kind == SymbolKind::kType) ||
                         (!rb && recv.Is<Name>() && recv.As<Name>()->id == c.name) ||
                         (!rb && recv.Is<FieldAccess>() && recv.As<FieldAccess>()->name == c.name);
    if (type_receiver) plan.calls.emplace_back(e, PrintExpr(recv));
    return true;
  });
  if (uncertain) return std::nullopt;
  return plan;
}

}  // namespace

std::vector<MutationSite> SitesX1(const Context& ctx) {
  std::vector<MutationSite> out;
  auto ids = Identifiers(ctx.unit);
  Walk(ctx.unit, [&](NodeRef node, const std::vector<NodeRef>& ancestors) {
    const Stmt* s = node.Get<Stmt>();
    if (s) {
      if (auto plan = PlanX1(ctx, *s, ancestors, ids)) {
        out.push_back(MakeSite(ctx.unit, OperatorId::kX1, node,
                               plan->method->name + ":" + std::to_string(s->span.start_line)));
      }
    }
    return true;
  });
  return out;
}

void RewriteX1(CompilationUnit& unit, const ScopeTree& scopes, const MutationSite& site,
               std::uint64_t) {
  Anchor a = ResolveAnchor(unit, site.anchor);
  auto plan = *PlanX1(Context{unit, scopes}, *a.node.Get<Stmt>(), a.ancestors, Identifiers(unit));
  const MethodDecl& md = *plan.method;

  MethodDecl helper;
  helper.mods.Add(Modifier::kPrivate);
  if (md.mods.Has(Modifier::kStatic)) helper.mods.Add(Modifier::kStatic);
  helper.type_params = md.type_params;
  helper.return_type = TypeRef{"void", {}, 0};
  helper.name = plan.helper;
  helper.throws = md.throws;
  MethodCall call;
  call.name = plan.helper;
  for (size_t i = 0; i < plan.free.size(); ++i) {
    Param p;
    p.type = plan.free_types[i];
    p.name = plan.free[i]->name;
    helper.params.push_back(std::move(p));
    call.args.push_back(MakeExpr(Name{plan.free[i]->name}));
  }
  Block body;
  body.stmts.push_back(*plan.stmt);
  helper.body = Box<Stmt>(MakeStmt(std::move(body)));

  Span span = plan.stmt->span;
  *Mutable(plan.stmt) = MakeStmt(ExprStmt{MakeExpr(std::move(call))}, span);

  TypeDecl* owner = Mutable(plan.holder.owner);
  size_t idx = static_cast<size_t>(plan.holder.member - owner->members.data());
  owner->members.insert(owner->members.begin() + static_cast<long>(idx) + 1,
                        Member{MemberNode(std::move(helper))});
}

std::vector<MutationSite> SitesX2(const Context& ctx) {
  std::vector<MutationSite> out;
  Walk(ctx.unit, [&](NodeRef node, const std::vector<NodeRef>& ancestors) {
    const Stmt* s = node.Get<Stmt>();
    if (s && PlanX2(ctx, *s, ancestors)) {
      out.push_back(MakeSite(ctx.unit, OperatorId::kX2, node, s->As<LocalVarDecl>()->name));
    }
    return true;
  });
  return out;
}

void RewriteX2(CompilationUnit& unit, const ScopeTree& scopes, const MutationSite& site,
               std::uint64_t) {
  Anchor a = ResolveAnchor(unit, site.anchor);
  auto plan = *PlanX2(Context{unit, scopes}, *a.node.Get<Stmt>(), a.ancestors);
  const auto& d = *plan.stmt->As<LocalVarDecl>();
  FieldDecl f;
  f.mods.Add(Modifier::kPrivate);
  f.mods.Add(Modifier::kStatic);
  f.mods.Add(Modifier::kFinal);
  f.annotations = d.annotations;
  f.type = d.type;
  f.name = d.name;
  f.init = d.init;

  Block* block = Mutable(plan.block);
  block->stmts.erase(block->stmts.begin() + (plan.stmt - block->stmts.data()));
  TypeDecl* owner = Mutable(plan.holder.owner);
  owner->members.insert(owner->members.begin(), Member{MemberNode(std::move(f))});
}

std::vector<MutationSite> SitesX3(const Context& ctx) {
  std::vector<MutationSite> out;
  for (const TypeDecl* c : AllTypeDecls(ctx.unit)) {
    for (const auto& m : c->members) {
      if (PlanX3(ctx, *c, m)) {
        out.push_back(MakeSite(ctx.unit, OperatorId::kX3, NodeRef(&m),
                               c->name + "." + m.As<MethodDecl>()->name));
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const MutationSite& a, const MutationSite& b) {
    return a.anchor < b.anchor;
  });
  return out;
}

void RewriteX3(CompilationUnit& unit, const ScopeTree& scopes, const MutationSite& site,
               std::uint64_t) {
  Anchor a = ResolveAnchor(unit, site.anchor);
  const Member* m = a.node.Get<Member>();
  auto plan = *PlanX3(Context{unit, scopes}, *a.ancestors.back().Get<TypeDecl>(), *m);
  for (const auto& [call, type] : plan.calls) {
    auto* mc = Mutable(call)->As<MethodCall>();
    ObjectCreation oc;
    oc.type = TypeRef{type, {}, 0};
    mc->receiver = Box<Expr>(MakeExpr(std::move(oc)));
  }
  Mutable(plan.method)->mods.Remove(Modifier::kStatic);
}

}  // namespace mtsca::mutation::internal
