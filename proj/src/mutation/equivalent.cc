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
#include <limits>
#include <map>
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

const std::set<std::string> kObjectMethods = {"toString", "equals",  "hashCode",
                                              "getClass", "clone",   "finalize",
                                              "notify",   "notifyAll", "wait"};

std::set<std::string> TypeNames(const CompilationUnit& unit) {
  std::set<std::string> out;
  for (const TypeDecl* t : AllTypeDecls(unit)) out.insert(t->name);
  return out;
}

bool HasAncestor(const std::vector<NodeRef>& ancestors, const void* node) {
  for (const auto& a : ancestors) {
    if (a.address() == node) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// E1

struct E1Plan {
  const MethodDecl* method = nullptr;
  std::vector<const Expr*> calls;
};

std::set<const TypeDecl*> Subtypes(const CompilationUnit& unit, const TypeDecl& c) {
  auto all = AllTypeDecls(unit);
  std::set<std::string> names = {c.name};
  std::set<const TypeDecl*> out;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const TypeDecl* t : all) {
      if (out.count(t) || t == &c) continue;
      bool sub = t->superclass && names.count(t->superclass->SimpleName());
      for (const auto& i : t->interfaces) sub = sub || names.count(i.SimpleName());
      if (sub) {
        out.insert(t);
        names.insert(t->name);
        grew = true;
      }
    }
  }
  return out;
}

std::optional<E1Plan> PlanE1(const Context& ctx, const TypeDecl& c, const Member& m,
                             const std::set<std::string>& ids) {
  const auto* md = m.As<MethodDecl>();
  if (!md || !md->body || c.kind != TypeKind::kClass) return std::nullopt;
  if (md->name == "main" || kObjectMethods.count(md->name)) return std::nullopt;
  bool is_static = md->mods.Has(Modifier::kStatic);
  if ((c.superclass || !c.interfaces.empty()) && !md->mods.Has(Modifier::kPrivate)) {
    return std::nullopt;
  }
  int cs = ctx.scopes.TypeScopeFor(&c);
  if (cs < 0 || (is_static && !ctx.scopes.scope(cs).is_static)) return std::nullopt;
  int same_name = 0;
  for (const auto& other : c.members) {
    if (const auto* o = other.As<MethodDecl>(); o && o->name == md->name) ++same_name;
  }
  if (same_name != 1) return std::nullopt;
  for (const TypeDecl* sub : Subtypes(ctx.unit, c)) {
    for (const auto& other : sub->members) {
      if (const auto* o = other.As<MethodDecl>(); o && o->name == md->name) return std::nullopt;
    }
  }
  NodeRef body(md->body.get());
  if (ContainsThis(body)) return std::nullopt;
  bool object_call = false;
  ForEachExpr(body, [&](const Expr& e) {
    const auto* mc = e.As<MethodCall>();
    if (mc && !mc->receiver && kObjectMethods.count(mc->name)) object_call = true;
  });
  if (object_call) return std::nullopt;
  if (ids.count("__MTC_" + md->name) || ids.count("__mtc_" + md->name)) return std::nullopt;

  const SymbolEntry* self = ctx.scopes.DeclOf(md);
  if (!self) return std::nullopt;
  auto type_names = TypeNames(ctx.unit);
  E1Plan plan;
  plan.method = md;
  bool uncertain = false;
  Walk(ctx.unit, [&](NodeRef node, const std::vector<NodeRef>& ancestors) {
    const Expr* e = node.Get<Expr>();
    const auto* mc = e ? e->As<MethodCall>() : nullptr;
    if (!mc || mc->name != md->name) return true;
    const SymbolEntry* b = ctx.scopes.BindingOf(*e);
    if (b == self) {
      if (mc->receiver || !HasAncestor(ancestors, &m)) plan.calls.push_back(e);
      return true;
    }
    if (b || mc->args.size() != md->params.size()) return true;
    if (!mc->receiver) {
      uncertain = true;
      return true;
    }
    const Expr& recv = StripParens(*mc->receiver);
    if (const auto* n = recv.As<Name>()) {
      if (!ctx.scopes.BindingOf(recv) && !type_names.count(n->id)) return true;
    }
    ResolvedType t = analysis::ResolveType(recv, ctx.scopes, WeaknessConfig{});
    if (t.IsPrimitive() || t.IsArray()) return true;
    if (t.kind == ResolvedType::Kind::kClass && t.name != "Object" &&
        !type_names.count(t.name)) {
      return true;
    }
    uncertain = true;
    return true;
  });
  if (uncertain) return std::nullopt;
  return plan;
}

}  // namespace

std::vector<MutationSite> SitesE1(const Context& ctx) {
  std::vector<MutationSite> out;
  auto ids = Identifiers(ctx.unit);
  for (const TypeDecl* c : AllTypeDecls(ctx.unit)) {
    for (const auto& m : c->members) {
      if (PlanE1(ctx, *c, m, ids)) {
        out.push_back(MakeSite(ctx.unit, OperatorId::kE1, NodeRef(&m),
                               c->name + "." + m.As<MethodDecl>()->name));
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const MutationSite& a, const MutationSite& b) {
    return a.anchor < b.anchor;
  });
  return out;
}

void RewriteE1(CompilationUnit& unit, const ScopeTree& scopes, const MutationSite& site,
               std::uint64_t) {
  Anchor a = ResolveAnchor(unit, site.anchor);
  const Member* m = a.node.Get<Member>();
  const TypeDecl* owner = a.ancestors.back().Get<TypeDecl>();
  auto plan = PlanE1(Context{unit, scopes}, *owner, *m, Identifiers(unit));
  const MethodDecl& md = *plan->method;
  bool is_static = md.mods.Has(Modifier::kStatic);
  std::string cls = "__MTC_" + md.name;
  std::string field = "__mtc_" + md.name;

  for (const Expr* call : plan->calls) {
    auto* mc = Mutable(call)->As<MethodCall>();
    if (!mc->receiver) {
      mc->receiver = Box<Expr>(MakeExpr(Name{field}));
    } else {
      Box<Expr> old = std::move(mc->receiver);
      mc->receiver = Box<Expr>(MakeExpr(FieldAccess{std::move(old), field}));
    }
  }

  TypeDecl* c = Mutable(owner);
  size_t idx = static_cast<size_t>(m - c->members.data());
  TypeDecl wrapper;
  wrapper.kind = TypeKind::kClass;
  wrapper.name = cls;
  if (is_static) wrapper.mods.Add(Modifier::kStatic);
  wrapper.members.push_back(std::move(c->members[idx]));
  c->members[idx] = Member{MemberNode(Box<TypeDecl>(std::move(wrapper)))};

  FieldDecl f;
  f.mods.Add(Modifier::kFinal);
  if (is_static) f.mods.Add(Modifier::kStatic);
  f.type = TypeRef{cls, {}, 0};
  f.name = field;
  ObjectCreation init;
  init.type = TypeRef{cls, {}, 0};
  f.init = Box<Expr>(MakeExpr(std::move(init)));
  c->members.insert(c->members.begin(), Member{MemberNode(std::move(f))});
}

// ---------------------------------------------------------------------------
// E2

namespace {

struct FunctionalInterface {
  const char* type;
  const char* method;
  size_t arity;
};

constexpr FunctionalInterface kJdkFunctional[] = {
    {"Runnable", "run", 0},          {"Callable", "call", 0},
    {"Comparator", "compare", 2},    {"Supplier", "get", 0},
    {"Consumer", "accept", 1},       {"BiConsumer", "accept", 2},
    {"Function", "apply", 1},        {"BiFunction", "apply", 2},
    {"Predicate", "test", 1},        {"BiPredicate", "test", 2},
    {"UnaryOperator", "apply", 1},   {"BinaryOperator", "apply", 2},
    {"IntUnaryOperator", "applyAsInt", 1},
};

const std::set<std::string> kJdkDefaultMethods = {
    "reversed", "thenComparing", "andThen", "compose", "negate", "and", "or", "identity"};

std::optional<const MethodDecl*> PlanE2(const Context& ctx, const Expr& e,
                                        const std::vector<NodeRef>& ancestors) {
  const auto* oc = e.As<ObjectCreation>();
  if (!oc || !oc->body || oc->body->members.size() != 1 || ancestors.empty()) {
    return std::nullopt;
  }
  const auto* md = oc->body->members[0].As<MethodDecl>();
  if (!md || !md->body || !md->type_params.empty()) return std::nullopt;
  for (const auto& p : md->params) {
    if (!p.annotations.empty()) return std::nullopt;
  }
  std::string iface = oc->type.SimpleName();
  int scope = ctx.scopes.ScopeOf(e);
  if (scope < 0) return std::nullopt;

  std::set<std::string> iface_fields;
  const SymbolEntry* tsym = ctx.scopes.LookupType(scope, iface);
  if (tsym && tsym->type) {
    const TypeDecl& t = *tsym->type;
    if (t.kind != TypeKind::kInterface || !t.interfaces.empty()) return std::nullopt;
    const MethodDecl* abstract = nullptr;
    int abstract_count = 0;
    for (const auto& m : t.members) {
      if (const auto* f = m.As<FieldDecl>()) iface_fields.insert(f->name);
      const auto* im = m.As<MethodDecl>();
      if (!im || im->body || im->mods.Has(Modifier::kStatic) ||
          im->mods.Has(Modifier::kDefault)) {
        continue;
      }
      abstract = im;
      ++abstract_count;
    }
    if (abstract_count != 1 || abstract->name != md->name ||
        abstract->params.size() != md->params.size() || !abstract->type_params.empty()) {
      return std::nullopt;
    }
  } else {
    if (TypeNames(ctx.unit).count(iface)) return std::nullopt;
    bool known = false;
    for (const auto& fi : kJdkFunctional) {
      if (iface == fi.type && md->name == fi.method && md->params.size() == fi.arity) known = true;
    }
    if (!known) return std::nullopt;
  }

  // Target type must be fixed by the context.
  NodeRef parent = ancestors.back();
  bool context_ok = false;
  if (const Stmt* s = parent.Get<Stmt>()) {
    if (const auto* d = s->As<LocalVarDecl>()) {
      context_ok = d->init.get() == &e && d->type.SimpleName() == iface && d->type.dims == 0;
    } else if (const auto* r = s->As<Return>()) {
      const Member* em = EnclosingMember(ancestors);
      const auto* enclosing = em ? em->As<MethodDecl>() : nullptr;
      context_ok = r->value.get() == &e && enclosing &&
                   enclosing->return_type.SimpleName() == iface &&
                   enclosing->return_type.dims == 0;
      for (const auto& a : ancestors) {
        if (const Expr* x = a.Get<Expr>(); x && x->Is<Lambda>()) context_ok = false;
      }
    }
  } else if (const Member* pm = parent.Get<Member>()) {
    if (const auto* f = pm->As<FieldDecl>()) {
      context_ok = f->init.get() == &e && f->type.SimpleName() == iface && f->type.dims == 0;
    }
  } else if (const Expr* pe = parent.Get<Expr>()) {
    if (const auto* call = pe->As<MethodCall>()) {
      for (const auto& arg : call->args) context_ok = context_ok || &arg == &e;
    }
  }
  if (!context_ok) return std::nullopt;

  NodeRef body(md->body.get());
  if (ContainsThis(body)) return std::nullopt;
  const ClassBody* anon = oc->body.get();
  int anon_scope = ctx.scopes.TypeScopeFor(anon);
  bool bad = false;
  std::vector<std::string> declared;
  for (const auto& p : md->params) declared.push_back(p.name);
  Walk(body, [&](NodeRef node, const std::vector<NodeRef>&) {
    if (const Stmt* s = node.Get<Stmt>()) {
      if (const auto* d = s->As<LocalVarDecl>()) declared.push_back(d->name);
    } else if (const CatchClause* c = node.Get<CatchClause>()) {
      declared.push_back(c->name);
    } else if (const Expr* x = node.Get<Expr>()) {
      if (const auto* n = x->As<Name>()) {
        if (iface_fields.count(n->id)) bad = true;
        const SymbolEntry* b = ctx.scopes.BindingOf(*x);
        if (b && b->kind == SymbolKind::kField && b->owner_type == anon_scope) bad = true;
      } else if (const auto* mc = x->As<MethodCall>()) {
        if (!mc->receiver) {
          const SymbolEntry* b = ctx.scopes.BindingOf(*x);
          if (!b || b->owner_type == anon_scope || kJdkDefaultMethods.count(mc->name)) {
            bad = true;
          }
        }
      } else if (const auto* l = x->As<Lambda>()) {
        for (const auto& p : l->params) declared.push_back(p.name);
      }
    }
    return true;
  });
  if (bad) return std::nullopt;
  for (const auto& name : declared) {
    const SymbolEntry* outer = ctx.scopes.LookupVar(scope, name);
    if (outer && (outer->kind == SymbolKind::kLocal || outer->kind == SymbolKind::kParam)) {
      return std::nullopt;
    }
  }
  return md;
}

}  // namespace

std::vector<MutationSite> SitesE2(const Context& ctx) {
  std::vector<MutationSite> out;
  Walk(ctx.unit, [&](NodeRef node, const std::vector<NodeRef>& ancestors) {
    const Expr* e = node.Get<Expr>();
    if (e && e->Is<ObjectCreation>()) {
      if (auto md = PlanE2(ctx, *e, ancestors)) {
        out.push_back(MakeSite(ctx.unit, OperatorId::kE2, node,
                               e->As<ObjectCreation>()->type.SimpleName() + "." + (*md)->name));
      }
    }
    return true;
  });
  return out;
}

void RewriteE2(CompilationUnit& unit, const ScopeTree& scopes, const MutationSite& site,
               std::uint64_t) {
  Anchor a = ResolveAnchor(unit, site.anchor);
  const Expr* e = a.node.Get<Expr>();
  const MethodDecl* md = *PlanE2(Context{unit, scopes}, *e, a.ancestors);
  Lambda l;
  for (const auto& p : md->params) {
    LambdaParam lp;
    lp.name = p.name;
    lp.type = p.type;
    lp.is_final = p.is_final;
    l.params.push_back(std::move(lp));
  }
  l.parenthesized = true;
  l.block_body = md->body;
  Span span = e->span;
  *Mutable(e) = MakeExpr(std::move(l), span);
}

// ---------------------------------------------------------------------------
// E3

namespace {

struct E3Plan {
  const FieldDecl* field = nullptr;
  std::vector<std::string> candidates;
  std::vector<const Expr*> refs;
};

std::optional<E3Plan> PlanE3(const Context& ctx, const TypeDecl& c, const FieldDecl& f,
                             const std::set<std::string>& variable_names,
                             const std::set<std::string>& name_ids,
                             const std::set<std::string>& type_names) {
  if (c.kind != TypeKind::kClass || c.superclass) return std::nullopt;
  const SymbolEntry* sym = ctx.scopes.DeclOf(&f);
  if (!sym) return std::nullopt;
  E3Plan plan;
  plan.field = &f;
  bool unresolved = false;
  for (const auto& t : ctx.unit.types) {
    ForEachExpr(NodeRef(&t), [&](const Expr& e) {
      const std::string* name = nullptr;
      if (const auto* n = e.As<Name>()) name = &n->id;
      if (const auto* fa = e.As<FieldAccess>()) name = &fa->name;
      if (!name || *name != f.name) return;
      const SymbolEntry* b = ctx.scopes.BindingOf(e);
      if (!b) unresolved = true;
      if (b == sym) plan.refs.push_back(&e);
    });
  }
  if (unresolved) return std::nullopt;
  std::set<std::string> seen;
  for (const auto& m : c.members) {
    const auto* md = m.As<MethodDecl>();
    if (!md || md->name == f.name || !seen.insert(md->name).second) continue;
    if (variable_names.count(md->name) || name_ids.count(md->name) ||
        type_names.count(md->name)) {
      continue;
    }
    plan.candidates.push_back(md->name);
  }
  if (plan.candidates.empty()) return std::nullopt;
  return plan;
}

struct UnitNames {
  std::set<std::string> variables;
  std::set<std::string> name_ids;
  std::set<std::string> types;
};

UnitNames CollectNames(const CompilationUnit& unit) {
  UnitNames out;
  out.types = TypeNames(unit);
  Walk(unit, [&](NodeRef node, const std::vector<NodeRef>&) {
    if (const TypeDecl* t = node.Get<TypeDecl>()) {
      for (const auto& c : t->enum_constants) out.variables.insert(c);
    } else if (const Member* m = node.Get<Member>()) {
      if (const auto* f = m->As<FieldDecl>()) out.variables.insert(f->name);
      if (const auto* md = m->As<MethodDecl>()) {
        for (const auto& p : md->params) out.variables.insert(p.name);
      }
      if (const auto* c = m->As<ConstructorDecl>()) {
        for (const auto& p : c->params) out.variables.insert(p.name);
      }
    } else if (const Stmt* s = node.Get<Stmt>()) {
      if (const auto* d = s->As<LocalVarDecl>()) out.variables.insert(d->name);
    } else if (const CatchClause* c = node.Get<CatchClause>()) {
      out.variables.insert(c->name);
    } else if (const Expr* e = node.Get<Expr>()) {
      if (const auto* n = e->As<Name>()) out.name_ids.insert(n->id);
      if (const auto* l = e->As<Lambda>()) {
        for (const auto& p : l->params) out.variables.insert(p.name);
      }
    }
    return true;
  });
  return out;
}

}  // namespace

std::vector<MutationSite> SitesE3(const Context& ctx) {
  std::vector<MutationSite> out;
  UnitNames names = CollectNames(ctx.unit);
  for (const TypeDecl* c : AllTypeDecls(ctx.unit)) {
    for (const auto& m : c->members) {
      const auto* f = m.As<FieldDecl>();
      if (f && PlanE3(ctx, *c, *f, names.variables, names.name_ids, names.types)) {
        out.push_back(MakeSite(ctx.unit, OperatorId::kE3, NodeRef(&m), c->name + "." + f->name));
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const MutationSite& a, const MutationSite& b) {
    return a.anchor < b.anchor;
  });
  return out;
}

void RewriteE3(CompilationUnit& unit, const ScopeTree& scopes, const MutationSite& site,
               std::uint64_t seed) {
  Anchor a = ResolveAnchor(unit, site.anchor);
  const Member* m = a.node.Get<Member>();
  const TypeDecl* owner = a.ancestors.back().Get<TypeDecl>();
  UnitNames names = CollectNames(unit);
  auto plan = PlanE3(Context{unit, scopes}, *owner, *m->As<FieldDecl>(), names.variables,
                     names.name_ids, names.types);
  const std::string& target = plan->candidates[seed % plan->candidates.size()];
  for (const Expr* ref : plan->refs) {
    Expr* e = Mutable(ref);
    if (auto* n = e->As<Name>()) n->id = target;
    if (auto* fa = e->As<FieldAccess>()) fa->name = target;
  }
  Mutable(plan->field)->name = target;
}

// ---------------------------------------------------------------------------
// E4a, E4b, E4c

namespace {

bool IsIncDec(const Expr& e) {
  const auto* u = e.As<Unary>();
  return u && (u->op == UnaryOp::kPreInc || u->op == UnaryOp::kPostInc ||
               u->op == UnaryOp::kPreDec || u->op == UnaryOp::kPostDec);
}

}  // namespace

std::vector<MutationSite> SitesE4a(const Context& ctx) {
  std::vector<MutationSite> out;
  Walk(ctx.unit, [&](NodeRef node, const std::vector<NodeRef>&) {
    const Stmt* s = node.Get<Stmt>();
    if (!s) return true;
    if (const auto* es = s->As<ExprStmt>(); es && IsIncDec(es->expr)) {
      out.push_back(MakeSite(ctx.unit, OperatorId::kE4a, NodeRef(&es->expr), PrintExpr(es->expr)));
    } else if (const auto* f = s->As<For>()) {
      for (const auto& u : f->update) {
        if (IsIncDec(u)) {
          out.push_back(MakeSite(ctx.unit, OperatorId::kE4a, NodeRef(&u), PrintExpr(u)));
        }
      }
    }
    return true;
  });
  return out;
}

void RewriteE4a(CompilationUnit& unit, const ScopeTree&, const MutationSite& site, std::uint64_t) {
  Anchor a = ResolveAnchor(unit, site.anchor);
  auto* u = Mutable(a.node.Get<Expr>())->As<Unary>();
  switch (u->op) {
    case UnaryOp::kPreInc: u->op = UnaryOp::kPostInc; break;
    case UnaryOp::kPostInc: u->op = UnaryOp::kPreInc; break;
    case UnaryOp::kPreDec: u->op = UnaryOp::kPostDec; break;
    case UnaryOp::kPostDec: u->op = UnaryOp::kPreDec; break;
    default: break;
  }
}

std::vector<MutationSite> SitesE4b(const Context& ctx) {
  std::vector<MutationSite> out;
  Walk(ctx.unit, [&](NodeRef node, const std::vector<NodeRef>&) {
    const Expr* e = node.Get<Expr>();
    if (const auto* b = e ? e->As<BoolLit>() : nullptr; b && !b->value) {
      out.push_back(MakeSite(ctx.unit, OperatorId::kE4b, node, "false"));
    }
    return true;
  });
  return out;
}

void RewriteE4b(CompilationUnit& unit, const ScopeTree&, const MutationSite& site, std::uint64_t) {
  Anchor a = ResolveAnchor(unit, site.anchor);
  Expr* e = Mutable(a.node.Get<Expr>());
  Binary b;
  b.op = BinaryOp::kOr;
  b.lhs = Box<Expr>(MakeExpr(BoolLit{false}));
  b.rhs = Box<Expr>(MakeExpr(BoolLit{false}));
  *e = MakeExpr(Paren{Box<Expr>(MakeExpr(std::move(b)))}, e->span);
}

namespace {

bool QualifiableField(const ScopeTree& scopes, const Expr& e) {
  if (!e.Is<Name>()) return false;
  const SymbolEntry* b = scopes.BindingOf(e);
  if (!b || b->kind != SymbolKind::kField || !b->field || b->IsStatic()) return false;
  int scope = scopes.ScopeOf(e);
  if (scope < 0) return false;
  int ts = scopes.TypeScopeOf(scope);
  if (ts < 0 || b->owner_type != ts) return false;
  const auto& tsc = scopes.scope(ts);
  if (tsc.type && tsc.type->kind == TypeKind::kInterface) return false;
  return !InStaticContext(scopes, scope);
}

}  // namespace

std::vector<MutationSite> SitesE4c(const Context& ctx) {
  std::vector<MutationSite> out;
  Walk(ctx.unit, [&](NodeRef node, const std::vector<NodeRef>&) {
    const Expr* e = node.Get<Expr>();
    if (e && QualifiableField(ctx.scopes, *e)) {
      out.push_back(MakeSite(ctx.unit, OperatorId::kE4c, node, e->As<Name>()->id));
    }
    return true;
  });
  return out;
}

void RewriteE4c(CompilationUnit& unit, const ScopeTree&, const MutationSite& site, std::uint64_t) {
  Anchor a = ResolveAnchor(unit, site.anchor);
  Expr* e = Mutable(a.node.Get<Expr>());
  std::string id = e->As<Name>()->id;
  *e = MakeExpr(FieldAccess{Box<Expr>(MakeExpr(This{})), id}, e->span);
}

// ---------------------------------------------------------------------------
// E5

namespace {

bool SplitOperand(const Expr& parent, const Expr& child) {
  const auto* b = parent.As<Binary>();
  if (!b || !(IsComparison(b->op) || IsArithmetic(b->op))) return false;
  if ((b->lhs.get() != &child && b->rhs.get() != &child) || !child.Is<IntLit>()) return false;
  auto v = analysis::ParseIntLiteral(child.As<IntLit>()->text);
  return v && LiteralSplit(v->AsInt(), v->is_long, 0).has_value();
}

Expr Literal(std::int64_t v, bool is_long) {
  std::string suffix = is_long ? "L" : "";
  if (v >= 0) return MakeExpr(IntLit{std::to_string(v) + suffix});
  std::uint64_t mag = 0ull - static_cast<std::uint64_t>(v);
  Unary u;
  u.op = UnaryOp::kNeg;
  u.operand = Box<Expr>(MakeExpr(IntLit{std::to_string(mag) + suffix}));
  return MakeExpr(std::move(u));
}

}  // namespace

std::optional<std::pair<std::int64_t, std::int64_t>> LiteralSplit(std::int64_t k, bool is_long,
                                                                  std::uint64_t seed) {
  const std::int64_t lo = is_long ? std::numeric_limits<std::int64_t>::min() + 1
                                  : std::numeric_limits<std::int32_t>::min() + 1;
  const std::int64_t hi = is_long ? std::numeric_limits<std::int64_t>::max()
                                  : std::numeric_limits<std::int32_t>::max();
  auto fits = [&](__int128 q) {
    __int128 p = static_cast<__int128>(k) - q;
    return q >= lo && q <= hi && p >= lo && p <= hi;
  };
  std::int64_t q0 = (k > 5 || k < -5) ? 5 : k - 1;
  if (!fits(q0)) return std::nullopt;
  __int128 shifted = static_cast<__int128>(q0) + static_cast<__int128>(seed);
  std::int64_t q = fits(shifted) ? static_cast<std::int64_t>(shifted) : q0;
  return std::make_pair(k - q, q);
}

std::vector<MutationSite> SitesE5(const Context& ctx) {
  std::vector<MutationSite> out;
  Walk(ctx.unit, [&](NodeRef node, const std::vector<NodeRef>& ancestors) {
    const Expr* e = node.Get<Expr>();
    if (!e || ancestors.empty()) return true;
    const Expr* parent = ancestors.back().Get<Expr>();
    if (parent && SplitOperand(*parent, *e)) {
      out.push_back(MakeSite(ctx.unit, OperatorId::kE5, node, e->As<IntLit>()->text));
    }
    return true;
  });
  return out;
}

void RewriteE5(CompilationUnit& unit, const ScopeTree&, const MutationSite& site,
               std::uint64_t seed) {
  Anchor a = ResolveAnchor(unit, site.anchor);
  Expr* e = Mutable(a.node.Get<Expr>());
  auto value = *analysis::ParseIntLiteral(e->As<IntLit>()->text);
  auto [p, q] = *LiteralSplit(value.AsInt(), value.is_long, seed);
  Binary sum;
  sum.op = BinaryOp::kAdd;
  sum.lhs = Box<Expr>(Literal(p, value.is_long));
  sum.rhs = Box<Expr>(Literal(q, value.is_long));
  *e = MakeExpr(Paren{Box<Expr>(MakeExpr(std::move(sum)))}, e->span);
}

}  // namespace mtsca::mutation::internal
