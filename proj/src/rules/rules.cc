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

#include "mtsca/rules/rules.h"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "mtsca/analysis/dataflow.h"
#include "mtsca/analysis/scopes.h"
#include "mtsca/analysis/types.h"
#include "mtsca/java/walk.h"

namespace mtsca::rules {
namespace {

using analysis::ConstEval;
using analysis::ReachingDefs;
using analysis::ResolvedType;
using analysis::ResolveType;
using analysis::ScopeTree;
using analysis::SymbolEntry;
using analysis::SymbolKind;
using analysis::WeaknessConfig;
using analysis::WeaknessId;
using namespace java;

// A body of code: method, constructor, initializer block or lambda.
struct Function {
  const Member* member = nullptr;
  const Expr* lambda = nullptr;
  std::string name;
  const std::vector<Param>* params = nullptr;
  NodeRef body;
  bool has_body = false;
  Span span;
  std::vector<NodeRef> ancestors;
};

const std::vector<Param> kNoParams;

std::vector<Function> Functions(const CompilationUnit& unit) {
  std::vector<Function> out;
  Walk(unit, [&](NodeRef node, const std::vector<NodeRef>& ancestors) {
    Function f;
    f.ancestors = ancestors;
    if (const Member* m = node.Get<Member>()) {
      f.member = m;
      f.span = m->span();
      if (const auto* md = m->As<MethodDecl>()) {
        f.name = md->name;
        f.params = &md->params;
        if (md->body) f.body = NodeRef(md->body.get());
      } else if (const auto* c = m->As<ConstructorDecl>()) {
        f.name = c->name;
        f.params = &c->params;
        f.body = NodeRef(c->body.get());
      } else if (const auto* init = m->As<InitializerBlock>()) {
        f.name = init->is_static ? "<clinit>" : "<init>";
        f.params = &kNoParams;
        f.body = NodeRef(init->body.get());
      } else {
        return true;
      }
      f.has_body = f.body.address() != nullptr;
      out.push_back(std::move(f));
    } else if (const Expr* e = node.Get<Expr>(); e && e->Is<Lambda>()) {
      const auto& l = *e->As<Lambda>();
      f.lambda = e;
      f.name = "lambda";
      f.span = e->span;
      f.body = l.block_body ? NodeRef(l.block_body.get()) : NodeRef(l.expr_body.get());
      f.has_body = true;
      out.push_back(std::move(f));
    }
    return true;
  });
  return out;
}

// Visits a function body, skipping nested lambdas and class bodies.
void WalkBody(NodeRef body, const std::function<void(NodeRef)>& fn) {
  if (body.address() == nullptr) return;
  Walk(body, [&](NodeRef node, const std::vector<NodeRef>& ancestors) {
    if (!ancestors.empty()) {
      if (node.Get<Member>()) return false;
      if (const Expr* e = node.Get<Expr>(); e && e->Is<Lambda>()) return false;
    }
    fn(node);
    return true;
  });
}

bool IsSingleCharString(const Expr& e) {
  const auto* s = e.As<StringLit>();
  if (!s) return false;
  const std::string& r = s->raw;
  if (r.size() == 1) return r[0] != '\\';
  if (r.size() == 2) return r[0] == '\\';
  return r.size() == 6 && r[0] == '\\' && r[1] == 'u';
}

bool IsLiteral(const Expr& e) {
  return e.Is<IntLit>() || e.Is<BoolLit>() || e.Is<StringLit>() || e.Is<CharLit>();
}

bool IsBuilderType(const ResolvedType& t) {
  if (t.kind != ResolvedType::Kind::kClass) return false;
  return t.name == "StringBuilder" || t.name == "StringBuffer" ||
         t.name == "java.lang.StringBuilder" || t.name == "java.lang.StringBuffer";
}

bool IsResourceType(const TypeRef& t) {
  if (t.dims != 0) return false;
  std::string n = t.SimpleName();
  for (std::string_view suffix : {"Connection", "Statement", "ResultSet"}) {
    if (n.size() >= suffix.size() &&
        n.compare(n.size() - suffix.size(), suffix.size(), suffix) == 0) {
      return true;
    }
  }
  return false;
}

class Checker {
 public:
  Checker(const CompilationUnit& unit, const WeaknessConfig& cfg, std::vector<Warning>& out)
      : unit_(unit),
        cfg_(cfg),
        scopes_(analysis::BuildScopes(unit, cfg)),
        functions_(Functions(unit)),
        out_(out) {}

  void Run(const Rule& rule) {
    const std::string& id = rule.id;
    if (id == "R1") R1();
    else if (id == "R2") R2();
    else if (id == "R3") R3();
    else if (id == "R4") R4();
    else if (id == "R5") R5();
    else if (id == "R6") R6();
    else if (id == "R7") R7();
    else if (id == "R8") R8();
    else if (id == "R9") R9();
    else if (id == "R10") R10();
    else if (id == "R11") R11();
  }

 private:
  bool Weak(WeaknessId id) const { return cfg_.Has(id); }

  void Report(std::string_view rule_id, const Span& span, std::string_view desc,
              std::string_view symbol) {
    Warning w;
    w.analyzer = std::string(kMiniAnalyzer);
    w.rule_id = std::string(rule_id);
    w.file = unit_.path;
    w.line = span.start_line;
    w.message = std::string(rule_id) + ": " + std::string(desc) + " at " + std::string(symbol);
    out_.push_back(std::move(w));
  }

  std::string Describe(const Expr& e) const {
    const Expr& s = StripParens(e);
    if (const auto* n = s.As<Name>()) return n->id;
    if (const auto* fa = s.As<FieldAccess>()) return fa->name;
    if (const auto* mc = s.As<MethodCall>()) return mc->name + "()";
    return "expression";
  }

  template <typename Fn>
  void ForEachExpr(Fn fn) const {
    Walk(unit_, [&](NodeRef node, const std::vector<NodeRef>&) {
      if (const Expr* e = node.Get<Expr>()) fn(*e);
      return true;
    });
  }

  const SymbolEntry* Bound(const Expr& e) const { return scopes_.BindingOf(StripParens(e)); }

  // R1 MethodReturnsInternalArray.
  void R1() {
    for (const Function& f : functions_) {
      const MethodDecl* md = f.member ? f.member->As<MethodDecl>() : nullptr;
      if (!md || !f.has_body) continue;
      if (Weak(WeaknessId::kR1SkipNested) && f.ancestors.size() != 1) continue;
      const SymbolEntry* field = nullptr;
      WalkBody(f.body, [&](NodeRef node) {
        const Stmt* s = node.Get<Stmt>();
        const Return* r = s ? s->As<Return>() : nullptr;
        if (!r || !r->value || field) return;
        const Expr& v = StripParens(*r->value);
        if (!v.Is<Name>() && !v.Is<FieldAccess>()) return;
        const SymbolEntry* sym = scopes_.BindingOf(v);
        if (sym && sym->kind == SymbolKind::kField && sym->declared_type.IsArray()) field = sym;
      });
      if (field) Report("R1", md->span, "method returns internal array " + field->name, md->name);
    }
  }

  // R2 AvoidThrowingNullPointerException.
  void R2() {
    auto is_npe = [](const Expr& e) {
      const auto* oc = e.As<ObjectCreation>();
      return oc && oc->type.SimpleName() == "NullPointerException";
    };
    if (Weak(WeaknessId::kR2AnyOccurrence)) {
      ForEachExpr([&](const Expr& e) {
        if (is_npe(e)) Report("R2", e.span, "avoid throwing NullPointerException", "NullPointerException");
      });
      return;
    }
    Walk(unit_, [&](NodeRef node, const std::vector<NodeRef>&) {
      const Stmt* s = node.Get<Stmt>();
      if (const Throw* t = s ? s->As<Throw>() : nullptr; t && is_npe(StripParens(t->value))) {
        Report("R2", s->span, "avoid throwing NullPointerException", "NullPointerException");
      }
      return true;
    });
  }

  bool IsBuilder(const Expr& recv) const {
    const Expr& r = StripParens(recv);
    if (IsBuilderType(ResolveType(r, scopes_, cfg_))) return true;
    const auto* mc = r.As<MethodCall>();
    return mc && mc->name == "append" && mc->receiver && IsBuilder(*mc->receiver);
  }

  static bool RootedAtSingleChar(const Expr& e) {
    const Expr& s = StripParens(e);
    if (const auto* mc = s.As<MethodCall>()) {
      return mc->receiver && RootedAtSingleChar(*mc->receiver);
    }
    return IsSingleCharString(s);
  }

  // R3 AppendCharacterWithChar.
  void R3() {
    ForEachExpr([&](const Expr& e) {
      const auto* mc = e.As<MethodCall>();
      if (!mc || mc->name != "append" || mc->args.size() != 1 || !mc->receiver) return;
      const Expr& arg = StripParens(mc->args[0]);
      bool hit = IsSingleCharString(arg);
      if (!hit && Weak(WeaknessId::kR3LiteralRoot)) {
        hit = arg.Is<MethodCall>() && RootedAtSingleChar(arg);
      }
      if (hit && IsBuilder(*mc->receiver)) {
        Report("R3", e.span, "append a char instead of a one-character string",
               Describe(*mc->receiver));
      }
    });
  }

  // R4 FinalFieldCouldBeStatic.
  void R4() {
    Walk(unit_, [&](NodeRef node, const std::vector<NodeRef>& ancestors) {
      const Member* m = node.Get<Member>();
      const FieldDecl* fd = m ? m->As<FieldDecl>() : nullptr;
      if (!fd || !fd->init) return true;
      const TypeDecl* owner = ancestors.empty() ? nullptr : ancestors.back().Get<TypeDecl>();
      if (owner && owner->kind == TypeKind::kInterface) return false;
      if (!fd->mods.Has(Modifier::kFinal) || fd->mods.Has(Modifier::kStatic)) return false;
      bool hit;
      if (Weak(WeaknessId::kR4BareLiteral)) {
        hit = IsLiteral(*fd->init);
      } else {
        hit = ConstEval(*fd->init, scopes_, cfg_).has_value();
      }
      if (hit) Report("R4", fd->span, "final field could be static", fd->name);
      return false;
    });
  }

  bool IsInUnitEnum(const Expr& e, const ResolvedType& t) const {
    if (t.kind != ResolvedType::Kind::kClass) return false;
    int s = scopes_.ScopeOf(e);
    if (s < 0) return false;
    int ts = scopes_.ClassScopeByName(s, t.name);
    return ts >= 0 && scopes_.scope(ts).type &&
           scopes_.scope(ts).type->kind == TypeKind::kEnum;
  }

  // R5 CompareObjectsWithEquals.
  void R5() {
    ForEachExpr([&](const Expr& e) {
      const auto* b = e.As<Binary>();
      if (!b || (b->op != BinaryOp::kEq && b->op != BinaryOp::kNe)) return;
      ResolvedType lt = ResolveType(*b->lhs, scopes_, cfg_);
      ResolvedType rt = ResolveType(*b->rhs, scopes_, cfg_);
      if (!lt.IsReference() || !rt.IsReference()) return;
      if (lt.IsString() && rt.IsString()) return;
      if (IsInUnitEnum(*b->lhs, lt) || IsInUnitEnum(*b->rhs, rt)) return;
      Report("R5", e.span, "compare objects with equals()", Describe(*b->lhs));
    });
  }

  // R6 UnusedPrivateMethod.
  void R6() {
    struct Call {
      std::string name;
      size_t arity;
      std::set<const void*> ancestors;
    };
    std::vector<Call> calls;
    Walk(unit_, [&](NodeRef node, const std::vector<NodeRef>& ancestors) {
      const Expr* e = node.Get<Expr>();
      if (const auto* mc = e ? e->As<MethodCall>() : nullptr) {
        Call c{mc->name, mc->args.size(), {}};
        for (NodeRef a : ancestors) c.ancestors.insert(a.address());
        calls.push_back(std::move(c));
      }
      return true;
    });
    for (const Function& f : functions_) {
      const MethodDecl* md = f.member ? f.member->As<MethodDecl>() : nullptr;
      if (!md || !md->mods.Has(Modifier::kPrivate)) continue;
      const void* container = f.ancestors.back().address();
      int uses = 0;
      for (const Call& c : calls) {
        if (c.name != md->name || c.arity != md->params.size()) continue;
        if (c.ancestors.count(f.member)) continue;
        if (Weak(WeaknessId::kR6PerClass) && !c.ancestors.count(container)) continue;
        ++uses;
      }
      if (uses == 0) Report("R6", md->span, "unused private method", md->name);
    }
  }

  static bool IsArrayParam(const SymbolEntry* sym) {
    return sym && sym->kind == SymbolKind::kParam && sym->param &&
           sym->declared_type.IsArray();
  }

  // R7 ArrayIsStoredDirectly.
  void R7() {
    for (const Function& f : functions_) {
      if (!f.member || !f.has_body) continue;
      if (!f.member->As<MethodDecl>() && !f.member->As<ConstructorDecl>()) continue;
      bool receives_array = false;
      for (const auto& p : *f.params) receives_array |= p.type.dims > 0;
      WalkBody(f.body, [&](NodeRef node) {
        const Expr* e = node.Get<Expr>();
        const auto* a = e ? e->As<Assign>() : nullptr;
        if (!a || a->op != AssignOp::kAssign) return;
        const SymbolEntry* target = Bound(*a->target);
        if (!target || target->kind != SymbolKind::kField) return;
        const Expr& v = StripParens(*a->value);
        bool hit = v.Is<Name>() && IsArrayParam(scopes_.BindingOf(v));
        if (!hit && receives_array && Weak(WeaknessId::kR7NameMatch)) {
          std::string id;
          if (const auto* n = v.As<Name>()) id = n->id;
          if (const auto* mc = v.As<MethodCall>(); mc && !mc->receiver) id = mc->name;
          const SymbolEntry* by_name =
              id.empty() ? nullptr : scopes_.LookupVar(scopes_.ScopeOf(v), id);
          hit = by_name && by_name->declared_type.IsArray() &&
                (IsArrayParam(by_name) || by_name->kind == SymbolKind::kField);
        }
        if (hit) Report("R7", e->span, "array is stored directly", target->name);
      });
    }
  }

  // R8 UnusedAssignment.
  void R8() {
    for (const Function& f : functions_) {
      if (!f.has_body) continue;
      analysis::DefUseInfo info;
      if (f.lambda) {
        info = ReachingDefs(*f.lambda->As<Lambda>(), scopes_, cfg_);
      } else if (const auto* md = f.member->As<MethodDecl>()) {
        info = ReachingDefs(*md, scopes_, cfg_);
      } else if (const auto* c = f.member->As<ConstructorDecl>()) {
        info = ReachingDefs(*c, scopes_, cfg_);
      } else {
        info = ReachingDefs(kNoParams, f.body.Get<Stmt>(), scopes_, cfg_);
      }
      for (int d : info.unused_defs) {
        const auto& ev = info.events[static_cast<size_t>(d)];
        if (ev.at_entry) continue;
        const SymbolEntry& sym = scopes_.symbol(ev.symbol);
        if (sym.catch_clause) continue;
        Report("R8", ev.span, "unused assignment", sym.name);
      }
    }
  }

  // Whether the variable an operand is read from is declared final.
  bool RootIsFinal(const Expr& e) const {
    const Expr& s = StripParens(e);
    if (s.Is<Name>() || s.Is<FieldAccess>()) {
      const SymbolEntry* sym = scopes_.BindingOf(s);
      if (sym && sym->IsFinal()) return true;
      const auto* fa = s.As<FieldAccess>();
      return fa && !fa->target->Is<This>() && RootIsFinal(*fa->target);
    }
    if (const auto* mc = s.As<MethodCall>()) return mc->receiver && RootIsFinal(*mc->receiver);
    if (const auto* aa = s.As<ArrayAccess>()) return RootIsFinal(*aa->array);
    return false;
  }

  // R9 StringEqualityWithEq.
  void R9() {
    ForEachExpr([&](const Expr& e) {
      const auto* b = e.As<Binary>();
      if (!b || (b->op != BinaryOp::kEq && b->op != BinaryOp::kNe)) return;
      if (!ResolveType(*b->lhs, scopes_, cfg_).IsString() ||
          !ResolveType(*b->rhs, scopes_, cfg_).IsString()) {
        return;
      }
      if (Weak(WeaknessId::kR9SkipFinal) && (RootIsFinal(*b->lhs) || RootIsFinal(*b->rhs))) {
        return;
      }
      Report("R9", e.span, "string compared with ==", Describe(*b->lhs));
    });
  }

  void CheckCondition(const Expr& cond) {
    auto v = ConstEval(cond, scopes_, cfg_);
    if (v && v->IsBool()) {
      Report("R10", cond.span, "gratuitous boolean expression",
             v->AsBool() ? "true" : "false");
      return;
    }
    const Expr& s = StripParens(cond);
    if (const auto* b = s.As<Binary>(); b && (b->op == BinaryOp::kAnd || b->op == BinaryOp::kOr)) {
      CheckCondition(*b->lhs);
      CheckCondition(*b->rhs);
    } else if (const auto* u = s.As<Unary>(); u && u->op == UnaryOp::kNot) {
      CheckCondition(*u->operand);
    }
  }

  // R10 GratuitousBooleanExpression.
  void R10() {
    Walk(unit_, [&](NodeRef node, const std::vector<NodeRef>&) {
      const Stmt* s = node.Get<Stmt>();
      if (!s) return true;
      if (const auto* i = s->As<If>()) CheckCondition(i->cond);
      if (const auto* w = s->As<While>()) CheckCondition(w->cond);
      if (const auto* f = s->As<For>(); f && f->cond) CheckCondition(*f->cond);
      return true;
    });
  }

  bool IsSym(const Expr& e, int sym) const {
    const SymbolEntry* b = Bound(e);
    return StripParens(e).Is<Name>() && b && b->id == sym;
  }

  // Whether `body` closes the variable `sym`, directly or (in correct mode)
  // by passing it to an in-unit method that closes its parameter.
  bool Closes(NodeRef body, int sym, std::set<const MethodDecl*>& visiting) const {
    bool closed = false;
    Walk(body, [&](NodeRef node, const std::vector<NodeRef>&) {
      if (closed) return false;
      const Expr* e = node.Get<Expr>();
      const auto* mc = e ? e->As<MethodCall>() : nullptr;
      if (!mc) return true;
      if (mc->name == "close" && mc->args.empty() && mc->receiver && IsSym(*mc->receiver, sym)) {
        closed = true;
      } else if (!Weak(WeaknessId::kR11NoCallFlow)) {
        const SymbolEntry* callee = scopes_.BindingOf(*e);
        const MethodDecl* md = callee ? callee->method : nullptr;
        if (!md || !md->body || visiting.count(md)) return true;
        visiting.insert(md);
        for (size_t i = 0; i < mc->args.size() && i < md->params.size() && !closed; ++i) {
          if (!IsSym(mc->args[i], sym)) continue;
          const SymbolEntry* p = scopes_.DeclOf(&md->params[i]);
          if (p) closed = Closes(NodeRef(md->body.get()), p->id, visiting);
        }
        visiting.erase(md);
      }
      return true;
    });
    return closed;
  }

  bool Escapes(NodeRef body, int sym) const {
    bool escapes = false;
    Walk(body, [&](NodeRef node, const std::vector<NodeRef>&) {
      if (const Stmt* s = node.Get<Stmt>()) {
        if (const auto* r = s->As<Return>(); r && r->value && IsSym(*r->value, sym)) {
          escapes = true;
        }
      } else if (const Expr* e = node.Get<Expr>()) {
        const auto* a = e->As<Assign>();
        if (a && IsSym(*a->value, sym)) {
          const SymbolEntry* t = Bound(*a->target);
          escapes |= !t || t->kind == SymbolKind::kField;
        }
      }
      return !escapes;
    });
    return escapes;
  }

  // R11 CloseResource.
  void R11() {
    for (const Function& f : functions_) {
      if (!f.has_body) continue;
      std::set<const Stmt*> managed;
      std::vector<const Stmt*> decls;
      WalkBody(f.body, [&](NodeRef node) {
        const Stmt* s = node.Get<Stmt>();
        if (!s) return;
        if (const auto* t = s->As<Try>()) {
          for (const auto& r : t->resources) managed.insert(&r);
        }
        const auto* d = s->As<LocalVarDecl>();
        if (d && d->init && !d->init->Is<NullLit>() && IsResourceType(d->type)) {
          decls.push_back(s);
        }
      });
      for (const Stmt* s : decls) {
        if (managed.count(s)) continue;
        const SymbolEntry* sym = scopes_.DeclOf(s);
        if (!sym) continue;
        std::set<const MethodDecl*> visiting;
        if (Closes(f.body, sym->id, visiting) || Escapes(f.body, sym->id)) continue;
        Report("R11", s->span, "resource not closed", sym->name);
      }
    }
  }

  const CompilationUnit& unit_;
  const WeaknessConfig& cfg_;
  ScopeTree scopes_;
  std::vector<Function> functions_;
  std::vector<Warning>& out_;
};

std::vector<Rule> BuildCatalog() {
  using W = WeaknessId;
  return {
      {"R1", "MethodReturnsInternalArray",
       "Methods returning an array field of a declaring or enclosing type",
       ImplKind::kScopeAware, {W::kR1SkipNested}},
      {"R2", "AvoidThrowingNullPointerException",
       "Throwing a freshly created NullPointerException", ImplKind::kAstPattern,
       {W::kR2AnyOccurrence}},
      {"R3", "AppendCharacterWithChar",
       "StringBuilder.append with a one-character string literal", ImplKind::kAstPattern,
       {W::kR3LiteralRoot}},
      {"R4", "FinalFieldCouldBeStatic",
       "Final instance field initialized with a constant", ImplKind::kAstPattern,
       {W::kR4BareLiteral}},
      {"R5", "CompareObjectsWithEquals", "Reference comparison of two objects with ==",
       ImplKind::kScopeAware, {W::kTypeArrayLen}},
      {"R6", "UnusedPrivateMethod", "Private method without call sites in the unit",
       ImplKind::kScopeAware, {W::kR6PerClass}},
      {"R7", "ArrayIsStoredDirectly", "Array parameter assigned to a field",
       ImplKind::kScopeAware, {W::kR7NameMatch, W::kScopeFlat}},
      {"R8", "UnusedAssignment", "Definition that reaches no use", ImplKind::kDataflow,
       {W::kR8InitOnly, W::kDfLeftToRight}},
      {"R9", "StringEqualityWithEq", "String operands compared with == or !=",
       ImplKind::kScopeAware, {W::kR9SkipFinal}},
      {"R10", "GratuitousBooleanExpression", "Condition that always has the same value",
       ImplKind::kScopeAware, {W::kConstLocalOnly}},
      {"R11", "CloseResource", "Resource created in a method and never closed",
       ImplKind::kDataflow, {W::kR11NoCallFlow}},
  };
}

}  // namespace

std::string_view ImplKindName(ImplKind kind) {
  switch (kind) {
    case ImplKind::kAstPattern:
      return "ast-pattern";
    case ImplKind::kScopeAware:
      return "scope-aware";
    case ImplKind::kDataflow:
      return "dataflow";
  }
  return "?";
}

const std::vector<Rule>& AllRules() {
  static const std::vector<Rule> kRules = BuildCatalog();
  return kRules;
}

const Rule* FindRule(std::string_view id_or_name) {
  for (const Rule& r : AllRules()) {
    if (r.id == id_or_name || r.name == id_or_name) return &r;
  }
  return nullptr;
}

std::vector<Rule> ParseRuleList(std::string_view spec) {
  if (spec.empty() || spec == "all") return AllRules();
  std::vector<Rule> out;
  size_t pos = 0;
  while (pos <= spec.size()) {
    size_t comma = spec.find(',', pos);
    if (comma == std::string_view::npos) comma = spec.size();
    std::string_view item = spec.substr(pos, comma - pos);
    if (!item.empty()) {
      const Rule* r = FindRule(item);
      if (!r) throw std::invalid_argument("unknown rule: " + std::string(item));
      bool dup = false;
      for (const Rule& o : out) dup |= o.id == r->id;
      if (!dup) out.push_back(*r);
    }
    pos = comma + 1;
  }
  return out;
}

std::vector<Warning> RunRules(const java::CompilationUnit& unit,
                              const std::vector<Rule>& ruleset,
                              const analysis::WeaknessConfig& cfg) {
  std::vector<Warning> out;
  if (ruleset.empty()) return out;
  Checker checker(unit, cfg, out);
  for (const Rule& r : ruleset) checker.Run(r);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Warning> RunRules(const java::CompilationUnit& unit,
                              const analysis::WeaknessConfig& cfg) {
  return RunRules(unit, AllRules(), cfg);
}

}  // namespace mtsca::rules
