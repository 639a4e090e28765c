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

#include <gtest/gtest.h>

#include <deque>
#include <set>

#include "mtsca/analysis/dataflow.h"
#include "mtsca/analysis/scopes.h"
#include "mtsca/analysis/types.h"
#include "mtsca/java/parser.h"
#include "mtsca/java/walk.h"
#include "support/corpus.h"
#include "support/program_gen.h"

namespace mtsca::analysis {
namespace {

using java::NodeRef;
using RT = ResolvedType;

std::vector<java::CompilationUnit> Units() {
  std::vector<java::CompilationUnit> out;
  for (const auto& path : testing::CorpusFiles()) out.push_back(testing::LoadPrinted(path));
  for (uint64_t seed = 1; seed <= 80; ++seed) {
    out.push_back(java::Parse(testing::ProgramGen(seed).Generate(), "G.java"));
  }
  return out;
}

// Independent resolver. It walks the ancestor chain by hand and answers only
// where the answer is certain; nullopt means "no opinion".
class Oracle {
 public:
  explicit Oracle(const java::CompilationUnit& unit) : unit_(unit) {
    java::Walk(unit, [&](NodeRef n, const std::vector<NodeRef>&) {
      if (auto* t = n.Get<java::TypeDecl>()) types_[t->name].push_back(t);
      if (auto* m = n.Get<java::Member>()) {
        if (auto* b = m->AsType()) types_[b->name].push_back(b);
      }
      return true;
    });
  }

  enum class Where { kNone, kLocal, kField, kUncertain };
  struct Lookup {
    Where where = Where::kNone;
    RT type;
  };

  static RT Of(const java::TypeRef& t) {
    static const std::set<std::string> kPrims = {"int",  "long",  "boolean", "char",
                                                 "byte", "short", "float",   "double"};
    if (t.dims > 0) return RT::Array(t.name, t.dims);
    if (kPrims.count(t.name)) return RT::Primitive(t.name);
    return RT::Class(t.name);
  }

  Lookup Find(const std::string& name, NodeRef node, const std::vector<NodeRef>& anc) const {
    for (int i = static_cast<int>(anc.size()) - 1; i >= 0; --i) {
      NodeRef a = anc[i];
      NodeRef next = i + 1 < static_cast<int>(anc.size()) ? anc[i + 1] : node;
      if (auto* e = a.Get<java::Expr>()) {
        if (auto* l = e->As<java::Lambda>()) {
          for (const auto& p : l->params) {
            if (p.name != name) continue;
            if (!p.type) return {Where::kUncertain, {}};
            return {Where::kLocal, Of(*p.type)};
          }
        } else if (auto* oc = e->As<java::ObjectCreation>(); oc && oc->body && next.Get<java::Member>()) {
          if (auto f = FieldIn(oc->body->members, name)) return {Where::kField, *f};
          if (InUnitField(oc->type.SimpleName(), name)) return {Where::kUncertain, {}};
        }
      } else if (auto* s = a.Get<java::Stmt>()) {
        if (auto* b = s->As<java::Block>()) {
          std::optional<RT> found;
          for (const auto& st : b->stmts) {
            if (&st == next.Get<java::Stmt>()) break;
            if (auto* d = st.As<java::LocalVarDecl>(); d && d->name == name) found = Of(d->type);
          }
          if (found) return {Where::kLocal, *found};
        } else if (auto* f = s->As<java::For>()) {
          for (const auto& st : f->init) {
            if (auto* d = st.As<java::LocalVarDecl>(); d && d->name == name) {
              return {Where::kLocal, Of(d->type)};
            }
          }
        } else if (auto* t = s->As<java::Try>()) {
          for (const auto& st : t->resources) {
            if (&st == next.Get<java::Stmt>()) break;
            if (auto* d = st.As<java::LocalVarDecl>(); d && d->name == name) {
              return {Where::kLocal, Of(d->type)};
            }
          }
        }
      } else if (auto* c = a.Get<java::CatchClause>()) {
        if (c->name == name) {
          if (c->types.size() != 1) return {Where::kUncertain, {}};
          return {Where::kLocal, Of(c->types[0])};
        }
      } else if (auto* m = a.Get<java::Member>()) {
        const std::vector<java::Param>* params = nullptr;
        if (auto* md = m->As<java::MethodDecl>()) params = &md->params;
        if (auto* cd = m->As<java::ConstructorDecl>()) params = &cd->params;
        if (params) {
          for (const auto& p : *params) {
            if (p.name == name) return {Where::kLocal, Of(p.type)};
          }
        }
      }
      const java::TypeDecl* td = a.Get<java::TypeDecl>();
      if (!td) {
        if (auto* m = a.Get<java::Member>()) td = m->AsType();
      }
      if (td) {
        if (auto f = FieldIn(td->members, name)) return {Where::kField, *f};
        for (const auto& c : td->enum_constants) {
          if (c == name) return {Where::kField, RT::Class(td->name)};
        }
        std::vector<std::string> supers;
        if (td->superclass) supers.push_back(td->superclass->SimpleName());
        for (const auto& t : td->interfaces) supers.push_back(t.SimpleName());
        for (const auto& s : supers) {
          if (InUnitField(s, name)) return {Where::kUncertain, {}};
        }
      }
    }
    return {};
  }

  std::optional<RT> Type(const java::Expr& e, NodeRef node, const std::vector<NodeRef>& anc) const {
    using namespace java;
    if (auto* lit = e.As<IntLit>()) {
      char last = lit->text.back();
      return RT::Primitive(last == 'L' || last == 'l' ? "long" : "int");
    }
    if (e.Is<BoolLit>()) return RT::Primitive("boolean");
    if (e.Is<StringLit>()) return RT::Class("String");
    if (e.Is<CharLit>()) return RT::Primitive("char");
    if (auto* n = e.As<Name>()) {
      auto l = Find(n->id, node, anc);
      if (l.where == Where::kLocal || l.where == Where::kField) return l.type;
      return std::nullopt;
    }
    auto sub = [&](const Expr& child) {
      std::vector<NodeRef> a = anc;
      a.push_back(node);
      return Type(child, &child, a);
    };
    if (auto* p = e.As<Paren>()) return sub(*p->inner);
    if (auto* c = e.As<Cast>()) return Of(c->type);
    if (auto* a = e.As<Assign>()) return sub(*a->target);
    if (auto* oc = e.As<ObjectCreation>()) {
      if (oc->body) return std::nullopt;
      return Of(oc->type);
    }
    if (auto* ac = e.As<ArrayCreation>()) {
      return RT::Array(ac->element.name,
                       static_cast<int>(ac->dim_exprs.size()) + ac->extra_dims);
    }
    if (auto* aa = e.As<ArrayAccess>()) {
      auto t = sub(*aa->array);
      if (!t || !t->IsArray()) return std::nullopt;
      if (t->dims > 1) return RT::Array(t->name, t->dims - 1);
      return Of(TypeRef{t->name, {}, 0});
    }
    if (auto* fa = e.As<FieldAccess>()) {
      if (fa->name == "length") {
        auto t = sub(*fa->target);
        if (t && t->IsArray()) return RT::Primitive("int");
        return std::nullopt;
      }
      if (fa->target->Is<This>()) {
        for (int i = static_cast<int>(anc.size()) - 1; i >= 0; --i) {
          if (auto* ex = anc[i].Get<Expr>()) {
            if (auto* oc = ex->As<ObjectCreation>(); oc && oc->body) {
              auto f = FieldIn(oc->body->members, fa->name);
              if (f) return f;
              return std::nullopt;
            }
          }
          const TypeDecl* td = anc[i].Get<TypeDecl>();
          if (!td) {
            if (auto* m = anc[i].Get<Member>()) td = m->AsType();
          }
          if (td) return FieldIn(td->members, fa->name);
        }
      }
      return std::nullopt;
    }
    if (auto* u = e.As<Unary>()) {
      if (u->op == UnaryOp::kNot) return RT::Primitive("boolean");
      auto t = sub(*u->operand);
      if (t && t->IsPrimitive() && (t->name == "int" || t->name == "long")) return t;
      return std::nullopt;
    }
    if (auto* b = e.As<Binary>()) {
      if (IsComparison(b->op) || b->op == BinaryOp::kAnd || b->op == BinaryOp::kOr) {
        return RT::Primitive("boolean");
      }
      auto l = sub(*b->lhs);
      auto r = sub(*b->rhs);
      if (b->op == BinaryOp::kAdd && ((l && l->IsString()) || (r && r->IsString()))) {
        return RT::Class("String");
      }
      if (!l || !r || !l->IsPrimitive() || !r->IsPrimitive()) return std::nullopt;
      static const std::set<std::string> kIntegral = {"int", "long", "char", "short", "byte"};
      if (!kIntegral.count(l->name) || !kIntegral.count(r->name)) return std::nullopt;
      return RT::Primitive(l->name == "long" || r->name == "long" ? "long" : "int");
    }
    return std::nullopt;
  }

 private:
  static std::optional<RT> FieldIn(const std::vector<java::Member>& members,
                                   const std::string& name) {
    for (const auto& m : members) {
      if (auto* f = m.As<java::FieldDecl>(); f && f->name == name) return Of(f->type);
    }
    return std::nullopt;
  }

  bool InUnitField(const std::string& type, const std::string& name) const {
    auto it = types_.find(type);
    if (it == types_.end()) return false;
    for (const auto* t : it->second) {
      if (FieldIn(t->members, name)) return true;
    }
    return false;
  }

  const java::CompilationUnit& unit_;
  std::map<std::string, std::vector<const java::TypeDecl*>> types_;
};

TEST(AnalysisProperty, ResolveTypeAgreesWithOracle) {
  size_t total = 0, checked = 0;
  for (const auto& unit : Units()) {
    auto scopes = BuildScopes(unit, {});
    Oracle oracle(unit);
    java::Walk(unit, [&](NodeRef n, const std::vector<NodeRef>& anc) {
      auto* e = n.Get<java::Expr>();
      if (!e) return true;
      ++total;
      auto want = oracle.Type(*e, n, anc);
      if (!want) return true;
      ++checked;
      EXPECT_EQ(ResolveType(*e, scopes, {}), *want)
          << unit.path << ":" << e->span.start_line << ":" << e->span.start_col << " "
          << java::PrintExpr(*e) << " oracle " << want->ToString() << " got "
          << ResolveType(*e, scopes, {}).ToString();
      return true;
    });
  }
  RecordProperty("checked", std::to_string(checked) + "/" + std::to_string(total));
  // The oracle must speak for most of the corpus to mean anything.
  EXPECT_GT(checked * 10, total * 6) << checked << " of " << total;
}

TEST(AnalysisProperty, LocalsShadowFields) {
  size_t locals = 0;
  for (const auto& unit : Units()) {
    auto scopes = BuildScopes(unit, {});
    Oracle oracle(unit);
    java::Walk(unit, [&](NodeRef n, const std::vector<NodeRef>& anc) {
      auto* e = n.Get<java::Expr>();
      if (!e || !e->Is<java::Name>()) return true;
      auto l = oracle.Find(e->As<java::Name>()->id, n, anc);
      const SymbolEntry* sym = scopes.BindingOf(*e);
      if (l.where == Oracle::Where::kLocal) {
        ++locals;
        EXPECT_NE(sym, nullptr) << unit.path << ":" << e->span.start_line;
        if (sym) EXPECT_NE(sym->kind, SymbolKind::kField) << unit.path << ":" << e->span.start_line;
      } else if (l.where == Oracle::Where::kField && sym) {
        EXPECT_EQ(sym->kind, SymbolKind::kField) << unit.path << ":" << e->span.start_line;
      }
      return true;
    });
  }
  RecordProperty("locals", static_cast<int>(locals));
  EXPECT_GT(locals, 500u);
}

// Defs of `symbol` with a definition-clear path to `use`, found by search.
std::set<int> ClearPathDefs(const DefUseInfo& info, int use) {
  const auto& u = info.events[use];
  std::vector<std::vector<int>> by_node(info.succ.size());
  for (int i = 0; i < static_cast<int>(info.events.size()); ++i) {
    by_node[info.events[i].node].push_back(i);
  }
  auto is_def = [&](int ev) {
    return info.events[ev].kind == DefUseEvent::Kind::kDef &&
           info.events[ev].symbol == u.symbol;
  };
  // Backwards from the use: the nearest defs on every path.
  std::set<int> out;
  for (auto it = by_node[u.node].rbegin(); it != by_node[u.node].rend(); ++it) {
    if (*it >= use) continue;
    if (is_def(*it)) {
      out.insert(*it);
      return out;
    }
  }
  std::vector<std::vector<int>> pred(info.succ.size());
  for (int n = 0; n < static_cast<int>(info.succ.size()); ++n) {
    for (int s : info.succ[n]) pred[s].push_back(n);
  }
  std::set<int> seen;
  std::deque<int> work(pred[u.node].begin(), pred[u.node].end());
  while (!work.empty()) {
    int n = work.front();
    work.pop_front();
    if (!seen.insert(n).second) continue;
    int last = -1;
    for (int ev : by_node[n]) {
      if (is_def(ev)) last = ev;
    }
    if (last >= 0) {
      out.insert(last);
      continue;
    }
    for (int p : pred[n]) work.push_back(p);
  }
  return out;
}

void CheckDefUse(const DefUseInfo& info, const std::string& where, size_t& uses) {
  for (const auto& [use, defs] : info.use_defs) {
    ++uses;
    const auto& u = info.events[use];
    ASSERT_EQ(u.kind, DefUseEvent::Kind::kUse);
    for (int d : defs) {
      EXPECT_EQ(info.events[d].kind, DefUseEvent::Kind::kDef);
      EXPECT_EQ(info.events[d].symbol, u.symbol);
    }
    std::set<int> got(defs.begin(), defs.end());
    EXPECT_EQ(got, ClearPathDefs(info, use)) << where << " use at line " << u.span.start_line;
  }
}

TEST(AnalysisProperty, ReachingDefsFollowClearPaths) {
  size_t uses = 0;
  for (const auto& unit : Units()) {
    auto scopes = BuildScopes(unit, {});
    java::Walk(unit, [&](NodeRef n, const std::vector<NodeRef>&) {
      std::string where = unit.path;
      if (auto* m = n.Get<java::Member>()) {
        if (auto* md = m->As<java::MethodDecl>(); md && md->body) {
          CheckDefUse(ReachingDefs(*md, scopes, {}), where + " " + md->name, uses);
        } else if (auto* cd = m->As<java::ConstructorDecl>()) {
          CheckDefUse(ReachingDefs(*cd, scopes, {}), where + " " + cd->name, uses);
        }
      } else if (auto* e = n.Get<java::Expr>()) {
        if (auto* l = e->As<java::Lambda>()) {
          CheckDefUse(ReachingDefs(*l, scopes, {}), where + " lambda", uses);
        }
      }
      return true;
    });
  }
  RecordProperty("uses", static_cast<int>(uses));
  EXPECT_GT(uses, 500u);
}

}  // namespace
}  // namespace mtsca::analysis
