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

#include "mtsca/analysis/dataflow.h"

#include <deque>
#include <type_traits>

#include "mtsca/java/walk.h"

namespace mtsca::analysis {

using namespace java;  // NOLINT(build/namespaces)

std::vector<int> DefUseInfo::DefsOf(int symbol) const {
  std::vector<int> out;
  for (size_t i = 0; i < events.size(); ++i) {
    if (events[i].kind == DefUseEvent::Kind::kDef && events[i].symbol == symbol) {
      out.push_back(static_cast<int>(i));
    }
  }
  return out;
}

namespace {

constexpr int kEntry = 0;
constexpr int kExit = 1;

struct LoopContext {
  int continue_target = -1;  // -1: collect in pending_continues
  std::vector<int> breaks;
  std::vector<int> pending_continues;
};

class CfgBuilder {
 public:
  CfgBuilder(const ScopeTree& scopes, const WeaknessConfig& cfg, DefUseInfo& info)
      : scopes_(scopes), cfg_(cfg), info_(info) {}

  void Run(const std::vector<const void*>& params, const Stmt* body,
           const Expr* expr_body) {
    NewNode();  // entry
    NewNode();  // exit
    current_ = kEntry;
    for (const void* p : params) {
      if (const SymbolEntry* sym = scopes_.DeclOf(p)) {
        tracked_.insert(sym->id);
        AddEvent(DefUseEvent::Kind::kDef, sym->id, Span{}, p).at_entry = true;
      }
    }
    std::vector<int> exits{kEntry};
    if (body) exits = Build(*body, exits);
    if (expr_body) {
      NodeFrom(exits);
      Collect(*expr_body);
      exits = {current_};
    }
    Link(exits, kExit);
  }

 private:
  int NewNode() {
    info_.succ.emplace_back();
    return static_cast<int>(info_.succ.size()) - 1;
  }

  int NodeFrom(const std::vector<int>& preds) {
    int n = NewNode();
    Link(preds, n);
    current_ = n;
    return n;
  }

  void Link(const std::vector<int>& from, int to) {
    for (int f : from) {
      auto& s = info_.succ[static_cast<size_t>(f)];
      bool present = false;
      for (int x : s) present |= x == to;
      if (!present) s.push_back(to);
    }
  }

  DefUseEvent& AddEvent(DefUseEvent::Kind kind, int symbol, Span span, const void* site) {
    DefUseEvent ev;
    ev.kind = kind;
    ev.symbol = symbol;
    ev.node = current_;
    ev.span = span;
    ev.site = site;
    info_.events.push_back(ev);
    return info_.events.back();
  }

  int TrackedSymbol(const Expr& e) const {
    if (!e.Is<Name>()) return -1;
    const SymbolEntry* sym = scopes_.BindingOf(e);
    if (!sym || tracked_.count(sym->id) == 0) return -1;
    return sym->id;
  }

  void Use(const Expr& e, int sym) { AddEvent(DefUseEvent::Kind::kUse, sym, e.span, &e); }
  void Def(const Expr& site, int sym) {
    AddEvent(DefUseEvent::Kind::kDef, sym, site.span, &site);
  }

  // Uses of tracked variables captured by a lambda or anonymous class body.
  void CaptureUses(NodeRef root) {
    Walk(root, [&](NodeRef node, const std::vector<NodeRef>&) {
      if (const Expr* e = node.Get<Expr>()) {
        int sym = TrackedSymbol(*e);
        if (sym >= 0) Use(*e, sym);
      }
      return true;
    });
  }

  void Collect(const Expr& e) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Name>) {
            int sym = TrackedSymbol(e);
            if (sym >= 0) Use(e, sym);
          } else if constexpr (std::is_same_v<T, Assign>) {
            const Expr& target = StripParens(*n.target);
            int sym = TrackedSymbol(target);
            if (sym < 0) {
              CollectLValue(target);
              Collect(*n.value);
              return;
            }
            bool compound = n.op != AssignOp::kAssign;
            if (cfg_.Has(WeaknessId::kDfLeftToRight)) {
              Def(e, sym);
              if (compound) Use(target, sym);
              Collect(*n.value);
            } else {
              if (compound) Use(target, sym);
              Collect(*n.value);
              Def(e, sym);
            }
          } else if constexpr (std::is_same_v<T, Unary>) {
            const Expr& operand = StripParens(*n.operand);
            int sym = TrackedSymbol(operand);
            bool incdec = n.op != UnaryOp::kNot && n.op != UnaryOp::kNeg;
            if (incdec && sym >= 0) {
              Use(operand, sym);
              Def(e, sym);
            } else {
              Collect(*n.operand);
            }
          } else if constexpr (std::is_same_v<T, Lambda>) {
            CaptureUses(NodeRef(&e));
          } else if constexpr (std::is_same_v<T, ObjectCreation>) {
            for (const auto& a : n.args) Collect(a);
            if (n.body) {
              for (const auto& m : n.body->members) CaptureUses(NodeRef(&m));
            }
          } else {
            for (NodeRef child : Children(NodeRef(&e))) {
              if (const Expr* ce = child.Get<Expr>()) Collect(*ce);
            }
          }
        },
        e.node);
  }

  void CollectLValue(const Expr& target) {
    if (const auto* fa = target.As<FieldAccess>()) {
      Collect(*fa->target);
    } else if (const auto* aa = target.As<ArrayAccess>()) {
      Collect(*aa->array);
      Collect(*aa->index);
    }
  }

  void Declare(const Stmt& st, const LocalVarDecl& d) {
    const SymbolEntry* sym = scopes_.DeclOf(&st);
    if (d.init) Collect(*d.init);
    if (!sym) return;
    tracked_.insert(sym->id);
    if (d.init) {
      AddEvent(DefUseEvent::Kind::kDef, sym->id, st.span, &st);
    } else if (cfg_.Has(WeaknessId::kR8InitOnly)) {
      AddEvent(DefUseEvent::Kind::kDef, sym->id, st.span, &st).synthetic = true;
    }
  }

  std::vector<int> BuildAll(const std::vector<Stmt>& stmts, std::vector<int> preds) {
    for (const auto& s : stmts) preds = Build(s, preds);
    return preds;
  }

  std::vector<int> Build(const Stmt& st, const std::vector<int>& preds) {
    std::vector<int> out;
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, LocalVarDecl>) {
            out = {NodeFrom(preds)};
            Declare(st, n);
          } else if constexpr (std::is_same_v<T, ExprStmt>) {
            out = {NodeFrom(preds)};
            Collect(n.expr);
          } else if constexpr (std::is_same_v<T, If>) {
            int c = NodeFrom(preds);
            Collect(n.cond);
            out = Build(*n.then_branch, {c});
            if (n.else_branch) {
              auto e = Build(*n.else_branch, {c});
              out.insert(out.end(), e.begin(), e.end());
            } else {
              out.push_back(c);
            }
          } else if constexpr (std::is_same_v<T, While>) {
            int c = NodeFrom(preds);
            Collect(n.cond);
            loops_.push_back(LoopContext{c, {}, {}});
            auto body = Build(*n.body, {c});
            Link(body, c);
            out = {c};
            out.insert(out.end(), loops_.back().breaks.begin(), loops_.back().breaks.end());
            loops_.pop_back();
          } else if constexpr (std::is_same_v<T, For>) {
            std::vector<int> cur = BuildAll(n.init, preds);
            int c = NodeFrom(cur);
            if (n.cond) Collect(*n.cond);
            loops_.push_back(LoopContext{-1, {}, {}});
            auto body = Build(*n.body, {c});
            body.insert(body.end(), loops_.back().pending_continues.begin(),
                        loops_.back().pending_continues.end());
            int u = NodeFrom(body);
            for (const auto& e : n.update) Collect(e);
            Link({u}, c);
            out = {c};
            out.insert(out.end(), loops_.back().breaks.begin(), loops_.back().breaks.end());
            loops_.pop_back();
          } else if constexpr (std::is_same_v<T, Return>) {
            int r = NodeFrom(preds);
            if (n.value) Collect(*n.value);
            Link({r}, kExit);
          } else if constexpr (std::is_same_v<T, Throw>) {
            int t = NodeFrom(preds);
            Collect(n.value);
            Link({t}, kExit);
          } else if constexpr (std::is_same_v<T, Block>) {
            out = BuildAll(n.stmts, preds);
          } else if constexpr (std::is_same_v<T, Break>) {
            int b = NodeFrom(preds);
            if (!loops_.empty()) loops_.back().breaks.push_back(b);
          } else if constexpr (std::is_same_v<T, Continue>) {
            int c = NodeFrom(preds);
            if (!loops_.empty()) {
              if (loops_.back().continue_target >= 0) {
                Link({c}, loops_.back().continue_target);
              } else {
                loops_.back().pending_continues.push_back(c);
              }
            }
          } else if constexpr (std::is_same_v<T, EmptyStmt>) {
            out = preds;
          } else if constexpr (std::is_same_v<T, Try>) {
            out = BuildTry(n, preds);
          }
        },
        st.node);
    return out;
  }

  std::vector<int> BuildTry(const Try& t, const std::vector<int>& preds) {
    int first = static_cast<int>(info_.succ.size());
    std::vector<int> cur = preds;
    std::vector<int> resources;
    for (const auto& r : t.resources) {
      cur = Build(r, cur);
      if (const SymbolEntry* sym = scopes_.DeclOf(&r)) resources.push_back(sym->id);
    }
    cur = Build(*t.body, cur);
    int close = NodeFrom(cur);
    for (size_t i = 0; i < resources.size(); ++i) {
      AddEvent(DefUseEvent::Kind::kUse, resources[i], t.resources[i].span, &t.resources[i]);
    }
    int body_end = static_cast<int>(info_.succ.size());
    std::vector<int> throwing(preds);
    for (int n = first; n < body_end; ++n) throwing.push_back(n);

    std::vector<int> normal{close};
    std::vector<int> catch_nodes;
    for (const auto& c : t.catches) {
      int entry = NodeFrom(throwing);
      if (const SymbolEntry* sym = scopes_.DeclOf(&c)) {
        tracked_.insert(sym->id);
        AddEvent(DefUseEvent::Kind::kDef, sym->id, c.span, &c);
      }
      int start = static_cast<int>(info_.succ.size()) - 1;
      auto exits = Build(*c.body, {entry});
      for (int n = start; n < static_cast<int>(info_.succ.size()); ++n) catch_nodes.push_back(n);
      normal.insert(normal.end(), exits.begin(), exits.end());
    }
    if (!t.finally_block) return normal;
    std::vector<int> into_finally = normal;
    if (t.catches.empty()) {
      into_finally.insert(into_finally.end(), throwing.begin(), throwing.end());
    }
    into_finally.insert(into_finally.end(), catch_nodes.begin(), catch_nodes.end());
    int fin = NodeFrom(into_finally);
    auto exits = Build(*t.finally_block, {fin});
    Link(exits, kExit);
    return exits;
  }

  const ScopeTree& scopes_;
  const WeaknessConfig& cfg_;
  DefUseInfo& info_;
  int current_ = kEntry;
  std::set<int> tracked_;
  std::vector<LoopContext> loops_;
};

void Solve(DefUseInfo& info) {
  size_t n = info.succ.size();
  std::vector<std::vector<int>> node_events(n);
  for (size_t i = 0; i < info.events.size(); ++i) {
    node_events[static_cast<size_t>(info.events[i].node)].push_back(static_cast<int>(i));
  }
  auto transfer = [&](size_t node, std::set<int> in) {
    for (int ev : node_events[node]) {
      const auto& e = info.events[static_cast<size_t>(ev)];
      if (e.kind != DefUseEvent::Kind::kDef) continue;
      for (auto it = in.begin(); it != in.end();) {
        if (info.events[static_cast<size_t>(*it)].symbol == e.symbol) {
          it = in.erase(it);
        } else {
          ++it;
        }
      }
      in.insert(ev);
    }
    return in;
  };
  info.reach_in.assign(n, {});
  std::vector<std::set<int>> out(n);
  std::deque<size_t> work;
  std::vector<bool> queued(n, true);
  for (size_t i = 0; i < n; ++i) work.push_back(i);
  std::vector<std::vector<int>> preds(n);
  for (size_t i = 0; i < n; ++i) {
    for (int s : info.succ[i]) preds[static_cast<size_t>(s)].push_back(static_cast<int>(i));
  }
  while (!work.empty()) {
    size_t node = work.front();
    work.pop_front();
    queued[node] = false;
    std::set<int> in;
    for (int p : preds[node]) {
      const auto& po = out[static_cast<size_t>(p)];
      in.insert(po.begin(), po.end());
    }
    info.reach_in[node] = in;
    auto new_out = transfer(node, std::move(in));
    if (new_out != out[node]) {
      out[node] = std::move(new_out);
      for (int s : info.succ[node]) {
        if (!queued[static_cast<size_t>(s)]) {
          queued[static_cast<size_t>(s)] = true;
          work.push_back(static_cast<size_t>(s));
        }
      }
    }
  }

  std::set<int> used;
  for (size_t node = 0; node < n; ++node) {
    std::set<int> cur = info.reach_in[node];
    for (int ev : node_events[node]) {
      const auto& e = info.events[static_cast<size_t>(ev)];
      if (e.kind == DefUseEvent::Kind::kUse) {
        auto& defs = info.use_defs[ev];
        for (int d : cur) {
          if (info.events[static_cast<size_t>(d)].symbol == e.symbol) {
            defs.push_back(d);
            used.insert(d);
          }
        }
      } else {
        for (auto it = cur.begin(); it != cur.end();) {
          if (info.events[static_cast<size_t>(*it)].symbol == e.symbol) {
            it = cur.erase(it);
          } else {
            ++it;
          }
        }
        cur.insert(ev);
      }
    }
  }
  for (size_t i = 0; i < info.events.size(); ++i) {
    if (info.events[i].kind == DefUseEvent::Kind::kDef && used.count(static_cast<int>(i)) == 0) {
      info.unused_defs.push_back(static_cast<int>(i));
    }
  }
}

}  // namespace

DefUseInfo ReachingDefs(const std::vector<Param>& params, const Stmt* body,
                        const ScopeTree& scopes, const WeaknessConfig& cfg) {
  DefUseInfo info;
  std::vector<const void*> decls;
  for (const auto& p : params) decls.push_back(&p);
  CfgBuilder(scopes, cfg, info).Run(decls, body, nullptr);
  Solve(info);
  return info;
}

DefUseInfo ReachingDefs(const MethodDecl& method, const ScopeTree& scopes,
                        const WeaknessConfig& cfg) {
  if (!method.body) return {};
  return ReachingDefs(method.params, method.body.get(), scopes, cfg);
}

DefUseInfo ReachingDefs(const ConstructorDecl& ctor, const ScopeTree& scopes,
                        const WeaknessConfig& cfg) {
  return ReachingDefs(ctor.params, ctor.body.get(), scopes, cfg);
}

DefUseInfo ReachingDefs(const Lambda& lambda, const ScopeTree& scopes,
                        const WeaknessConfig& cfg) {
  DefUseInfo info;
  std::vector<const void*> decls;
  for (const auto& p : lambda.params) decls.push_back(&p);
  CfgBuilder(scopes, cfg, info).Run(decls, lambda.block_body.get(), lambda.expr_body.get());
  Solve(info);
  return info;
}

}  // namespace mtsca::analysis
