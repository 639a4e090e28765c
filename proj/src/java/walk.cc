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

#include "mtsca/java/walk.h"

#include <sstream>
#include <type_traits>

namespace mtsca::java {
namespace {

void AddExpr(std::vector<NodeRef>& out, const Box<Expr>& e) {
  if (e) out.emplace_back(e.get());
}
void AddStmt(std::vector<NodeRef>& out, const Box<Stmt>& s) {
  if (s) out.emplace_back(s.get());
}
void AddAll(std::vector<NodeRef>& out, const std::vector<Expr>& xs) {
  for (const auto& x : xs) out.emplace_back(&x);
}

std::vector<NodeRef> ExprChildren(const Expr& e) {
  std::vector<NodeRef> out;
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, FieldAccess>) {
          AddExpr(out, n.target);
        } else if constexpr (std::is_same_v<T, MethodCall>) {
          AddExpr(out, n.receiver);
          AddAll(out, n.args);
        } else if constexpr (std::is_same_v<T, ObjectCreation>) {
          AddAll(out, n.args);
          if (n.body) {
            for (const auto& m : n.body->members) out.emplace_back(&m);
          }
        } else if constexpr (std::is_same_v<T, ArrayAccess>) {
          AddExpr(out, n.array);
          AddExpr(out, n.index);
        } else if constexpr (std::is_same_v<T, ArrayInit>) {
          AddAll(out, n.elements);
        } else if constexpr (std::is_same_v<T, ArrayCreation>) {
          AddAll(out, n.dim_exprs);
          AddExpr(out, n.init);
        } else if constexpr (std::is_same_v<T, Unary>) {
          AddExpr(out, n.operand);
        } else if constexpr (std::is_same_v<T, Binary>) {
          AddExpr(out, n.lhs);
          AddExpr(out, n.rhs);
        } else if constexpr (std::is_same_v<T, Assign>) {
          AddExpr(out, n.target);
          AddExpr(out, n.value);
        } else if constexpr (std::is_same_v<T, Lambda>) {
          AddExpr(out, n.expr_body);
          AddStmt(out, n.block_body);
        } else if constexpr (std::is_same_v<T, Cast>) {
          AddExpr(out, n.operand);
        } else if constexpr (std::is_same_v<T, Paren>) {
          AddExpr(out, n.inner);
        }
      },
      e.node);
  return out;
}

std::vector<NodeRef> StmtChildren(const Stmt& s) {
  std::vector<NodeRef> out;
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, LocalVarDecl>) {
          AddExpr(out, n.init);
        } else if constexpr (std::is_same_v<T, ExprStmt>) {
          out.emplace_back(&n.expr);
        } else if constexpr (std::is_same_v<T, If>) {
          out.emplace_back(&n.cond);
          AddStmt(out, n.then_branch);
          AddStmt(out, n.else_branch);
        } else if constexpr (std::is_same_v<T, While>) {
          out.emplace_back(&n.cond);
          AddStmt(out, n.body);
        } else if constexpr (std::is_same_v<T, For>) {
          for (const auto& st : n.init) out.emplace_back(&st);
          AddExpr(out, n.cond);
          AddAll(out, n.update);
          AddStmt(out, n.body);
        } else if constexpr (std::is_same_v<T, Return>) {
          AddExpr(out, n.value);
        } else if constexpr (std::is_same_v<T, Throw>) {
          out.emplace_back(&n.value);
        } else if constexpr (std::is_same_v<T, Block>) {
          for (const auto& st : n.stmts) out.emplace_back(&st);
        } else if constexpr (std::is_same_v<T, Try>) {
          for (const auto& st : n.resources) out.emplace_back(&st);
          AddStmt(out, n.body);
          for (const auto& c : n.catches) out.emplace_back(&c);
          AddStmt(out, n.finally_block);
        }
      },
      s.node);
  return out;
}

std::vector<NodeRef> MemberChildren(const Member& m) {
  std::vector<NodeRef> out;
  if (const auto* f = m.As<FieldDecl>()) {
    AddExpr(out, f->init);
  } else if (const auto* md = m.As<MethodDecl>()) {
    AddStmt(out, md->body);
  } else if (const auto* c = m.As<ConstructorDecl>()) {
    AddStmt(out, c->body);
  } else if (const auto* init = m.As<InitializerBlock>()) {
    AddStmt(out, init->body);
  } else {
    out.emplace_back(m.AsType());
  }
  return out;
}

bool WalkRec(NodeRef node, std::vector<NodeRef>& ancestors, const WalkFn& fn) {
  if (!fn(node, ancestors)) return true;
  ancestors.push_back(node);
  for (NodeRef child : Children(node)) WalkRec(child, ancestors, fn);
  ancestors.pop_back();
  return true;
}

bool FindPath(NodeRef node, const void* target, NodePath& path) {
  if (node.address() == target) return true;
  auto children = Children(node);
  for (size_t i = 0; i < children.size(); ++i) {
    path.push_back(static_cast<int>(i));
    if (FindPath(children[i], target, path)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

const void* NodeRef::address() const {
  return std::visit([](auto p) -> const void* { return p; }, ptr_);
}

Span NodeRef::span() const {
  return std::visit(
      [](auto p) -> Span {
        using T = std::remove_const_t<std::remove_pointer_t<decltype(p)>>;
        if (p == nullptr) return Span{};
        if constexpr (std::is_same_v<T, Member>) {
          return p->span();
        } else {
          return p->span;
        }
      },
      ptr_);
}

std::vector<NodeRef> Children(NodeRef node) {
  if (const auto* t = node.Get<TypeDecl>()) {
    std::vector<NodeRef> out;
    for (const auto& m : t->members) out.emplace_back(&m);
    return out;
  }
  if (const auto* m = node.Get<Member>()) return MemberChildren(*m);
  if (const auto* s = node.Get<Stmt>()) return StmtChildren(*s);
  if (const auto* e = node.Get<Expr>()) return ExprChildren(*e);
  if (const auto* c = node.Get<CatchClause>()) {
    std::vector<NodeRef> out;
    AddStmt(out, c->body);
    return out;
  }
  return {};
}

void Walk(NodeRef root, const WalkFn& fn) {
  std::vector<NodeRef> ancestors;
  WalkRec(root, ancestors, fn);
}

void Walk(const CompilationUnit& unit, const WalkFn& fn) {
  for (const auto& t : unit.types) Walk(NodeRef(&t), fn);
}

std::optional<NodePath> PathOf(const CompilationUnit& unit, NodeRef target) {
  for (size_t i = 0; i < unit.types.size(); ++i) {
    NodePath path{static_cast<int>(i)};
    if (FindPath(NodeRef(&unit.types[i]), target.address(), path)) return path;
  }
  return std::nullopt;
}

std::optional<NodeRef> Resolve(const CompilationUnit& unit, const NodePath& path) {
  if (path.empty() || path[0] < 0 ||
      static_cast<size_t>(path[0]) >= unit.types.size()) {
    return std::nullopt;
  }
  NodeRef cur(&unit.types[static_cast<size_t>(path[0])]);
  for (size_t i = 1; i < path.size(); ++i) {
    auto children = Children(cur);
    if (path[i] < 0 || static_cast<size_t>(path[i]) >= children.size()) {
      return std::nullopt;
    }
    cur = children[static_cast<size_t>(path[i])];
  }
  return cur;
}

std::string PathToString(const NodePath& path) {
  std::string out;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += "/";
    out += std::to_string(path[i]);
  }
  return out;
}

NodePath PathFromString(const std::string& text) {
  NodePath path;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '/')) {
    if (!part.empty()) path.push_back(std::stoi(part));
  }
  return path;
}

}  // namespace mtsca::java
