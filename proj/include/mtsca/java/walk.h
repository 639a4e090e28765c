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

#ifndef MTSCA_JAVA_WALK_H_
#define MTSCA_JAVA_WALK_H_

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mtsca/java/ast.h"

namespace mtsca::java {

// Non-owning handle to any node that can carry a child list.
class NodeRef {
 public:
  using Ptr = std::variant<const TypeDecl*, const Member*, const Stmt*, const Expr*,
                           const CatchClause*>;

  NodeRef() : ptr_(static_cast<const Expr*>(nullptr)) {}
  NodeRef(const TypeDecl* p) : ptr_(p) {}     // NOLINT
  NodeRef(const Member* p) : ptr_(p) {}       // NOLINT
  NodeRef(const Stmt* p) : ptr_(p) {}         // NOLINT
  NodeRef(const Expr* p) : ptr_(p) {}         // NOLINT
  NodeRef(const CatchClause* p) : ptr_(p) {}  // NOLINT

  template <typename T>
  const T* Get() const {
    auto* p = std::get_if<const T*>(&ptr_);
    return p ? *p : nullptr;
  }
  const void* address() const;
  Span span() const;
  bool operator==(const NodeRef& o) const { return address() == o.address(); }

 private:
  Ptr ptr_;
};

// Children in a fixed order; the order defines node paths.
std::vector<NodeRef> Children(NodeRef node);

// Pre-order walk. `ancestors` lists the enclosing nodes outermost first.
// Returning false from the callback skips the node's children.
using WalkFn = std::function<bool(NodeRef node, const std::vector<NodeRef>& ancestors)>;
void Walk(const CompilationUnit& unit, const WalkFn& fn);
void Walk(NodeRef root, const WalkFn& fn);

// A path is the list of child indices from the unit (whose children are its
// type declarations) down to a node.
using NodePath = std::vector<int>;
std::optional<NodePath> PathOf(const CompilationUnit& unit, NodeRef target);
std::optional<NodeRef> Resolve(const CompilationUnit& unit, const NodePath& path);
std::string PathToString(const NodePath& path);
NodePath PathFromString(const std::string& text);

// Mutable access to a node of a unit the caller owns.
template <typename T>
T* Mutable(const T* node) {
  return const_cast<T*>(node);
}

}  // namespace mtsca::java

#endif  // MTSCA_JAVA_WALK_H_
