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

#ifndef MTSCA_MUTATION_INTERNAL_H_
#define MTSCA_MUTATION_INTERNAL_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mtsca/analysis/scopes.h"
#include "mtsca/java/ast.h"
#include "mtsca/java/walk.h"
#include "mtsca/mutation/mutation.h"

namespace mtsca::mutation::internal {

struct Context {
  const java::CompilationUnit& unit;
  const analysis::ScopeTree& scopes;
};

using SitesFn = std::vector<MutationSite> (*)(const Context& ctx);
// Rewrites `unit` in place. `scopes` was built on `unit` before any change and
// `site` is known to be current.
using RewriteFn = void (*)(java::CompilationUnit& unit, const analysis::ScopeTree& scopes,
                           const MutationSite& site, std::uint64_t seed);

std::vector<MutationSite> SitesE1(const Context& ctx);
std::vector<MutationSite> SitesE2(const Context& ctx);
std::vector<MutationSite> SitesE3(const Context& ctx);
std::vector<MutationSite> SitesE4a(const Context& ctx);
std::vector<MutationSite> SitesE4b(const Context& ctx);
std::vector<MutationSite> SitesE4c(const Context& ctx);
std::vector<MutationSite> SitesE5(const Context& ctx);
std::vector<MutationSite> SitesX1(const Context& ctx);
std::vector<MutationSite> SitesX2(const Context& ctx);
std::vector<MutationSite> SitesX3(const Context& ctx);

void RewriteE1(java::CompilationUnit&, const analysis::ScopeTree&, const MutationSite&, std::uint64_t);
void RewriteE2(java::CompilationUnit&, const analysis::ScopeTree&, const MutationSite&, std::uint64_t);
void RewriteE3(java::CompilationUnit&, const analysis::ScopeTree&, const MutationSite&, std::uint64_t);
void RewriteE4a(java::CompilationUnit&, const analysis::ScopeTree&, const MutationSite&, std::uint64_t);
void RewriteE4b(java::CompilationUnit&, const analysis::ScopeTree&, const MutationSite&, std::uint64_t);
void RewriteE4c(java::CompilationUnit&, const analysis::ScopeTree&, const MutationSite&, std::uint64_t);
void RewriteE5(java::CompilationUnit&, const analysis::ScopeTree&, const MutationSite&, std::uint64_t);
void RewriteX1(java::CompilationUnit&, const analysis::ScopeTree&, const MutationSite&, std::uint64_t);
void RewriteX2(java::CompilationUnit&, const analysis::ScopeTree&, const MutationSite&, std::uint64_t);
void RewriteX3(java::CompilationUnit&, const analysis::ScopeTree&, const MutationSite&, std::uint64_t);

// Shared helpers.

MutationSite MakeSite(const java::CompilationUnit& unit, OperatorId op, java::NodeRef node,
                      std::string label);

// The node a site points at, with its ancestors from the unit root.
struct Anchor {
  java::NodeRef node;
  std::vector<java::NodeRef> ancestors;
};
Anchor ResolveAnchor(const java::CompilationUnit& unit, const java::NodePath& path);

// Every identifier spelled in the unit: names, members, types, variables.
std::set<std::string> Identifiers(const java::CompilationUnit& unit);

// Visits `root` and everything below it, including nested bodies.
void ForEachExpr(java::NodeRef root, const std::function<void(const java::Expr&)>& fn);
void ForEachStmt(java::NodeRef root, const std::function<void(const java::Stmt&)>& fn);

bool ContainsThis(java::NodeRef root);

// Nearest enclosing TypeDecl, or null when an anonymous body is nearer.
const java::TypeDecl* EnclosingTypeDecl(const std::vector<java::NodeRef>& ancestors);
// Nearest Member ancestor.
const java::Member* EnclosingMember(const std::vector<java::NodeRef>& ancestors);

// True when code in `scope` has no `this` of the type scope it belongs to.
bool InStaticContext(const analysis::ScopeTree& scopes, int scope);

// Type declarations of the unit by simple name, including nested ones.
std::vector<const java::TypeDecl*> AllTypeDecls(const java::CompilationUnit& unit);

// k = p + q for literal splitting; q is 5 when |k| > 5 and k - 1 otherwise,
// plus the seed when the shifted parts still fit the literal's type. Empty
// when even the unshifted parts do not fit.
std::optional<std::pair<std::int64_t, std::int64_t>> LiteralSplit(std::int64_t k, bool is_long,
                                                                  std::uint64_t seed);

}  // namespace mtsca::mutation::internal

#endif  // MTSCA_MUTATION_INTERNAL_H_
