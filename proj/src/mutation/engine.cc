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
#include <string>

#include "mtsca/analysis/weakness.h"
#include "mtsca/java/parser.h"
#include "mtsca/java/printer.h"
#include "mtsca/mutation/mutation.h"
#include "src/mutation/internal.h"

namespace mtsca::mutation {
namespace internal {

using namespace java;

MutationSite MakeSite(const CompilationUnit& unit, OperatorId op, NodeRef node,
                      std::string label) {
  MutationSite site;
  site.op = op;
  if (auto path = PathOf(unit, node)) site.anchor = *path;
  site.span = node.span();
  site.label = std::move(label);
  return site;
}

Anchor ResolveAnchor(const CompilationUnit& unit, const NodePath& path) {
  Anchor a;
  for (size_t n = 1; n <= path.size(); ++n) {
    auto ref = Resolve(unit, NodePath(path.begin(), path.begin() + static_cast<long>(n)));
    if (!ref) throw ApplicabilityLost("anchor " + PathToString(path) + " does not resolve");
    if (n == path.size()) {
      a.node = *ref;
    } else {
      a.ancestors.push_back(*ref);
    }
  }
  return a;
}

void ForEachExpr(NodeRef root, const std::function<void(const Expr&)>& fn) {
  Walk(root, [&](NodeRef node, const std::vector<NodeRef>&) {
    if (const Expr* e = node.Get<Expr>()) fn(*e);
    return true;
  });
}

void ForEachStmt(NodeRef root, const std::function<void(const Stmt&)>& fn) {
  Walk(root, [&](NodeRef node, const std::vector<NodeRef>&) {
    if (const Stmt* s = node.Get<Stmt>()) fn(*s);
    return true;
  });
}

bool ContainsThis(NodeRef root) {
  bool found = false;
  ForEachExpr(root, [&](const Expr& e) {
    if (e.Is<This>()) found = true;
    if (const auto* n = e.As<Name>(); n && n->id == "super") found = true;
  });
  return found;
}

std::set<std::string> Identifiers(const CompilationUnit& unit) {
  std::set<std::string> out;
  auto add_type = [&](const TypeRef& t) {
    out.insert(t.SimpleName());
  };
  Walk(unit, [&](NodeRef node, const std::vector<NodeRef>&) {
    if (const TypeDecl* t = node.Get<TypeDecl>()) {
      out.insert(t->name);
      for (const auto& c : t->enum_constants) out.insert(c);
    } else if (const Member* m = node.Get<Member>()) {
      if (const auto* f = m->As<FieldDecl>()) {
        out.insert(f->name);
        add_type(f->type);
      } else if (const auto* md = m->As<MethodDecl>()) {
        out.insert(md->name);
        for (const auto& p : md->params) out.insert(p.name);
      } else if (const auto* c = m->As<ConstructorDecl>()) {
        for (const auto& p : c->params) out.insert(p.name);
      }
    } else if (const Stmt* s = node.Get<Stmt>()) {
      if (const auto* d = s->As<LocalVarDecl>()) {
        out.insert(d->name);
        add_type(d->type);
      }
    } else if (const CatchClause* c = node.Get<CatchClause>()) {
      out.insert(c->name);
    } else if (const Expr* e = node.Get<Expr>()) {
      if (const auto* n = e->As<Name>()) out.insert(n->id);
      if (const auto* fa = e->As<FieldAccess>()) out.insert(fa->name);
      if (const auto* mc = e->As<MethodCall>()) out.insert(mc->name);
      if (const auto* oc = e->As<ObjectCreation>()) add_type(oc->type);
      if (const auto* l = e->As<Lambda>()) {
        for (const auto& p : l->params) out.insert(p.name);
      }
    }
    return true;
  });
  return out;
}

const TypeDecl* EnclosingTypeDecl(const std::vector<NodeRef>& ancestors) {
  for (auto it = ancestors.rbegin(); it != ancestors.rend(); ++it) {
    if (const TypeDecl* t = it->Get<TypeDecl>()) return t;
    if (const Expr* e = it->Get<Expr>()) {
      if (const auto* oc = e->As<ObjectCreation>(); oc && oc->body) return nullptr;
    }
  }
  return nullptr;
}

const Member* EnclosingMember(const std::vector<NodeRef>& ancestors) {
  for (auto it = ancestors.rbegin(); it != ancestors.rend(); ++it) {
    if (const Member* m = it->Get<Member>()) return m;
  }
  return nullptr;
}

bool InStaticContext(const analysis::ScopeTree& scopes, int scope) {
  for (int s = scope; s >= 0; s = scopes.scope(s).parent) {
    const auto& sc = scopes.scope(s);
    if (sc.kind == analysis::ScopeKind::kType) return false;
    if (sc.is_static) return true;
  }
  return true;
}

std::vector<const TypeDecl*> AllTypeDecls(const CompilationUnit& unit) {
  std::vector<const TypeDecl*> out;
  Walk(unit, [&](NodeRef node, const std::vector<NodeRef>&) {
    if (const TypeDecl* t = node.Get<TypeDecl>()) out.push_back(t);
    return true;
  });
  return out;
}

namespace {

struct Impl {
  SitesFn sites;
  RewriteFn rewrite;
};

const Impl& ImplFor(OperatorId op) {
  static const Impl kImpls[] = {
      {SitesE1, RewriteE1},   {SitesE2, RewriteE2},   {SitesE3, RewriteE3},
      {SitesE4a, RewriteE4a}, {SitesE4b, RewriteE4b}, {SitesE4c, RewriteE4c},
      {SitesE5, RewriteE5},   {SitesX1, RewriteX1},   {SitesX2, RewriteX2},
      {SitesX3, RewriteX3},
  };
  return kImpls[static_cast<size_t>(op)];
}

}  // namespace
}  // namespace internal

std::vector<MutationSite> EnumerateSites(const java::CompilationUnit& unit, OperatorId op) {
  analysis::ScopeTree scopes = analysis::BuildScopes(unit, analysis::WeaknessConfig{});
  return internal::ImplFor(op).sites(internal::Context{unit, scopes});
}

Variant Apply(const java::CompilationUnit& unit, const MutationSite& site, std::uint64_t seed) {
  java::CompilationUnit copy = unit;
  std::string original_text = java::Print(unit);
  int index = -1;
  {
    analysis::ScopeTree scopes = analysis::BuildScopes(copy, analysis::WeaknessConfig{});
    const auto& impl = internal::ImplFor(site.op);
    auto sites = impl.sites(internal::Context{copy, scopes});
    for (size_t i = 0; i < sites.size(); ++i) {
      if (sites[i] == site) {
        index = static_cast<int>(i);
        break;
      }
    }
    if (index < 0) {
      throw ApplicabilityLost(std::string(OperatorName(site.op)) + " site '" + site.label +
                              "' at " + java::PathToString(site.anchor) +
                              " is not applicable to this unit");
    }
    impl.rewrite(copy, scopes, sites[static_cast<size_t>(index)], seed);
  }
  Variant v;
  v.op = site.op;
  v.site = site;
  v.index = index;
  v.seed = seed;
  v.id = VariantId(unit.path, site.op, index);
  v.text = java::Print(copy);
  v.unit = java::Parse(v.text, unit.path);
  v.origin_map = OriginMap(original_text, v.text);
  return v;
}

namespace {

std::vector<std::string> TrimmedLines(std::string_view text) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    size_t b = line.find_first_not_of(" \t\r");
    size_t e = line.find_last_not_of(" \t\r");
    out.emplace_back(b == std::string_view::npos ? std::string_view{}
                                                 : line.substr(b, e - b + 1));
    pos = nl + 1;
  }
  return out;
}

}  // namespace

std::vector<std::optional<int>> OriginMap(std::string_view original, std::string_view mutated) {
  auto a = TrimmedLines(original);
  auto b = TrimmedLines(mutated);
  size_t n = a.size(), m = b.size();
  std::vector<std::vector<int>> lcs(n + 1, std::vector<int>(m + 1, 0));
  for (size_t i = n; i-- > 0;) {
    for (size_t j = m; j-- > 0;) {
      lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1 : std::max(lcs[i + 1][j], lcs[i][j + 1]);
    }
  }
  std::vector<std::optional<int>> map(m);
  size_t i = 0, j = 0;
  size_t hunk_a = 0, hunk_b = 0;
  auto flush = [&](size_t end_a, size_t end_b) {
    size_t k = 0;
    while (hunk_a + k < end_a && hunk_b + k < end_b) {
      map[hunk_b + k] = static_cast<int>(hunk_a + k) + 1;
      ++k;
    }
  };
  while (i < n && j < m) {
    if (a[i] == b[j]) {
      flush(i, j);
      map[j] = static_cast<int>(i) + 1;
      ++i;
      ++j;
      hunk_a = i;
      hunk_b = j;
    } else if (lcs[i + 1][j] >= lcs[i][j + 1]) {
      ++i;
    } else {
      ++j;
    }
  }
  flush(n, m);
  return map;
}

}  // namespace mtsca::mutation
