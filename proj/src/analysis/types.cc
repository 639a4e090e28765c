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

#include "mtsca/analysis/types.h"

#include <cctype>
#include <limits>
#include <set>

namespace mtsca::analysis {

using namespace java;  // NOLINT(build/namespaces)

namespace {

bool IsIntegral(const ResolvedType& t) {
  return t.IsPrimitive() && (t.name == "int" || t.name == "long" || t.name == "short" ||
                             t.name == "byte" || t.name == "char");
}

ResolvedType Promote(const ResolvedType& a, const ResolvedType& b) {
  if (!IsIntegral(a) || !IsIntegral(b)) return ResolvedType::Unknown();
  if (a.name == "long" || b.name == "long") return ResolvedType::Primitive("long");
  return ResolvedType::Primitive("int");
}

}  // namespace

ResolvedType ResolveType(const Expr& expr, const ScopeTree& scopes,
                         const WeaknessConfig& cfg) {
  auto sub = [&](const Expr& e) { return ResolveType(e, scopes, cfg); };
  if (const auto* lit = expr.As<IntLit>()) {
    char last = lit->text.empty() ? ' ' : lit->text.back();
    return ResolvedType::Primitive(last == 'L' || last == 'l' ? "long" : "int");
  }
  if (expr.Is<BoolLit>()) return ResolvedType::Primitive("boolean");
  if (expr.Is<StringLit>()) return ResolvedType::Class("String");
  if (expr.Is<CharLit>()) return ResolvedType::Primitive("char");
  if (expr.Is<Name>()) {
    const SymbolEntry* b = scopes.BindingOf(expr);
    return b && b->IsVariable() ? b->declared_type : ResolvedType::Unknown();
  }
  if (const auto* fa = expr.As<FieldAccess>()) {
    if (fa->name == "length" && cfg.Has(WeaknessId::kTypeArrayLen)) {
      return ResolvedType::UnknownObject();
    }
    if (const SymbolEntry* b = scopes.BindingOf(expr); b && b->IsVariable()) {
      return b->declared_type;
    }
    if (fa->name == "length" && sub(*fa->target).IsArray()) {
      return ResolvedType::Primitive("int");
    }
    return ResolvedType::Unknown();
  }
  if (expr.Is<MethodCall>()) {
    const SymbolEntry* b = scopes.BindingOf(expr);
    return b && b->kind == SymbolKind::kMethod ? b->declared_type : ResolvedType::Unknown();
  }
  if (const auto* oc = expr.As<ObjectCreation>()) return ResolvedType::Class(oc->type.name);
  if (const auto* ac = expr.As<ArrayCreation>()) {
    return ResolvedType::Array(ac->element.name,
                               static_cast<int>(ac->dim_exprs.size()) + ac->extra_dims);
  }
  if (const auto* aa = expr.As<ArrayAccess>()) return sub(*aa->array).Element();
  if (const auto* u = expr.As<Unary>()) {
    if (u->op == UnaryOp::kNot) return ResolvedType::Primitive("boolean");
    ResolvedType t = sub(*u->operand);
    if (u->op == UnaryOp::kNeg) return Promote(t, ResolvedType::Primitive("int"));
    return t;
  }
  if (const auto* b = expr.As<Binary>()) {
    if (IsComparison(b->op) || b->op == BinaryOp::kAnd || b->op == BinaryOp::kOr) {
      return ResolvedType::Primitive("boolean");
    }
    ResolvedType l = sub(*b->lhs);
    ResolvedType r = sub(*b->rhs);
    if (b->op == BinaryOp::kAdd && (l.IsString() || r.IsString())) {
      return ResolvedType::Class("String");
    }
    return Promote(l, r);
  }
  if (const auto* a = expr.As<Assign>()) return sub(*a->target);
  if (const auto* c = expr.As<Cast>()) return FromTypeRef(c->type);
  if (expr.Is<This>()) {
    int ts = scopes.TypeScopeOf(scopes.ScopeOf(expr));
    return ts >= 0 ? ResolvedType::Class(scopes.scope(ts).type_name) : ResolvedType::Unknown();
  }
  if (const auto* p = expr.As<Paren>()) return sub(*p->inner);
  return ResolvedType::Unknown();
}

std::string ConstValue::ToString() const {
  if (IsInt()) return std::to_string(AsInt());
  if (IsBool()) return AsBool() ? "true" : "false";
  return AsString();
}

std::optional<ConstValue> ParseIntLiteral(const std::string& text) {
  std::string digits;
  for (char c : text) {
    if (c != '_') digits.push_back(c);
  }
  bool is_long = !digits.empty() && (digits.back() == 'L' || digits.back() == 'l');
  if (is_long) digits.pop_back();
  bool hex = digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X');
  if (hex) digits = digits.substr(2);
  if (digits.empty()) return std::nullopt;
  unsigned long long value = 0;
  const unsigned long long limit = std::numeric_limits<unsigned long long>::max();
  for (char c : digits) {
    int d = std::isdigit(static_cast<unsigned char>(c)) ? c - '0'
                                                        : std::tolower(c) - 'a' + 10;
    unsigned base = hex ? 16 : 10;
    if (value > (limit - static_cast<unsigned>(d)) / base) return std::nullopt;
    value = value * base + static_cast<unsigned>(d);
  }
  ConstValue out;
  out.is_long = is_long;
  if (is_long) {
    if (!hex && value > static_cast<unsigned long long>(std::numeric_limits<std::int64_t>::max())) {
      return std::nullopt;
    }
    out.value = static_cast<std::int64_t>(value);
  } else {
    if (hex) {
      if (value > 0xFFFFFFFFull) return std::nullopt;
      out.value = static_cast<std::int64_t>(static_cast<std::int32_t>(static_cast<std::uint32_t>(value)));
    } else {
      if (value > static_cast<unsigned long long>(std::numeric_limits<std::int32_t>::max())) {
        return std::nullopt;
      }
      out.value = static_cast<std::int64_t>(value);
    }
  }
  return out;
}

namespace {

std::int64_t Wrap(std::int64_t v, bool is_long) {
  if (is_long) return v;
  return static_cast<std::int32_t>(static_cast<std::uint32_t>(static_cast<std::uint64_t>(v)));
}

class Folder {
 public:
  Folder(const ScopeTree& scopes, const WeaknessConfig& cfg) : scopes_(scopes), cfg_(cfg) {}

  std::optional<ConstValue> Eval(const Expr& e) {
    if (const auto* lit = e.As<IntLit>()) return ParseIntLiteral(lit->text);
    if (const auto* b = e.As<BoolLit>()) return ConstValue{b->value, false};
    if (const auto* s = e.As<StringLit>()) return ConstValue{s->raw, false};
    if (const auto* p = e.As<Paren>()) return Eval(*p->inner);
    if (e.Is<Name>() || e.Is<FieldAccess>()) return Symbol(scopes_.BindingOf(e));
    if (const auto* u = e.As<Unary>()) {
      auto v = Eval(*u->operand);
      if (!v) return std::nullopt;
      if (u->op == UnaryOp::kNot && v->IsBool()) return ConstValue{!v->AsBool(), false};
      if (u->op == UnaryOp::kNeg && v->IsInt()) {
        return ConstValue{Wrap(static_cast<std::int64_t>(0ull - static_cast<std::uint64_t>(v->AsInt())),
                               v->is_long),
                          v->is_long};
      }
      return std::nullopt;
    }
    if (const auto* c = e.As<Cast>()) {
      auto v = Eval(*c->operand);
      if (!v || !v->IsInt() || c->type.dims != 0) return std::nullopt;
      if (c->type.name == "int") return ConstValue{Wrap(v->AsInt(), false), false};
      if (c->type.name == "long") return ConstValue{v->AsInt(), true};
      return std::nullopt;
    }
    if (const auto* b = e.As<Binary>()) return EvalBinary(*b);
    return std::nullopt;
  }

 private:
  std::optional<ConstValue> Symbol(const SymbolEntry* sym) {
    if (!sym || !sym->init || !sym->IsFinal()) return std::nullopt;
    if (sym->kind == SymbolKind::kField) {
      if (!sym->IsStatic() || cfg_.Has(WeaknessId::kConstLocalOnly)) return std::nullopt;
    } else if (sym->kind != SymbolKind::kLocal) {
      return std::nullopt;
    }
    if (!active_.insert(sym->id).second) return std::nullopt;
    auto v = Eval(*sym->init);
    active_.erase(sym->id);
    return v;
  }

  std::optional<ConstValue> EvalBinary(const Binary& b) {
    auto l = Eval(*b.lhs);
    if (!l) return std::nullopt;
    auto r = Eval(*b.rhs);
    if (!r) return std::nullopt;
    switch (b.op) {
      case BinaryOp::kAnd:
      case BinaryOp::kOr:
        if (!l->IsBool() || !r->IsBool()) return std::nullopt;
        return ConstValue{b.op == BinaryOp::kAnd ? (l->AsBool() && r->AsBool())
                                                 : (l->AsBool() || r->AsBool()),
                          false};
      case BinaryOp::kEq:
      case BinaryOp::kNe: {
        bool eq;
        if (l->IsBool() && r->IsBool()) {
          eq = l->AsBool() == r->AsBool();
        } else if (l->IsInt() && r->IsInt()) {
          eq = l->AsInt() == r->AsInt();
        } else {
          return std::nullopt;
        }
        return ConstValue{b.op == BinaryOp::kEq ? eq : !eq, false};
      }
      case BinaryOp::kLt:
      case BinaryOp::kGt:
      case BinaryOp::kLe:
      case BinaryOp::kGe: {
        if (!l->IsInt() || !r->IsInt()) return std::nullopt;
        std::int64_t x = l->AsInt(), y = r->AsInt();
        bool v = b.op == BinaryOp::kLt   ? x < y
                 : b.op == BinaryOp::kGt ? x > y
                 : b.op == BinaryOp::kLe ? x <= y
                                         : x >= y;
        return ConstValue{v, false};
      }
      case BinaryOp::kAdd:
        if (l->IsString() || r->IsString()) {
          return ConstValue{l->ToString() + r->ToString(), false};
        }
        [[fallthrough]];
      case BinaryOp::kSub:
      case BinaryOp::kMul:
      case BinaryOp::kDiv:
      case BinaryOp::kRem: {
        if (!l->IsInt() || !r->IsInt()) return std::nullopt;
        bool is_long = l->is_long || r->is_long;
        auto x = static_cast<std::uint64_t>(l->AsInt());
        auto y = static_cast<std::uint64_t>(r->AsInt());
        std::int64_t v;
        switch (b.op) {
          case BinaryOp::kAdd: v = static_cast<std::int64_t>(x + y); break;
          case BinaryOp::kSub: v = static_cast<std::int64_t>(x - y); break;
          case BinaryOp::kMul: v = static_cast<std::int64_t>(x * y); break;
          default: {
            std::int64_t sx = l->AsInt(), sy = r->AsInt();
            if (sy == 0) return std::nullopt;
            if (sy == -1) {
              v = b.op == BinaryOp::kDiv ? static_cast<std::int64_t>(0ull - x) : 0;
            } else {
              v = b.op == BinaryOp::kDiv ? sx / sy : sx % sy;
            }
          }
        }
        return ConstValue{Wrap(v, is_long), is_long};
      }
    }
    return std::nullopt;
  }

  const ScopeTree& scopes_;
  const WeaknessConfig& cfg_;
  std::set<int> active_;
};

}  // namespace

std::optional<ConstValue> ConstEval(const Expr& expr, const ScopeTree& scopes,
                                    const WeaknessConfig& cfg) {
  return Folder(scopes, cfg).Eval(expr);
}

}  // namespace mtsca::analysis
