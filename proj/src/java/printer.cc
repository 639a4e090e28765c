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

#include "mtsca/java/printer.h"

#include <string_view>
#include <type_traits>

namespace mtsca::java {
namespace {

std::string Ind(int indent) { return std::string(static_cast<size_t>(indent) * 4, ' '); }

template <typename T, typename F>
std::string Join(const std::vector<T>& items, std::string_view sep, F f) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += f(items[i]);
  }
  return out;
}

bool Tight(std::string_view a, std::string_view b) {
  return b == "," || b == ")" || b == "]" || b == "}" || b == "." || a == "(" ||
         a == "[" || a == "{" || a == ".";
}

std::string PrintAnnotation(const Annotation& ann) {
  std::string out = "@" + ann.name;
  if (ann.args) {
    out += "(";
    for (size_t i = 0; i < ann.args->size(); ++i) {
      if (i > 0 && !Tight((*ann.args)[i - 1], (*ann.args)[i])) out += " ";
      out += (*ann.args)[i];
    }
    out += ")";
  }
  return out;
}

std::string AnnotationLines(const std::vector<Annotation>& anns, int indent) {
  std::string out;
  for (const auto& a : anns) out += Ind(indent) + PrintAnnotation(a) + "\n";
  return out;
}

std::string InlineAnnotations(const std::vector<Annotation>& anns) {
  std::string out;
  for (const auto& a : anns) out += PrintAnnotation(a) + " ";
  return out;
}

std::string PrintMods(const ModifierSet& mods) {
  std::string out;
  for (const auto& [mod, spelling] : ModifierSpellings()) {
    if (mods.Has(mod)) {
      out += spelling;
      out += " ";
    }
  }
  return out;
}

std::string TypeParams(const std::vector<std::string>& params) {
  if (params.empty()) return "";
  return "<" + Join(params, ", ", [](const std::string& s) { return s; }) + ">";
}

std::string Args(const std::vector<Expr>& args, int indent) {
  return "(" + Join(args, ", ", [&](const Expr& e) { return PrintExpr(e, indent); }) +
         ")";
}

std::string Members(const std::vector<Member>& members, int indent);

// "{" ... "}" with the closing brace at `indent` and no trailing newline.
std::string BlockInline(const Stmt& stmt, int indent) {
  std::string out = "{\n";
  for (const auto& s : stmt.As<Block>()->stmts) out += PrintStmt(s, indent + 1);
  return out + Ind(indent) + "}";
}

std::string Params(const std::vector<Param>& params) {
  return "(" + Join(params, ", ", [](const Param& p) {
           return InlineAnnotations(p.annotations) + (p.is_final ? "final " : "") +
                  PrintType(p.type) + " " + p.name;
         }) + ")";
}

std::string Throws(const std::vector<TypeRef>& throws) {
  if (throws.empty()) return "";
  return " throws " + Join(throws, ", ", PrintType);
}

std::string LocalDecl(const LocalVarDecl& d, int indent) {
  std::string out = InlineAnnotations(d.annotations) + (d.is_final ? "final " : "") +
                    PrintType(d.type) + " " + d.name;
  if (d.init) out += " = " + PrintExpr(*d.init, indent);
  return out;
}

// Body of a compound statement following its header; always ends in newline.
std::string Body(const Stmt& body, int indent) {
  if (body.Is<Block>()) return " " + BlockInline(body, indent) + "\n";
  return "\n" + PrintStmt(body, indent + 1);
}

std::string IfText(const If& s, int indent) {
  std::string out = "if (" + PrintExpr(s.cond, indent) + ")";
  bool then_block = s.then_branch->Is<Block>();
  if (then_block) {
    out += " " + BlockInline(*s.then_branch, indent);
  } else {
    out += "\n" + PrintStmt(*s.then_branch, indent + 1);
  }
  if (!s.else_branch) return then_block ? out + "\n" : out;
  out += then_block ? " else" : Ind(indent) + "else";
  if (const auto* nested = s.else_branch->As<If>()) return out + " " + IfText(*nested, indent);
  return out + Body(*s.else_branch, indent);
}

std::string TypeDeclText(const TypeDecl& decl, int indent) {
  std::string out = AnnotationLines(decl.annotations, indent) + Ind(indent) +
                    PrintMods(decl.mods);
  switch (decl.kind) {
    case TypeKind::kClass: out += "class "; break;
    case TypeKind::kInterface: out += "interface "; break;
    case TypeKind::kEnum: out += "enum "; break;
  }
  out += decl.name + TypeParams(decl.type_params);
  if (decl.superclass) out += " extends " + PrintType(*decl.superclass);
  if (!decl.interfaces.empty()) {
    out += decl.kind == TypeKind::kInterface ? " extends " : " implements ";
    out += Join(decl.interfaces, ", ", PrintType);
  }
  out += " {\n";
  if (decl.kind == TypeKind::kEnum &&
      (!decl.enum_constants.empty() || !decl.members.empty())) {
    out += Ind(indent + 1) +
           Join(decl.enum_constants, ", ", [](const std::string& s) { return s; });
    out += decl.members.empty() ? "\n" : ";\n\n";
  }
  out += Members(decl.members, indent + 1);
  return out + Ind(indent) + "}\n";
}

std::string Members(const std::vector<Member>& members, int indent) {
  std::string out;
  for (size_t i = 0; i < members.size(); ++i) {
    if (i > 0 && !(members[i - 1].As<FieldDecl>() && members[i].As<FieldDecl>())) {
      out += "\n";
    }
    out += PrintMember(members[i], indent);
  }
  return out;
}

struct ExprPrinter {
  int indent;

  std::string operator()(const IntLit& e) const { return e.text; }
  std::string operator()(const BoolLit& e) const { return e.value ? "true" : "false"; }
  std::string operator()(const StringLit& e) const { return "\"" + e.raw + "\""; }
  std::string operator()(const CharLit& e) const { return "'" + e.raw + "'"; }
  std::string operator()(const NullLit&) const { return "null"; }
  std::string operator()(const Name& e) const { return e.id; }
  std::string operator()(const This&) const { return "this"; }
  std::string operator()(const FieldAccess& e) const {
    return PrintExpr(*e.target, indent) + "." + e.name;
  }
  std::string operator()(const MethodCall& e) const {
    std::string out;
    if (e.receiver) {
      out = PrintExpr(*e.receiver, indent) + ".";
      if (!e.type_args.empty()) out += "<" + Join(e.type_args, ", ", PrintType) + ">";
    }
    return out + e.name + Args(e.args, indent);
  }
  std::string operator()(const ObjectCreation& e) const {
    std::string out = "new " + e.type.name;
    if (e.diamond) {
      out += "<>";
    } else if (!e.type.args.empty()) {
      out += "<" + Join(e.type.args, ", ", PrintType) + ">";
    }
    out += Args(e.args, indent);
    if (e.body) {
      out += " {\n" + Members(e.body->members, indent + 1) + Ind(indent) + "}";
    }
    return out;
  }
  std::string operator()(const ArrayAccess& e) const {
    return PrintExpr(*e.array, indent) + "[" + PrintExpr(*e.index, indent) + "]";
  }
  std::string operator()(const ArrayInit& e) const {
    return "{" + Join(e.elements, ", ", [&](const Expr& x) { return PrintExpr(x, indent); }) +
           "}";
  }
  std::string operator()(const ArrayCreation& e) const {
    std::string out = "new " + PrintType(e.element);
    for (const auto& d : e.dim_exprs) out += "[" + PrintExpr(d, indent) + "]";
    for (int i = 0; i < e.extra_dims; ++i) out += "[]";
    if (e.init) out += " " + PrintExpr(*e.init, indent);
    return out;
  }
  std::string operator()(const Unary& e) const {
    std::string operand = PrintExpr(*e.operand, indent);
    switch (e.op) {
      case UnaryOp::kPostInc:
      case UnaryOp::kPostDec:
        return operand + Spelling(e.op);
      case UnaryOp::kNeg:
        // Keeps "- -x" and "- --x" from lexing as a decrement.
        if (!operand.empty() && operand[0] == '-') return "- " + operand;
        return "-" + operand;
      default:
        return Spelling(e.op) + operand;
    }
  }
  std::string operator()(const Binary& e) const {
    return PrintExpr(*e.lhs, indent) + " " + Spelling(e.op) + " " +
           PrintExpr(*e.rhs, indent);
  }
  std::string operator()(const Assign& e) const {
    return PrintExpr(*e.target, indent) + " " + Spelling(e.op) + " " +
           PrintExpr(*e.value, indent);
  }
  std::string operator()(const Lambda& e) const {
    std::string out;
    if (e.parenthesized) {
      out = "(" + Join(e.params, ", ", [](const LambdaParam& p) {
              std::string s = p.is_final ? "final " : "";
              if (p.type) s += PrintType(*p.type) + " ";
              return s + p.name;
            }) + ")";
    } else {
      out = e.params.front().name;
    }
    out += " -> ";
    if (e.block_body) return out + BlockInline(*e.block_body, indent);
    return out + PrintExpr(*e.expr_body, indent);
  }
  std::string operator()(const Cast& e) const {
    return "(" + PrintType(e.type) + ") " + PrintExpr(*e.operand, indent);
  }
  std::string operator()(const Paren& e) const {
    return "(" + PrintExpr(*e.inner, indent) + ")";
  }
};

struct StmtPrinter {
  int indent;

  std::string operator()(const LocalVarDecl& s) const {
    return Ind(indent) + LocalDecl(s, indent) + ";\n";
  }
  std::string operator()(const ExprStmt& s) const {
    return Ind(indent) + PrintExpr(s.expr, indent) + ";\n";
  }
  std::string operator()(const If& s) const { return Ind(indent) + IfText(s, indent); }
  std::string operator()(const While& s) const {
    return Ind(indent) + "while (" + PrintExpr(s.cond, indent) + ")" +
           Body(*s.body, indent);
  }
  std::string operator()(const For& s) const {
    std::string out = Ind(indent) + "for (";
    out += Join(s.init, ", ", [&](const Stmt& st) {
      if (const auto* d = st.As<LocalVarDecl>()) return LocalDecl(*d, indent);
      return PrintExpr(st.As<ExprStmt>()->expr, indent);
    });
    out += ";";
    if (s.cond) out += " " + PrintExpr(*s.cond, indent);
    out += ";";
    if (!s.update.empty()) {
      out += " " + Join(s.update, ", ", [&](const Expr& e) { return PrintExpr(e, indent); });
    }
    return out + ")" + Body(*s.body, indent);
  }
  std::string operator()(const Return& s) const {
    if (!s.value) return Ind(indent) + "return;\n";
    return Ind(indent) + "return " + PrintExpr(*s.value, indent) + ";\n";
  }
  std::string operator()(const Throw& s) const {
    return Ind(indent) + "throw " + PrintExpr(s.value, indent) + ";\n";
  }
  std::string operator()(const Block&) const { return ""; }  // handled by caller
  std::string operator()(const Try& s) const {
    std::string out = Ind(indent) + "try ";
    if (!s.resources.empty()) {
      out += "(" + Join(s.resources, "; ", [&](const Stmt& r) {
               return LocalDecl(*r.As<LocalVarDecl>(), indent);
             }) + ") ";
    }
    out += BlockInline(*s.body, indent);
    for (const auto& c : s.catches) {
      out += " catch (" + std::string(c.is_final ? "final " : "") +
             Join(c.types, " | ", PrintType) + " " + c.name + ") " +
             BlockInline(*c.body, indent);
    }
    if (s.finally_block) out += " finally " + BlockInline(*s.finally_block, indent);
    return out + "\n";
  }
  std::string operator()(const Break&) const { return Ind(indent) + "break;\n"; }
  std::string operator()(const Continue&) const { return Ind(indent) + "continue;\n"; }
  std::string operator()(const EmptyStmt&) const { return Ind(indent) + ";\n"; }
};

}  // namespace

std::string PrintType(const TypeRef& type) {
  std::string out = type.name;
  if (!type.args.empty()) out += "<" + Join(type.args, ", ", PrintType) + ">";
  for (int i = 0; i < type.dims; ++i) out += "[]";
  return out;
}

std::string PrintExpr(const Expr& expr, int indent) {
  return std::visit(ExprPrinter{indent}, expr.node);
}

std::string PrintStmt(const Stmt& stmt, int indent) {
  if (stmt.Is<Block>()) return Ind(indent) + BlockInline(stmt, indent) + "\n";
  return std::visit(StmtPrinter{indent}, stmt.node);
}

std::string PrintMember(const Member& member, int indent) {
  if (const auto* f = member.As<FieldDecl>()) {
    std::string out = AnnotationLines(f->annotations, indent) + Ind(indent) +
                      PrintMods(f->mods) + PrintType(f->type) + " " + f->name;
    if (f->init) out += " = " + PrintExpr(*f->init, indent);
    return out + ";\n";
  }
  if (const auto* m = member.As<MethodDecl>()) {
    std::string out = AnnotationLines(m->annotations, indent) + Ind(indent) +
                      PrintMods(m->mods);
    if (!m->type_params.empty()) out += TypeParams(m->type_params) + " ";
    out += PrintType(m->return_type) + " " + m->name + Params(m->params) +
           Throws(m->throws);
    if (!m->body) return out + ";\n";
    return out + " " + BlockInline(*m->body, indent) + "\n";
  }
  if (const auto* c = member.As<ConstructorDecl>()) {
    return AnnotationLines(c->annotations, indent) + Ind(indent) + PrintMods(c->mods) +
           c->name + Params(c->params) + Throws(c->throws) + " " +
           BlockInline(*c->body, indent) + "\n";
  }
  if (const auto* init = member.As<InitializerBlock>()) {
    return Ind(indent) + (init->is_static ? "static " : "") +
           BlockInline(*init->body, indent) + "\n";
  }
  return TypeDeclText(*member.AsType(), indent);
}

std::string Print(const CompilationUnit& unit) {
  std::string out;
  if (unit.package_name) out += "package " + *unit.package_name + ";\n\n";
  for (const auto& imp : unit.imports) {
    out += "import " + std::string(imp.is_static ? "static " : "") + imp.name +
           (imp.wildcard ? ".*" : "") + ";\n";
  }
  if (!unit.imports.empty()) out += "\n";
  for (size_t i = 0; i < unit.types.size(); ++i) {
    if (i > 0) out += "\n";
    out += TypeDeclText(unit.types[i], 0);
  }
  return out;
}

}  // namespace mtsca::java
