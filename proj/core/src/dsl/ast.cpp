#include "bsk/dsl/ast.hpp"

#include <sstream>

namespace bsk::dsl {

std::string parse_error_kind_name(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::Lexical: return "lexical";
    case ParseErrorKind::Syntactic: return "syntax";
    case ParseErrorKind::Arity: return "arity";
    case ParseErrorKind::UnboundIdentifier: return "unbound identifier";
    case ParseErrorKind::MalformedExponent: return "malformed exponent";
    case ParseErrorKind::Ring: return "ring";
    case ParseErrorKind::UnknownTask: return "unknown task";
    case ParseErrorKind::Argument: return "argument";
  }
  return "parse";
}

ParseError::ParseError(ParseErrorKind kind, SourcePos pos, const std::string& message)
    : Error("line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " +
            parse_error_kind_name(kind) + " error: " + message),
      kind_(kind),
      pos_(pos),
      message_(message) {}

const Value* TaskStmt::find(const std::string& param) const {
  for (const auto& a : args) {
    if (a.param == param) return &a.value;
  }
  return nullptr;
}

const IdealBinding* ScriptAst::binding(const std::string& name) const {
  for (const auto& b : bindings) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

bool ScriptAst::operator==(const ScriptAst& o) const {
  if (static_cast<bool>(ring) != static_cast<bool>(o.ring)) return false;
  if (ring && !ring->same_as(*o.ring)) return false;
  return bindings == o.bindings && tasks == o.tasks;
}

namespace {

std::string poly_list(const std::vector<Polynomial>& polys) {
  std::string s = "(";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) s += ", ";
    s += polys[i].to_string();
  }
  return s + ")";
}

struct ValuePrinter {
  std::string operator()(long long v) const { return std::to_string(v); }
  std::string operator()(const IntRange& r) const { return std::to_string(r.lo) + ".." + std::to_string(r.hi); }
  std::string operator()(const Polynomial& p) const { return p.to_string(); }
  std::string operator()(const std::vector<Polynomial>& ps) const { return poly_list(ps); }
  std::string operator()(const IdealRef& r) const { return r.name; }
};

}  // namespace

std::string to_script(const ScriptAst& ast) {
  std::ostringstream out;
  if (ast.ring) {
    const std::string& names = ast.ring->describe();
    out << "ring " << names << ";\n";
  }
  for (const auto& b : ast.bindings) {
    std::string gens = poly_list(b.generators);
    out << b.name << " = ideal" << gens << ";\n";
  }
  for (const auto& t : ast.tasks) {
    out << t.name << "(";
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      if (i) out << ", ";
      out << t.args[i].param << "=" << std::visit(ValuePrinter{}, t.args[i].value);
    }
    out << ");\n";
  }
  return out.str();
}

}  // namespace bsk::dsl
