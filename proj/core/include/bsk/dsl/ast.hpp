#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bsk/errors.hpp"
#include "bsk/polynomial.hpp"

namespace bsk::dsl {

struct SourcePos {
  unsigned line = 1;
  unsigned column = 1;
  bool operator==(const SourcePos&) const = default;
};

enum class ParseErrorKind {
  Lexical,
  Syntactic,
  Arity,
  UnboundIdentifier,
  MalformedExponent,
  Ring,
  UnknownTask,
  Argument,
};

std::string parse_error_kind_name(ParseErrorKind kind);

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, SourcePos pos, const std::string& message);
  ParseErrorKind kind() const noexcept { return kind_; }
  SourcePos pos() const noexcept { return pos_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ParseErrorKind kind_;
  SourcePos pos_;
  std::string message_;
};

struct IntRange {
  long long lo = 0;
  long long hi = 0;
  bool operator==(const IntRange&) const = default;
};

struct IdealRef {
  std::string name;
  bool operator==(const IdealRef&) const = default;
};

// A task argument after binding to its parameter. Polynomial lists stand for
// inline ideals "(f, g)" as well as pad lists.
using Value = std::variant<long long, IntRange, Polynomial, std::vector<Polynomial>, IdealRef>;

struct TaskArg {
  std::string param;
  Value value;
  bool operator==(const TaskArg&) const = default;
};

struct TaskStmt {
  std::string name;
  std::vector<TaskArg> args;  // in parameter order
  SourcePos pos;

  const Value* find(const std::string& param) const;
  bool operator==(const TaskStmt& o) const { return name == o.name && args == o.args; }
};

struct IdealBinding {
  std::string name;
  std::vector<Polynomial> generators;
  SourcePos pos;
  bool operator==(const IdealBinding& o) const { return name == o.name && generators == o.generators; }
};

struct ScriptAst {
  // Null until a ring declaration is seen; a script without one has no
  // bindings and no tasks.
  Ring ring;
  std::vector<IdealBinding> bindings;
  std::vector<TaskStmt> tasks;

  const IdealBinding* binding(const std::string& name) const;
  bool operator==(const ScriptAst& o) const;
};

// Canonical script text; parse_script(to_script(ast)) == ast.
std::string to_script(const ScriptAst& ast);

}  // namespace bsk::dsl
