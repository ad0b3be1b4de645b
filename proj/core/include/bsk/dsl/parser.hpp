#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bsk/dsl/ast.hpp"

namespace bsk::dsl {

enum class ParamType {
  Ideal,     // ideal name or inline "(f, g, ...)"
  Poly,      // polynomial or integer
  PolyList,  // "(f, g, ...)", single polynomial, or ideal name
  Int,
  Range,     // "a..b" or a single integer
};

struct ParamSpec {
  std::string name;
  ParamType type;
  bool required;
};

struct TaskSpec {
  std::string name;
  std::vector<ParamSpec> params;
  std::string summary;
};

const std::vector<TaskSpec>& task_specs();
const TaskSpec* find_task_spec(const std::string& name);

ScriptAst parse_script(std::string_view text);

// Polynomial in `ring` written in the term grammar.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

}  // namespace bsk::dsl
