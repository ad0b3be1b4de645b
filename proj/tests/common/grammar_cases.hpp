#pragma once

#include <optional>
#include <vector>

#include "bsk/dsl/ast.hpp"

namespace bsk::testing {

struct GrammarCase {
  const char* name;
  const char* text;
  // nullopt: the script must parse
  std::optional<dsl::ParseErrorKind> error;
  unsigned line = 0;  // expected error line when nonzero
  unsigned column = 0;
};

using K = dsl::ParseErrorKind;

// Each production has accepting and rejecting cases.
inline const std::vector<GrammarCase>& grammar_cases() {
  static const std::vector<GrammarCase> cases = {
      // ring declaration
      {"ring_qq", "ring QQ[x,y]; I = ideal(x^2, x*y, y^2);", std::nullopt},
      {"ring_fp", "ring F101[x,y]; I = ideal(x^2+y^2);", std::nullopt},
      {"ring_single_var", "ring QQ[t];", std::nullopt},
      {"ring_missing", "I = ideal(x);", K::Ring, 1, 1},
      {"ring_twice", "ring QQ[x];\nring QQ[y];", K::Ring, 2, 1},
      {"ring_composite", "ring F100[x];", K::Ring, 1, 6},
      {"ring_unknown_field", "ring RR[x];", K::Ring, 1, 6},
      {"ring_duplicate_var", "ring QQ[x,x];", K::Ring},
      {"ring_too_many_vars", "ring QQ[a,b,c,d,e,f,g];", K::Ring},
      {"ring_missing_bracket", "ring QQ[x,y;", K::Syntactic},
      {"ring_empty_vars", "ring QQ[];", K::Syntactic},
      // ideal binding
      {"ideal_comments", "# header\nring QQ[x,y]; # trailing\nI = ideal(x); # done\n", std::nullopt},
      {"ideal_whitespace", "ring   QQ [ x , y ] ;\n\n  I=ideal( x ,y );", std::nullopt},
      {"ideal_empty", "ring QQ[x]; I = ideal();", K::Syntactic},
      {"ideal_missing_semicolon", "ring QQ[x]; I = ideal(x)", K::Syntactic},
      {"ideal_rebind", "ring QQ[x]; I = ideal(x); I = ideal(x^2);", K::Syntactic},
      {"ideal_shadows_variable", "ring QQ[x,y]; x = ideal(y);", K::Syntactic},
      {"ideal_keyword_missing", "ring QQ[x]; I = (x);", K::Syntactic},
      // polynomials and terms
      {"poly_rational_coeff", "ring QQ[x,y]; I = ideal(3/2*x^2 - 1/3*y + 7);", std::nullopt},
      {"poly_juxtaposed", "ring QQ[x,y]; I = ideal(2x y^2 - x);", std::nullopt},
      {"poly_leading_minus", "ring QQ[x,y]; I = ideal(-x^2 + y);", std::nullopt},
      {"poly_zero_exponent", "ring QQ[x,y]; I = ideal(x^0*y);", std::nullopt},
      {"poly_unknown_variable", "ring QQ[x,y]; I = ideal(x + w);", K::UnboundIdentifier, 1, 29},
      {"poly_exponent_missing", "ring QQ[x]; I = ideal(x^);", K::MalformedExponent},
      {"poly_exponent_negative", "ring QQ[x]; I = ideal(x^-2);", K::MalformedExponent},
      {"poly_exponent_chained", "ring QQ[x]; I = ideal(x^2^3);", K::MalformedExponent},
      {"poly_exponent_huge", "ring QQ[x]; I = ideal(x^999999999);", K::MalformedExponent},
      {"poly_zero_denominator", "ring QQ[x]; I = ideal(1/0*x);", K::Syntactic},
      {"poly_dangling_star", "ring QQ[x]; I = ideal(x*);", K::Syntactic},
      {"poly_double_plus", "ring QQ[x]; I = ideal(x++1);", K::Syntactic},
      {"poly_fp_denominator_vanishes", "ring F7[x]; I = ideal(1/7*x);", K::Syntactic},
      // lexical
      {"lex_bad_char", "ring QQ[x]; I = ideal(x $ 1);", K::Lexical, 1, 25},
      {"lex_stray_dot", "ring QQ[x]; I = ideal(x.1);", K::Lexical},
      {"lex_non_ascii", "ring QQ[x]; I = ideal(\xc3\xa9);", K::Lexical},
      // tasks
      {"task_positional", "ring QQ[x,y]; I = ideal(x^2, y^2); coeff(I, I);", std::nullopt},
      {"task_keyed", "ring QQ[x,y,z]; I = ideal(x^2, x*y, y^2); J = ideal(x^2, y^2);\n"
                     "verify_main(I, J, pads=(z), w=-1..1, T=4);", std::nullopt},
      {"task_inline_ideal", "ring QQ[x,y]; closure((x^3, y^3), k=2);", std::nullopt},
      {"task_poly_arg", "ring F101[x,y]; I = ideal(x^2, y^2); tc_check(x*y, I, c=1, q_max=101);", std::nullopt},
      {"task_no_ring_needed", "probe_remark(steps=3);", std::nullopt},
      {"task_empty_script", "", std::nullopt},
      {"task_unknown", "ring QQ[x]; I = ideal(x); groebner(I);", K::UnknownTask, 1, 27},
      {"task_too_many_args", "ring QQ[x]; I = ideal(x); gb(I, I);", K::Arity},
      {"task_missing_required", "ring QQ[x]; frobenius((x));", K::Arity},
      {"task_unknown_key", "ring QQ[x]; I = ideal(x); gb(I, order=2);", K::Arity},
      {"task_duplicate_key", "ring QQ[x]; I = ideal(x); closure(I, k=1, k=2);", K::Arity},
      {"task_positional_after_key", "ring QQ[x]; I = ideal(x); closure(k=2, I);", K::Syntactic},
      {"task_unbound_ideal", "ring QQ[x]; gb(K);", K::UnboundIdentifier},
      {"task_wrong_type", "ring QQ[x]; I = ideal(x); closure(I, k=(x));", K::Argument},
      {"task_ideal_in_poly", "ring QQ[x]; I = ideal(x); member(I + x, I);", K::Argument},
      {"task_empty_range", "ring QQ[x]; I = ideal(x); verify_classical(I, w=2..1);", K::Argument},
      {"task_needs_ring", "gb((x));", K::Ring},
      {"task_missing_paren", "ring QQ[x]; I = ideal(x); gb(I;", K::Syntactic},
  };
  return cases;
}

}  // namespace bsk::testing
