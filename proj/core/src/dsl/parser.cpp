#include "bsk/dsl/parser.hpp"

#include <limits>
#include <optional>

#include "bsk/dsl/lexer.hpp"

namespace bsk::dsl {

namespace {

constexpr unsigned long long kMaxExponent = 1u << 20;

using P = ParamType;

}  // namespace

const std::vector<TaskSpec>& task_specs() {
  static const std::vector<TaskSpec> specs = {
      {"gb", {{"I", P::Ideal, true}}, "reduced Groebner basis (grevlex)"},
      {"closure", {{"I", P::Ideal, true}, {"k", P::Int, false}}, "integral closure of I^k"},
      {"spread", {{"I", P::Ideal, true}}, "analytic spread"},
      {"reduce", {{"I", P::Ideal, true}, {"seed", P::Int, false}}, "generic minimal reduction"},
      {"reduction_number", {{"I", P::Ideal, true}, {"J", P::Ideal, true}}, "reduction number of J in I"},
      {"coeff",
       {{"I", P::Ideal, true}, {"J", P::Ideal, false}, {"cap", P::Int, false}, {"seed", P::Int, false}},
       "coefficient ideal by colon iteration"},
      {"ladder",
       {{"I", P::Ideal, true},
        {"J", P::Ideal, false},
        {"pads", P::PolyList, false},
        {"T", P::Int, false},
        {"N", P::Int, false},
        {"seed", P::Int, false}},
       "padding ladder and truncation probe"},
      {"verify_classical",
       {{"I", P::Ideal, true}, {"J", P::Ideal, false}, {"w", P::Range, false}, {"seed", P::Int, false}},
       "closure(I^(l+w)) in J^(w+1)"},
      {"verify_mprimary",
       {{"I", P::Ideal, true}, {"J", P::Ideal, false}, {"w", P::Range, false}, {"seed", P::Int, false}},
       "closure(I^(d+w)) in J^(w+1)*a(I,J), m-primary I"},
      {"verify_main",
       {{"I", P::Ideal, true},
        {"J", P::Ideal, false},
        {"pads", P::PolyList, false},
        {"w", P::Range, false},
        {"T", P::Int, false},
        {"seed", P::Int, false}},
       "closure(I^(l+w)) in J^(w+1)*a(I,J) with ladder lemmas"},
      {"verify_lemmas",
       {{"I", P::Ideal, true},
        {"J", P::Ideal, false},
        {"pads", P::PolyList, false},
        {"T", P::Int, false},
        {"seed", P::Int, false}},
       "ladder monotonicity and inclusion"},
      {"verify_padding",
       {{"I", P::Ideal, true}, {"J", P::Ideal, false}, {"L", P::Ideal, true}, {"seed", P::Int, false}},
       "(J+L)(I+L)^r = (I+L)^(r+1)"},
      {"verify_hh", {{"I", P::Ideal, true}, {"w", P::Range, false}}, "closure(I^(n+w)) in I^(w+1) over F_p"},
      {"frobenius", {{"I", P::Ideal, true}, {"q", P::Int, true}}, "Frobenius bracket power"},
      {"tc_check",
       {{"z", P::Poly, true}, {"I", P::Ideal, true}, {"c", P::Poly, false}, {"q_max", P::Int, true}},
       "c*z^q in I^[q] for q = p^e <= q_max"},
      {"probe_remark", {{"steps", P::Int, false}}, "colon iteration for ((x,y)^2, (x,y)^3)"},
      {"member", {{"f", P::Poly, true}, {"I", P::Ideal, true}}, "global and local membership"},
      {"dim", {{"I", P::Ideal, true}}, "Krull dimension of R/I"},
  };
  return specs;
}

const TaskSpec* find_task_spec(const std::string& name) {
  for (const auto& s : task_specs()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

namespace {

struct RawValue {
  Value value;
  SourcePos pos;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  ScriptAst parse_script() {
    while (peek().kind != TokenKind::End) statement();
    return std::move(ast_);
  }

  Polynomial parse_single(const Ring& ring) {
    ast_.ring = ring;
    Polynomial p = polynomial();
    if (peek().kind != TokenKind::End) unexpected("end of polynomial");
    return p;
  }

 private:
  std::vector<Token> toks_;
  std::size_t i_ = 0;
  ScriptAst ast_;

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }
  Token take() {
    Token t = peek();
    if (i_ < toks_.size() - 1) ++i_;
    return t;
  }
  [[noreturn]] void unexpected(const std::string& wanted) const {
    const Token& t = peek();
    std::string got = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(ParseErrorKind::Syntactic, t.pos, "expected " + wanted + ", found " + got);
  }
  Token expect(TokenKind kind) {
    if (peek().kind != kind) unexpected(token_kind_name(kind));
    return take();
  }
  bool accept(TokenKind kind) {
    if (peek().kind != kind) return false;
    take();
    return true;
  }

  void require_ring(SourcePos pos) const {
    if (!ast_.ring) throw ParseError(ParseErrorKind::Ring, pos, "no ring declared before this statement");
  }

  void statement() {
    const Token& head = peek();
    if (head.kind != TokenKind::Ident) unexpected("statement");
    if (head.text == "ring") return ring_decl();
    if (peek(1).kind == TokenKind::Equals) return ideal_decl();
    if (peek(1).kind == TokenKind::LParen) return task();
    take();
    unexpected("'=' or '('");
  }

  void ring_decl() {
    const Token kw = take();
    if (ast_.ring) throw ParseError(ParseErrorKind::Ring, kw.pos, "ring declared twice");
    const Token field_tok = take();
    if (field_tok.kind != TokenKind::Ident) {
      throw ParseError(ParseErrorKind::Ring, field_tok.pos, "expected QQ or F<prime>");
    }
    std::optional<Field> field;
    if (field_tok.text == "QQ") {
      field = Field::rationals();
    } else if (field_tok.text.size() > 1 && field_tok.text[0] == 'F' &&
               field_tok.text.find_first_not_of("0123456789", 1) == std::string::npos) {
      const std::string digits = field_tok.text.substr(1);
      if (digits.size() > 10) throw ParseError(ParseErrorKind::Ring, field_tok.pos, "characteristic too large");
      try {
        field = Field::prime(std::stoull(digits));
      } catch (const ConfigError& e) {
        throw ParseError(ParseErrorKind::Ring, field_tok.pos, e.what());
      }
    } else {
      throw ParseError(ParseErrorKind::Ring, field_tok.pos, "unknown field '" + field_tok.text + "'");
    }
    expect(TokenKind::LBracket);
    std::vector<std::string> names;
    const SourcePos names_pos = peek().pos;
    do {
      names.push_back(expect(TokenKind::Ident).text);
    } while (accept(TokenKind::Comma));
    expect(TokenKind::RBracket);
    expect(TokenKind::Semicolon);
    for (const auto& n : names) {
      if (n == "ring" || n == "ideal") throw ParseError(ParseErrorKind::Ring, names_pos, "reserved variable name '" + n + "'");
    }
    try {
      ast_.ring = RingContext::make(names, *field);
    } catch (const ConfigError& e) {
      throw ParseError(ParseErrorKind::Ring, names_pos, e.what());
    }
  }

  void ideal_decl() {
    const Token name = take();
    require_ring(name.pos);
    if (name.text == "ideal") throw ParseError(ParseErrorKind::Syntactic, name.pos, "'ideal' is reserved");
    if (ast_.ring->index_of(name.text)) {
      throw ParseError(ParseErrorKind::Syntactic, name.pos, "'" + name.text + "' is a ring variable");
    }
    if (ast_.binding(name.text)) {
      throw ParseError(ParseErrorKind::Syntactic, name.pos, "'" + name.text + "' is already bound");
    }
    expect(TokenKind::Equals);
    const Token kw = take();
    if (kw.kind != TokenKind::Ident || kw.text != "ideal") {
      --i_;
      unexpected("'ideal'");
    }
    expect(TokenKind::LParen);
    std::vector<Polynomial> gens;
    do {
      gens.push_back(polynomial());
    } while (accept(TokenKind::Comma));
    expect(TokenKind::RParen);
    expect(TokenKind::Semicolon);
    ast_.bindings.push_back(IdealBinding{name.text, std::move(gens), name.pos});
  }

  void task() {
    const Token name = take();
    const TaskSpec* spec = find_task_spec(name.text);
    if (!spec) throw ParseError(ParseErrorKind::UnknownTask, name.pos, "unknown task '" + name.text + "'");
    if (spec->name != "probe_remark") require_ring(name.pos);
    expect(TokenKind::LParen);
    std::vector<std::optional<RawValue>> slots(spec->params.size());
    std::size_t positional = 0;
    bool keyed_seen = false;
    if (peek().kind != TokenKind::RParen) {
      do {
        const SourcePos arg_pos = peek().pos;
        if (peek().kind == TokenKind::Ident && peek(1).kind == TokenKind::Equals) {
          const std::string key = take().text;
          take();
          std::size_t idx = spec->params.size();
          for (std::size_t k = 0; k < spec->params.size(); ++k) {
            if (spec->params[k].name == key) idx = k;
          }
          if (idx == spec->params.size()) {
            throw ParseError(ParseErrorKind::Arity, arg_pos, name.text + " has no parameter '" + key + "'");
          }
          if (slots[idx]) throw ParseError(ParseErrorKind::Arity, arg_pos, "parameter '" + key + "' given twice");
          slots[idx] = value();
          keyed_seen = true;
        } else {
          if (keyed_seen) throw ParseError(ParseErrorKind::Syntactic, arg_pos, "positional argument after a named one");
          if (positional >= spec->params.size()) {
            throw ParseError(ParseErrorKind::Arity, arg_pos,
                             name.text + " takes at most " + std::to_string(spec->params.size()) + " arguments");
          }
          slots[positional++] = value();
        }
      } while (accept(TokenKind::Comma));
    }
    expect(TokenKind::RParen);
    expect(TokenKind::Semicolon);
    TaskStmt stmt{name.text, {}, name.pos};
    for (std::size_t k = 0; k < spec->params.size(); ++k) {
      const ParamSpec& param = spec->params[k];
      if (!slots[k]) {
        if (param.required) {
          throw ParseError(ParseErrorKind::Arity, name.pos, name.text + " needs parameter '" + param.name + "'");
        }
        continue;
      }
      stmt.args.push_back(TaskArg{param.name, coerce(*slots[k], param)});
    }
    ast_.tasks.push_back(std::move(stmt));
  }

  Value coerce(const RawValue& raw, const ParamSpec& param) const {
    const Value& v = raw.value;
    auto constant = [&](long long n) { return Polynomial::constant(ast_.ring, ast_.ring->field().from_integer(n)); };
    auto fail = [&](const std::string& what) -> Value {
      throw ParseError(ParseErrorKind::Argument, raw.pos, "parameter '" + param.name + "' expects " + what);
    };
    switch (param.type) {
      case ParamType::Ideal:
        if (std::holds_alternative<IdealRef>(v) || std::holds_alternative<std::vector<Polynomial>>(v)) return v;
        return fail("an ideal name or a parenthesized generator list");
      case ParamType::Poly:
        if (std::holds_alternative<Polynomial>(v)) return v;
        if (const auto* n = std::get_if<long long>(&v); n && ast_.ring) return constant(*n);
        return fail("a polynomial");
      case ParamType::PolyList:
        if (std::holds_alternative<std::vector<Polynomial>>(v) || std::holds_alternative<IdealRef>(v)) return v;
        if (const auto* p = std::get_if<Polynomial>(&v)) return std::vector<Polynomial>{*p};
        if (const auto* n = std::get_if<long long>(&v); n && ast_.ring) return std::vector<Polynomial>{constant(*n)};
        return fail("a polynomial list");
      case ParamType::Int:
        if (std::holds_alternative<long long>(v)) return v;
        return fail("an integer");
      case ParamType::Range:
        if (std::holds_alternative<IntRange>(v)) return v;
        if (const auto* n = std::get_if<long long>(&v)) return IntRange{*n, *n};
        return fail("an integer or a range a..b");
    }
    return fail("a value");
  }

  long long integer_literal(const Token& t) const {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(t.text, &used);
      if (used == t.text.size()) return v;
    } catch (const std::out_of_range&) {
    }
    throw ParseError(ParseErrorKind::Syntactic, t.pos, "integer '" + t.text + "' out of range");
  }

  long long signed_integer() {
    const bool neg = accept(TokenKind::Minus);
    const long long v = integer_literal(expect(TokenKind::Int));
    return neg ? -v : v;
  }

  // A bare integer stays an integer; polynomial parameters turn it into a
  // constant on coercion.
  RawValue value() {
    const SourcePos pos = peek().pos;
    if (accept(TokenKind::LParen)) {
      require_ring(pos);
      std::vector<Polynomial> polys;
      do {
        polys.push_back(polynomial());
      } while (accept(TokenKind::Comma));
      expect(TokenKind::RParen);
      return {std::move(polys), pos};
    }
    auto ends_value = [](TokenKind k) { return k == TokenKind::Comma || k == TokenKind::RParen; };
    // An ideal name not followed by polynomial syntax is a reference; a
    // missing delimiter after it is then reported as such.
    auto continues_poly = [](TokenKind k) {
      return k == TokenKind::Plus || k == TokenKind::Minus || k == TokenKind::Star || k == TokenKind::Caret ||
             k == TokenKind::Slash || k == TokenKind::Ident || k == TokenKind::Int;
    };
    if (peek().kind == TokenKind::Ident && ast_.binding(peek().text) && !continues_poly(peek(1).kind)) {
      return {IdealRef{take().text}, pos};
    }
    const std::size_t lead = peek().kind == TokenKind::Minus ? 1 : 0;
    if (peek(lead).kind == TokenKind::Int) {
      const TokenKind after = peek(lead + 1).kind;
      if (after == TokenKind::DotDot) {
        const long long lo = signed_integer();
        take();
        const long long hi = signed_integer();
        if (lo > hi) throw ParseError(ParseErrorKind::Argument, pos, "empty range");
        return {IntRange{lo, hi}, pos};
      }
      if (ends_value(after)) {
        return {signed_integer(), pos};
      }
    }
    require_ring(pos);
    return {polynomial(), pos};
  }

  Polynomial polynomial() {
    const Ring& ring = ast_.ring;
    const Field& field = ring->field();
    std::vector<Term> terms;
    bool negative = false;
    if (accept(TokenKind::Minus)) negative = true;
    else accept(TokenKind::Plus);
    while (true) {
      Term t = term();
      if (negative) t.coeff = field.neg(t.coeff);
      terms.push_back(std::move(t));
      if (accept(TokenKind::Plus)) negative = false;
      else if (accept(TokenKind::Minus)) negative = true;
      else break;
    }
    return Polynomial(ring, std::move(terms));
  }

  Term term() {
    const Ring& ring = ast_.ring;
    const Field& field = ring->field();
    Term t{Monomial(ring->dimension()), field.from_integer(1)};
    bool any = false;
    if (peek().kind == TokenKind::Int) {
      const Token num = take();
      if (accept(TokenKind::Slash)) {
        const Token den = expect(TokenKind::Int);
        const mpz_class d(den.text);
        if (d == 0) throw ParseError(ParseErrorKind::Syntactic, den.pos, "zero denominator");
        try {
          t.coeff = field.from_fraction(mpz_class(num.text), d);
        } catch (const DivisionByZero&) {
          throw ParseError(ParseErrorKind::Syntactic, den.pos, "denominator vanishes in " + field.name());
        }
      } else {
        t.coeff = field.from_integer(mpz_class(num.text));
      }
      any = true;
    }
    while (true) {
      const bool star = accept(TokenKind::Star);
      if (peek().kind != TokenKind::Ident) {
        if (star) unexpected("variable after '*'");
        break;
      }
      const Token var = take();
      const auto idx = ring->index_of(var.text);
      if (!idx) {
        if (ast_.binding(var.text)) {
          throw ParseError(ParseErrorKind::Argument, var.pos, "ideal '" + var.text + "' used inside a polynomial");
        }
        throw ParseError(ParseErrorKind::UnboundIdentifier, var.pos, "unknown identifier '" + var.text + "'");
      }
      unsigned long long e = 1;
      if (accept(TokenKind::Caret)) {
        const Token exp = peek();
        if (exp.kind != TokenKind::Int) {
          throw ParseError(ParseErrorKind::MalformedExponent, exp.pos, "exponent must be a nonnegative integer");
        }
        take();
        if (exp.text.size() > 8 || (e = std::stoull(exp.text)) > kMaxExponent) {
          throw ParseError(ParseErrorKind::MalformedExponent, exp.pos, "exponent too large");
        }
        if (peek().kind == TokenKind::Caret) {
          throw ParseError(ParseErrorKind::MalformedExponent, peek().pos, "chained exponent");
        }
      }
      const unsigned long long total = t.mono[*idx] + e;
      if (total > kMaxExponent) throw ParseError(ParseErrorKind::MalformedExponent, var.pos, "exponent too large");
      t.mono.set(*idx, static_cast<Exponent>(total));
      any = true;
    }
    if (!any) unexpected("a term");
    return t;
  }
};

}  // namespace

ScriptAst parse_script(std::string_view text) { return Parser(text).parse_script(); }

Polynomial parse_polynomial(std::string_view text, const Ring& ring) { return Parser(text).parse_single(ring); }

}  // namespace bsk::dsl
