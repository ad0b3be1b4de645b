#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bsk/dsl/ast.hpp"

namespace bsk::dsl {

enum class TokenKind {
  Ident,
  Int,
  Semicolon,
  Comma,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Equals,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  DotDot,
  End,
};

struct Token {
  TokenKind kind;
  std::string text;
  SourcePos pos;
};

std::string token_kind_name(TokenKind kind);

// Throws ParseError(Lexical) on characters outside the grammar. The result
// always ends with an End token.
std::vector<Token> tokenize(std::string_view text);

}  // namespace bsk::dsl
