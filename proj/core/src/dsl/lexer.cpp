#include "bsk/dsl/lexer.hpp"

#include <cctype>

namespace bsk::dsl {

std::string token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Ident: return "identifier";
    case TokenKind::Int: return "integer";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::Comma: return "','";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::Equals: return "'='";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::DotDot: return "'..'";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
      advance(1);
      continue;
    }
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const SourcePos start = pos;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({TokenKind::Ident, std::string(text.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({TokenKind::Int, std::string(text.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    if (ch == '.') {
      if (i + 1 < text.size() && text[i + 1] == '.') {
        out.push_back({TokenKind::DotDot, "..", start});
        advance(2);
        continue;
      }
      throw ParseError(ParseErrorKind::Lexical, start, "stray '.'");
    }
    TokenKind kind;
    switch (ch) {
      case ';': kind = TokenKind::Semicolon; break;
      case ',': kind = TokenKind::Comma; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case '[': kind = TokenKind::LBracket; break;
      case ']': kind = TokenKind::RBracket; break;
      case '=': kind = TokenKind::Equals; break;
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '/': kind = TokenKind::Slash; break;
      case '^': kind = TokenKind::Caret; break;
      default: {
        const unsigned char u = static_cast<unsigned char>(ch);
        std::string shown = (u < 0x20 || u >= 0x7f) ? "byte " + std::to_string(u) : std::string("'") + ch + "'";
        throw ParseError(ParseErrorKind::Lexical, start, "unexpected character " + shown);
      }
    }
    out.push_back({kind, std::string(1, ch), start});
    advance(1);
  }
  out.push_back({TokenKind::End, "", pos});
  return out;
}

}  // namespace bsk::dsl
