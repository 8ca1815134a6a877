#pragma once

// Recursive-descent parser for the scalar grammar, shared by the scalar
// parsers and the manifold document reader.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('+'|'-') factor | base ('^' uint)?
//   base   := uint | param | 'p' | '(' expr ')'
//
// Unary signs are accepted on any factor. Frame names terminate a term so
// that "2 e1" and "(1+a) e3" can be read as coefficient/frame pairs.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cgeom/pscalar.hpp"

namespace cgeom::detail {

enum class TokenKind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, Equals, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view text);

struct SymbolTable {
  std::optional<std::string_view> param;
  bool allow_pressure = false;
  std::span<const std::string> frame_names;
};

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, SymbolTable symbols);

  PScalar parse_expr();
  PScalar parse_term();

  /// Sum of coefficient/frame-name pairs; returns per-frame coefficients.
  std::vector<PScalar> parse_linear_combination();

  bool at_end() const { return peek().kind == TokenKind::End; }
  const Token& peek() const { return tokens_[cursor_]; }
  Token take() { return tokens_[cursor_ == tokens_.size() - 1 ? cursor_ : cursor_++]; }
  void expect_end();
  std::optional<std::size_t> frame_index(const Token& tok) const;

  [[noreturn]] void fail(const std::string& message, std::size_t pos) const;

 private:
  PScalar parse_factor();
  PScalar parse_base();

  std::vector<Token> tokens_;
  std::size_t cursor_ = 0;
  SymbolTable symbols_;
};

}  // namespace cgeom::detail
