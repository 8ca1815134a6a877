#include "expression.hpp"

#include <cctype>

#include "cgeom/errors.hpp"

namespace cgeom::detail {

namespace {

constexpr unsigned long kMaxExponent = 4096;

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({TokenKind::Number, std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (ident_start(c)) {
      while (i < text.size() && ident_char(text[i])) ++i;
      out.push_back({TokenKind::Ident, std::string(text.substr(start, i - start)), start});
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '/': kind = TokenKind::Slash; break;
      case '^': kind = TokenKind::Caret; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case ',': kind = TokenKind::Comma; break;
      case '=': kind = TokenKind::Equals; break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "' at column " +
                             std::to_string(start + 1),
                         start);
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({TokenKind::End, "", text.size()});
  return out;
}

ExpressionParser::ExpressionParser(std::string_view text, SymbolTable symbols)
    : tokens_(tokenize(text)), symbols_(symbols) {}

void ExpressionParser::fail(const std::string& message, std::size_t pos) const {
  throw ParseError(message + " at column " + std::to_string(pos + 1), pos);
}

void ExpressionParser::expect_end() {
  if (!at_end()) fail("unexpected '" + peek().text + "'", peek().pos);
}

std::optional<std::size_t> ExpressionParser::frame_index(const Token& tok) const {
  if (tok.kind != TokenKind::Ident) return std::nullopt;
  for (std::size_t i = 0; i < symbols_.frame_names.size(); ++i)
    if (symbols_.frame_names[i] == tok.text) return i;
  return std::nullopt;
}

PScalar ExpressionParser::parse_expr() {
  PScalar acc = parse_term();
  while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
    bool minus = take().kind == TokenKind::Minus;
    PScalar rhs = parse_term();
    if (minus)
      acc -= rhs;
    else
      acc += rhs;
  }
  return acc;
}

PScalar ExpressionParser::parse_term() {
  PScalar acc = parse_factor();
  while (peek().kind == TokenKind::Star || peek().kind == TokenKind::Slash) {
    bool divide = take().kind == TokenKind::Slash;
    std::size_t pos = peek().pos;
    PScalar rhs = parse_factor();
    if (!divide) {
      acc *= rhs;
      continue;
    }
    auto divisor = rhs.as_scalar();
    if (!divisor) fail("division by an expression containing p", pos);
    if (divisor->is_zero()) fail("division by zero", pos);
    acc = acc / *divisor;
  }
  return acc;
}

PScalar ExpressionParser::parse_factor() {
  if (peek().kind == TokenKind::Minus) {
    take();
    return -parse_factor();
  }
  if (peek().kind == TokenKind::Plus) {
    take();
    return parse_factor();
  }
  PScalar base = parse_base();
  if (peek().kind != TokenKind::Caret) return base;
  take();
  const Token& exp = peek();
  if (exp.kind != TokenKind::Number) fail("expected a nonnegative integer exponent", exp.pos);
  if (exp.text.size() > 4 || std::stoul(exp.text) > kMaxExponent) fail("exponent too large", exp.pos);
  unsigned long e = std::stoul(take().text);
  PScalar result(1);
  for (unsigned long i = 0; i < e; ++i) result *= base;
  return result;
}

PScalar ExpressionParser::parse_base() {
  Token tok = peek();
  switch (tok.kind) {
    case TokenKind::Number:
      take();
      return PScalar(Scalar(Rational(mpz_class(tok.text))));
    case TokenKind::LParen: {
      take();
      PScalar inner = parse_expr();
      if (peek().kind != TokenKind::RParen) fail("expected ')'", peek().pos);
      take();
      return inner;
    }
    case TokenKind::Ident:
      if (symbols_.param && tok.text == *symbols_.param) {
        take();
        return PScalar(Scalar::parameter());
      }
      if (symbols_.allow_pressure && tok.text == "p") {
        take();
        return PScalar::pressure();
      }
      if (frame_index(tok)) fail("frame name '" + tok.text + "' used as a scalar", tok.pos);
      fail("undeclared parameter '" + tok.text + "'", tok.pos);
    case TokenKind::End:
      fail("unexpected end of expression", tok.pos);
    default:
      fail("unexpected '" + tok.text + "'", tok.pos);
  }
}

std::vector<PScalar> ExpressionParser::parse_linear_combination() {
  std::vector<PScalar> coeffs(symbols_.frame_names.size());
  bool first = true;
  while (first || !at_end()) {
    bool negate = false;
    bool saw_sign = false;
    while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
      negate ^= take().kind == TokenKind::Minus;
      saw_sign = true;
    }
    if (!first && !saw_sign) fail("expected '+' or '-' between terms", peek().pos);
    PScalar coeff(1);
    if (!frame_index(peek())) {
      coeff = parse_term();
      if (first && at_end() && coeff.is_zero()) return coeffs;
    }
    auto idx = frame_index(peek());
    if (!idx) fail("expected a frame name", peek().pos);
    take();
    coeffs[*idx] += negate ? -coeff : coeff;
    first = false;
  }
  return coeffs;
}

}  // namespace cgeom::detail
