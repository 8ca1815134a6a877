#include "cgeom/scalar.hpp"

#include <sstream>

#include "cgeom/errors.hpp"
#include "expression.hpp"

namespace cgeom {

namespace {

RationalPoly canonical(const RationalPoly& p) {
  std::vector<Rational> c(p.coefficients().begin(), p.coefficients().end());
  for (auto& x : c) x.canonicalize();
  return RationalPoly(std::move(c));
}

}  // namespace

Scalar::Scalar(const Rational& value) : Scalar(RationalPoly(std::vector<Rational>{value})) {}

Scalar::Scalar(RationalPoly numerator) : num_(canonical(numerator)) {}

Scalar Scalar::fraction(RationalPoly numerator, RationalPoly denominator) {
  Scalar s;
  s.num_ = canonical(numerator);
  s.den_ = canonical(denominator);
  if (s.den_.is_zero()) throw DomainError("division by the zero polynomial");
  s.normalize();
  return s;
}

Scalar Scalar::parameter() { return Scalar(RationalPoly::variable()); }

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = RationalPoly(Rational(1));
    return;
  }
  if (den_.degree() > 0) {
    RationalPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = RationalPoly::divmod(num_, g).first;
      den_ = RationalPoly::divmod(den_, g).first;
    }
  }
  if (den_.leading() != 1) {
    Rational inv = 1 / den_.leading();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

std::optional<Rational> Scalar::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return num_.coeff(0);
}

Scalar Scalar::substitute(const Rational& raw) const {
  Rational value = raw;
  value.canonicalize();
  Rational d = den_.evaluate(value);
  if (d == 0) {
    throw DomainError("pole: denominator vanishes at parameter = " + value.get_str());
  }
  Rational n = num_.evaluate(value);
  return Scalar(Rational(n / d));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  return fraction(den_, num_);
}

Scalar Scalar::pow(int exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned e = exponent < 0 ? -static_cast<unsigned>(exponent) : static_cast<unsigned>(exponent);
  Scalar result(1);
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.degree() > 0) normalize();
    else if (num_.is_zero()) den_ = RationalPoly(Rational(1));
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  num_ = num_ * o.num_;
  if (num_.is_zero()) {
    den_ = RationalPoly(Rational(1));
    return *this;
  }
  if (den_.degree() <= 0 && o.den_.degree() <= 0) return *this;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string format_polynomial(const RationalPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  auto coeffs = p.coefficients();
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Rational& c = coeffs[k];
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = abs(c);
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << var;
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

namespace {

bool single_term(const RationalPoly& p) {
  int nonzero = 0;
  for (const auto& c : p.coefficients()) nonzero += c != 0;
  return nonzero <= 1;
}

}  // namespace

std::string Scalar::str(std::string_view var) const {
  std::string n = format_polynomial(num_, var);
  if (den_.degree() <= 0) return n;
  std::string d = format_polynomial(den_, var);
  if (!single_term(num_)) n = "(" + n + ")";
  if (!single_term(den_) || d.find('*') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

Scalar parse_scalar(std::string_view text, std::optional<std::string_view> param) {
  detail::ExpressionParser parser(text, {param, false, {}});
  PScalar value = parser.parse_expr();
  parser.expect_end();
  return *value.as_scalar();
}

}  // namespace cgeom
