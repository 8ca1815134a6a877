#include "cgeom/pscalar.hpp"

#include <sstream>

#include "expression.hpp"

namespace cgeom {

std::optional<Scalar> PScalar::as_scalar() const {
  if (depends_on_pressure()) return std::nullopt;
  return poly_.coeff(0);
}

PScalar PScalar::substitute_parameter(const Rational& value) const {
  std::vector<Scalar> c;
  for (const auto& s : poly_.coefficients()) c.push_back(s.substitute(value));
  return PScalar(Polynomial<Scalar>(std::move(c)));
}

PScalar operator/(const PScalar& a, const Scalar& b) { return PScalar(a.poly_.scaled(b.inverse())); }

std::string PScalar::str(std::string_view var) const {
  if (poly_.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  auto coeffs = poly_.coefficients();
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Scalar& c = coeffs[k];
    if (c.is_zero()) continue;
    std::string text;
    bool negative = false;
    if (k == 0) {
      text = c.str(var);
      if (!first && text[0] == '-') {
        negative = true;
        text = (-c).str(var);
        if (text.find(' ') != std::string::npos && text[0] != '(') text = "(" + text + ")";
      } else if (!first && text.find(' ') != std::string::npos && text[0] != '(') {
        text = "(" + text + ")";
      }
    } else {
      std::string power = k > 1 ? "p^" + std::to_string(k) : "p";
      if (auto r = c.constant_value()) {
        negative = *r < 0;
        Rational mag = abs(*r);
        text = mag == 1 ? power : mag.get_str() + "*" + power;
      } else {
        text = "(" + c.str(var) + ")*" + power;
      }
    }
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    out << text;
    first = false;
  }
  return out.str();
}

PScalar parse_pscalar(std::string_view text, std::optional<std::string_view> param) {
  detail::ExpressionParser parser(text, {param, true, {}});
  PScalar value = parser.parse_expr();
  parser.expect_end();
  return value;
}

}  // namespace cgeom
