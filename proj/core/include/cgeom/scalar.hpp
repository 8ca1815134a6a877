#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "cgeom/polynomial.hpp"

namespace cgeom {

using Rational = mpq_class;
using RationalPoly = Polynomial<Rational>;

/// Element of Q(t): a univariate rational function over the rationals.
///
/// The parameter itself is anonymous; a manifold declares at most one and
/// supplies its name when printing or parsing. Values are kept canonical
/// (coprime numerator and denominator, monic denominator), so equality and
/// zero testing are structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int value) : num_(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  /// Inputs built with mpq_class(num, den) need not be canonical; they are
  /// canonicalized here.
  explicit Scalar(const Rational& value);
  explicit Scalar(RationalPoly numerator);

  /// Normalizing constructor; throws DomainError on a zero denominator.
  static Scalar fraction(RationalPoly numerator, RationalPoly denominator);

  /// The declared parameter t.
  static Scalar parameter();

  const RationalPoly& numerator() const noexcept { return num_; }
  const RationalPoly& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  std::optional<Rational> constant_value() const;

  /// Value at t = `value`; throws DomainError at a pole.
  Scalar substitute(const Rational& value) const;

  Scalar pow(int exponent) const;
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Canonical text in the scalar grammar, `var` naming the parameter.
  std::string str(std::string_view var = "t") const;

 private:
  void normalize();

  RationalPoly num_;
  RationalPoly den_{Rational(1)};
};

/// Text of a polynomial in descending powers, e.g. "a^2 - 1".
std::string format_polynomial(const RationalPoly& p, std::string_view var);

/// Parse text in the scalar grammar. `param` names the admissible
/// parameter symbol; any other identifier is an error.
Scalar parse_scalar(std::string_view text, std::optional<std::string_view> param = std::nullopt);

}  // namespace cgeom
