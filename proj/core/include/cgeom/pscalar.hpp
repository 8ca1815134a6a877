#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cgeom/polynomial.hpp"
#include "cgeom/scalar.hpp"

namespace cgeom {

/// Polynomial in the reserved pressure symbol `p` with coefficients in the
/// manifold's field. Soliton constants (p, lambda, sigma) and soliton
/// residuals live here; manifold data never does.
class PScalar {
 public:
  PScalar() = default;
  PScalar(int value) : poly_(Scalar(value)) {}  // NOLINT(google-explicit-constructor)
  PScalar(const Scalar& value) : poly_(value) {}  // NOLINT(google-explicit-constructor)
  explicit PScalar(Polynomial<Scalar> poly) : poly_(std::move(poly)) {}

  static PScalar pressure() { return PScalar(Polynomial<Scalar>::variable()); }

  const Polynomial<Scalar>& poly() const noexcept { return poly_; }
  bool is_zero() const noexcept { return poly_.is_zero(); }
  bool depends_on_pressure() const noexcept { return poly_.degree() > 0; }

  /// The p-free value, if the expression does not mention p.
  std::optional<Scalar> as_scalar() const;

  /// Replace p by a manifold-field value.
  PScalar substitute_pressure(const Scalar& value) const { return PScalar(poly_.evaluate(value)); }

  /// Apply t = value to every coefficient.
  PScalar substitute_parameter(const Rational& value) const;

  PScalar operator-() const { return PScalar(-poly_); }
  PScalar& operator+=(const PScalar& o) { poly_ += o.poly_; return *this; }
  PScalar& operator-=(const PScalar& o) { poly_ -= o.poly_; return *this; }
  PScalar& operator*=(const PScalar& o) { poly_ = poly_ * o.poly_; return *this; }

  friend PScalar operator+(PScalar a, const PScalar& b) { return a += b; }
  friend PScalar operator-(PScalar a, const PScalar& b) { return a -= b; }
  friend PScalar operator*(PScalar a, const PScalar& b) { return a *= b; }

  /// Division by a p-free divisor only.
  friend PScalar operator/(const PScalar& a, const Scalar& b);

  friend bool operator==(const PScalar& a, const PScalar& b) { return a.poly_ == b.poly_; }

  /// e.g. "1/2*p + 1/3"; `var` names the manifold parameter.
  std::string str(std::string_view var = "t") const;

 private:
  Polynomial<Scalar> poly_;
};

/// Parse an expression that may mention both the manifold parameter and
/// the symbol `p`; division is only allowed by p-free subexpressions.
PScalar parse_pscalar(std::string_view text, std::optional<std::string_view> param = std::nullopt);

}  // namespace cgeom
