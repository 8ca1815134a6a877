#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "cgeom/errors.hpp"

namespace cgeom {

/// Dense univariate polynomial with coefficients in a field `C`.
///
/// Coefficients are stored in ascending degree order and the representation
/// is always trimmed, so the zero polynomial has no coefficients and two
/// polynomials are equal iff their coefficient vectors are equal. `C` must be
/// constructible from `int` and provide the field operations; `divmod` and
/// `gcd` additionally need exact division.
template <class C>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(C constant) {
    if (!(constant == C(0))) coeffs_.push_back(std::move(constant));
  }

  explicit Polynomial(std::vector<C> ascending) : coeffs_(std::move(ascending)) { trim(); }

  static Polynomial monomial(C coefficient, std::size_t degree) {
    if (coefficient == C(0)) return {};
    std::vector<C> c(degree + 1, C(0));
    c[degree] = std::move(coefficient);
    return Polynomial(std::move(c));
  }

  static Polynomial variable() { return monomial(C(1), 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  C coeff(std::size_t power) const { return power < coeffs_.size() ? coeffs_[power] : C(0); }
  const C& leading() const { return coeffs_.back(); }
  std::span<const C> coefficients() const noexcept { return coeffs_; }

  C evaluate(const C& x) const {
    C acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> r(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(r));
  }

  Polynomial scaled(const C& factor) const {
    if (factor == C(0)) return {};
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c *= factor;
    return r;
  }

  /// Quotient and remainder of Euclidean division; throws on a zero divisor.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw DomainError("polynomial division by zero");
    if (num.degree() < den.degree()) return {Polynomial{}, num};
    std::vector<C> rem = num.coeffs_;
    std::vector<C> quo(num.coeffs_.size() - den.coeffs_.size() + 1, C(0));
    const C& lead = den.leading();
    for (std::size_t shift = quo.size(); shift-- > 0;) {
      const C& top = rem[shift + den.coeffs_.size() - 1];
      if (top == C(0)) continue;
      C q = top / lead;
      for (std::size_t j = 0; j < den.coeffs_.size(); ++j) rem[shift + j] -= q * den.coeffs_[j];
      quo[shift] = std::move(q);
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

  /// Monic scaling; the zero polynomial stays zero.
  Polynomial monic() const {
    if (is_zero()) return {};
    return scaled(C(1) / leading());
  }

  /// Monic greatest common divisor (zero iff both inputs are zero).
  friend Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == C(0)) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
};

}  // namespace cgeom
