#include <doctest.h>

#include "cgeom/scalar.hpp"

using cgeom::Rational;
using cgeom::RationalPoly;

namespace {

RationalPoly poly(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return RationalPoly(std::move(c));
}

}  // namespace

TEST_CASE("zero polynomial has no coefficients") {
  const RationalPoly z = poly({0, 0, 0});
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(z == RationalPoly{});
}

TEST_CASE("trailing zeros are trimmed after subtraction") {
  const RationalPoly p = poly({1, 2, 3});
  const RationalPoly q = poly({0, 0, 3});
  CHECK((p - q) == poly({1, 2}));
  CHECK((p - p).is_zero());
}

TEST_CASE("product and evaluation") {
  const RationalPoly p = poly({-1, 1});  // t - 1
  const RationalPoly q = poly({1, 1});   // t + 1
  CHECK(p * q == poly({-1, 0, 1}));
  CHECK((p * q).evaluate(Rational(3)) == Rational(8));
}

TEST_CASE("divmod reconstructs the dividend") {
  const RationalPoly num = poly({5, 0, 3, 2});
  const RationalPoly den = poly({1, 2});
  const auto [quo, rem] = RationalPoly::divmod(num, den);
  CHECK(rem.degree() < den.degree());
  CHECK(quo * den + rem == num);
}

TEST_CASE("divmod by zero throws") {
  CHECK_THROWS_AS(RationalPoly::divmod(poly({1}), RationalPoly{}), cgeom::DomainError);
}

TEST_CASE("gcd is monic") {
  const RationalPoly common = poly({-2, 1});
  const RationalPoly g = gcd(common * poly({3, 0, 1}), common * poly({1, 4}).scaled(Rational(7)));
  CHECK(g == common);
  CHECK(gcd(poly({2}), poly({0, 3})) == poly({1}));
}
