#include <doctest.h>

#include "cgeom/pscalar.hpp"

using namespace cgeom;

namespace {

const PScalar p = PScalar::pressure();
const Scalar t = Scalar::parameter();

}  // namespace

TEST_CASE("pressure dependence") {
  CHECK(p.depends_on_pressure());
  CHECK_FALSE(PScalar(t).depends_on_pressure());
  CHECK(PScalar(t).as_scalar() == t);
  CHECK_FALSE(p.as_scalar().has_value());
}

TEST_CASE("steady lambda arithmetic") {
  const PScalar lambda = p / Scalar(2) + PScalar(Scalar(Rational(1, 3)));
  CHECK(lambda.str() == "1/2*p + 1/3");
  CHECK(lambda.substitute_pressure(Scalar(4)) == PScalar(Scalar(Rational(7, 3))));
  CHECK((Scalar(2) * lambda - p).as_scalar() == Scalar(Rational(2, 3)));
}

TEST_CASE("parameter substitution reaches every coefficient") {
  const PScalar x = PScalar(t) * p + PScalar(t * t);
  CHECK(x.substitute_parameter(Rational(2)) == PScalar(Scalar(2)) * p + PScalar(Scalar(4)));
}

TEST_CASE("division only by p-free values") {
  CHECK_THROWS_AS(p / Scalar(0), DomainError);
  CHECK_THROWS_AS(parse_pscalar("1/p"), ParseError);
  CHECK(parse_pscalar("p/2 + 1/3") == p / Scalar(2) + PScalar(Scalar(Rational(1, 3))));
  CHECK(parse_pscalar("a*p - a", "a") == PScalar(t) * p - PScalar(t));
}

TEST_CASE("printed text parses back") {
  for (const char* text : {"p/2 + 1/3", "(a+1)*p^2 - a", "0", "-p"}) {
    const PScalar x = parse_pscalar(text, "a");
    CHECK(parse_pscalar(x.str("a"), "a") == x);
  }
}
