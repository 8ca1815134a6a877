#include <doctest.h>

#include "cgeom/scalar.hpp"

using namespace cgeom;

namespace {

const Scalar t = Scalar::parameter();

Scalar parse(std::string_view s) { return parse_scalar(s, "a"); }

}  // namespace

TEST_CASE("canonical form cancels common factors") {
  const Scalar x = (t * t - Scalar(1)) / (t - Scalar(1));
  CHECK(x == t + Scalar(1));
  CHECK(x.denominator() == RationalPoly(Rational(1)));
}

TEST_CASE("denominator is monic") {
  const Scalar x = Scalar(1) / (Scalar(2) * t + Scalar(4));
  CHECK(x.denominator().leading() == Rational(1));
  CHECK(x.numerator() == RationalPoly(Rational(1, 2)));
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DomainError);
  CHECK_THROWS_AS(Scalar(0).inverse(), DomainError);
  CHECK_THROWS_AS(Scalar::fraction(RationalPoly(Rational(1)), RationalPoly{}), DomainError);
}

TEST_CASE("substitution evaluates and detects poles") {
  const Scalar x = (t + Scalar(1)) / (t - Scalar(2));
  CHECK(x.substitute(Rational(3)) == Scalar(4));
  CHECK_THROWS_AS(x.substitute(Rational(2)), DomainError);
  CHECK(x.substitute(Rational(0)).constant_value() == Rational(-1, 2));
}

TEST_CASE("integer powers") {
  CHECK(t.pow(0) == Scalar(1));
  CHECK(t.pow(3) == t * t * t);
  CHECK(t.pow(-2) * t * t == Scalar(1));
}

TEST_CASE("printing") {
  CHECK(Scalar(0).str() == "0");
  CHECK(Scalar(Rational(-3, 4)).str() == "-3/4");
  CHECK((Scalar(1) - t * t).str("a") == "-a^2 + 1");
  CHECK((Scalar(2) * t).str("a") == "2*a");
}

TEST_CASE("parse grammar") {
  CHECK(parse("1 - a^2") == Scalar(1) - t * t);
  CHECK(parse("(1+a)*(1-a)") == Scalar(1) - t * t);
  CHECK(parse("-3/4") == Scalar(Rational(-3, 4)));
  CHECK(parse("1/(a-1) + 1/(a+1)") == Scalar(2) * t / (t * t - Scalar(1)));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse("1 +"), ParseError);
  CHECK_THROWS_AS(parse("(a"), ParseError);
  CHECK_THROWS_AS(parse("b"), ParseError);
  CHECK_THROWS_AS(parse_scalar("a"), ParseError);
  CHECK_THROWS_AS(parse("2a"), ParseError);
  CHECK_THROWS_AS(parse("a^-1"), ParseError);
  CHECK_THROWS_AS(parse("a^(2)"), ParseError);
  try {
    parse("a + $");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("division by the zero element in text is reported with its position") {
  CHECK_THROWS_AS(parse("1/(a-a)"), ParseError);
  CHECK_THROWS_AS(parse("a/0"), ParseError);
}

TEST_CASE("printed text parses back") {
  for (const char* text : {"(a^2 + 1)/(a - 3)", "-1/2*a + 7", "1/(3*a^2 - a)", "0"}) {
    const Scalar x = parse(text);
    CHECK(parse(x.str("a")) == x);
  }
}

TEST_CASE("non-canonical rationals are canonicalized on entry") {
  CHECK(Scalar(Rational(0, 3)).is_zero());
  CHECK(Scalar(Rational(2, 2)) == Scalar(1));
  CHECK(Scalar(Rational(4, -6)).str() == "-2/3");
  const Scalar t2 = Scalar(RationalPoly(std::vector<Rational>{Rational(0, 5), Rational(3, 3), Rational(0, 2)}));
  CHECK(t2 == t);
  CHECK(t.substitute(Rational(6, 4)) == Scalar(Rational(3, 2)));
}
