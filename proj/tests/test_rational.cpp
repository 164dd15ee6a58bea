#include <doctest.h>

#include "bcond/errors.hpp"
#include "bcond/rational.hpp"

using namespace bcond;

TEST_CASE("parsing accepts fractions, decimals and integers") {
    CHECK(parse_rational("13/40") == Rational(13, 40));
    CHECK(parse_rational("0.325") == Rational(13, 40));
    CHECK(parse_rational(".5") == Rational(1, 2));
    CHECK(parse_rational("1") == 1);
    CHECK(parse_rational("6/8") == Rational(3, 4));
    CHECK(parse_rational("-0.25") == Rational(-1, 4));

    CHECK_THROWS_AS(parse_rational("1/0"), validation_error);
    CHECK_THROWS_AS(parse_rational("x"), validation_error);
    CHECK_THROWS_AS(parse_rational(""), validation_error);
    CHECK_THROWS_AS(parse_rational("."), validation_error);
    CHECK_THROWS_AS(parse_rational("1/2/3"), validation_error);
}

TEST_CASE("formatting stays in lowest terms") {
    CHECK(format_rational(Rational(13, 40)) == "13/40");
    CHECK(format_rational(Rational(2, 4)) == "1/2");
    CHECK(format_rational(Rational(4, 4)) == "1");
    CHECK(format_rational(Rational(0)) == "0");
}

TEST_CASE("decimal column rounds half to even") {
    CHECK(format_decimal(Rational(13, 40), 6) == "0.325000");
    CHECK(format_decimal(Rational(1, 16), 3) == "0.062");   // 62.5 -> 62
    CHECK(format_decimal(Rational(3, 16), 3) == "0.188");   // 187.5 -> 188
    CHECK(format_decimal(Rational(2, 3), 6) == "0.666667");
    CHECK(format_decimal(Rational(1), 6) == "1.000000");
    CHECK(format_decimal(Rational(-1, 16), 3) == "-0.062");
}
