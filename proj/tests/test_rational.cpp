#include <catch2/catch.hpp>

#include "qbel/rational.hpp"

using qbel::decimal_string;
using qbel::parse_rational;
using qbel::Rational;
using qbel::rational_string;

TEST_CASE("fraction, integer and decimal literals parse exactly") {
    CHECK(parse_rational("1/5") == Rational(1, 5));
    CHECK(parse_rational("0.2") == Rational(1, 5));
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-7/2") == Rational(-7, 2));
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK(parse_rational("1.0") == 1);
    CHECK(parse_rational(" 1/2 ") == Rational(1, 2));
    CHECK(parse_rational("2/6") == Rational(1, 3));
    CHECK(parse_rational("-0.5") == Rational(-1, 2));
    CHECK(parse_rational("+3/4") == Rational(3, 4));
    CHECK(parse_rational(".5") == Rational(1, 2));
}

TEST_CASE("bad literals are rejected") {
    CHECK_THROWS_AS(parse_rational(""), qbel::input_error);
    CHECK_THROWS_AS(parse_rational("1/0"), qbel::input_error);
    CHECK_THROWS_AS(parse_rational("abc"), qbel::input_error);
    CHECK_THROWS_AS(parse_rational("1.2.3"), qbel::input_error);
    CHECK_THROWS_AS(parse_rational("--1"), qbel::input_error);
    CHECK_THROWS_AS(parse_rational("1 2"), qbel::input_error);
    CHECK_THROWS_AS(parse_rational("."), qbel::input_error);
}

TEST_CASE("canonical string rendering") {
    CHECK(rational_string(parse_rational("2/6")) == "1/3");
    CHECK(rational_string(parse_rational("4")) == "4");
    CHECK(rational_string(parse_rational("-3/9")) == "-1/3");
    CHECK(rational_string(Rational(0)) == "0");
}

TEST_CASE("decimal rendering rounds to the requested places") {
    CHECK(decimal_string(Rational(1, 3)) == "0.333333");
    CHECK(decimal_string(Rational(2, 3)) == "0.666667");
    CHECK(decimal_string(Rational(1, 8), 3) == "0.125");
    CHECK(decimal_string(Rational(-1, 3)) == "-0.333333");
    CHECK(decimal_string(Rational(1)) == "1.000000");
    CHECK(decimal_string(Rational(0)) == "0.000000");
    CHECK(decimal_string(Rational(3, 10)) == "0.300000");
}
