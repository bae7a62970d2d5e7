#include "apud/rational.hpp"

#include <doctest.h>

#include <sstream>

using apud::Rational;

TEST_CASE("rational parse and print")
{
    CHECK(Rational::parse("3/6").str() == "1/2");
    CHECK(Rational::parse("-4/2").str() == "-2");
    CHECK(Rational::parse("7").str() == "7");
    CHECK(Rational::parse(" 39/10 ") == Rational(39, 10));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);

    std::ostringstream out;
    out << Rational(-3, 9);
    CHECK(out.str() == "-1/3");
}

TEST_CASE("rational arithmetic is exact")
{
    Rational tenth(1, 10);
    Rational sum = 0;
    for (int i = 0; i < 10; ++i)
        sum += tenth;
    CHECK(sum == 1);
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(1, 3) / Rational(2) == Rational(1, 6));
    CHECK(-Rational(5, 7) == Rational(-5, 7));
    CHECK(Rational(-5, 7).abs() == Rational(5, 7));
    CHECK(Rational(-5, 7).sign() == -1);
    CHECK(Rational(0).sign() == 0);
}

TEST_CASE("rational ordering and rounding")
{
    CHECK(Rational(1, 3) < Rational(34, 100));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(floor(Rational(7, 2)) == 3);
    CHECK(floor(Rational(-7, 2)) == -4);
    CHECK(ceil(Rational(7, 2)) == 4);
    CHECK(ceil(Rational(-7, 2)) == -3);
    CHECK(Rational(6, 3).is_integer());
    CHECK_FALSE(Rational(7, 3).is_integer());
    CHECK(Rational(1, 8).to_double() == doctest::Approx(0.125));
}
