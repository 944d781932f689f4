#include "doctest.h"

#include <sstream>
#include <stdexcept>

#include "fixspace/rational.hpp"

using fixspace::Integer;
using fixspace::Rational;

TEST_CASE("rational normalizes to lowest terms with positive denominator") {
    const Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(0, -7).den() == 1);
}

TEST_CASE("rational arithmetic is exact") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == b);
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == 2);
    CHECK(-a == Rational(-1, 3));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-2).pow(3) == -8);
    CHECK(Rational(5).pow(0) == 1);
    CHECK(Rational(-3, 4).abs() == Rational(3, 4));
    CHECK(Rational(-3, 4).inverse() == Rational(-4, 3));
}

TEST_CASE("rational division by zero throws") {
    CHECK_THROWS_AS((void)Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS((void)(Rational(1) / Rational(0)), std::domain_error);
    CHECK_THROWS_AS((void)Rational(0).inverse(), std::domain_error);
    CHECK_THROWS_AS((void)Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("rational ordering, parsing and printing") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < 0);
    CHECK(Rational::parse("10/-4") == Rational(-5, 2));
    CHECK(Rational::parse("7") == 7);
    CHECK_THROWS((void)Rational::parse("1/0"));
    CHECK_THROWS((void)Rational::parse("abc"));
    std::ostringstream os;
    os << Rational(22, 7);
    CHECK(os.str() == "22/7");
    CHECK(Rational(1, 4).to_double() == doctest::Approx(0.25));
    CHECK(Rational(3).is_integer());
    CHECK_FALSE(Rational(3, 2).is_integer());
}

TEST_CASE("big integers do not overflow") {
    const Integer big = fixspace::ipow(Integer(3), 100);
    const Rational r(big, big * 2);
    CHECK(r == Rational(1, 2));
    CHECK(fixspace::ipow(Integer(2), 64) == Integer("18446744073709551616"));
    CHECK(fixspace::choose2(5) == 10);
    CHECK(fixspace::choose2(0) == 0);
}
