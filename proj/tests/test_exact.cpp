#include "nicomach/integer.hpp"
#include "nicomach/rational.hpp"
#include "nicomach/surd.hpp"

#include <doctest.h>

using namespace nicomach;

TEST_CASE("integer square roots carry an exactness flag") {
    CHECK(isqrt(Integer(0)).root == 0);
    CHECK(isqrt(Integer(0)).exact);
    CHECK(isqrt(Integer(225)).root == 15);
    CHECK(isqrt(Integer(225)).exact);
    SqrtResult r = isqrt(Integer(226));
    CHECK(r.root == 15);
    CHECK_FALSE(r.exact);
    CHECK(isqrt(Integer("35820225")).root == 5985);
}

TEST_CASE("floor and ceiling division round toward the correct side") {
    CHECK(floor_div(Integer(7), Integer(2)) == 3);
    CHECK(floor_div(Integer(-7), Integer(2)) == -4);
    CHECK(ceil_div(Integer(7), Integer(2)) == 4);
    CHECK(ceil_div(Integer(-7), Integer(2)) == -3);
    CHECK(floor_div(Integer(6), Integer(3)) == 2);
    CHECK(ceil_div(Integer(6), Integer(3)) == 2);
}

TEST_CASE("powers, binomials, triangulars") {
    CHECK(pow10(0) == 1);
    CHECK(pow10(6) == 1000000);
    CHECK(pow_int(Integer(399), 3) == Integer("63521199"));
    CHECK(binomial(9, 4) == 126);
    CHECK(triangular(Integer(5)) == 15);
    CHECK(triangular(Integer(1)) == 1);
}

TEST_CASE("integer parsing accepts signs and rejects junk") {
    CHECK(parse_integer("253") == 253);
    CHECK(parse_integer("-44") == -44);
    CHECK_THROWS_AS(parse_integer(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_integer("12x"), std::invalid_argument);
}

TEST_CASE("factorization strings match the expected renderings") {
    CHECK(factor_string(Integer(16896)) == "2^9 * 3 * 11");
    CHECK(factor_string(Integer(15125)) == "5^3 * 11^2");
    CHECK(factor_string(Integer(176)) == "2^4 * 11");
    CHECK(factor_string(Integer(280)) == "2^3 * 5 * 7");
    CHECK(factor_string(Integer(1)) == "1");
    CHECK(factor_string(Integer(97)) == "97");
}

TEST_CASE("rationals stay canonical") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(22, 19).str() == "22/19");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(0, 7).is_zero());
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational floor, ceiling, inverse, pow, abs") {
    CHECK(Rational(-3, 2).floor() == -2);
    CHECK(Rational(-3, 2).ceil() == -1);
    CHECK(Rational(3, 2).floor() == 1);
    CHECK(Rational(3, 2).ceil() == 2);
    CHECK(Rational(4).floor() == 4);
    CHECK(Rational(22, 19).inverse() == Rational(19, 22));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(-7, 3).abs() == Rational(7, 3));
    CHECK(Rational(1) + Rational(3, 19) == Rational(22, 19));
    CHECK(Rational(22, 19) / Rational(2) == Rational(11, 19));
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("surd arithmetic is exact and closed") {
    Surd lo(Rational(10), Rational(-3), Integer(11));
    Surd hi(Rational(10), Rational(3), Integer(11));
    CHECK(lo.pow(3) + hi.pow(3) == Surd(7940));
    CHECK(lo * hi == Surd(1));  // norm of 10 + 3*sqrt(11) is 100 - 99 = 1
    CHECK(hi.norm() == Rational(1));
    CHECK(hi.inverse() == lo);
    CHECK(hi.conj() == lo);
    CHECK((hi - lo) == Surd(Rational(0), Rational(6), Integer(11)));
}

TEST_CASE("surd signs need no floating point") {
    Surd b(Rational(-1, 2), Rational(1, 2), Integer(11));  // (-1+sqrt(11))/2 > 0
    CHECK(b.sign() == 1);
    CHECK(b.conj().sign() == -1);
    CHECK(Surd(0).sign() == 0);
    Surd tiny = Surd::sqrt(Integer(11)) - Surd(Rational(33166, 10000));  // sqrt(11) ~ 3.31662
    CHECK(tiny.sign() == 1);
    Surd neg = Surd::sqrt(Integer(11)) - Surd(Rational(33167, 10000));
    CHECK(neg.sign() == -1);
}

TEST_CASE("surd misuse is rejected") {
    CHECK_THROWS_AS(Surd::sqrt(Integer(11)) + Surd::sqrt(Integer(7)), std::domain_error);
    CHECK_THROWS_AS(Surd::sqrt(Integer(11)).to_rational(), std::domain_error);
    CHECK(Surd(Rational(3), Rational(0), Integer(11)).to_rational() == Rational(3));
}
