#include "qh/laurent.hpp"
#include "qh/rational.hpp"

#include <doctest.h>

using namespace qh;

TEST_CASE("rational text form is canonical")
{
    CHECK(to_string(frac(6, 4)) == "3/2");
    CHECK(to_string(frac(-4, 2)) == "-2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(parse_rational("10/4") == frac(5, 2));
    CHECK(parse_rational("-7") == -7);
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("powers and binomials")
{
    CHECK(pow(frac(2, 3), 3) == frac(8, 27));
    CHECK(pow(frac(2, 3), -2) == frac(9, 4));
    CHECK(pow(Rational(5), 0) == 1);
    CHECK_THROWS(pow(Rational(0), -1));
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(4, 7) == 0);
    CHECK(abs(frac(-3, 5)) == frac(3, 5));
}

TEST_CASE("laurent arithmetic")
{
    QLaurent q(Rational(1), 1);
    QLaurent a = QLaurent(2) + q * QLaurent(3);  // 2 + 3q
    QLaurent b = QLaurent(Rational(1), -1) - QLaurent(1);  // q^-1 - 1
    QLaurent p = a * b;  // 2q^-1 + 1 - 3q
    CHECK(p.coeff(-1) == 2);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == -3);
    CHECK(p.min_exp() == -1);
    CHECK(p.max_exp() == 1);
    CHECK(p.eval(Rational(2)) == Rational(1) + 1 - 6);
    CHECK((a - a).is_zero());
    CHECK(QLaurent(3).is_constant());
    CHECK_FALSE(q.is_constant());
    CHECK(p.str() == "-3*q + 1 + 2*q^-1");
}
