#include "doctest.h"
#include "rspin/polynomial.hpp"

using namespace rspin;

TEST_CASE("monomial order is graded lex") {
    Monomial x2{{2, 0}}, xy{{1, 1}}, y{{0, 1}}, c{{0, 0}};
    CHECK(x2 < xy);
    CHECK(xy < y);  // degree 2 before degree 1
    CHECK(y < c);
    CHECK_FALSE(xy < x2);
}

TEST_CASE("arithmetic and canonical text") {
    auto x = Polynomial::variable(2, 0);
    auto y = Polynomial::variable(2, 1);
    auto p = (x + y) * (x - y);
    CHECK(p.to_text({"x", "y"}) == "x^2 - y^2");
    CHECK(p.total_degree() == 2);

    auto q = x * y + Polynomial::constant(2, Rational(3, 2));
    CHECK(q.to_text({"x", "y"}) == "x*y + 3/2");

    auto z = p - p;
    CHECK(z.is_zero());
    CHECK(z.to_text({"x", "y"}) == "0");
}

TEST_CASE("evaluation is exact") {
    auto x = Polynomial::variable(2, 0);
    auto y = Polynomial::variable(2, 1);
    auto p = x * x * y - y;
    CHECK(p.evaluate({Rational(1, 2), Rational(4)}) == Rational(-3));
    CHECK((x + y).evaluate({Rational(1, 3), Rational(1, 6)}) == Rational(1, 2));
}

TEST_CASE("scalar multiple and cancellation") {
    auto x = Polynomial::variable(1, 0);
    auto p = x + x;
    p *= Rational(1, 2);
    CHECK(p == x);
    p *= Rational(0);
    CHECK(p.is_zero());
}
