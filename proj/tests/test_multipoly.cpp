#include <doctest.h>

#include <stdexcept>

#include "betticone/errors.hpp"
#include "betticone/multipoly.hpp"
#include "betticone/rational.hpp"

using namespace betticone;

namespace {

LaurentPoly mono2(int a, int b, const Rational& c = Rational(1)) {
    return LaurentPoly::monomial({a, b}, c);
}

} // namespace

TEST_SUITE("multipoly") {

TEST_CASE("rational strings parse and print exactly") {
    CHECK(rational_to_string(rational_from_string("3/2")) == "3/2");
    CHECK(rational_to_string(rational_from_string("-4/8")) == "-1/2");
    CHECK(rational_to_string(rational_from_string("7")) == "7");
    CHECK(rational_from_string("2/4") == Rational(1, 2));
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1/"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
}

TEST_CASE("xi in one and two variables") {
    LaurentPoly x3(1);
    x3.add_term({0}, 1);
    x3.add_term({1}, 1);
    x3.add_term({2}, 1);
    CHECK(xi(3, 1) == x3);

    LaurentPoly x22(2);
    x22.add_term({1, 0}, 1);
    x22.add_term({0, 1}, 1);
    CHECK(xi(2, 2) == x22);

    CHECK(xi(1, 1) == LaurentPoly::constant(1, 1));
    CHECK_THROWS_AS(xi(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(xi(2, 3), std::invalid_argument);

    for (int d = 1; d <= 8; ++d) {
        CHECK(xi(d, 1).term_count() == static_cast<std::size_t>(d));
        CHECK(xi(d, 2).term_count() == static_cast<std::size_t>(d));
        CHECK(xi(d, 2).eval_ones() == d);
    }
}

TEST_CASE("splitting identity for xi") {
    // xi_{a+b}(t,u) = t^b xi_a + u^a xi_b = u^b xi_a + t^a xi_b.
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b) {
            LaurentPoly lhs = xi(a + b, 2);
            CHECK(lhs == mono2(b, 0) * xi(a, 2) + mono2(0, a) * xi(b, 2));
            CHECK(lhs == mono2(0, b) * xi(a, 2) + mono2(a, 0) * xi(b, 2));
        }
}

TEST_CASE("arithmetic is exact and cancels") {
    LaurentPoly f = mono2(1, 0, rational_from_string("1/3"));
    f += mono2(1, 0, rational_from_string("2/3"));
    CHECK(f == mono2(1, 0));

    LaurentPoly g = xi(4, 2) - xi(4, 2);
    CHECK(g.is_zero());
    CHECK(g.term_count() == 0);

    LaurentPoly h = (xi(2, 2) + mono2(0, 0)) * (xi(2, 2) - mono2(0, 0));
    CHECK(h == xi(2, 2) * xi(2, 2) - mono2(0, 0));

    CHECK(Rational(0) * xi(5, 2) == LaurentPoly(2));
    CHECK(-(-xi(5, 2)) == xi(5, 2));
}

TEST_CASE("laurent exponents are allowed") {
    LaurentPoly f = mono2(-2, 3) * mono2(2, -3);
    CHECK(f == mono2(0, 0));
    CHECK(min_exponent(mono2(-2, 3), 0) == -2);
    CHECK(max_exponent(mono2(-2, 3), 1) == 3);
}

TEST_CASE("inflate scales exponents") {
    CHECK(inflate(xi(3, 1), 2).coeff({4}) == 1);
    CHECK(inflate(xi(3, 1), 2).coeff({2}) == 1);
    CHECK(inflate(xi(3, 1), 2).term_count() == 3);
    CHECK(inflate(xi(4, 2), 3) ==
          LaurentPoly::monomial({9, 0}) + LaurentPoly::monomial({6, 3}) +
              LaurentPoly::monomial({3, 6}) + LaurentPoly::monomial({0, 9}));
    CHECK(inflate(xi(5, 1), 1) == xi(5, 1));
    CHECK_THROWS_AS(inflate(xi(2, 1), 0), std::invalid_argument);
}

TEST_CASE("homogenize and dehomogenize invert each other") {
    CHECK(homogenize(xi(3, 1), 2) == xi(3, 2));
    for (int d = 1; d <= 6; ++d)
        CHECK(dehomogenize(homogenize(xi(d, 1), d + 2)) == xi(d, 1));
    CHECK_THROWS_AS(homogenize(xi(3, 1), 1), std::invalid_argument);
}

TEST_CASE("support queries") {
    LaurentPoly f = mono2(2, 0) + mono2(0, 5, Rational(3));
    CHECK(min_exponent(f, 0) == 0);
    CHECK(max_exponent(f, 0) == 2);
    CHECK(min_exponent(f, 1) == 0);
    CHECK(max_exponent(f, 1) == 5);
    CHECK(total_degree_range(f) == std::pair<int, int>{2, 5});
    CHECK(total_degree_range(xi(4, 2)) == std::pair<int, int>{3, 3});
    CHECK_THROWS_AS(min_exponent(LaurentPoly(2), 0), EmptySupportError);
    CHECK_THROWS_AS(total_degree_range(LaurentPoly(1)), EmptySupportError);
    CHECK(is_nonnegative(f));
    CHECK_FALSE(is_nonnegative(f - mono2(9, 9)));
}

TEST_CASE("printing") {
    CHECK(LaurentPoly(2).str() == "0");
    CHECK(xi(2, 2).str() == "u + t"); // ascending t-exponent
    CHECK((mono2(2, 0, Rational(-3)) + mono2(0, 0)).str() == "1 - 3*t^2");
    CHECK(mono2(-1, 1).str() == "t^-1*u");
    CHECK(LaurentPoly::constant(1, rational_from_string("5/2")).str() == "5/2");
}

} // TEST_SUITE
