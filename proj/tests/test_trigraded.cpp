#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "betticone/cone2.hpp"
#include "betticone/diagram.hpp"
#include "betticone/trigraded.hpp"

using namespace betticone;

namespace {

std::vector<MultiDegree> degree_list(const BettiDiagram& d, int i) {
    std::vector<MultiDegree> out;
    for (const auto& [deg, c] : d.generators(i)) out.push_back(deg);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MultiDegree> sorted(std::vector<MultiDegree> v) {
    std::sort(v.begin(), v.end());
    return v;
}

Rational total_rank(const BettiDiagram& d, int i) {
    Rational r(0);
    for (const auto& [deg, c] : d.generators(i)) r += c;
    return r;
}

} // namespace

TEST_SUITE("trigraded") {

TEST_CASE("small tableau characters") {
    LaurentPoly one_box = ssyt_character({1, 0, 0}, 3);
    CHECK(one_box == LaurentPoly::monomial({1, 0, 0}) +
                         LaurentPoly::monomial({0, 1, 0}) +
                         LaurentPoly::monomial({0, 0, 1}));

    LaurentPoly square = ssyt_character({2, 2, 0}, 3);
    CHECK(square.term_count() == 6);
    for (auto deg : std::vector<MultiDegree>{
             {2, 2, 0}, {2, 0, 2}, {0, 2, 2}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}})
        CHECK(square.coeff(deg) == 1);

    CHECK(ssyt_character({0, 0, 0}, 3) ==
          LaurentPoly::constant(3, 1));
    CHECK(ssyt_character({}, 2) == LaurentPoly::constant(2, 1));

    // a column of height two in two variables has one filling
    CHECK(ssyt_character({1, 1}, 2) == LaurentPoly::monomial({1, 1}));

    CHECK_THROWS_AS(ssyt_character({1, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(ssyt_character({-1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(ssyt_character({1, 1, 1, 1}, 3), std::invalid_argument);
}

TEST_CASE("single row characters match the splitting polynomials") {
    for (int e2 = 1; e2 <= 6; ++e2)
        CHECK(ssyt_character({e2 - 1, 0}, 2) == xi(e2, 2));
}

TEST_CASE("tableau counts match the dimension formula") {
    for (int s1 = 0; s1 <= 6; ++s1)
        for (int s2 = 0; s2 <= s1; ++s2)
            for (int s3 = 0; s3 <= s2; ++s3) {
                if (s1 + s2 + s3 > 6) continue;
                Shape shape{s1, s2, s3};
                LaurentPoly ch = ssyt_character(shape, 3);
                CHECK(ch.eval_ones() == Rational(weyl_dimension(shape, 3)));
                for (const auto& [deg, c] : ch.terms())
                    CHECK(total_degree(deg) == s1 + s2 + s3);
            }
}

TEST_CASE("shape sequences of pure resolutions") {
    auto s121 = equivariant_shapes({1, 2, 1}, 3);
    REQUIRE(s121.size() == 4);
    CHECK(s121[0] == Shape{1, 0, 0});
    CHECK(s121[1] == Shape{2, 0, 0});
    CHECK(s121[2] == Shape{2, 2, 0});
    CHECK(s121[3] == Shape{2, 2, 1});

    auto s23 = equivariant_shapes({2, 3}, 2);
    REQUIRE(s23.size() == 3);
    CHECK(s23[0] == Shape{2, 0});
    CHECK(s23[1] == Shape{4, 0});
    CHECK(s23[2] == Shape{4, 3});

    auto koszul = equivariant_shapes({1, 1, 1}, 3);
    CHECK(koszul == std::vector<Shape>{
                        {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}});

    CHECK_THROWS_AS(equivariant_shapes({1, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(equivariant_shapes({1, 0, 1}, 3), std::invalid_argument);
}

TEST_CASE("the rank six resolution diagram") {
    BettiDiagram d = equivariant_diagram({1, 2, 1}, 3);
    CHECK(total_rank(d, 0) == 3);
    CHECK(total_rank(d, 1) == 6);
    CHECK(total_rank(d, 2) == 6);
    CHECK(total_rank(d, 3) == 3);

    CHECK(degree_list(d, 0) == sorted({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(degree_list(d, 1) ==
          sorted({{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1},
                  {0, 0, 2}}));
    CHECK(degree_list(d, 2) ==
          sorted({{2, 2, 0}, {2, 0, 2}, {0, 2, 2}, {2, 1, 1}, {1, 2, 1},
                  {1, 1, 2}}));
    CHECK(degree_list(d, 3) == sorted({{2, 2, 1}, {2, 1, 2}, {1, 2, 2}}));
    for (const auto& [key, c] : d.entries()) CHECK(c == 1);

    CHECK(hk_check(d).empty());
    auto pt = pure_type(d);
    REQUIRE(pt.has_value());
    CHECK(pt->d == std::vector<int>{1, 2, 4, 5});
    CHECK(pt->e == std::vector<int>{1, 2, 1});
}

TEST_CASE("two variable diagrams agree with the ray construction") {
    BettiDiagram eq = equivariant_diagram({2, 3}, 2);
    OrderIdeal maximal({{0, 0}});
    CHECK(eq == ray_diagram(maximal, 2, 3));
    CHECK(hk_check(eq).empty());

    BettiDiagram koszul2 = equivariant_diagram({1, 1}, 2);
    CHECK(total_rank(koszul2, 0) == 1);
    CHECK(total_rank(koszul2, 1) == 2);
    CHECK(total_rank(koszul2, 2) == 1);
    CHECK(hk_check(koszul2).empty());
}

TEST_CASE("koszul type diagram in three variables") {
    BettiDiagram d = equivariant_diagram({1, 1, 1}, 3);
    CHECK(total_rank(d, 0) == 1);
    CHECK(total_rank(d, 1) == 3);
    CHECK(total_rank(d, 2) == 3);
    CHECK(total_rank(d, 3) == 1);
    CHECK(hk_check(d).empty());
    for (int k = 1; k <= 3; ++k)
        CHECK(collapse_obstruction(d, k).empty());
}

TEST_CASE("resolutions have no collapse obstruction") {
    BettiDiagram d = equivariant_diagram({1, 2, 1}, 3);
    for (int k = 1; k <= 3; ++k)
        CHECK(collapse_obstruction(d, k).empty());
    CHECK_THROWS_AS(collapse_obstruction(d, 0), std::invalid_argument);
    CHECK_THROWS_AS(collapse_obstruction(d, 4), std::invalid_argument);

    BettiDiagram neg =
        combine({{Rational(-1), {0, 0, 0}}}, d);
    CHECK_THROWS_AS(collapse_obstruction(neg, 1), std::invalid_argument);
}

TEST_CASE("cyclic combination is virtually consistent but obstructed") {
    BettiDiagram c = cyclic_twist_combination();
    CHECK(is_nonnegative(c));
    CHECK(hk_check(c).empty());
    CHECK(total_rank(c, 0) == 6);

    CHECK(degree_list(c, 0) ==
          sorted({{3, 1, 0}, {2, 2, 0}, {0, 3, 1}, {0, 2, 2}, {2, 0, 2},
                  {1, 0, 3}}));

    CHECK(collapse_obstruction(c, 3) ==
          std::vector<MultiDegree>{{3, 1, 0}});
    CHECK(collapse_obstruction(c, 1) ==
          std::vector<MultiDegree>{{0, 3, 1}});
    CHECK(collapse_obstruction(c, 2) ==
          std::vector<MultiDegree>{{1, 0, 3}});
}

TEST_CASE("symmetric combination survives every direction") {
    BettiDiagram a = symmetric_twist_combination();
    CHECK(is_nonnegative(a));
    CHECK(hk_check(a).empty());
    CHECK(total_rank(a, 0) == 15);
    for (int k = 1; k <= 3; ++k)
        CHECK(collapse_obstruction(a, k).empty());
}

} // TEST_SUITE
