#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "betticone/cone2.hpp"
#include "betticone/diagram.hpp"
#include "betticone/errors.hpp"

using namespace betticone;

namespace {

// Duality oracle, straight from the definition.
std::vector<int> conjugate_by_counting(const std::vector<int>& lambda,
                                       std::size_t len) {
    std::vector<int> mu(len, 0);
    for (std::size_t i = 0; i < len; ++i)
        for (int l : lambda)
            if (l > static_cast<int>(i)) ++mu[i];
    return mu;
}

LaurentPoly shift1(const LaurentPoly& f, int c) {
    LaurentPoly out(1);
    for (const auto& [deg, v] : f.terms()) out.add_term({deg[0] + c}, v);
    return out;
}

const std::vector<std::pair<int, int>> coprime_grid = [] {
    std::vector<std::pair<int, int>> out;
    for (int p = 2; p <= 7; ++p)
        for (int q = 2; q <= 7; ++q)
            if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    return out;
}();

} // namespace

TEST_SUITE("cone2") {

TEST_CASE("region points") {
    CHECK(region_points(3, 2) ==
          std::vector<std::array<int, 2>>{{0, 0}});
    CHECK(region_points(1, 5).empty());
    CHECK(region_points(5, 1).empty());
    CHECK(region_points(5, 2) ==
          std::vector<std::array<int, 2>>{{0, 0}, {0, 1}});
    // brute force oracle over a box
    for (auto [p, q] : coprime_grid) {
        auto pts = region_points(p, q);
        for (int x = 0; x <= p * q; ++x)
            for (int y = 0; y <= p * q; ++y) {
                bool inside = p * x + q * y < (p - 1) * (q - 1);
                bool listed =
                    std::find(pts.begin(), pts.end(),
                              std::array<int, 2>{x, y}) != pts.end();
                CHECK(inside == listed);
            }
    }
}

TEST_CASE("order ideal validation") {
    CHECK_NOTHROW(OrderIdeal({{0, 0}, {1, 0}, {0, 1}}));
    CHECK_THROWS_AS(OrderIdeal({{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(OrderIdeal({{0, 0}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(OrderIdeal({{0, -1}}), std::invalid_argument);
    CHECK(OrderIdeal().empty());
}

TEST_CASE("order ideal enumeration") {
    auto i32 = order_ideals(3, 2);
    REQUIRE(i32.size() == 2);
    CHECK(i32[0].empty());
    CHECK(i32[1] == OrderIdeal({{0, 0}}));

    CHECK(order_ideals(2, 3).size() == 2);

    auto i52 = order_ideals(5, 2);
    REQUIRE(i52.size() == 3);
    CHECK(i52[0].empty());
    CHECK(i52[1] == OrderIdeal({{0, 0}}));
    CHECK(i52[2] == OrderIdeal({{0, 0}, {0, 1}}));

    CHECK(order_ideals(1, 1).size() == 1);
    CHECK_THROWS_AS(order_ideals(2, 4), std::invalid_argument);

    // every enumerated set is downward closed and inside the region, and
    // the list is duplicate free
    for (auto [p, q] : coprime_grid) {
        auto ideals = order_ideals(p, q);
        for (std::size_t a = 1; a < ideals.size(); ++a)
            CHECK(ideals[a - 1] < ideals[a]);
        auto region = region_points(p, q);
        CHECK(ideals.back().points() == region);
    }
}

TEST_CASE("ideal counts match the antichain oracle") {
    // independent count: enumerate all subsets of the region for small
    // regions and keep the downward closed ones
    for (auto [p, q] : coprime_grid) {
        auto region = region_points(p, q);
        if (region.size() > 12) continue;
        std::size_t count = 0;
        for (std::size_t mask = 0; mask < (1u << region.size()); ++mask) {
            std::vector<std::array<int, 2>> pts;
            for (std::size_t b = 0; b < region.size(); ++b)
                if (mask & (1u << b)) pts.push_back(region[b]);
            try {
                OrderIdeal t(pts);
                ++count;
            } catch (const std::invalid_argument&) {
            }
        }
        CHECK(order_ideals(p, q).size() == count);
    }
}

TEST_CASE("partitions of an ideal") {
    auto empty = partitions_of(OrderIdeal(), 3, 2);
    CHECK(empty.lambda == std::vector<int>{0, 0, 0});
    CHECK(empty.mu == std::vector<int>{0, 0});

    auto maximal = partitions_of(OrderIdeal({{0, 0}}), 3, 2);
    CHECK(maximal.lambda == std::vector<int>{1, 0, 0});
    CHECK(maximal.mu == std::vector<int>{1, 0});

    auto tall = partitions_of(OrderIdeal({{0, 0}, {0, 1}}), 5, 2);
    CHECK(tall.lambda == std::vector<int>{1, 1, 0, 0, 0});
    CHECK(tall.mu == std::vector<int>{2, 0});

    auto wide = partitions_of(OrderIdeal({{0, 0}, {1, 0}}), 2, 5);
    CHECK(wide.lambda == std::vector<int>{2, 0});
    CHECK(wide.mu == std::vector<int>{1, 1, 0, 0, 0});

    CHECK_THROWS_AS(partitions_of(OrderIdeal({{0, 0}}), 1, 1),
                    std::invalid_argument);

    // duality both ways, against the counting oracle
    for (auto [p, q] : coprime_grid)
        for (const auto& t : order_ideals(p, q)) {
            auto [lambda, mu] = partitions_of(t, p, q);
            CHECK(mu == conjugate_by_counting(lambda, mu.size()));
            CHECK(lambda == conjugate_by_counting(mu, lambda.size()));
        }
}

TEST_CASE("ray polynomials of the named ideals") {
    auto empty = ray_polynomials(OrderIdeal(), 3, 2);
    CHECK(empty.a == inflate(xi(3, 1), 2));
    CHECK(empty.b == inflate(xi(2, 1), 3));

    auto maximal = ray_polynomials(OrderIdeal({{0, 0}}), 3, 2);
    CHECK(maximal.a == xi(3, 1));
    CHECK(maximal.b == xi(2, 1));

    // smallest and largest ideal specialize to the two closed forms
    for (auto [p, q] : coprime_grid) {
        auto bottom = ray_polynomials(OrderIdeal(), p, q);
        CHECK(bottom.a == inflate(xi(p, 1), q));
        CHECK(bottom.b == inflate(xi(q, 1), p));
        auto top = ray_polynomials(OrderIdeal(region_points(p, q)), p, q);
        CHECK(top.a == xi(p, 1));
        CHECK(top.b == xi(q, 1));
    }
}

TEST_CASE("ray identity over the coprime grid") {
    for (auto [p, q] : coprime_grid)
        for (const auto& t : order_ideals(p, q)) {
            auto [a, b] = ray_polynomials(t, p, q);
            CHECK(a * xi(q, 1) == b * xi(p, 1));
            CHECK(a.term_count() == static_cast<std::size_t>(p));
            CHECK(b.term_count() == static_cast<std::size_t>(q));
            for (const auto& [deg, c] : a.terms()) {
                CHECK(c == 1);
                CHECK(deg[0] >= 0);
            }
            CHECK(a.coeff({0}) == 1);
            CHECK(b.coeff({0}) == 1);
        }
}

TEST_CASE("canonical triples for (2,3) match their expected bidegrees") {
    auto rays = extremal_rays(2, 3);
    REQUIRE(rays.size() == 2);
    // list is sorted by ideal size: empty ideal first
    CHECK(rays[0].is_monomial_quotient);
    CHECK_FALSE(rays[0].is_equivariant);
    CHECK(rays[1].is_equivariant);

    CHECK(rays[1].triple[0] == xi(3, 2));
    CHECK(rays[1].triple[1] == xi(5, 2));
    CHECK(rays[1].triple[2] == LaurentPoly::monomial({4, 3}) +
                                   LaurentPoly::monomial({3, 4}));

    CHECK(rays[0].triple[0] == inflate(xi(3, 2), 2));
    LaurentPoly b1 = LaurentPoly::monomial({6, 0}) +
                     LaurentPoly::monomial({4, 2}) +
                     LaurentPoly::monomial({3, 3}) +
                     LaurentPoly::monomial({2, 4}) +
                     LaurentPoly::monomial({0, 6});
    CHECK(rays[0].triple[1] == b1);
    CHECK(rays[0].triple[2] == LaurentPoly::monomial({6, 3}) +
                                   LaurentPoly::monomial({3, 6}));
}

TEST_CASE("ray diagrams satisfy the cone invariants") {
    for (auto [e1, e2] :
         std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {2, 5}, {4, 6}}) {
        auto [m, p, q] = pq_split(e1, e2);
        for (const auto& t : order_ideals(p, q)) {
            BettiDiagram d = ray_diagram(t, e1, e2);
            CHECK(hk_check(d).empty());
            CHECK(is_nonnegative(d));
            CHECK(membership_L2(d, e1, e2));
            auto pt = pure_type(d);
            REQUIRE(pt.has_value());
            CHECK(pt->e == std::vector<int>{e1, e2});
        }
    }
}

TEST_CASE("inflation consistency for m > 1") {
    ExtremalRay base = extremal_ray(OrderIdeal(), 3, 2, 1);
    ExtremalRay doubled = extremal_ray(OrderIdeal(), 3, 2, 2);
    CHECK(doubled.a == inflate(base.a, 2));
    CHECK(doubled.b == inflate(base.b, 2));
    CHECK(doubled.triple[0] == inflate(base.triple[0], 2));
}

TEST_CASE("degenerate parameters give the single koszul-like ray") {
    auto rays = extremal_rays(2, 2);
    REQUIRE(rays.size() == 1);
    CHECK(rays[0].is_monomial_quotient);
    CHECK(rays[0].is_equivariant);
    BettiDiagram d = ray_diagram(OrderIdeal(), 2, 2);
    CHECK(hk_check(d).empty());
    CHECK(d.mult(0, {0, 0}) == 1);
    CHECK(d.mult(1, {2, 0}) == 1);
    CHECK(d.mult(1, {0, 2}) == 1);
    CHECK(d.mult(2, {2, 2}) == 1);
}

TEST_CASE("min extract splits off the minimal part") {
    // every extremal pair is already minimal
    for (auto [p, q] : coprime_grid)
        for (const auto& t : order_ideals(p, q)) {
            auto [a, b] = ray_polynomials(t, p, q);
            MinExtract ma = min_extract(a, p, q);
            CHECK(ma.a_min == a);
            CHECK(ma.a_plus.is_zero());
            auto [lambda, mu] = partitions_of(t, p, q);
            for (int j = 0; j < p; ++j) {
                REQUIRE(ma.lambda[j].has_value());
                CHECK(*ma.lambda[j] == lambda[j]);
            }
        }

    // frozen oracle: two overlapping rays
    LaurentPoly a = xi(3, 1) + inflate(xi(3, 1), 2);
    MinExtract ma = min_extract(a, 3, 2);
    LaurentPoly a_min(1);
    a_min.add_term({0}, 2);
    a_min.add_term({1}, 1);
    a_min.add_term({2}, 2);
    CHECK(ma.a_min == a_min);
    CHECK(ma.a_plus == LaurentPoly::monomial({4}));
    CHECK(*ma.lambda[0] == 1);
    CHECK(*ma.lambda[1] == 0);
    CHECK(*ma.lambda[2] == 0);

    // single monomial keeps itself
    MinExtract ms = min_extract(LaurentPoly::monomial({5}), 3, 2);
    CHECK(ms.a_min == LaurentPoly::monomial({5}));
    CHECK(ms.a_plus.is_zero());
    CHECK_FALSE(ms.lambda[0].has_value());
    CHECK(*ms.lambda[1] == -1);
    CHECK_FALSE(ms.lambda[2].has_value());

    CHECK_THROWS_AS(min_extract(LaurentPoly(1), 3, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(min_extract(-xi(2, 1), 3, 2), std::invalid_argument);
}

TEST_CASE("decompose returns extremal input unchanged") {
    for (auto [p, q] : coprime_grid)
        for (const auto& t : order_ideals(p, q)) {
            auto [a, b] = ray_polynomials(t, p, q);
            Decomposition dec = decompose(a, b, p, q, 1);
            REQUIRE(dec.terms.size() == 1);
            CHECK(dec.terms[0].ideal == t);
            CHECK(dec.terms[0].shift == 0);
            CHECK(dec.terms[0].gamma == 1);
        }
}

TEST_CASE("decompose recovers a shifted two ray sum") {
    LaurentPoly a = xi(3, 1) + shift1(inflate(xi(3, 1), 2), 1);
    LaurentPoly b = xi(2, 1) + shift1(inflate(xi(2, 1), 3), 1);
    Decomposition dec = decompose(a, b, 3, 2, 1);
    CHECK(dec.terms.size() == 2);
    auto [ra, rb] = resum(dec);
    CHECK(ra == a);
    CHECK(rb == b);
    for (const auto& term : dec.terms) CHECK(term.gamma > 0);
}

TEST_CASE("decompose round trips seeded random combinations") {
    std::mt19937_64 gen(12345);
    for (auto [p, q] :
         std::vector<std::pair<int, int>>{{3, 2}, {4, 3}, {5, 2}, {5, 3}}) {
        auto ideals = order_ideals(p, q);
        for (int m : {1, 2})
            for (int trial = 0; trial < 5; ++trial) {
                LaurentPoly a(1), b(1);
                int nterms = 1 + static_cast<int>(gen() % 5);
                for (int t = 0; t < nterms; ++t) {
                    const auto& ideal = ideals[gen() % ideals.size()];
                    int shift = static_cast<int>(gen() % 7);
                    Rational gamma(static_cast<long>(1 + gen() % 4));
                    auto [at, bt] = ray_polynomials(ideal, p, q);
                    a += gamma * shift1(inflate(at, m), shift);
                    b += gamma * shift1(inflate(bt, m), shift);
                }
                Decomposition dec = decompose(a, b, p, q, m);
                auto [ra, rb] = resum(dec);
                CHECK(ra == a);
                CHECK(rb == b);
                for (const auto& term : dec.terms) {
                    CHECK(term.gamma > 0);
                    CHECK_NOTHROW(partitions_of(term.ideal, p, q));
                }
            }
    }
}

TEST_CASE("decompose accepts rational weights") {
    auto [a1, b1] = ray_polynomials(OrderIdeal(), 3, 2);
    auto [a2, b2] = ray_polynomials(OrderIdeal({{0, 0}}), 3, 2);
    Rational g = rational_from_string("2/3");
    LaurentPoly a = g * a1 + a2;
    LaurentPoly b = g * b1 + b2;
    Decomposition dec = decompose(a, b, 3, 2, 1);
    auto [ra, rb] = resum(dec);
    CHECK(ra == a);
    CHECK(rb == b);
}

TEST_CASE("decompose rejects pairs outside the cone") {
    LaurentPoly one = LaurentPoly::constant(1, 1);
    CHECK_THROWS_AS(decompose(one, one, 3, 2, 1), NotInConeError);
    CHECK_FALSE(verify_pair(one, one, 3, 2, 1));
    LaurentPoly neg = xi(3, 1) - LaurentPoly::monomial({0}, Rational(2));
    CHECK_THROWS_AS(decompose(neg, xi(2, 1), 3, 2, 1), NotInConeError);
}

TEST_CASE("verify pair on the named examples") {
    CHECK(verify_pair(inflate(xi(3, 1), 2), inflate(xi(2, 1), 3), 3, 2, 1));
    CHECK(verify_pair(xi(3, 1), xi(2, 1), 3, 2, 1));
    CHECK(verify_pair(LaurentPoly(1), LaurentPoly(1), 3, 2, 1));
    CHECK_FALSE(verify_pair(xi(3, 1), xi(2, 1), 3, 2, 2));
}

TEST_CASE("difference table of a product with xi") {
    HoppDelta h1 = hopp_delta(LaurentPoly::constant(1, 1), 2);
    CHECK(h1.product == xi(2, 1));
    CHECK(h1.differences_match);

    LaurentPoly p = LaurentPoly::constant(1, 1) + LaurentPoly::monomial({3});
    HoppDelta h2 = hopp_delta(p, 2);
    LaurentPoly expected(1);
    expected.add_term({0}, 1);
    expected.add_term({1}, 1);
    expected.add_term({3}, 1);
    expected.add_term({4}, 1);
    CHECK(h2.product == expected);
    CHECK(h2.differences_match);

    HoppDelta h3 = hopp_delta(inflate(xi(3, 1), 2), 2);
    CHECK(h3.product == xi(6, 1));
    CHECK(h3.differences_match);
}

} // TEST_SUITE
