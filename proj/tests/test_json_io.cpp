#include <doctest.h>

#include <stdexcept>

#include "betticone/cone2.hpp"
#include "betticone/json_io.hpp"
#include "betticone/realize2.hpp"
#include "betticone/trigraded.hpp"

using namespace betticone;

TEST_SUITE("json_io") {

TEST_CASE("polynomial round trip keeps exact fractions") {
    LaurentPoly f(2);
    f.add_term({-1, 3}, rational_from_string("22/7"));
    f.add_term({0, 0}, Rational(-4));
    nlohmann::json j = to_json(f);
    CHECK(j["nvars"] == 2);
    CHECK(j["terms"].size() == 2);
    CHECK(j["terms"][0]["coef"] == "-4");
    CHECK(j["terms"][1]["coef"] == "22/7");
    CHECK(poly_from_json(j) == f);

    CHECK(poly_from_json(to_json(xi(5, 2))) == xi(5, 2));
    CHECK(poly_from_json(to_json(LaurentPoly(1))) == LaurentPoly(1));
}

TEST_CASE("diagram round trip") {
    BettiDiagram d = ray_diagram(OrderIdeal({{0, 0}}), 2, 3);
    nlohmann::json j = to_json(d);
    CHECK(j["nvars"] == 2);
    CHECK(j["length"] == 2);
    CHECK(diagram_from_json(j) == d);

    BettiDiagram tri = cyclic_twist_combination();
    CHECK(diagram_from_json(to_json(tri)) == tri);

    // fractional multiplicities survive
    BettiDiagram half(2, 1);
    half.add(0, {0, 0}, rational_from_string("1/2"));
    CHECK(diagram_from_json(to_json(half)) == half);
}

TEST_CASE("decomposition round trip") {
    LaurentPoly a = xi(3, 1) + inflate(xi(3, 1), 2);
    LaurentPoly b = xi(2, 1) + inflate(xi(2, 1), 3);
    Decomposition dec = decompose(a, b, 3, 2, 1);
    nlohmann::json j = to_json(dec);
    CHECK(j["p"] == 3);
    CHECK(j["q"] == 2);
    CHECK(j["m"] == 1);
    Decomposition back = decomposition_from_json(j);
    CHECK(back.p == dec.p);
    CHECK(back.terms.size() == dec.terms.size());
    for (std::size_t k = 0; k < dec.terms.size(); ++k) {
        CHECK(back.terms[k].ideal == dec.terms[k].ideal);
        CHECK(back.terms[k].shift == dec.terms[k].shift);
        CHECK(back.terms[k].gamma == dec.terms[k].gamma);
    }
    auto [ra, rb] = resum(back);
    CHECK(ra == a);
    CHECK(rb == b);
}

TEST_CASE("matrix round trip recomputes forced monomials") {
    auto cert = realize(extremal_rays(2, 3)[1].triple, 0);
    nlohmann::json j = to_json(cert.alpha);
    CHECK(j["rows"].size() == 3);
    CHECK(j["cols"].size() == 5);
    GradedMatrix back = matrix_from_json(j);
    CHECK(back == cert.alpha);
    CHECK(matrix_from_json(to_json(cert.beta)) == cert.beta);
}

TEST_CASE("certificate serialization carries all checks") {
    auto cert = realize(extremal_rays(2, 3)[0].triple, 5);
    nlohmann::json j = to_json(cert);
    CHECK(j["seed"] == 5);
    CHECK(j["retries"] == cert.retries);
    CHECK(j["checks"]["composition_zero"] == true);
    CHECK(j["checks"]["exactness_box"] == true);
    CHECK(j["checks"].contains("alpha_minor_y"));
    CHECK(j["checks"].contains("alpha_minor_x"));
    CHECK(j["checks"].contains("beta_minor_y"));
    CHECK(j["checks"].contains("beta_minor_x"));
    CHECK(matrix_from_json(j["alpha"]) == cert.alpha);
    CHECK(matrix_from_json(j["beta"]) == cert.beta);
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS(poly_from_json(nlohmann::json::object()));
    // arity mismatch between nvars and an exponent vector
    nlohmann::json bad = {{"nvars", 1},
                          {"terms", nlohmann::json::array()}};
    bad["terms"].push_back({{"exp", {0, 0}}, {"coef", "1"}});
    CHECK_THROWS_AS(poly_from_json(bad), std::invalid_argument);
    CHECK_THROWS(diagram_from_json(nlohmann::json::object()));
    CHECK_THROWS(decomposition_from_json(nlohmann::json::object()));
    CHECK_THROWS(matrix_from_json(nlohmann::json::object()));
    // malformed fraction strings
    nlohmann::json badfrac = to_json(LaurentPoly::monomial({1}));
    badfrac["terms"][0]["coef"] = "1/0";
    CHECK_THROWS_AS(poly_from_json(badfrac), std::invalid_argument);
}

} // TEST_SUITE
