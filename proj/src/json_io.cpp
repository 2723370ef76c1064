#include "betticone/json_io.hpp"

#include <stdexcept>

namespace betticone {

namespace {

MultiDegree degree_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("degree must be an array");
    MultiDegree deg;
    for (const auto& x : j) deg.push_back(x.get<int>());
    return deg;
}

} // namespace

nlohmann::json to_json(const LaurentPoly& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [deg, c] : f.terms())
        terms.push_back({{"exp", deg}, {"coef", rational_to_string(c)}});
    return {{"nvars", f.nvars()}, {"terms", std::move(terms)}};
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
    LaurentPoly f(j.at("nvars").get<int>());
    for (const auto& term : j.at("terms"))
        f.add_term(degree_from_json(term.at("exp")),
                   rational_from_string(term.at("coef").get<std::string>()));
    return f;
}

nlohmann::json to_json(const BettiDiagram& d) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, c] : d.entries())
        entries.push_back({{"h", key.first},
                           {"deg", key.second},
                           {"mult", rational_to_string(c)}});
    return {{"nvars", d.nvars()},
            {"length", d.length()},
            {"entries", std::move(entries)}};
}

BettiDiagram diagram_from_json(const nlohmann::json& j) {
    BettiDiagram d(j.at("nvars").get<int>(), j.at("length").get<int>());
    for (const auto& entry : j.at("entries"))
        d.add(entry.at("h").get<int>(), degree_from_json(entry.at("deg")),
              rational_from_string(entry.at("mult").get<std::string>()));
    return d;
}

nlohmann::json to_json(const Decomposition& dec) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : dec.terms) {
        nlohmann::json ideal = nlohmann::json::array();
        for (const auto& [x, y] : t.ideal.points())
            ideal.push_back({x, y});
        terms.push_back({{"ideal", std::move(ideal)},
                         {"shift", t.shift},
                         {"gamma", rational_to_string(t.gamma)}});
    }
    return {{"p", dec.p},
            {"q", dec.q},
            {"m", dec.m},
            {"terms", std::move(terms)}};
}

Decomposition decomposition_from_json(const nlohmann::json& j) {
    Decomposition dec{j.at("p").get<int>(), j.at("q").get<int>(),
                      j.at("m").get<int>(), {}};
    for (const auto& term : j.at("terms")) {
        std::vector<std::array<int, 2>> pts;
        for (const auto& pt : term.at("ideal"))
            pts.push_back({pt.at(0).get<int>(), pt.at(1).get<int>()});
        dec.terms.push_back(
            {OrderIdeal(std::move(pts)), term.at("shift").get<int>(),
             rational_from_string(term.at("gamma").get<std::string>())});
    }
    return dec;
}

nlohmann::json to_json(const GradedMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [pos, e] : m.entries())
        entries.push_back({{"i", pos.first},
                           {"j", pos.second},
                           {"coef", rational_to_string(e.scalar)},
                           {"mono", e.mono}});
    return {{"rows", m.row_degs()},
            {"cols", m.col_degs()},
            {"entries", std::move(entries)}};
}

GradedMatrix matrix_from_json(const nlohmann::json& j) {
    std::vector<MultiDegree> rows, cols;
    for (const auto& deg : j.at("rows")) rows.push_back(degree_from_json(deg));
    for (const auto& deg : j.at("cols")) cols.push_back(degree_from_json(deg));
    GradedMatrix m(std::move(rows), std::move(cols));
    for (const auto& entry : j.at("entries"))
        m.set(entry.at("i").get<int>(), entry.at("j").get<int>(),
              rational_from_string(entry.at("coef").get<std::string>()));
    return m;
}

namespace {

nlohmann::json witness_json(const MinorWitness& w) {
    return {{"columns", w.columns},
            {"scalar", rational_to_string(w.scalar)},
            {"mono", w.mono}};
}

} // namespace

nlohmann::json to_json(const RealizationCertificate& c) {
    return {{"seed", c.seed},
            {"retries", c.retries},
            {"alpha", to_json(c.alpha)},
            {"beta", to_json(c.beta)},
            {"checks",
             {{"composition_zero", c.checks.composition_zero},
              {"alpha_minor_y", witness_json(c.checks.alpha_minors.pure_y)},
              {"alpha_minor_x", witness_json(c.checks.alpha_minors.pure_x)},
              {"beta_minor_y", witness_json(c.checks.beta_minors.pure_y)},
              {"beta_minor_x", witness_json(c.checks.beta_minors.pure_x)},
              {"exactness_box", c.checks.exactness_box}}}};
}

} // namespace betticone
