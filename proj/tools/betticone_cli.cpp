#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "betticone/cone2.hpp"
#include "betticone/diagram.hpp"
#include "betticone/errors.hpp"
#include "betticone/json_io.hpp"
#include "betticone/multipoly.hpp"
#include "betticone/realize2.hpp"
#include "betticone/trigraded.hpp"

using namespace betticone;

namespace {

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

std::string int_list(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

nlohmann::json ray_json(const ExtremalRay& r) {
    auto [lambda, mu] = partitions_of(r.ideal, r.p, r.q);
    nlohmann::json ideal = nlohmann::json::array();
    for (const auto& [x, y] : r.ideal.points()) ideal.push_back({x, y});
    return {{"ideal", std::move(ideal)},
            {"lambda", lambda},
            {"mu", mu},
            {"a", to_json(r.a)},
            {"b", to_json(r.b)},
            {"triple",
             {to_json(r.triple[0]), to_json(r.triple[1]), to_json(r.triple[2])}},
            {"monomial_quotient", r.is_monomial_quotient},
            {"equivariant", r.is_equivariant}};
}

void print_ray(const ExtremalRay& r, std::size_t idx) {
    auto [lambda, mu] = partitions_of(r.ideal, r.p, r.q);
    std::cout << "ray " << idx << ": T = " << r.ideal.str();
    if (r.is_monomial_quotient) std::cout << "  [monomial-quotient / BS]";
    if (r.is_equivariant) std::cout << "  [equivariant]";
    std::cout << "\n  lambda = " << int_list(lambda)
              << "  mu = " << int_list(mu) << "\n";
    std::cout << "  A = " << r.a.str() << "\n";
    std::cout << "  B = " << r.b.str() << "\n";
    std::cout << "  B0 = " << r.triple[0].str() << "\n";
    std::cout << "  B1 = " << r.triple[1].str() << "\n";
    std::cout << "  B2 = " << r.triple[2].str() << "\n";
}

void print_matrix(const std::string& name, const GradedMatrix& m) {
    std::cout << name << " (" << m.nrows() << " x " << m.ncols() << "):\n";
    std::vector<std::vector<std::string>> cells(m.nrows());
    std::vector<std::size_t> width(m.ncols(), 0);
    for (int i = 0; i < m.nrows(); ++i)
        for (int j = 0; j < m.ncols(); ++j) {
            const auto* e = m.entry(i, j);
            std::string cell =
                e ? m.entry_poly(i, j).str({"x", "y"}) : std::string(".");
            width[j] = std::max(width[j], cell.size());
            cells[i].push_back(std::move(cell));
        }
    for (int i = 0; i < m.nrows(); ++i) {
        std::cout << "  " << degree_to_string(m.row_degs()[i]) << " |";
        for (int j = 0; j < m.ncols(); ++j) {
            std::cout << " " << cells[i][j];
            std::cout << std::string(width[j] - cells[i][j].size(), ' ');
        }
        std::cout << "\n";
    }
}

int cmd_rays(int e1, int e2, bool json_out) {
    auto [m, p, q] = pq_split(e1, e2);
    auto rays = extremal_rays(e1, e2);
    if (json_out) {
        nlohmann::json out = {{"e1", e1}, {"e2", e2}, {"m", m},
                              {"p", p},   {"q", q},
                              {"rays", nlohmann::json::array()}};
        for (const auto& r : rays) out["rays"].push_back(ray_json(r));
        emit(out);
    } else {
        std::cout << "e1=" << e1 << " e2=" << e2 << "  (m=" << m
                  << ", p=" << p << ", q=" << q << "): " << rays.size()
                  << " extremal rays\n";
        for (std::size_t i = 0; i < rays.size(); ++i) print_ray(rays[i], i);
    }
    return 0;
}

int cmd_decompose(const std::string& pair_path, int e1, int e2,
                  bool json_out) {
    nlohmann::json j = load_json(pair_path);
    LaurentPoly a = poly_from_json(j.at("a"));
    LaurentPoly b = poly_from_json(j.at("b"));
    auto [m, p, q] = pq_split(e1, e2);
    Decomposition dec = decompose(a, b, p, q, m);
    auto [ra, rb] = resum(dec);
    bool resum_ok = ra == a && rb == b;
    if (json_out) {
        nlohmann::json out = to_json(dec);
        out["resum_ok"] = resum_ok;
        emit(out);
    } else {
        std::cout << "p=" << p << " q=" << q << " m=" << m << ": "
                  << dec.terms.size() << " terms\n";
        for (std::size_t k = 0; k < dec.terms.size(); ++k)
            std::cout << "term " << k << ": T = " << dec.terms[k].ideal.str()
                      << ", shift " << dec.terms[k].shift << ", gamma "
                      << rational_to_string(dec.terms[k].gamma) << "\n";
        std::cout << "resum: " << (resum_ok ? "OK" : "MISMATCH") << "\n";
    }
    return resum_ok ? 0 : 1;
}

int cmd_check(const std::string& diagram_path, int e1, int e2,
              bool json_out) {
    BettiDiagram d = diagram_from_json(load_json(diagram_path));
    bool nonneg = is_nonnegative(d);
    auto violations = hk_check(d);
    std::optional<PureType> pt;
    if (!d.is_zero()) pt = pure_type(d);
    bool want_membership = e1 > 0 && e2 > 0;
    bool member = false;
    if (want_membership) member = membership_L2(d, e1, e2);
    bool ok = nonneg && violations.empty() && (!want_membership || member);

    if (json_out) {
        nlohmann::json vj = nlohmann::json::array();
        for (const auto& v : violations)
            vj.push_back({{"var", v.var},
                          {"fiber", v.fiber},
                          {"sum", rational_to_string(v.sum)}});
        nlohmann::json out = {{"nonnegative", nonneg},
                              {"hk_violations", std::move(vj)}};
        if (pt)
            out["pure"] = {{"d", pt->d}, {"e", pt->e}, {"m", pt->m},
                           {"p", pt->p}, {"q", pt->q}};
        else
            out["pure"] = nullptr;
        if (want_membership) out["membership"] = member;
        emit(out);
    } else {
        std::cout << "nonnegative: " << verdict(nonneg) << "\n";
        std::cout << "hk: " << verdict(violations.empty());
        if (!violations.empty()) {
            std::cout << " (" << violations.size() << " violations)";
            for (const auto& v : violations)
                std::cout << "\n  var " << v.var << ", fiber "
                          << degree_to_string(v.fiber) << ", sum "
                          << rational_to_string(v.sum);
        }
        std::cout << "\n";
        if (pt)
            std::cout << "pure: d = " << int_list(pt->d)
                      << ", e = " << int_list(pt->e) << "\n";
        else
            std::cout << "pure: "
                      << (d.is_zero() ? "zero diagram" : "mixed total degrees")
                      << "\n";
        if (want_membership)
            std::cout << "membership(e1=" << e1 << ", e2=" << e2
                      << "): " << verdict(member) << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_realize(int e1, int e2, const std::string& ideal_arg,
                std::uint64_t seed, const std::string& out_path,
                bool json_out) {
    auto [m, p, q] = pq_split(e1, e2);
    auto ideals = order_ideals(p, q);
    std::size_t idx;
    if (ideal_arg == "empty") {
        idx = 0;
    } else if (ideal_arg == "max") {
        idx = ideals.size() - 1;
    } else {
        std::size_t pos = 0;
        long v = std::stol(ideal_arg, &pos);
        if (pos != ideal_arg.size() || v < 0 ||
            v >= static_cast<long>(ideals.size()))
            throw std::invalid_argument("--ideal must be empty, max, or an "
                                        "index below " +
                                        std::to_string(ideals.size()));
        idx = static_cast<std::size_t>(v);
    }
    ExtremalRay ray = extremal_ray(ideals[idx], p, q, m);
    RealizationCertificate cert = realize(ray.triple, seed);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << to_json(cert).dump(2) << "\n";
    }
    if (json_out) {
        emit(to_json(cert));
    } else {
        std::cout << "e1=" << e1 << " e2=" << e2 << ", ideal " << idx
                  << " of " << ideals.size() << ": T = " << ideals[idx].str()
                  << "\n";
        std::cout << "seed: " << cert.seed << "  retries: " << cert.retries
                  << "\n";
        print_matrix("alpha", cert.alpha);
        print_matrix("beta", cert.beta);
        const auto& c = cert.checks;
        std::cout << "composition alpha*beta = 0: "
                  << verdict(c.composition_zero) << "\n";
        std::cout << "alpha minors: y-power "
                  << LaurentPoly::monomial(c.alpha_minors.pure_y.mono,
                                           c.alpha_minors.pure_y.scalar)
                         .str({"x", "y"})
                  << " on columns " << int_list(c.alpha_minors.pure_y.columns)
                  << ", x-power "
                  << LaurentPoly::monomial(c.alpha_minors.pure_x.mono,
                                           c.alpha_minors.pure_x.scalar)
                         .str({"x", "y"})
                  << " on columns " << int_list(c.alpha_minors.pure_x.columns)
                  << "\n";
        std::cout << "beta minors (dual view): y-power "
                  << LaurentPoly::monomial(c.beta_minors.pure_y.mono,
                                           c.beta_minors.pure_y.scalar)
                         .str({"x", "y"})
                  << ", x-power "
                  << LaurentPoly::monomial(c.beta_minors.pure_x.mono,
                                           c.beta_minors.pure_x.scalar)
                         .str({"x", "y"})
                  << "\n";
        std::cout << "degreewise exactness: " << verdict(c.exactness_box)
                  << "\n";
    }
    return 0;
}

std::vector<int> parse_int_csv(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

int cmd_equivariant(const std::string& e_csv, bool json_out) {
    std::vector<int> e = parse_int_csv(e_csv);
    int n = static_cast<int>(e.size());
    if (n < 2 || n > 3)
        throw std::invalid_argument("--e needs two or three entries");
    auto shapes = equivariant_shapes(e, n);
    BettiDiagram d = equivariant_diagram(e, n);
    bool hk_ok = hk_check(d).empty();
    if (json_out) {
        nlohmann::json out = {{"e", e},
                              {"n", n},
                              {"shapes", shapes},
                              {"diagram", to_json(d)},
                              {"hk_ok", hk_ok},
                              {"ranks", nlohmann::json::array()}};
        for (int i = 0; i <= n; ++i) {
            Rational r(0);
            for (const auto& [deg, c] : d.generators(i)) r += c;
            out["ranks"].push_back(rational_to_string(r));
        }
        emit(out);
    } else {
        std::cout << "pure equivariant diagram, e = " << int_list(e) << "\n";
        for (int i = 0; i <= n; ++i) {
            std::cout << "F" << i << "  shape " << int_list(shapes[i])
                      << ": ";
            for (const auto& [deg, c] : d.generators(i)) {
                std::cout << degree_to_string(deg);
                if (c != 1) std::cout << "x" << rational_to_string(c);
                std::cout << " ";
            }
            std::cout << "\n";
        }
        std::cout << "hk: " << verdict(hk_ok) << "\n";
    }
    return hk_ok ? 0 : 1;
}

nlohmann::json obstruction_json(const BettiDiagram& d) {
    nlohmann::json out = nlohmann::json::array();
    for (int k = 1; k <= d.nvars(); ++k)
        out.push_back(collapse_obstruction(d, k));
    return out;
}

int cmd_trigraded_demo(bool json_out) {
    BettiDiagram base = equivariant_diagram({1, 2, 1}, 3);
    BettiDiagram cand = cyclic_twist_combination();
    BettiDiagram sym = symmetric_twist_combination();

    bool base_ok = hk_check(base).empty();
    for (int k = 1; k <= 3; ++k)
        base_ok = base_ok && collapse_obstruction(base, k).empty();

    bool cand_nonneg = is_nonnegative(cand);
    bool cand_hk = hk_check(cand).empty();
    auto cand_dir3 = collapse_obstruction(cand, 3);
    bool cand_obstructed =
        std::find(cand_dir3.begin(), cand_dir3.end(),
                  MultiDegree{3, 1, 0}) != cand_dir3.end();

    bool sym_nonneg = is_nonnegative(sym);
    bool sym_hk = hk_check(sym).empty();
    bool sym_clear = true;
    for (int k = 1; k <= 3; ++k)
        sym_clear = sym_clear && collapse_obstruction(sym, k).empty();

    // The point of the demo: a nonnegative solution of every HK equation
    // that still cannot be the diagram of any module presentation.
    bool demo_ok = base_ok && cand_nonneg && cand_hk && cand_obstructed &&
                   sym_nonneg && sym_hk && sym_clear;

    if (json_out) {
        emit({{"base",
               {{"diagram", to_json(base)}, {"hk_ok", hk_check(base).empty()},
                {"obstructions", obstruction_json(base)}}},
              {"candidate",
               {{"diagram", to_json(cand)},
                {"nonnegative", cand_nonneg},
                {"hk_ok", cand_hk},
                {"obstructions", obstruction_json(cand)}}},
              {"symmetric",
               {{"diagram", to_json(sym)},
                {"nonnegative", sym_nonneg},
                {"hk_ok", sym_hk},
                {"obstructions", obstruction_json(sym)}}},
              {"demo_ok", demo_ok}});
    } else {
        std::cout << "equivariant diagram for e=(1,2,1): ranks (3,6,6,3), "
                     "hk "
                  << verdict(hk_check(base).empty()) << ", obstructions "
                  << (base_ok ? "none" : "present") << "\n";
        std::cout << "cyclic twist combination (three cyclic shifts of "
                     "(2,1,0) minus (1,1,1)):\n";
        std::cout << "  nonnegative: " << verdict(cand_nonneg) << "\n";
        std::cout << "  hk: " << verdict(cand_hk) << "\n";
        std::cout << "  collapse obstruction, direction 3:";
        for (const auto& deg : cand_dir3)
            std::cout << " " << degree_to_string(deg);
        std::cout << (cand_dir3.empty() ? " none (unexpected)" : "") << "\n";
        std::cout << "symmetric twist combination (all six permutations "
                     "minus (1,1,1)):\n";
        std::cout << "  nonnegative: " << verdict(sym_nonneg) << "\n";
        std::cout << "  hk: " << verdict(sym_hk) << "\n";
        std::cout << "  collapse obstruction: "
                  << (sym_clear ? "none in any direction" : "present")
                  << "\n";
        std::cout << "demo: " << verdict(demo_ok)
                  << " (the HK-positive cone strictly contains the cone of "
                     "realizable diagrams)\n";
    }
    return demo_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"positive cone of bigraded Betti diagrams: extremal rays, "
                 "greedy decomposition, exact realization certificates"};
    app.require_subcommand(1);

    bool json_out = false;
    int e1 = 0, e2 = 0;
    std::string pair_path, diagram_path, ideal_arg = "max", out_path;
    std::string e_csv;
    std::uint64_t seed = 0;

    auto* rays = app.add_subcommand("rays", "list the extremal rays");
    rays->add_option("--e1", e1, "first degree difference")
        ->required()
        ->check(CLI::Range(1, 1000000));
    rays->add_option("--e2", e2, "second degree difference")
        ->required()
        ->check(CLI::Range(1, 1000000));
    rays->add_flag("--json", json_out, "machine-readable JSON on stdout");

    auto* dec = app.add_subcommand(
        "decompose", "decompose a pair file into shifted extremal rays");
    dec->add_option("--pair", pair_path, "JSON file {\"a\": poly, \"b\": poly}")
        ->required();
    dec->add_option("--e1", e1)->required()->check(CLI::Range(1, 1000000));
    dec->add_option("--e2", e2)->required()->check(CLI::Range(1, 1000000));
    dec->add_flag("--json", json_out);

    auto* chk = app.add_subcommand(
        "check", "validate a diagram file: nonnegativity, HK, purity");
    chk->add_option("--diagram", diagram_path, "diagram JSON file")
        ->required();
    chk->add_option("--e1", e1, "also check cone membership for (e1,e2)")
        ->check(CLI::Range(1, 1000000));
    chk->add_option("--e2", e2)->check(CLI::Range(1, 1000000));
    chk->add_flag("--json", json_out);

    auto* rel = app.add_subcommand(
        "realize", "build an exact matrix realization of one extremal ray");
    rel->add_option("--e1", e1)->required()->check(CLI::Range(1, 1000000));
    rel->add_option("--e2", e2)->required()->check(CLI::Range(1, 1000000));
    rel->add_option("--ideal", ideal_arg,
                    "order ideal: index, empty, or max (default max)");
    rel->add_option("--seed", seed, "scalar stream seed (default 0)");
    rel->add_option("--out", out_path, "write the certificate JSON here");
    rel->add_flag("--json", json_out);

    auto* eq = app.add_subcommand(
        "equivariant", "pure diagram from tableau characters");
    eq->add_option("--e", e_csv, "degree differences, e.g. 1,2,1")
        ->required();
    eq->add_flag("--json", json_out);

    auto* demo = app.add_subcommand(
        "trigraded-demo", "three-variable cone gap demonstration");
    demo->add_flag("--json", json_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("rays")) return cmd_rays(e1, e2, json_out);
        if (app.got_subcommand("decompose"))
            return cmd_decompose(pair_path, e1, e2, json_out);
        if (app.got_subcommand("check"))
            return cmd_check(diagram_path, e1, e2, json_out);
        if (app.got_subcommand("realize"))
            return cmd_realize(e1, e2, ideal_arg, seed, out_path, json_out);
        if (app.got_subcommand("equivariant"))
            return cmd_equivariant(e_csv, json_out);
        if (app.got_subcommand("trigraded-demo"))
            return cmd_trigraded_demo(json_out);
    } catch (const std::domain_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const RealizationFailedError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const InternalError& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
