#include "betticone/trigraded.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "betticone/errors.hpp"

namespace betticone {

namespace {

void validate_shape(const Shape& shape, int nvars) {
    if (nvars < 1) throw std::invalid_argument("need nvars >= 1");
    if (static_cast<int>(shape.size()) > nvars)
        throw std::invalid_argument("shape longer than the variable count");
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (shape[i] < 0)
            throw std::invalid_argument("shape parts must be >= 0");
        if (i > 0 && shape[i] > shape[i - 1])
            throw std::invalid_argument("shape parts must weakly decrease");
    }
}

// Depth-first fill in row-major order: weak increase along rows, strict
// increase down columns, entries in 1..n.
void enumerate_ssyt(const std::vector<int>& rows, int n, int r, int c,
                    std::vector<std::vector<int>>& cells,
                    std::vector<int>& weight, LaurentPoly& acc) {
    if (r == static_cast<int>(rows.size())) {
        MultiDegree deg(weight.begin(), weight.end());
        acc.add_term(deg, 1);
        return;
    }
    if (c == rows[r]) {
        enumerate_ssyt(rows, n, r + 1, 0, cells, weight, acc);
        return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, cells[r][c - 1]);
    if (r > 0 && c < rows[r - 1]) lo = std::max(lo, cells[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
        cells[r][c] = v;
        ++weight[v - 1];
        enumerate_ssyt(rows, n, r, c + 1, cells, weight, acc);
        --weight[v - 1];
    }
}

} // namespace

LaurentPoly ssyt_character(const Shape& shape, int nvars) {
    validate_shape(shape, nvars);
    std::vector<int> rows(shape.begin(), shape.end());
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    LaurentPoly acc(nvars);
    if (rows.empty()) {
        acc.add_term(MultiDegree(nvars, 0), 1);
        return acc;
    }
    std::vector<std::vector<int>> cells;
    for (int len : rows) cells.emplace_back(len, 0);
    std::vector<int> weight(nvars, 0);
    enumerate_ssyt(rows, nvars, 0, 0, cells, weight, acc);
    return acc;
}

Integer weyl_dimension(const Shape& shape, int n) {
    validate_shape(shape, n);
    std::vector<int> s(shape);
    s.resize(n, 0);
    Integer num = 1, den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= s[i] - s[j] + j - i;
            den *= j - i;
        }
    return num / den;
}

std::vector<Shape> equivariant_shapes(const std::vector<int>& e, int n) {
    if (static_cast<int>(e.size()) != n)
        throw std::invalid_argument("difference vector length must equal n");
    for (int ei : e)
        if (ei < 1) throw std::invalid_argument("differences must be >= 1");
    Shape base(n);
    for (int i = 0; i < n; ++i) {
        int tail = 0;
        for (int j = i + 1; j < n; ++j) tail += e[j];
        base[i] = tail - (n - 1 - i);
    }
    std::vector<Shape> out;
    for (int i = 0; i <= n; ++i) {
        Shape s = base;
        for (int k = 0; k < i; ++k) s[k] += e[k];
        validate_shape(s, n); // throws when the parameters break monotonicity
        out.push_back(std::move(s));
    }
    return out;
}

BettiDiagram equivariant_diagram(const std::vector<int>& e, int n) {
    auto shapes = equivariant_shapes(e, n);
    BettiDiagram d(n, n);
    for (int i = 0; i <= n; ++i) {
        LaurentPoly ch = ssyt_character(shapes[i], n);
        for (const auto& [deg, c] : ch.terms()) d.add(i, deg, c);
    }
    return d;
}

std::vector<MultiDegree> collapse_obstruction(const BettiDiagram& d, int k) {
    if (k < 1 || k > d.nvars())
        throw std::invalid_argument("variable index out of range");
    if (!is_nonnegative(d))
        throw std::invalid_argument("collapse test needs a nonnegative diagram");
    auto f1 = d.generators(1);
    std::vector<MultiDegree> out;
    for (const auto& [a, ca] : d.generators(0)) {
        bool matched = false;
        for (const auto& [b, cb] : f1) {
            bool same_elsewhere = true;
            for (int j = 0; j < d.nvars(); ++j)
                if (j != k - 1 && b[j] != a[j]) {
                    same_elsewhere = false;
                    break;
                }
            if (same_elsewhere && b[k - 1] > a[k - 1]) {
                matched = true;
                break;
            }
        }
        if (!matched) out.push_back(a);
    }
    return out;
}

namespace {

BettiDiagram twist_combination(
    const std::vector<std::pair<Rational, MultiDegree>>& terms) {
    BettiDiagram base = equivariant_diagram({1, 2, 1}, 3);
    std::vector<CombineTerm> cs;
    for (const auto& [coeff, shift] : terms) cs.push_back({coeff, shift});
    return combine(cs, base);
}

} // namespace

BettiDiagram cyclic_twist_combination() {
    return twist_combination({{Rational(1), {2, 1, 0}},
                              {Rational(1), {0, 2, 1}},
                              {Rational(1), {1, 0, 2}},
                              {Rational(-1), {1, 1, 1}}});
}

BettiDiagram symmetric_twist_combination() {
    return twist_combination({{Rational(1), {2, 1, 0}},
                              {Rational(1), {2, 0, 1}},
                              {Rational(1), {1, 2, 0}},
                              {Rational(1), {0, 2, 1}},
                              {Rational(1), {1, 0, 2}},
                              {Rational(1), {0, 1, 2}},
                              {Rational(-1), {1, 1, 1}}});
}

} // namespace betticone
