#include "betticone/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "betticone/errors.hpp"

namespace betticone {

PQSplit pq_split(int e1, int e2) {
    if (e1 < 1 || e2 < 1)
        throw std::invalid_argument("degree differences must be >= 1");
    int m = std::gcd(e1, e2);
    return {m, e2 / m, e1 / m};
}

bool BettiDiagram::KeyLess::operator()(const Key& a, const Key& b) const {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
}

BettiDiagram::BettiDiagram(int nvars, int length)
    : nvars_(nvars), length_(length) {
    if (nvars < 1) throw std::invalid_argument("nvars must be >= 1");
    if (length < 0) throw std::invalid_argument("length must be >= 0");
}

Rational BettiDiagram::mult(int i, const MultiDegree& deg) const {
    auto it = entries_.find({i, deg});
    return it == entries_.end() ? Rational(0) : it->second;
}

void BettiDiagram::add(int i, const MultiDegree& deg, const Rational& mult) {
    if (i < 0 || i > length_)
        throw std::invalid_argument("homological index out of range");
    if (static_cast<int>(deg.size()) != nvars_)
        throw std::invalid_argument("degree length mismatch");
    if (mult == 0) return;
    auto [it, inserted] = entries_.emplace(Key{i, deg}, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) entries_.erase(it);
    }
}

std::vector<std::pair<MultiDegree, Rational>>
BettiDiagram::generators(int i) const {
    std::vector<std::pair<MultiDegree, Rational>> out;
    auto lo = entries_.lower_bound({i, MultiDegree()});
    for (auto it = lo; it != entries_.end() && it->first.first == i; ++it)
        out.emplace_back(it->first.second, it->second);
    return out;
}

std::vector<MultiDegree> BettiDiagram::expanded_generators(int i) const {
    std::vector<MultiDegree> out;
    for (const auto& [deg, c] : generators(i)) {
        if (c < 0 || !is_integer(c))
            throw std::invalid_argument(
                "multiplicities must be nonnegative integers to expand");
        unsigned long n = c.get_num().get_ui();
        for (unsigned long r = 0; r < n; ++r) out.push_back(deg);
    }
    return out;
}

bool BettiDiagram::operator==(const BettiDiagram& d) const {
    return nvars_ == d.nvars_ && length_ == d.length_ &&
           entries_ == d.entries_;
}

std::vector<LaurentPoly> betti_polynomials(const BettiDiagram& d) {
    std::vector<LaurentPoly> out(d.length() + 1, LaurentPoly(d.nvars()));
    for (const auto& [key, c] : d.entries())
        out[key.first].add_term(key.second, c);
    return out;
}

BettiDiagram diagram_from_polynomials(const std::vector<LaurentPoly>& bs) {
    if (bs.empty()) throw std::invalid_argument("need at least one polynomial");
    int nvars = bs[0].nvars();
    for (const auto& b : bs)
        if (b.nvars() != nvars)
            throw std::invalid_argument("variable count mismatch");
    BettiDiagram d(nvars, static_cast<int>(bs.size()) - 1);
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (const auto& [deg, c] : bs[i].terms())
            d.add(static_cast<int>(i), deg, c);
    return d;
}

std::vector<HKViolation> hk_check(const BettiDiagram& d) {
    std::vector<HKViolation> out;
    for (int k = 1; k <= d.nvars(); ++k) {
        std::map<MultiDegree, Rational> sums;
        for (const auto& [key, c] : d.entries()) {
            MultiDegree fiber = key.second;
            fiber.erase(fiber.begin() + (k - 1));
            Rational signed_c = (key.first % 2 == 0) ? c : -c;
            sums[fiber] += signed_c;
        }
        for (const auto& [fiber, s] : sums)
            if (s != 0) out.push_back({k, fiber, s});
    }
    return out;
}

std::optional<PureType> pure_type(const BettiDiagram& d) {
    if (d.is_zero()) throw EmptySupportError("pure type of zero diagram");
    PureType t;
    for (int i = 0; i <= d.length(); ++i) {
        auto gens = d.generators(i);
        if (gens.empty()) return std::nullopt;
        int deg = total_degree(gens[0].first);
        for (const auto& [g, c] : gens)
            if (total_degree(g) != deg) return std::nullopt;
        if (!t.d.empty() && deg <= t.d.back()) return std::nullopt;
        t.d.push_back(deg);
    }
    for (std::size_t i = 1; i < t.d.size(); ++i)
        t.e.push_back(t.d[i] - t.d[i - 1]);
    t.m = 0;
    for (int e : t.e) t.m = std::gcd(t.m, e);
    if (d.nvars() == 2 && t.e.size() == 2) {
        auto s = pq_split(t.e[0], t.e[1]);
        t.p = s.p;
        t.q = s.q;
    }
    return t;
}

BettiDiagram twist(const BettiDiagram& d, const MultiDegree& a) {
    if (static_cast<int>(a.size()) != d.nvars())
        throw std::invalid_argument("twist dimension mismatch");
    BettiDiagram out(d.nvars(), d.length());
    for (const auto& [key, c] : d.entries())
        out.add(key.first, degree_sum(key.second, a), c);
    return out;
}

BettiDiagram combine(const std::vector<CombineTerm>& terms,
                     const BettiDiagram& d) {
    BettiDiagram out(d.nvars(), d.length());
    for (const auto& t : terms) {
        if (static_cast<int>(t.shift.size()) != d.nvars())
            throw std::invalid_argument("shift dimension mismatch");
        for (const auto& [key, c] : d.entries())
            out.add(key.first, degree_sum(key.second, t.shift), t.coeff * c);
    }
    return out;
}

LaurentPoly hilbert_numerator(const BettiDiagram& d) {
    LaurentPoly n(d.nvars());
    for (const auto& [key, c] : d.entries())
        n.add_term(key.second, key.first % 2 == 0 ? c : -c);
    return n;
}

HilbertTable::HilbertTable(MultiDegree lo, MultiDegree hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.size() != hi_.size())
        throw std::invalid_argument("box dimension mismatch");
    std::size_t n = 1;
    for (std::size_t k = 0; k < lo_.size(); ++k) {
        if (hi_[k] < lo_[k]) throw std::invalid_argument("empty box");
        n *= static_cast<std::size_t>(hi_[k] - lo_[k] + 1);
    }
    values_.assign(n, Rational(0));
}

std::size_t HilbertTable::index_of(const MultiDegree& a) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < lo_.size(); ++k) {
        idx = idx * static_cast<std::size_t>(hi_[k] - lo_[k] + 1) +
              static_cast<std::size_t>(a[k] - lo_[k]);
    }
    return idx;
}

Rational HilbertTable::at(const MultiDegree& a) const {
    if (a.size() != lo_.size())
        throw std::invalid_argument("degree dimension mismatch");
    for (std::size_t k = 0; k < lo_.size(); ++k) {
        if (a[k] < lo_[k]) return Rational(0);
        if (a[k] > hi_[k])
            throw std::out_of_range("degree outside the computed box");
    }
    return values_[index_of(a)];
}

Rational& HilbertTable::cell(const MultiDegree& a) {
    for (std::size_t k = 0; k < lo_.size(); ++k)
        if (a[k] < lo_[k] || a[k] > hi_[k])
            throw std::out_of_range("degree outside the computed box");
    return values_[index_of(a)];
}

HilbertTable hilbert_function(const BettiDiagram& d, const MultiDegree& box) {
    if (static_cast<int>(box.size()) != d.nvars())
        throw std::invalid_argument("box dimension mismatch");
    LaurentPoly num = hilbert_numerator(d);
    MultiDegree lo(d.nvars(), 0);
    if (!num.is_zero()) {
        for (int k = 0; k < d.nvars(); ++k) {
            lo[k] = min_exponent(num, k);
            if (max_exponent(num, k) > box[k])
                throw std::invalid_argument("box does not cover the support");
        }
    }
    for (int k = 0; k < d.nvars(); ++k)
        if (lo[k] > box[k])
            throw std::invalid_argument("box does not cover the support");
    HilbertTable table(lo, box);
    for (const auto& [deg, c] : num.terms()) table.cell(deg) = c;

    // Divide by each (1 - t_k): cumulative sums along axis k.
    std::size_t n = 1;
    for (int k = 0; k < d.nvars(); ++k)
        n *= static_cast<std::size_t>(box[k] - lo[k] + 1);
    for (int k = 0; k < d.nvars(); ++k) {
        MultiDegree idx = lo;
        for (std::size_t flat = 0; flat < n; ++flat) {
            if (idx[k] > lo[k]) {
                MultiDegree prev = idx;
                --prev[k];
                table.cell(idx) += table.cell(prev);
            }
            // advance mixed-radix counter, last axis fastest
            for (int a = d.nvars() - 1; a >= 0; --a) {
                if (++idx[a] <= box[a]) break;
                idx[a] = lo[a];
            }
        }
    }
    return table;
}

bool is_nonnegative(const BettiDiagram& d) {
    for (const auto& [key, c] : d.entries())
        if (c < 0) return false;
    return true;
}

bool is_module_candidate(const BettiDiagram& d) {
    for (const auto& [key, c] : d.entries())
        if (c < 0 || !is_integer(c)) return false;
    return true;
}

namespace {

// All terms share one total degree; vacuous for zero.
bool homogeneous(const LaurentPoly& f) {
    if (f.is_zero()) return true;
    auto [lo, hi] = total_degree_range(f);
    return lo == hi;
}

LaurentPoly shifted(const LaurentPoly& f, int dt, int du) {
    LaurentPoly r(2);
    for (const auto& [deg, c] : f.terms())
        r.add_term({deg[0] + dt, deg[1] + du}, c);
    return r;
}

} // namespace

bool membership_L2(const LaurentPoly& b0, const LaurentPoly& b1,
                   const LaurentPoly& b2, int e1, int e2) {
    for (const LaurentPoly* f : {&b0, &b1, &b2}) {
        if (f->nvars() != 2)
            throw std::invalid_argument("membership needs 2 variables");
        if (!homogeneous(*f))
            throw std::invalid_argument("membership needs homogeneous input");
    }
    auto [m, p, q] = pq_split(e1, e2);
    LaurentPoly xi_pm = inflate(xi(p, 2), m);
    LaurentPoly xi_qm = inflate(xi(q, 2), m);
    LaurentPoly lhs = b2 * xi_pm;
    LaurentPoly rhs = shifted(b0 * xi_qm, p * m, p * m);
    if (!(lhs == rhs)) return false;
    if (!(b1 == shifted(b0, 0, q * m) + shifted(b2, 0, -p * m))) return false;
    if (!(b1 == shifted(b0, q * m, 0) + shifted(b2, -p * m, 0))) return false;
    return true;
}

bool membership_L2(const BettiDiagram& d, int e1, int e2) {
    if (d.nvars() != 2 || d.length() != 2)
        throw std::invalid_argument("membership needs a bigraded 3-term diagram");
    auto bs = betti_polynomials(d);
    return membership_L2(bs[0], bs[1], bs[2], e1, e2);
}

} // namespace betticone
