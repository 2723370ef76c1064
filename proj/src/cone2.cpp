#include "betticone/cone2.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "betticone/errors.hpp"

namespace betticone {

OrderIdeal::OrderIdeal(std::vector<std::array<int, 2>> points)
    : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    for (const auto& [x, y] : points_) {
        if (x < 0 || y < 0)
            throw std::invalid_argument("order ideal points must lie in N^2");
        if (x > 0 && !contains(x - 1, y))
            throw std::invalid_argument("order ideal not downward closed");
        if (y > 0 && !contains(x, y - 1))
            throw std::invalid_argument("order ideal not downward closed");
    }
}

bool OrderIdeal::contains(int x, int y) const {
    return std::binary_search(points_.begin(), points_.end(),
                              std::array<int, 2>{x, y});
}

bool OrderIdeal::operator<(const OrderIdeal& o) const {
    if (points_.size() != o.points_.size())
        return points_.size() < o.points_.size();
    return points_ < o.points_;
}

std::string OrderIdeal::str() const {
    std::string s = "{";
    for (std::size_t k = 0; k < points_.size(); ++k) {
        if (k) s += ",";
        s += "(" + std::to_string(points_[k][0]) + "," +
             std::to_string(points_[k][1]) + ")";
    }
    return s + "}";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("partition parts must be >= 0");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must weakly decrease");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

std::vector<int> Partition::padded(std::size_t len) const {
    if (len < parts_.size())
        throw std::invalid_argument("padding shorter than the partition");
    std::vector<int> out = parts_;
    out.resize(len, 0);
    return out;
}

Partition Partition::conjugate() const {
    const int height = parts_.empty() ? 0 : parts_[0];
    std::vector<int> out;
    for (int i = 0; i < height; ++i) {
        int count = 0;
        for (int part : parts_)
            if (part > i) ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

std::vector<std::array<int, 2>> region_points(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("need p, q >= 1");
    const int bound = (p - 1) * (q - 1);
    std::vector<std::array<int, 2>> out;
    for (int x = 0; p * x < bound; ++x)
        for (int y = 0; p * x + q * y < bound; ++y)
            out.push_back({x, y});
    return out;
}

std::vector<OrderIdeal> order_ideals(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("need p, q >= 1");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("need gcd(p,q) = 1");
    auto region = region_points(p, q);
    // Column heights of the region, weakly decreasing in x.
    std::vector<int> cap;
    for (const auto& [x, y] : region) {
        if (x >= static_cast<int>(cap.size())) cap.resize(x + 1, 0);
        cap[x] = std::max(cap[x], y + 1);
    }
    // Order ideals are weakly decreasing height profiles under the caps.
    std::vector<OrderIdeal> out;
    std::vector<int> h(cap.size(), 0);
    auto emit = [&] {
        std::vector<std::array<int, 2>> pts;
        for (std::size_t x = 0; x < h.size(); ++x)
            for (int y = 0; y < h[x]; ++y)
                pts.push_back({static_cast<int>(x), y});
        out.emplace_back(std::move(pts));
    };
    auto rec = [&](auto&& self, std::size_t x, int limit) -> void {
        if (x == h.size()) {
            emit();
            return;
        }
        for (int v = 0; v <= std::min(limit, cap[x]); ++v) {
            h[x] = v;
            self(self, x + 1, v);
        }
    };
    if (cap.empty())
        emit();
    else
        rec(rec, 0, cap[0]);
    std::sort(out.begin(), out.end());
    return out;
}

DualPartitions partitions_of(const OrderIdeal& t, int p, int q) {
    auto region = region_points(p, q);
    for (const auto& pt : t.points())
        if (!std::binary_search(region.begin(), region.end(), pt))
            throw std::invalid_argument("order ideal exceeds the region");
    std::vector<int> rows;
    for (const auto& [x, y] : t.points()) {
        if (y >= static_cast<int>(rows.size())) rows.resize(y + 1, 0);
        rows[y] = std::max(rows[y], x + 1);
    }
    Partition lambda(std::move(rows));
    if (static_cast<int>(lambda.size()) > p ||
        static_cast<int>(lambda.conjugate().size()) > q)
        throw std::invalid_argument("order ideal exceeds the region");
    return {lambda.padded(p), lambda.conjugate().padded(q)};
}

RayPair ray_polynomials(const OrderIdeal& t, int p, int q) {
    auto [lambda, mu] = partitions_of(t, p, q);
    RayPair r{LaurentPoly(1), LaurentPoly(1)};
    for (int a = 0; a < p; ++a) {
        int e = a * q - p * lambda[p - 1 - a];
        if (e < 0) throw std::invalid_argument("order ideal exceeds the region");
        r.a.add_term({e}, 1);
    }
    for (int a = 0; a < q; ++a) {
        int e = a * p - q * mu[q - 1 - a];
        if (e < 0) throw std::invalid_argument("order ideal exceeds the region");
        r.b.add_term({e}, 1);
    }
    return r;
}

ExtremalRay extremal_ray(const OrderIdeal& t, int p, int q, int m) {
    if (m < 1) throw std::invalid_argument("need m >= 1");
    auto [at, bt] = ray_polynomials(t, p, q);
    ExtremalRay r{t,
                  p,
                  q,
                  m,
                  inflate(at, m),
                  inflate(bt, m),
                  {LaurentPoly(2), LaurentPoly(2), LaurentPoly(2)},
                  t.empty(),
                  t.size() == region_points(p, q).size()};
    int e1 = m * q, e2 = m * p;
    int d0 = max_exponent(r.a, 0);
    r.triple[0] = homogenize(r.a, d0);
    LaurentPoly shifted_b(1);
    for (const auto& [deg, c] : r.b.terms())
        shifted_b.add_term({deg[0] + p * m}, c);
    r.triple[2] = homogenize(shifted_b, d0 + e1 + e2);
    LaurentPoly b1(2);
    for (const auto& [deg, c] : r.triple[0].terms())
        b1.add_term({deg[0], deg[1] + q * m}, c);
    for (const auto& [deg, c] : r.triple[2].terms())
        b1.add_term({deg[0], deg[1] - p * m}, c);
    r.triple[1] = b1;
    return r;
}

std::vector<ExtremalRay> extremal_rays(int e1, int e2) {
    auto [m, p, q] = pq_split(e1, e2);
    std::vector<ExtremalRay> out;
    for (const auto& t : order_ideals(p, q))
        out.push_back(extremal_ray(t, p, q, m));
    return out;
}

BettiDiagram ray_diagram(const OrderIdeal& t, int e1, int e2) {
    auto [m, p, q] = pq_split(e1, e2);
    auto r = extremal_ray(t, p, q, m);
    return diagram_from_polynomials(
        {r.triple[0], r.triple[1], r.triple[2]});
}

namespace {

// Inverse of q modulo p (p >= 1, gcd(p,q) = 1).
int mod_inverse(int q, int p) {
    if (p == 1) return 0;
    int r0 = p, r1 = ((q % p) + p) % p;
    int s0 = 0, s1 = 1;
    while (r1 != 0) {
        int k = r0 / r1;
        r0 -= k * r1;
        s0 -= k * s1;
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    return ((s0 % p) + p) % p;
}

int floormod(int e, int m) { return ((e % m) + m) % m; }

} // namespace

MinExtract min_extract(const LaurentPoly& f, int p, int q) {
    if (f.nvars() != 1)
        throw std::invalid_argument("min_extract needs 1 variable");
    if (f.is_zero())
        throw std::invalid_argument("min_extract needs a nonzero polynomial");
    if (!is_nonnegative(f))
        throw std::invalid_argument("min_extract needs nonnegative coefficients");
    if (p < 1 || q < 1 || std::gcd(p, q) != 1)
        throw std::invalid_argument("need coprime p, q >= 1");
    const int qinv = mod_inverse(q, p);
    MinExtract r{LaurentPoly(1), LaurentPoly(1),
                 std::vector<std::optional<int>>(p)};
    // e = a*q - b*p with 0 <= a < p; record max b per residue class a.
    std::vector<std::optional<int>> max_b(p);
    for (const auto& [deg, c] : f.terms()) {
        int a = p == 1 ? 0 : floormod(floormod(deg[0], p) * qinv, p);
        int b = (a * q - deg[0]) / p;
        if (!max_b[a] || b > *max_b[a]) max_b[a] = b;
    }
    for (const auto& [deg, c] : f.terms()) {
        int a = p == 1 ? 0 : floormod(floormod(deg[0], p) * qinv, p);
        int b = (a * q - deg[0]) / p;
        if (b == *max_b[a])
            r.a_min.add_term(deg, c);
        else
            r.a_plus.add_term(deg, c);
    }
    for (int a = 0; a < p; ++a) r.lambda[p - 1 - a] = max_b[a];
    return r;
}

namespace {

// Exponents congruent to i mod m, deflated: coefficient of t^{i+m*k} goes
// to t^k.
LaurentPoly residue_part(const LaurentPoly& f, int i, int m) {
    LaurentPoly out(1);
    for (const auto& [deg, c] : f.terms())
        if (floormod(deg[0], m) == i) out.add_term({(deg[0] - i) / m}, c);
    return out;
}

LaurentPoly shift1(const LaurentPoly& f, int c) {
    LaurentPoly out(1);
    for (const auto& [deg, v] : f.terms()) out.add_term({deg[0] + c}, v);
    return out;
}

Partition partition_from_heights(const std::vector<std::optional<int>>& h) {
    std::vector<int> parts;
    for (const auto& l : h) {
        if (!l) throw InternalError("empty residue class in a cone element");
        parts.push_back(*l);
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument&) {
        throw InternalError("extracted heights are not a partition");
    }
}

OrderIdeal ideal_of_partition(const Partition& lam, int p, int q) {
    std::vector<std::array<int, 2>> pts;
    for (std::size_t y = 0; y < lam.size(); ++y)
        for (int x = 0; x < lam.parts()[y]; ++x)
            pts.push_back({x, static_cast<int>(y)});
    OrderIdeal t(std::move(pts));
    auto region = region_points(p, q);
    for (const auto& pt : t.points())
        if (!std::binary_search(region.begin(), region.end(), pt))
            throw InternalError("extracted ideal exceeds the region");
    return t;
}

} // namespace

Decomposition decompose(const LaurentPoly& a, const LaurentPoly& b,
                        int p, int q, int m) {
    if (a.nvars() != 1 || b.nvars() != 1)
        throw std::invalid_argument("decompose needs 1-variable input");
    if (p < 1 || q < 1 || m < 1 || std::gcd(p, q) != 1)
        throw std::invalid_argument("need coprime p, q and m >= 1");
    if (!is_nonnegative(a) || !is_nonnegative(b))
        throw NotInConeError("negative coefficient in the input pair");
    if (!(a * inflate(xi(q, 1), m) == b * inflate(xi(p, 1), m)))
        throw NotInConeError("pair fails the defining equation");

    Decomposition dec{p, q, m, {}};
    for (int i = 0; i < m; ++i) {
        LaurentPoly ai = residue_part(a, i, m);
        LaurentPoly bi = residue_part(b, i, m);
        if (ai.is_zero() != bi.is_zero())
            throw InternalError("residue classes of A and B disagree");
        if (ai.is_zero()) continue;
        int base = 0;
        std::size_t guard = ai.term_count() + bi.term_count() + 1;
        while (!ai.is_zero()) {
            if (bi.is_zero())
                throw InternalError("one side exhausted before the other");
            if (guard-- == 0)
                throw InternalError("greedy extraction failed to terminate");
            int c = min_exponent(ai, 0);
            if (c != min_exponent(bi, 0))
                throw InternalError("trailing degrees of A and B disagree");
            ai = shift1(ai, -c);
            bi = shift1(bi, -c);
            base += c;

            MinExtract ma = min_extract(ai, p, q);
            MinExtract mb = min_extract(bi, q, p);
            Partition lam = partition_from_heights(ma.lambda);
            Partition mu = partition_from_heights(mb.lambda);
            if (!(lam.conjugate() == mu))
                throw InternalError("extracted partitions are not dual");
            OrderIdeal t = ideal_of_partition(lam, p, q);

            Rational gamma;
            bool first = true;
            for (const LaurentPoly* part : {&ma.a_min, &mb.a_min})
                for (const auto& [deg, v] : part->terms())
                    if (first || v < gamma) {
                        gamma = v;
                        first = false;
                    }
            if (gamma <= 0) throw InternalError("nonpositive greedy weight");

            auto [at, bt] = ray_polynomials(t, p, q);
            ai -= gamma * at;
            bi -= gamma * bt;
            if (!is_nonnegative(ai) || !is_nonnegative(bi))
                throw InternalError("greedy step produced a negative coefficient");
            dec.terms.push_back({t, i + m * base, gamma});
        }
        if (!bi.is_zero())
            throw InternalError("one side exhausted before the other");
    }
    return dec;
}

std::pair<LaurentPoly, LaurentPoly> resum(const Decomposition& dec) {
    LaurentPoly a(1), b(1);
    for (const auto& term : dec.terms) {
        auto [at, bt] = ray_polynomials(term.ideal, dec.p, dec.q);
        a += term.gamma * shift1(inflate(at, dec.m), term.shift);
        b += term.gamma * shift1(inflate(bt, dec.m), term.shift);
    }
    return {a, b};
}

bool verify_pair(const LaurentPoly& a, const LaurentPoly& b,
                 int p, int q, int m) {
    if (a.nvars() != 1 || b.nvars() != 1)
        throw std::invalid_argument("verify_pair needs 1-variable input");
    if (!is_nonnegative(a) || !is_nonnegative(b)) return false;
    return a * inflate(xi(q, 1), m) == b * inflate(xi(p, 1), m);
}

HoppDelta hopp_delta(const LaurentPoly& f, int d) {
    if (f.nvars() != 1)
        throw std::invalid_argument("hopp_delta needs 1 variable");
    if (d < 1) throw std::invalid_argument("need d >= 1");
    HoppDelta r{f * xi(d, 1), true};
    if (f.is_zero()) return r;
    int lo = min_exponent(f, 0) - 1;
    int hi = max_exponent(f, 0) + d + 1;
    for (int j = lo; j <= hi; ++j) {
        Rational lhs = r.product.coeff({j}) - r.product.coeff({j - 1});
        Rational rhs = f.coeff({j}) - f.coeff({j - d});
        if (lhs != rhs) {
            r.differences_match = false;
            break;
        }
    }
    return r;
}

} // namespace betticone
