#include "betticone/realize2.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "betticone/errors.hpp"

namespace betticone {

namespace {

using Mat = std::vector<std::vector<Rational>>;

// Gaussian elimination over Q; returns the rank, reduces m in place.
int row_reduce(Mat& m) {
    if (m.empty()) return 0;
    const int nrows = static_cast<int>(m.size());
    const int ncols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int pivot = -1;
        for (int r = rank; r < nrows; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        Rational inv = m[rank][col];
        for (int c = col; c < ncols; ++c) m[rank][c] /= inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int c = col; c < ncols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

int rank_of(Mat m) { return row_reduce(m); }

Rational determinant(Mat m) {
    const int n = static_cast<int>(m.size());
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(m[col], m[pivot]);
            det = -det;
        }
        det *= m[col][col];
        Rational inv = m[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / inv;
            for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

// The one-dimensional kernel of an (n-1) x n system, scaled to integer
// entries with content 1 and positive first coordinate.
std::vector<Rational> kernel_direction(Mat m, int ncols) {
    const int rank = row_reduce(m);
    if (rank != ncols - 1)
        throw DegenerateChoiceError("kernel dimension is not one");
    // Identify pivot columns of the reduced matrix.
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(ncols, false);
    for (int r = 0; r < rank; ++r) {
        int c = 0;
        while (c < ncols && m[r][c] == 0) ++c;
        pivot_col.push_back(c);
        is_pivot[c] = true;
    }
    int free_col = 0;
    while (free_col < ncols && is_pivot[free_col]) ++free_col;
    std::vector<Rational> v(ncols, Rational(0));
    v[free_col] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][free_col];
    // Clear denominators, divide by the content, fix the sign.
    Integer l(1);
    for (const auto& x : v) l = lcm(l, x.get_den());
    Integer g(0);
    std::vector<Rational> w;
    for (const auto& x : v) {
        Rational y = x * Rational(l);
        g = gcd(g, y.get_num());
        w.push_back(y);
    }
    for (auto& y : w) y /= Rational(g);
    int lead = 0;
    while (lead < ncols && w[lead] == 0) ++lead;
    if (lead < ncols && w[lead] < 0)
        for (auto& y : w) y = -y;
    return w;
}

} // namespace

ThickDiagonal thick_diagonal(const std::vector<MultiDegree>& row_gens,
                             const std::vector<MultiDegree>& col_gens) {
    if (row_gens.empty() || col_gens.empty())
        throw std::invalid_argument("need at least one row and one column");
    for (std::size_t i = 1; i < row_gens.size(); ++i)
        if (row_gens[i][0] <= row_gens[i - 1][0])
            throw std::invalid_argument(
                "row generators need strictly increasing first coordinate");
    for (std::size_t j = 1; j < col_gens.size(); ++j)
        if (col_gens[j][0] < col_gens[j - 1][0])
            throw std::invalid_argument(
                "column generators need weakly increasing first coordinate");
    ThickDiagonal d;
    d.nrows = static_cast<int>(row_gens.size());
    d.ncols = static_cast<int>(col_gens.size());
    for (const auto& row : row_gens) {
        int first = -1, last = -1;
        for (int j = 0; j < d.ncols; ++j) {
            if (componentwise_leq(row, col_gens[j])) {
                if (first < 0) first = j;
                last = j;
            }
        }
        if (first < 0)
            throw MalformedTripleError("row generator dominates no column");
        for (int j = first; j <= last; ++j)
            if (!componentwise_leq(row, col_gens[j]))
                throw MalformedTripleError("matrix support is not an interval");
        d.s.push_back(first + 1);
        d.e.push_back(last + 1);
    }
    for (int i = 1; i < d.nrows; ++i)
        if (d.s[i] < d.s[i - 1] || d.e[i] < d.e[i - 1])
            throw MalformedTripleError("column windows are not monotone");
    return d;
}

ThickDiagonal::Kind classify(const ThickDiagonal& d) {
    bool s_strict = true, e_strict = true;
    bool s_semi = true, e_semi = true;
    for (int i = 1; i < d.nrows; ++i) {
        if (d.s[i] <= d.s[i - 1]) {
            s_strict = false;
            if (d.s[i] > 1) s_semi = false;
        }
        if (d.e[i] <= d.e[i - 1]) {
            e_strict = false;
            if (d.e[i] < d.ncols) e_semi = false;
        }
    }
    if (s_strict && e_strict && d.nrows > 0 && d.s.front() == 1 &&
        d.e.back() == d.ncols)
        return ThickDiagonal::Kind::strict;
    if (s_semi && e_semi) return ThickDiagonal::Kind::semi_strict;
    return ThickDiagonal::Kind::general;
}

std::string kind_name(ThickDiagonal::Kind k) {
    switch (k) {
    case ThickDiagonal::Kind::strict: return "strict";
    case ThickDiagonal::Kind::semi_strict: return "semi-strict";
    default: return "general";
    }
}

GradedMatrix::GradedMatrix(std::vector<MultiDegree> row_degs,
                           std::vector<MultiDegree> col_degs)
    : row_degs_(std::move(row_degs)), col_degs_(std::move(col_degs)) {
    for (const auto& deg : row_degs_)
        if (deg.size() != 2)
            throw std::invalid_argument("graded matrices are bigraded");
    for (const auto& deg : col_degs_)
        if (deg.size() != 2)
            throw std::invalid_argument("graded matrices are bigraded");
}

void GradedMatrix::set(int i, int j, const Rational& scalar) {
    if (i < 0 || i >= nrows() || j < 0 || j >= ncols())
        throw std::invalid_argument("matrix index out of range");
    if (scalar == 0) {
        entries_.erase({i, j});
        return;
    }
    MultiDegree mono = degree_diff(col_degs_[j], row_degs_[i]);
    for (int e : mono)
        if (e < 0)
            throw std::invalid_argument(
                "entry bidegree has a negative coordinate");
    entries_[{i, j}] = {scalar, std::move(mono)};
}

const GradedMatrix::Entry* GradedMatrix::entry(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? nullptr : &it->second;
}

LaurentPoly GradedMatrix::entry_poly(int i, int j) const {
    LaurentPoly f(2);
    if (const Entry* e = entry(i, j)) f.add_term(e->mono, e->scalar);
    return f;
}

bool GradedMatrix::operator==(const GradedMatrix& o) const {
    if (row_degs_ != o.row_degs_ || col_degs_ != o.col_degs_) return false;
    if (entries_.size() != o.entries_.size()) return false;
    for (const auto& [pos, e] : entries_) {
        const Entry* oe = o.entry(pos.first, pos.second);
        if (!oe || oe->scalar != e.scalar || oe->mono != e.mono) return false;
    }
    return true;
}

Rational ScalarStream::next() {
    std::uint64_t r = gen_();
    Rational v(static_cast<long>(1 + r % 1000));
    return (r >> 63) ? -v : v;
}

namespace {

struct TripleLayout {
    std::vector<MultiDegree> rows;  // B0 generators
    std::vector<MultiDegree> cols;  // B1 generators, multiplicity expanded
    std::vector<MultiDegree> cols2; // B2 generators
    int e1 = 0, e2 = 0;
};

TripleLayout triple_layout(const std::array<LaurentPoly, 3>& triple) {
    for (const auto& f : triple) {
        if (f.nvars() != 2)
            throw MalformedTripleError("triple must be bigraded");
        if (f.is_zero())
            throw MalformedTripleError("triple has a zero polynomial");
    }
    std::array<int, 3> degs{};
    for (int k = 0; k < 3; ++k) {
        auto [lo, hi] = total_degree_range(triple[k]);
        if (lo != hi)
            throw MalformedTripleError("triple must be homogeneous");
        degs[k] = lo;
    }
    TripleLayout lay;
    lay.e1 = degs[1] - degs[0];
    lay.e2 = degs[2] - degs[1];
    if (lay.e1 < 1 || lay.e2 < 1)
        throw MalformedTripleError("degrees must strictly increase");
    if (!membership_L2(triple[0], triple[1], triple[2], lay.e1, lay.e2))
        throw MalformedTripleError("triple fails the membership equations");
    for (const auto& [deg, c] : triple[0].terms()) {
        if (c != 1)
            throw MalformedTripleError("end coefficients must be 0 or 1");
        lay.rows.push_back(deg);
    }
    for (const auto& [deg, c] : triple[2].terms()) {
        if (c != 1)
            throw MalformedTripleError("end coefficients must be 0 or 1");
        lay.cols2.push_back(deg);
    }
    for (const auto& [deg, c] : triple[1].terms()) {
        if (c < 1 || !is_integer(c))
            throw MalformedTripleError(
                "middle coefficients must be positive integers");
        long n = c.get_num().get_si();
        for (long r = 0; r < n; ++r) lay.cols.push_back(deg);
    }
    return lay;
}

} // namespace

GradedMatrix generic_alpha(const std::array<LaurentPoly, 3>& triple,
                           std::uint64_t seed) {
    TripleLayout lay = triple_layout(triple);
    ThickDiagonal d = thick_diagonal(lay.rows, lay.cols);
    GradedMatrix alpha(lay.rows, lay.cols);
    ScalarStream stream(seed);
    for (int i = 0; i < d.nrows; ++i)
        for (int j = d.s[i] - 1; j <= d.e[i] - 1; ++j)
            alpha.set(i, j, stream.next());
    return alpha;
}

KernelColumn kernel_column(const GradedMatrix& alpha,
                           const MultiDegree& col_deg) {
    const auto& bdegs = alpha.col_degs();
    int j0 = -1, j1 = -1;
    for (int j = 0; j < alpha.ncols(); ++j) {
        if (componentwise_leq(bdegs[j], col_deg)) {
            if (j0 < 0) j0 = j;
            j1 = j;
        }
    }
    if (j0 < 0)
        throw MalformedTripleError("column dominates no middle generator");
    for (int j = j0; j <= j1; ++j)
        if (!componentwise_leq(bdegs[j], col_deg))
            throw MalformedTripleError("column window is not an interval");
    ThickDiagonal d = thick_diagonal(alpha.row_degs(), bdegs);
    int i0 = -1, i1 = -1;
    for (int i = 0; i < alpha.nrows(); ++i) {
        if (d.s[i] - 1 <= j1 && d.e[i] - 1 >= j0) {
            if (i0 < 0) i0 = i;
            i1 = i;
        }
    }
    const int width = j1 - j0 + 1;
    const int height = i0 < 0 ? 0 : i1 - i0 + 1;
    if (height != width - 1)
        throw MalformedTripleError("window width identity fails");

    // Every product in one row shares one monomial, so the kernel
    // condition is a scalar system.
    Mat m(height, std::vector<Rational>(width, Rational(0)));
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c)
            if (const auto* e = alpha.entry(i0 + r, j0 + c))
                m[r][c] = e->scalar;
    std::vector<Rational> v = kernel_direction(std::move(m), width);
    if (v.front() == 0 || v.back() == 0)
        throw DegenerateChoiceError("kernel vector vanishes at the boundary");
    return {j0, std::move(v)};
}

bool verify_composition(const GradedMatrix& alpha, const GradedMatrix& beta) {
    if (alpha.col_degs() != beta.row_degs())
        throw std::invalid_argument("composition shapes do not match");
    for (int i = 0; i < alpha.nrows(); ++i)
        for (int k = 0; k < beta.ncols(); ++k) {
            LaurentPoly sum(2);
            for (int j = 0; j < alpha.ncols(); ++j) {
                const auto* a = alpha.entry(i, j);
                const auto* b = beta.entry(j, k);
                if (a && b)
                    sum.add_term(degree_sum(a->mono, b->mono),
                                 a->scalar * b->scalar);
            }
            if (!sum.is_zero()) return false;
        }
    return true;
}

namespace {

MinorWitness minor_on_columns(const GradedMatrix& mat,
                              const std::vector<int>& cols) {
    const int r = mat.nrows();
    Mat m(r, std::vector<Rational>(r, Rational(0)));
    MultiDegree mono(2, 0);
    for (int t = 0; t < r; ++t) {
        mono = degree_sum(mono, mat.col_degs()[cols[t] - 1]);
        for (int i = 0; i < r; ++i)
            if (const auto* e = mat.entry(i, cols[t] - 1))
                m[i][t] = e->scalar;
    }
    for (int i = 0; i < r; ++i) mono = degree_diff(mono, mat.row_degs()[i]);
    return {cols, determinant(std::move(m)), mono};
}

} // namespace

MinorCertificate minor_certificate(const GradedMatrix& mat) {
    if (mat.nrows() > mat.ncols())
        throw std::invalid_argument("need at least as many columns as rows");
    ThickDiagonal d = thick_diagonal(mat.row_degs(), mat.col_degs());
    MinorWitness wy = minor_on_columns(mat, d.s);
    MinorWitness wx = minor_on_columns(mat, d.e);
    if (wy.scalar == 0 || wx.scalar == 0)
        throw DegenerateChoiceError("a witness minor vanishes");
    if (wy.mono[0] != 0 || wx.mono[1] != 0)
        throw DegenerateChoiceError("witness minor bidegree is not pure");
    return {std::move(wy), std::move(wx)};
}

GradedMatrix dual_matrix(const GradedMatrix& beta) {
    const int r = beta.nrows(), c = beta.ncols();
    std::vector<MultiDegree> rows, cols;
    for (int k = c - 1; k >= 0; --k)
        rows.push_back(degree_diff(MultiDegree(2, 0), beta.col_degs()[k]));
    for (int j = r - 1; j >= 0; --j)
        cols.push_back(degree_diff(MultiDegree(2, 0), beta.row_degs()[j]));
    GradedMatrix out(std::move(rows), std::move(cols));
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < r; ++j)
            if (const auto* e = beta.entry(r - 1 - j, c - 1 - i))
                out.set(i, j, e->scalar);
    return out;
}

ExactnessReport degreewise_exactness(const GradedMatrix& alpha,
                                     const GradedMatrix& beta,
                                     const MultiDegree& box) {
    if (box.size() != 2)
        throw std::invalid_argument("box must be bigraded");
    if (alpha.col_degs() != beta.row_degs())
        throw std::invalid_argument("composition shapes do not match");
    int d2 = 0;
    for (const auto& deg : beta.col_degs())
        d2 = std::max(d2, total_degree(deg));
    if (box[0] < d2 || box[1] < d2)
        throw std::invalid_argument("box must cover the top degree");

    BettiDiagram diag(2, 2);
    for (const auto& deg : alpha.row_degs()) diag.add(0, deg, 1);
    for (const auto& deg : alpha.col_degs()) diag.add(1, deg, 1);
    for (const auto& deg : beta.col_degs()) diag.add(2, deg, 1);
    HilbertTable hilb = hilbert_function(diag, box);

    ExactnessReport report;
    for (int x = 0; x <= box[0]; ++x)
        for (int y = 0; y <= box[1]; ++y) {
            MultiDegree deg{x, y};
            auto below = [&](const std::vector<MultiDegree>& degs) {
                std::vector<int> out;
                for (int t = 0; t < static_cast<int>(degs.size()); ++t)
                    if (componentwise_leq(degs[t], deg)) out.push_back(t);
                return out;
            };
            std::vector<int> b0 = below(alpha.row_degs());
            std::vector<int> b1 = below(alpha.col_degs());
            std::vector<int> b2 = below(beta.col_degs());

            Mat am(b0.size(), std::vector<Rational>(b1.size(), Rational(0)));
            for (std::size_t i = 0; i < b0.size(); ++i)
                for (std::size_t j = 0; j < b1.size(); ++j)
                    if (const auto* e = alpha.entry(b0[i], b1[j]))
                        am[i][j] = e->scalar;
            Mat bm(b1.size(), std::vector<Rational>(b2.size(), Rational(0)));
            for (std::size_t j = 0; j < b1.size(); ++j)
                for (std::size_t k = 0; k < b2.size(); ++k)
                    if (const auto* e = beta.entry(b1[j], b2[k]))
                        bm[j][k] = e->scalar;
            int rank_a = rank_of(std::move(am));
            int rank_b = rank_of(std::move(bm));

            auto fail = [&](const std::string& why) {
                report.ok = false;
                report.failed_at = deg;
                report.reason = why;
            };
            if (rank_b != static_cast<int>(b2.size())) {
                fail("second map is not injective");
                return report;
            }
            if (static_cast<int>(b1.size()) - rank_a != rank_b) {
                fail("kernel and image dimensions disagree");
                return report;
            }
            Rational coker =
                Rational(static_cast<int>(b0.size()) - rank_a);
            if (coker != hilb.at(deg)) {
                fail("cokernel dimension differs from the Hilbert value");
                return report;
            }
            if (x + y >= d2 - 1 && coker != 0) {
                fail("cokernel persists past the top degree");
                return report;
            }
        }
    return report;
}

RealizationCertificate realize(const std::array<LaurentPoly, 3>& triple,
                               std::uint64_t seed, int max_retries) {
    TripleLayout lay = triple_layout(triple);
    int d2 = 0;
    for (const auto& deg : lay.cols2)
        d2 = std::max(d2, total_degree(deg));
    std::string last_failure;
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
        try {
            GradedMatrix alpha = generic_alpha(triple, s);
            GradedMatrix beta(lay.cols, lay.cols2);
            for (std::size_t k = 0; k < lay.cols2.size(); ++k) {
                KernelColumn kc = kernel_column(alpha, lay.cols2[k]);
                for (std::size_t r = 0; r < kc.scalars.size(); ++r)
                    beta.set(kc.row_begin + static_cast<int>(r),
                             static_cast<int>(k), kc.scalars[r]);
            }
            RealizationChecks checks;
            checks.composition_zero = verify_composition(alpha, beta);
            if (!checks.composition_zero)
                throw InternalError("exact kernel columns failed to compose");
            checks.alpha_minors = minor_certificate(alpha);
            checks.beta_minors = minor_certificate(dual_matrix(beta));
            ExactnessReport ex =
                degreewise_exactness(alpha, beta, {d2, d2});
            if (!ex.ok)
                throw DegenerateChoiceError(
                    "exactness failed at " + degree_to_string(ex.failed_at) +
                    ": " + ex.reason);
            checks.exactness_box = true;
            return {std::move(alpha), std::move(beta), s, attempt,
                    std::move(checks)};
        } catch (const DegenerateChoiceError& err) {
            last_failure = err.what();
        }
    }
    throw RealizationFailedError("all seeds degenerate; last failure: " +
                                 last_failure);
}

} // namespace betticone
