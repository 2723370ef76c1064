#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "betticone/diagram.hpp"
#include "betticone/multipoly.hpp"

namespace betticone {

// Support staircase of a bigraded matrix: row i may be nonzero only on the
// column window [s[i], e[i]] (1-based, inclusive).
struct ThickDiagonal {
    int nrows = 0, ncols = 0;
    std::vector<int> s, e;

    enum class Kind { strict, semi_strict, general };
};

// s[i] = first j with rowDeg_i <= colDeg_j componentwise, e[i] = last such
// j. Row generators must have strictly increasing first coordinate, column
// generators weakly increasing. MalformedTripleError on an empty row.
ThickDiagonal thick_diagonal(const std::vector<MultiDegree>& row_gens,
                             const std::vector<MultiDegree>& col_gens);

// strict: s[0] = 1, e[last] = ncols, both strictly increasing. semi_strict:
// s strictly increasing wherever s[i] > 1 and e strictly increasing
// wherever e[i] < ncols.
ThickDiagonal::Kind classify(const ThickDiagonal& d);
std::string kind_name(ThickDiagonal::Kind k);

// Bihomogeneous matrix over k[x,y]: entry (i,j) is a scalar times the
// forced monomial x^a y^b with (a,b) = colDeg_j - rowDeg_i.
class GradedMatrix {
public:
    struct Entry {
        Rational scalar;
        MultiDegree mono; // componentwise colDeg - rowDeg, >= 0
    };

    GradedMatrix() = default;
    GradedMatrix(std::vector<MultiDegree> row_degs,
                 std::vector<MultiDegree> col_degs);

    int nrows() const { return static_cast<int>(row_degs_.size()); }
    int ncols() const { return static_cast<int>(col_degs_.size()); }
    const std::vector<MultiDegree>& row_degs() const { return row_degs_; }
    const std::vector<MultiDegree>& col_degs() const { return col_degs_; }
    const std::map<std::pair<int, int>, Entry>& entries() const {
        return entries_;
    }

    // 0-based indices. Rejects positions where colDeg - rowDeg has a
    // negative coordinate; zero scalars are dropped.
    void set(int i, int j, const Rational& scalar);
    const Entry* entry(int i, int j) const;
    LaurentPoly entry_poly(int i, int j) const;

    bool operator==(const GradedMatrix& o) const;

private:
    std::vector<MultiDegree> row_degs_, col_degs_;
    std::map<std::pair<int, int>, Entry> entries_;
};

// Seeded stream of nonzero integers in ±[1,1000]. Uses raw mt19937_64
// outputs (no distribution objects) so identical seeds reproduce identical
// scalars on every platform.
class ScalarStream {
public:
    explicit ScalarStream(std::uint64_t seed) : gen_(seed) {}
    Rational next();

private:
    std::mt19937_64 gen_;
};

// Generic bihomogeneous map F1 -> F0 of a membership-checked triple: one
// seeded nonzero scalar per thick-diagonal position. B0 and B2 must have
// 0/1 coefficients (their generators are multiplicity-free).
GradedMatrix generic_alpha(const std::array<LaurentPoly, 3>& triple,
                           std::uint64_t seed);

// One column of beta: the exact kernel direction of alpha restricted to
// the bidegree of col_deg. Entries occupy the contiguous row window
// starting at row_begin (0-based into alpha's columns = beta's rows).
// Scalars are integers with content 1 and positive leading entry.
// DegenerateChoiceError when the kernel is not 1-dimensional or a boundary
// coordinate vanishes; MalformedTripleError when the window width identity
// fails.
struct KernelColumn {
    int row_begin = 0;
    std::vector<Rational> scalars;
};
KernelColumn kernel_column(const GradedMatrix& alpha,
                           const MultiDegree& col_deg);

// Exact product alpha * beta == 0. Shapes must compose.
bool verify_composition(const GradedMatrix& alpha, const GradedMatrix& beta);

// Maximal minor on one column set: det of the scalar part times the forced
// monomial of bidegree sum(colDegs) - sum(rowDegs).
struct MinorWitness {
    std::vector<int> columns; // 1-based
    Rational scalar;
    MultiDegree mono;
};

// Minors on the s-columns and e-columns of the matrix's thick diagonal.
// The s-minor must be a pure y-power, the e-minor a pure x-power, both
// nonzero; DegenerateChoiceError otherwise.
struct MinorCertificate {
    MinorWitness pure_y; // s-columns
    MinorWitness pure_x; // e-columns
};
MinorCertificate minor_certificate(const GradedMatrix& m);

// beta viewed against the dual convention (rows and columns reversed with
// negated degrees) so its support is again a thick diagonal with
// colDeg - rowDeg >= 0 and minor_certificate applies unchanged.
GradedMatrix dual_matrix(const GradedMatrix& beta);

// Scalar rank data of one bidegree slice.
struct ExactnessReport {
    bool ok = true;
    MultiDegree failed_at;   // first failing bidegree when !ok
    std::string reason;
};

// Checks over every bidegree in [0,box]^2: beta injective, ker alpha =
// im beta, coker alpha dimension equal to the Hilbert function of the
// triple's diagram, and that value 0 once the total degree reaches
// d2 - 1. The box must cover [0,d2]^2.
ExactnessReport degreewise_exactness(const GradedMatrix& alpha,
                                     const GradedMatrix& beta,
                                     const MultiDegree& box);

struct RealizationChecks {
    bool composition_zero = false;
    MinorCertificate alpha_minors;
    MinorCertificate beta_minors;
    bool exactness_box = false;
};

struct RealizationCertificate {
    GradedMatrix alpha;
    GradedMatrix beta;
    std::uint64_t seed = 0;
    int retries = 0;
    RealizationChecks checks;
};

// Full pipeline: generic alpha, kernel columns assembled into beta,
// composition, minor certificates for alpha and the dual of beta, boxed
// exactness. Reseeds (seed+1, ...) on DegenerateChoiceError up to
// max_retries; RealizationFailedError when exhausted.
RealizationCertificate realize(const std::array<LaurentPoly, 3>& triple,
                               std::uint64_t seed, int max_retries = 8);

} // namespace betticone
