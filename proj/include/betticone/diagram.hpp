#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "betticone/multipoly.hpp"

namespace betticone {

// Total-degree data of a pure diagram. For two variables the conventions of
// the cone are e1 = m*q and e2 = m*p with p, q coprime; p and q stay 0 for
// other variable counts.
struct PureType {
    std::vector<int> d; // strictly increasing total degrees d_0 < ... < d_n
    std::vector<int> e; // differences e_i = d_i - d_{i-1}, all >= 1
    int m = 0;          // gcd of e
    int p = 0;
    int q = 0;
};

// Splits (e1, e2) into (m, p, q) with e1 = m*q, e2 = m*p, gcd(p,q) = 1.
struct PQSplit {
    int m, p, q;
};
PQSplit pq_split(int e1, int e2);

// Multigraded Betti diagram over Z^nvars. Entries are rational and may be
// negative (virtual diagrams are first-class); is_module_candidate() singles
// out the nonnegative-integer ones.
class BettiDiagram {
public:
    using Key = std::pair<int, MultiDegree>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const;
    };
    using EntryMap = std::map<Key, Rational, KeyLess>;

    BettiDiagram(int nvars, int length);

    int nvars() const { return nvars_; }
    int length() const { return length_; }
    bool is_zero() const { return entries_.empty(); }
    const EntryMap& entries() const { return entries_; }

    Rational mult(int i, const MultiDegree& deg) const;

    // Accumulates onto (i, deg), pruning zero results. Validates the key.
    void add(int i, const MultiDegree& deg, const Rational& mult);

    // Generators in homological degree i, sorted by (first coordinate
    // increasing, then remaining coordinates); multiplicities kept.
    std::vector<std::pair<MultiDegree, Rational>> generators(int i) const;

    // Same list with each multiplicity expanded into repeated degrees.
    // Requires positive integer multiplicities in degree i.
    std::vector<MultiDegree> expanded_generators(int i) const;

    bool operator==(const BettiDiagram& d) const;

private:
    int nvars_;
    int length_;
    EntryMap entries_;
};

// B_i(t) = sum_a beta_{i,a} t^a for i = 0..length.
std::vector<LaurentPoly> betti_polynomials(const BettiDiagram& d);
BettiDiagram diagram_from_polynomials(const std::vector<LaurentPoly>& bs);

// One failing multigraded Herzog-Kuhl equation: the alternating sum over the
// fiber of the projection dropping coordinate `var` (1-based) is nonzero.
struct HKViolation {
    int var;
    MultiDegree fiber; // projected degree, length nvars-1
    Rational sum;
};

// Empty result <=> the diagram satisfies every HK equation.
std::vector<HKViolation> hk_check(const BettiDiagram& d);

// Pure type by total degrees, or nullopt if some homological index mixes
// total degrees or is empty. EmptySupportError on the zero diagram.
std::optional<PureType> pure_type(const BettiDiagram& d);

// Generator degrees shift by +a: entry (i, b) of the result is entry
// (i, b-a) of d.
BettiDiagram twist(const BettiDiagram& d, const MultiDegree& a);

struct CombineTerm {
    Rational coeff;
    MultiDegree shift;
};

// sum_i coeff_i * twist(d, shift_i), cancelling exactly.
BettiDiagram combine(const std::vector<CombineTerm>& terms,
                     const BettiDiagram& d);

// sum_{i,a} (-1)^i beta_{i,a} t^a.
LaurentPoly hilbert_numerator(const BettiDiagram& d);

// Values of numerator / prod_k (1 - t_k) on the box lo <= a <= hi, where lo
// is the componentwise support minimum. at() is 0 below lo and throws above
// hi (the division is only valid inside the computed box).
class HilbertTable {
public:
    HilbertTable(MultiDegree lo, MultiDegree hi);
    const MultiDegree& lo() const { return lo_; }
    const MultiDegree& hi() const { return hi_; }
    Rational at(const MultiDegree& a) const;
    Rational& cell(const MultiDegree& a);

private:
    std::size_t index_of(const MultiDegree& a) const;
    MultiDegree lo_, hi_;
    std::vector<Rational> values_;
};

// Iterated formal division by each (1 - t_k): cumulative sums along every
// axis. `box` gives the per-variable upper bounds and must cover the support
// of the numerator (std::invalid_argument otherwise).
HilbertTable hilbert_function(const BettiDiagram& d, const MultiDegree& box);

bool is_nonnegative(const BettiDiagram& d);

// Nonnegative integer multiplicities: the diagram could belong to a module.
bool is_module_candidate(const BettiDiagram& d);

// The two-variable membership equations for L(e1,e2):
//   B2 * xi_p(t^m,u^m) = (tu)^{pm} * B0 * xi_q(t^m,u^m)
//   B1 = u^{-pm} B2 + u^{qm} B0 = t^{-pm} B2 + t^{qm} B0
// checked exactly. Each nonzero B_i must be homogeneous
// (std::invalid_argument otherwise); wrong degree spacing just fails.
bool membership_L2(const LaurentPoly& b0, const LaurentPoly& b1,
                   const LaurentPoly& b2, int e1, int e2);
bool membership_L2(const BettiDiagram& d, int e1, int e2);

} // namespace betticone
