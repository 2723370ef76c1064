#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "betticone/diagram.hpp"
#include "betticone/multipoly.hpp"

namespace betticone {

// Finite order ideal in N^2: a point set closed under componentwise <=.
// Points are kept sorted (x, then y). Construction validates closure.
class OrderIdeal {
public:
    OrderIdeal() = default;
    explicit OrderIdeal(std::vector<std::array<int, 2>> points);

    const std::vector<std::array<int, 2>>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    bool contains(int x, int y) const;
    bool operator==(const OrderIdeal& o) const { return points_ == o.points_; }
    bool operator<(const OrderIdeal& o) const; // size, then lex on points
    std::string str() const;

private:
    std::vector<std::array<int, 2>> points_;
};

// Weakly decreasing nonnegative parts, trailing zeros trimmed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::size_t size() const { return parts_.size(); }
    std::vector<int> padded(std::size_t len) const;
    Partition conjugate() const;
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

private:
    std::vector<int> parts_;
};

// Lattice points of R(p,q) = {(x,y) in N^2 : p*x + q*y < (p-1)*(q-1)},
// sorted (x, then y). Requires p, q >= 1. Empty when p = 1 or q = 1.
std::vector<std::array<int, 2>> region_points(int p, int q);

// All order ideals contained in R(p,q), sorted by (size, lex on points).
// Always contains the empty ideal; the region itself is the maximum.
// Requires gcd(p,q) = 1 (std::invalid_argument otherwise).
std::vector<OrderIdeal> order_ideals(int p, int q);

// lambda_j = 1 + max{ x : (x,j) in T } per row j (0 when empty), padded to
// length p; mu its conjugate, padded to length q. Requires T inside R(p,q).
struct DualPartitions {
    std::vector<int> lambda; // length p
    std::vector<int> mu;     // length q
};
DualPartitions partitions_of(const OrderIdeal& t, int p, int q);

// A_T(t) = sum_{a=0}^{p-1} t^{a*q - p*lambda_{p-1-a}} and
// B_T(t) = sum_{a=0}^{q-1} t^{a*p - q*mu_{q-1-a}}. Both have 0/1
// coefficients and satisfy A_T * xi_q = B_T * xi_p.
struct RayPair {
    LaurentPoly a; // one variable
    LaurentPoly b;
};
RayPair ray_polynomials(const OrderIdeal& t, int p, int q);

// Extremal ray of the cone for parameters (p, q, m): the inflated pair
// (A_T(t^m), B_T(t^m)) and its canonical bigraded triple. With d0 the top
// degree of A = A_T(t^m):
//   B0 = homogenize(A, d0)
//   B2 = homogenize(t^{p*m} * B_T(t^m), d0 + e1 + e2)
//   B1 = u^{q*m} B0 + u^{-p*m} B2
// where e1 = m*q, e2 = m*p.
struct ExtremalRay {
    OrderIdeal ideal;
    int p = 0, q = 0, m = 1;
    LaurentPoly a; // A_T(t^m), one variable
    LaurentPoly b; // B_T(t^m)
    std::array<LaurentPoly, 3> triple; // two variables
    bool is_monomial_quotient = false; // T empty
    bool is_equivariant = false;       // T = R(p,q)
};
ExtremalRay extremal_ray(const OrderIdeal& t, int p, int q, int m);

// One ray per order ideal of R(p,q), in order_ideals order.
std::vector<ExtremalRay> extremal_rays(int e1, int e2);

// Bigraded diagram (homological degrees 0..2) of the ray of T.
BettiDiagram ray_diagram(const OrderIdeal& t, int e1, int e2);

// Splits off the minimal-ideal part of a: every exponent decomposes
// uniquely as a*q - b*p with 0 <= a < p, and per residue class a the terms
// of maximal b are kept (with coefficients). lambda[p-1-a] records that
// maximal b, or nullopt when class a is empty. Requires nonnegative
// coefficients.
struct MinExtract {
    LaurentPoly a_min;
    LaurentPoly a_plus; // a - a_min
    std::vector<std::optional<int>> lambda; // length p, indexed as lambda_j
};
MinExtract min_extract(const LaurentPoly& a, int p, int q);

// One greedy step: gamma * (ray pair of `ideal`), placed at t-shift `shift`.
struct DecompTerm {
    OrderIdeal ideal;
    int shift = 0;
    Rational gamma;
};

struct Decomposition {
    int p = 0, q = 0, m = 1;
    std::vector<DecompTerm> terms;
};

// Greedy decomposition of a valid cone pair: splits (A, B) into residue
// classes mod m, aligns trailing degrees per class, then repeatedly
// extracts gamma * (A_T, B_T) at the common order, gamma the least
// coefficient over both minimal parts. NotInConeError if the input fails
// nonnegativity or A * xi_q(t^m) = B * xi_p(t^m); InternalError if the
// loop stalls on input that passed those checks.
Decomposition decompose(const LaurentPoly& a, const LaurentPoly& b,
                        int p, int q, int m);

// Reassembles (A, B) from a decomposition.
std::pair<LaurentPoly, LaurentPoly> resum(const Decomposition& dec);

// True iff both polynomials have nonnegative coefficients and
// A * xi_q(t^m) = B * xi_p(t^m).
bool verify_pair(const LaurentPoly& a, const LaurentPoly& b,
                 int p, int q, int m);

// Coefficient table of P * xi_d(t) with the first-difference identity
// alpha_j - alpha_{j-1} = c_j - c_{j-d} (c the coefficients of P) checked
// at every j. Requires P with nonnegative coefficients.
struct HoppDelta {
    LaurentPoly product; // P * xi_d
    bool differences_match = false;
};
HoppDelta hopp_delta(const LaurentPoly& p, int d);

} // namespace betticone
