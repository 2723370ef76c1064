#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "betticone/rational.hpp"

namespace betticone {

// Exponent vector of a Laurent monomial. Length = ambient variable count
// and never changes once a polynomial owns it.
using MultiDegree = std::vector<int>;

int total_degree(const MultiDegree& a);
bool componentwise_leq(const MultiDegree& a, const MultiDegree& b);
MultiDegree degree_sum(const MultiDegree& a, const MultiDegree& b);
MultiDegree degree_diff(const MultiDegree& a, const MultiDegree& b);
std::string degree_to_string(const MultiDegree& a);

// Term order for storage and printing: total degree first, then lex.
struct GradedLexLess {
    bool operator()(const MultiDegree& a, const MultiDegree& b) const;
};

// Multivariate Laurent polynomial over Q. No stored term has coefficient
// zero; every key has length nvars().
class LaurentPoly {
public:
    using TermMap = std::map<MultiDegree, Rational, GradedLexLess>;

    explicit LaurentPoly(int nvars);

    static LaurentPoly monomial(const MultiDegree& deg,
                                const Rational& coef = Rational(1));
    static LaurentPoly constant(int nvars, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(const MultiDegree& deg) const;

    // Accumulates coef onto deg and prunes the term if the sum is zero.
    void add_term(const MultiDegree& deg, const Rational& coef);

    LaurentPoly& operator+=(const LaurentPoly& g);
    LaurentPoly& operator-=(const LaurentPoly& g);
    LaurentPoly& operator*=(const Rational& c);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g);
    friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g);
    friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
    friend LaurentPoly operator*(const Rational& c, LaurentPoly f);

    bool operator==(const LaurentPoly& g) const;

    // Substitutes 1 for every variable (sum of coefficients).
    Rational eval_ones() const;

    // Human-readable form; var_names defaults to t,u,v.
    std::string str(const std::vector<std::string>& var_names = {}) const;

private:
    int nvars_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

// xi(d, 2) = t^{d-1} + t^{d-2} u + ... + u^{d-1};  xi(d, 1) = 1 + t + ... + t^{d-1}.
// Exactly d terms, all coefficients 1. Throws std::invalid_argument for d < 1
// or nvars not in {1,2}.
LaurentPoly xi(int d, int nvars);

// Substitution x_i -> x_i^m: every exponent vector scaled by m. A ring
// homomorphism. Throws std::invalid_argument for m < 1.
LaurentPoly inflate(const LaurentPoly& f, int m);

// u = 1 on a two-variable polynomial; result keeps the t-exponents.
LaurentPoly dehomogenize(const LaurentPoly& f);

// c*t^e -> c*t^e u^{d-e}; requires every exponent of f to be <= d, so the
// result is homogeneous of total degree d and dehomogenize() inverts it.
LaurentPoly homogenize(const LaurentPoly& f, int d);

bool is_nonnegative(const LaurentPoly& f);

// Extreme exponents of variable `var` (0-based) over the support.
// Throw EmptySupportError on the zero polynomial.
int min_exponent(const LaurentPoly& f, int var);
int max_exponent(const LaurentPoly& f, int var);

// (min, max) of total degree over the support; EmptySupportError when zero.
std::pair<int, int> total_degree_range(const LaurentPoly& f);

} // namespace betticone
