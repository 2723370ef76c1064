#include "betticone/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "betticone/errors.hpp"

namespace betticone {

int total_degree(const MultiDegree& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

bool componentwise_leq(const MultiDegree& a, const MultiDegree& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("degree length mismatch");
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

MultiDegree degree_sum(const MultiDegree& a, const MultiDegree& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("degree length mismatch");
    MultiDegree r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
    return r;
}

MultiDegree degree_diff(const MultiDegree& a, const MultiDegree& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("degree length mismatch");
    MultiDegree r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
    return r;
}

std::string degree_to_string(const MultiDegree& a) {
    std::string s = "(";
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(a[k]);
    }
    return s + ")";
}

bool GradedLexLess::operator()(const MultiDegree& a,
                               const MultiDegree& b) const {
    int ta = total_degree(a), tb = total_degree(b);
    if (ta != tb) return ta < tb;
    return a < b;
}

LaurentPoly::LaurentPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("nvars must be >= 1");
}

LaurentPoly LaurentPoly::monomial(const MultiDegree& deg,
                                  const Rational& coef) {
    LaurentPoly f(static_cast<int>(deg.size()));
    f.add_term(deg, coef);
    return f;
}

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
    LaurentPoly f(nvars);
    f.add_term(MultiDegree(nvars, 0), c);
    return f;
}

Rational LaurentPoly::coeff(const MultiDegree& deg) const {
    auto it = terms_.find(deg);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const MultiDegree& deg, const Rational& coef) {
    if (static_cast<int>(deg.size()) != nvars_)
        throw std::invalid_argument("exponent length mismatch");
    if (coef == 0) return;
    auto [it, inserted] = terms_.emplace(deg, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) {
    if (g.nvars_ != nvars_)
        throw std::invalid_argument("variable count mismatch");
    for (const auto& [deg, c] : g.terms_) add_term(deg, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& g) {
    if (g.nvars_ != nvars_)
        throw std::invalid_argument("variable count mismatch");
    for (const auto& [deg, c] : g.terms_) add_term(deg, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [deg, v] : terms_) v *= c;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& [deg, v] : r.terms_) v = -v;
    return r;
}

LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) {
    f += g;
    return f;
}

LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) {
    f -= g;
    return f;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.nvars_ != g.nvars_)
        throw std::invalid_argument("variable count mismatch");
    LaurentPoly r(f.nvars_);
    for (const auto& [da, ca] : f.terms_)
        for (const auto& [db, cb] : g.terms_)
            r.add_term(degree_sum(da, db), ca * cb);
    return r;
}

LaurentPoly operator*(const Rational& c, LaurentPoly f) {
    f *= c;
    return f;
}

bool LaurentPoly::operator==(const LaurentPoly& g) const {
    return nvars_ == g.nvars_ && terms_ == g.terms_;
}

Rational LaurentPoly::eval_ones() const {
    Rational s(0);
    for (const auto& [deg, c] : terms_) s += c;
    return s;
}

std::string LaurentPoly::str(const std::vector<std::string>& var_names) const {
    static const std::vector<std::string> default_names = {"t", "u", "v"};
    const auto& names =
        var_names.empty() && nvars_ <= 3 ? default_names : var_names;
    if (static_cast<int>(names.size()) < nvars_)
        throw std::invalid_argument("not enough variable names");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [deg, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool constant_term = total_degree(deg) == 0 &&
                             std::all_of(deg.begin(), deg.end(),
                                         [](int e) { return e == 0; });
        if (a != 1 || constant_term) os << rational_to_string(a);
        bool printed_var = false;
        for (int k = 0; k < nvars_; ++k) {
            if (deg[k] == 0) continue;
            if (printed_var || (a != 1)) os << "*";
            os << names[k];
            if (deg[k] != 1) os << "^" << deg[k];
            printed_var = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) {
    return os << f.str();
}

LaurentPoly xi(int d, int nvars) {
    if (d < 1) throw std::invalid_argument("xi needs d >= 1");
    LaurentPoly f(nvars);
    if (nvars == 1) {
        for (int e = 0; e < d; ++e) f.add_term({e}, 1);
    } else if (nvars == 2) {
        for (int e = 0; e < d; ++e) f.add_term({d - 1 - e, e}, 1);
    } else {
        throw std::invalid_argument("xi is defined for 1 or 2 variables");
    }
    return f;
}

LaurentPoly inflate(const LaurentPoly& f, int m) {
    if (m < 1) throw std::invalid_argument("inflate needs m >= 1");
    LaurentPoly r(f.nvars());
    for (const auto& [deg, c] : f.terms()) {
        MultiDegree d = deg;
        for (int& e : d) e *= m;
        r.add_term(d, c);
    }
    return r;
}

LaurentPoly dehomogenize(const LaurentPoly& f) {
    if (f.nvars() != 2)
        throw std::invalid_argument("dehomogenize needs 2 variables");
    LaurentPoly r(1);
    for (const auto& [deg, c] : f.terms()) r.add_term({deg[0]}, c);
    return r;
}

LaurentPoly homogenize(const LaurentPoly& f, int d) {
    if (f.nvars() != 1)
        throw std::invalid_argument("homogenize needs 1 variable");
    LaurentPoly r(2);
    for (const auto& [deg, c] : f.terms()) {
        if (deg[0] > d)
            throw std::invalid_argument("exponent exceeds homogenization degree");
        r.add_term({deg[0], d - deg[0]}, c);
    }
    return r;
}

bool is_nonnegative(const LaurentPoly& f) {
    for (const auto& [deg, c] : f.terms())
        if (c < 0) return false;
    return true;
}

int min_exponent(const LaurentPoly& f, int var) {
    if (f.is_zero()) throw EmptySupportError("min_exponent of zero");
    if (var < 0 || var >= f.nvars())
        throw std::invalid_argument("variable index out of range");
    int best = f.terms().begin()->first[var];
    for (const auto& [deg, c] : f.terms()) best = std::min(best, deg[var]);
    return best;
}

int max_exponent(const LaurentPoly& f, int var) {
    if (f.is_zero()) throw EmptySupportError("max_exponent of zero");
    if (var < 0 || var >= f.nvars())
        throw std::invalid_argument("variable index out of range");
    int best = f.terms().begin()->first[var];
    for (const auto& [deg, c] : f.terms()) best = std::max(best, deg[var]);
    return best;
}

std::pair<int, int> total_degree_range(const LaurentPoly& f) {
    if (f.is_zero()) throw EmptySupportError("total degree of zero");
    // Terms are graded-lex ordered, so the ends of the map give the range.
    return {total_degree(f.terms().begin()->first),
            total_degree(f.terms().rbegin()->first)};
}

} // namespace betticone
