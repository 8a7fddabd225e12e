#ifndef CLUSTERCAT_LAURENT_HPP
#define CLUSTERCAT_LAURENT_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace clustercat {

// Graded-lex on integer exponent vectors; translation-invariant total
// order, so leading terms behave under multiplication.
struct GradedLexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        long sa = 0, sb = 0;
        for (int x : a) sa += x;
        for (int x : b) sb += x;
        if (sa != sb) return sa < sb;
        return a < b;
    }
};

// Sparse multivariate Laurent polynomial with exact rational coefficients;
// no zero coefficients are stored and terms sit in canonical graded-lex
// order. Cluster variables always have integral coefficients, which the
// mutation code checks via is_integral().
class LaurentPoly {
public:
    using TermMap = std::map<std::vector<int>, mpq_class, GradedLexLess>;

    LaurentPoly() = default;
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}

    static LaurentPoly constant(int nvars, const mpq_class& c);
    static LaurentPoly variable(int nvars, int i);
    static LaurentPoly monomial(int nvars, const std::vector<int>& exp, const mpq_class& c);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_integral() const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator<(const LaurentPoly& o) const; // total order for canonical sorting

    // Exact division in the Laurent ring; nullopt when not exact (or when
    // the step cap trips, which only an inexact division can cause).
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor,
                                            long step_cap = 1000000) const;

    // Componentwise minimal exponents, negated: the denominator vector.
    std::vector<int> denominator_vector() const;

    // "(u2+1)/u1" style normal form; terms in descending graded-lex order.
    std::string to_string() const;

    void add_term(const std::vector<int>& exp, const mpq_class& c);

private:
    int nvars_ = 0;
    TermMap terms_;
};

} // namespace clustercat

#endif
