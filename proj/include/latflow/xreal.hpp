/* Exact positive reals of power-product form, and finite sums of them.
 *
 * XReal represents   x = e^a * prod_i b_i^{g_i}   with a, g_i rational and
 * b_i positive rational bases.  This class is closed under multiplication,
 * division and rational powers — exactly the operations the diagonal flows,
 * Dirichlet boxes and escape certificates need — and admits an *exact*
 * three-way comparison:
 *
 *   x <=> y  reduces to  R <=> e^A  with R rational and A rational, after
 *   clearing exponent denominators.  If A = 0 the comparison is pure bignum
 *   arithmetic.  Otherwise R != e^A always (e^A is irrational for rational
 *   A != 0), so interval evaluation in MPFR with escalating precision
 *   terminates with a strict verdict.
 *
 * XSum is a finite sum  sum_i c_i * x_i  (c_i rational, x_i XReal), enough
 * for squared Euclidean norms of flowed lattice vectors.  Comparison merges
 * structurally equal terms and folds rational-valued terms together; an
 * exactly-equal difference therefore cancels symbolically, and a nonzero
 * difference whose terms are pure exponentials e^{q_i} is provably nonzero
 * (distinct rational exponents admit no vanishing rational combination), so
 * escalating interval evaluation terminates.  Sums mixing irrational
 * non-exponential factors may hit the precision cap, which raises
 * BudgetError rather than guessing.
 */
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latflow/rational.hpp"

namespace latflow {

class XReal {
public:
    /// The number 1.
    XReal() : a_(0) {}

    /// Embed a positive rational.
    static XReal of(const Rational& r);
    /// e^a for rational a.
    static XReal exp(const Rational& a);
    /// base^g for positive rational base and rational exponent g.
    static XReal pow(const Rational& base, const Rational& g);

    XReal& operator*=(const XReal& o);
    XReal& operator/=(const XReal& o);
    friend XReal operator*(XReal x, const XReal& y) { return x *= y; }
    friend XReal operator/(XReal x, const XReal& y) { return x /= y; }

    /// x^g for rational g.
    XReal pow(const Rational& g) const;
    XReal inv() const { return pow(Rational(-1)); }

    /// Exact three-way comparison.  May raise BudgetError only when the
    /// escalating-precision cap is reached (see file comment).
    std::strong_ordering cmp(const XReal& o) const;

    bool operator==(const XReal& o) const { return cmp(o) == std::strong_ordering::equal; }
    bool operator<(const XReal& o) const { return cmp(o) == std::strong_ordering::less; }
    bool operator<=(const XReal& o) const { return cmp(o) != std::strong_ordering::greater; }
    bool operator>(const XReal& o) const { return cmp(o) == std::strong_ordering::greater; }
    bool operator>=(const XReal& o) const { return cmp(o) != std::strong_ordering::less; }

    /// Exact rational value when one exists syntactically (e-part zero and
    /// all exponents integral after normalization); nullopt otherwise.
    std::optional<Rational> as_rational() const;

    bool is_pure_exp() const { return p_.empty(); }
    const Rational& e_exponent() const { return a_; }

    double to_double() const;
    /// Natural log as a double (robust for values far outside double range).
    double log_double() const;

    std::string to_string() const;

private:
    friend class XSum;
    Rational a_;                        // exponent of e
    std::map<Rational, Rational> p_;    // base -> exponent; bases > 0, != 1; exponents != 0
    void set_factor(const Rational& base, const Rational& g);
};

class XSum {
public:
    XSum() = default;
    static XSum of(const Rational& c) { XSum s; s.add(c, XReal()); return s; }
    static XSum of_term(const Rational& c, const XReal& x) { XSum s; s.add(c, x); return s; }

    /// Add c * x to the sum.
    void add(const Rational& c, const XReal& x);

    XSum& operator+=(const XSum& o);
    XSum& operator-=(const XSum& o);
    friend XSum operator+(XSum a, const XSum& b) { return a += b; }
    friend XSum operator-(XSum a, const XSum& b) { return a -= b; }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Exact three-way comparison (see file comment for the termination
    /// guarantee and the BudgetError escape hatch).
    std::strong_ordering cmp(const XSum& o) const;
    std::strong_ordering sign() const { return cmp(XSum()); }

    bool operator<(const XSum& o) const { return cmp(o) == std::strong_ordering::less; }
    bool operator==(const XSum& o) const { return cmp(o) == std::strong_ordering::equal; }

    double to_double() const;

    const std::vector<std::pair<Rational, XReal>>& terms() const { return terms_; }

private:
    // invariant: XReal keys pairwise cmp-distinct; rational-valued terms are
    // folded into a coefficient on the key 1; no zero coefficients.
    std::vector<std::pair<Rational, XReal>> terms_;
};

} // namespace latflow
