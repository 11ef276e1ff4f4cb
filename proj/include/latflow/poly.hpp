/* Univariate polynomials with exact integer coefficients, and matrices of
 * them.
 *
 * Poly stores coefficients in ascending degree with no trailing zeros (the
 * zero polynomial is the empty list), so equality is coefficient-list
 * equality.  The ring operations plus exact_div make Poly a valid scalar for
 * Mat<R>, so MatP = Mat<Poly> gets fraction-free Bareiss determinants and the
 * canonical minors enumeration for free; evaluating a symbolic minor at a
 * rational point agrees with taking the minor of the evaluated matrix.
 */
#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "latflow/io.hpp"
#include "latflow/mat.hpp"
#include "latflow/rational.hpp"

namespace latflow {

class Poly {
public:
    Poly() = default;
    explicit Poly(long c) { if (c != 0) c_.push_back(Int(c)); }
    explicit Poly(const Int& c) { if (c != 0) c_.push_back(c); }
    explicit Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    /// The monomial x.
    static Poly x() { return monomial(Int(1), 1); }
    static Poly monomial(const Int& c, int deg);
    /// Build from ascending small coefficients: of({3, 0, 1}) = x^2 + 3.
    static Poly of(std::initializer_list<long> ascending);

    /// Degree, with the zero polynomial at -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Int>& coeffs() const { return c_; }
    /// Coefficient of x^d (0 outside the stored range).
    Int coeff(int d) const {
        return (d >= 0 && d < static_cast<int>(c_.size())) ? c_[d] : Int(0);
    }
    /// Leading coefficient (0 for the zero polynomial).
    Int lead() const { return c_.empty() ? Int(0) : c_.back(); }

    Rational eval(const Rational& x) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Int& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// gcd of the coefficients, always >= 0 (0 for the zero polynomial).
    Int content() const;
    /// *this divided by content(); keeps the sign of the leading coefficient.
    Poly primitive_part() const;

    /// Human-readable form like "2x^4+2x^3+x"; "0" for the zero polynomial.
    std::string to_string() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_; // ascending degree, canonical (no trailing zeros)
};

/// Exact quotient a / b in Z[x]; throws PreconditionError unless b divides a.
Poly exact_div(const Poly& a, const Poly& b);

/// gcd in Z[x] (content gcd times primitive-sequence gcd), normalized to a
/// positive leading coefficient; poly_gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

using MatP = Mat<Poly>;

/// Pointwise evaluation F(x0) of a polynomial matrix at a rational point.
MatQ eval_at(const MatP& F, const Rational& x0);

/// The column combination F(x) * q for an integer vector q.
std::vector<Poly> combine_columns(const MatP& F, const std::vector<Int>& q);

/// Symbolic minor and minors map, in the same canonical order as the
/// rational-matrix versions (size ascending, then row set, then column set).
Poly minor(const MatP& F, const IndexPair& p);
std::vector<Poly> minors_vector(const MatP& F);

/// JSON form: ascending coefficient list of canonical integer strings.
Json json_of(const Poly& p);
Poly poly_from_json(const Json& j);
/// Row-major nested arrays of coefficient lists.
Json json_of(const MatP& F);
MatP poly_matrix_from_json(const Json& j);

} // namespace latflow
