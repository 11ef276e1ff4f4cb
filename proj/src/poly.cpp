/* Integer-coefficient polynomial arithmetic: ring operations, exact division,
 * gcd in Z[x], evaluation, symbolic minors, and JSON round trips.
 */
#include "latflow/poly.hpp"

#include <cstddef>
#include <utility>

namespace latflow {

Poly Poly::monomial(const Int& c, int deg) {
    require(deg >= 0, "Poly::monomial: negative degree");
    if (c == 0) return Poly();
    std::vector<Int> v(static_cast<std::size_t>(deg) + 1, Int(0));
    v.back() = c;
    return Poly(std::move(v));
}

Poly Poly::of(std::initializer_list<long> ascending) {
    std::vector<Int> v;
    v.reserve(ascending.size());
    for (long c : ascending) v.push_back(Int(c));
    return Poly(std::move(v));
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Rational(c_[i]);
    return acc;
}

Poly& Poly::operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Int> v(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(v));
}

Poly Poly::operator*(const Int& s) const {
    if (s == 0) return Poly();
    Poly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

Int Poly::content() const {
    Int g(0);
    for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return Poly();
    const Int g = content();
    Poly r = *this;
    for (auto& c : r.c_) c = exact_div(c, g);
    return r;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int d = degree(); d >= 0; --d) {
        const Int c = coeff(d);
        if (c == 0) continue;
        const bool neg = c < 0;
        const Int ac = abs(c);
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? "-" : "+";
        }
        if (d == 0 || ac != 1) s += ac.get_str();
        if (d >= 1) s += "x";
        if (d >= 2) s += "^" + std::to_string(d);
    }
    return s;
}

Poly exact_div(const Poly& a, const Poly& b) {
    require(!b.is_zero(), "Poly exact_div: division by zero polynomial");
    if (a.is_zero()) return Poly();
    require(a.degree() >= b.degree(), "Poly exact_div: not divisible (degree)");
    // Long division over Q, then demand an integer quotient and no remainder.
    std::vector<Rational> rem(a.coeffs().size());
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = Rational(a.coeffs()[i]);
    const int db = b.degree();
    const Rational lb = Rational(b.lead());
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db) + 1);
    for (int d = a.degree() - db; d >= 0; --d) {
        const Rational qc = rem[static_cast<std::size_t>(d + db)] / lb;
        quo[static_cast<std::size_t>(d)] = qc;
        if (qc != 0)
            for (int i = 0; i <= db; ++i)
                rem[static_cast<std::size_t>(d + i)] -= qc * Rational(b.coeff(i));
    }
    for (const auto& r : rem) require(r == 0, "Poly exact_div: not divisible (remainder)");
    std::vector<Int> qz(quo.size());
    for (std::size_t i = 0; i < quo.size(); ++i) {
        require(quo[i].get_den() == 1, "Poly exact_div: not divisible (fraction)");
        qz[i] = quo[i].get_num();
    }
    return Poly(std::move(qz));
}

namespace {

// Pseudo-remainder of a by b: repeatedly scale by lead(b) and cancel the
// leading term, so everything stays in Z[x].  Degree drops every step.
Poly pseudo_rem(Poly a, const Poly& b) {
    const int db = b.degree();
    const Int lb = b.lead();
    while (!a.is_zero() && a.degree() >= db) {
        const int shift = a.degree() - db;
        a = a * lb - b * Poly::monomial(a.lead(), shift);
    }
    return a;
}

Poly lead_positive(Poly p) { return sgn(p.lead()) < 0 ? -p : p; }

} // namespace

Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero()) return lead_positive(std::move(b));
    if (b.is_zero()) return lead_positive(std::move(a));
    Int cg;
    mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
        Poly r = pseudo_rem(a, b);
        if (!r.is_zero()) r = r.primitive_part();
        a = std::exchange(b, std::move(r));
    }
    return lead_positive(a * cg);
}

MatQ eval_at(const MatP& F, const Rational& x0) {
    MatQ Y(F.rows(), F.cols());
    for (int i = 0; i < F.rows(); ++i)
        for (int j = 0; j < F.cols(); ++j) Y(i, j) = F(i, j).eval(x0);
    return Y;
}

std::vector<Poly> combine_columns(const MatP& F, const std::vector<Int>& q) {
    require(static_cast<int>(q.size()) == F.cols(), "combine_columns: vector length mismatch");
    std::vector<Poly> g(static_cast<std::size_t>(F.rows()));
    for (int i = 0; i < F.rows(); ++i)
        for (int j = 0; j < F.cols(); ++j) g[static_cast<std::size_t>(i)] += F(i, j) * q[static_cast<std::size_t>(j)];
    return g;
}

Poly minor(const MatP& F, const IndexPair& p) {
    require(p.I.size() == p.J.size(), "minor: |I| != |J|");
    if (p.I.empty()) return Poly(1);
    for (int i : p.I) require(1 <= i && i <= F.rows(), "minor: row index out of range");
    for (int j : p.J) require(1 <= j && j <= F.cols(), "minor: column index out of range");
    return F.submatrix(p.I, p.J).det();
}

std::vector<Poly> minors_vector(const MatP& F) {
    std::vector<Poly> d;
    for (const auto& p : minor_index_order(F.rows(), F.cols())) d.push_back(minor(F, p));
    return d;
}

Json json_of(const Poly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.get_str());
    return a;
}

Poly poly_from_json(const Json& j) {
    require(j.is_array(), "poly_from_json: expected an array of coefficients");
    std::vector<Int> v;
    v.reserve(j.size());
    for (const auto& e : j) {
        const Rational c = rational_from_json(e);
        require(c.get_den() == 1, "poly_from_json: coefficients must be integers");
        v.push_back(c.get_num());
    }
    return Poly(std::move(v));
}

Json json_of(const MatP& F) {
    Json rows = Json::array();
    for (int i = 0; i < F.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < F.cols(); ++j) row.push_back(json_of(F(i, j)));
        rows.push_back(row);
    }
    return rows;
}

MatP poly_matrix_from_json(const Json& j) {
    require(j.is_array() && !j.empty(), "poly_matrix_from_json: expected a nonempty array of rows");
    const int m = static_cast<int>(j.size());
    require(j[0].is_array() && !j[0].empty(), "poly_matrix_from_json: rows must be nonempty arrays");
    const int n = static_cast<int>(j[0].size());
    MatP F(m, n);
    for (int i = 0; i < m; ++i) {
        require(j[i].is_array() && static_cast<int>(j[i].size()) == n,
                "poly_matrix_from_json: ragged rows");
        for (int k = 0; k < n; ++k) F(i, k) = poly_from_json(j[i][k]);
    }
    return F;
}

} // namespace latflow
