/* Symbolic obstruction searches over integer-polynomial matrix curves.
 *
 * All decisions reduce to exact rational linear algebra on coefficient
 * vectors: affine dependences are kernels of coefficient matrices, the
 * column-combination search (case1) tests pairwise proportionality of
 * polynomials by cross-multiplication, and the column-translate search
 * (case2) solves, for each (a, u1) cell, the linear system its proportionality
 * conditions impose on (u2, b).  Certificates are re-verified symbolically
 * before they are returned.
 */
#include "latflow/obstruct.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <utility>

namespace latflow {

namespace {

// ----------------------------------------------------------- small helpers

bool all_zero(const std::vector<Poly>& g) {
    for (const auto& p : g)
        if (!p.is_zero()) return false;
    return true;
}

bool all_zero(const std::vector<Int>& v) {
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}

Int inf_norm(const std::vector<Int>& v) {
    Int m(0);
    for (const auto& c : v) {
        Int a = abs(c);
        if (a > m) m = a;
    }
    return m;
}

std::string int_vec_to_string(const std::vector<Int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

// Scale a rational vector to the primitive integer vector on the same line
// (direction preserved).  The input must be nonzero.
std::vector<Int> primitive_scale(const std::vector<Rational>& v) {
    const Int den = common_denominator(v);
    std::vector<Int> z(v.size());
    Int g(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational s = v[i] * Rational(den);
        z[i] = s.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
    }
    require(g != 0, "primitive_scale: zero vector");
    for (auto& c : z) c = exact_div(c, g);
    return z;
}

void negate(std::vector<Int>& v) {
    for (auto& c : v) c = -c;
}

// All integer vectors of the given length with ||v||_inf <= height, ordered
// by (||v||_inf, lex).  With canonical_sign, only one of {v, -v} is kept
// (first nonzero entry positive) and the zero vector is dropped.
std::vector<std::vector<Int>> height_box_vectors(int len, long height, bool canonical_sign) {
    std::vector<std::vector<Int>> out;
    std::vector<long> c(static_cast<std::size_t>(len), -height);
    for (;;) {
        bool keep = true;
        if (canonical_sign) {
            int first = -1;
            for (int i = 0; i < len; ++i)
                if (c[static_cast<std::size_t>(i)] != 0) { first = i; break; }
            keep = first >= 0 && c[static_cast<std::size_t>(first)] > 0;
        }
        if (keep) {
            std::vector<Int> v(static_cast<std::size_t>(len));
            for (int i = 0; i < len; ++i) v[static_cast<std::size_t>(i)] = Int(c[static_cast<std::size_t>(i)]);
            out.push_back(std::move(v));
        }
        int pos = len - 1;
        while (pos >= 0 && c[static_cast<std::size_t>(pos)] == height) {
            c[static_cast<std::size_t>(pos)] = -height;
            --pos;
        }
        if (pos < 0) break;
        ++c[static_cast<std::size_t>(pos)];
    }
    std::stable_sort(out.begin(), out.end(), [](const std::vector<Int>& x, const std::vector<Int>& y) {
        const Int nx = inf_norm(x), ny = inf_norm(y);
        if (nx != ny) return nx < ny;
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    });
    return out;
}

// Reduce num/den by their Z[x] gcd and give den a positive leading
// coefficient; stores the result into the certificate.
void set_reduced_factor(ObstructionCertificate& c, Poly num, Poly den) {
    if (num.is_zero()) {
        c.factor_num = Poly();
        c.factor_den = Poly(1);
        return;
    }
    const Poly g = poly_gcd(num, den);
    num = exact_div(num, g);
    den = exact_div(den, g);
    if (sgn(den.lead()) < 0) {
        num = -num;
        den = -den;
    }
    c.factor_num = std::move(num);
    c.factor_den = std::move(den);
}

std::string factor_to_string(const ObstructionCertificate& c) {
    if (c.factor_den == Poly(1)) return c.factor_num.to_string();
    return "(" + c.factor_num.to_string() + ")/(" + c.factor_den.to_string() + ")";
}

// The affine dependence among {1, fs...} restricted to the given list, or
// nullopt; shared by affine_relation and the per-row / per-column verdicts.
std::optional<std::vector<Rational>> dependence_with_constant(const std::vector<Poly>& fs) {
    const int N = static_cast<int>(fs.size());
    int D = 0;
    for (const auto& f : fs) D = std::max(D, f.degree());
    // Column 0 is the constant function 1; column j >= 1 is f_j.  Scan
    // prefixes so the reported dependence is the canonical first one.
    for (int j = 1; j <= N; ++j) {
        MatQ A(D + 1, j + 1);
        A(0, 0) = Rational(1);
        for (int col = 1; col <= j; ++col)
            for (int d = 0; d <= fs[static_cast<std::size_t>(col - 1)].degree(); ++d)
                A(d, col) = Rational(fs[static_cast<std::size_t>(col - 1)].coeff(d));
        const auto K = kernel(A);
        if (K.empty()) continue;
        // The prefix through j-1 is independent, so the kernel is spanned by
        // one vector with a nonzero coefficient on column j.
        std::vector<Int> z = primitive_scale(K.front());
        if (z[static_cast<std::size_t>(j)] > 0) negate(z);
        std::vector<Rational> out(static_cast<std::size_t>(N) + 1, Rational(0));
        for (int i = 0; i <= j; ++i) out[static_cast<std::size_t>(i)] = Rational(z[static_cast<std::size_t>(i)]);
        return out;
    }
    return std::nullopt;
}

// Nonzero rational v with F(x) v constant for every row, as the kernel of
// the degree >= 1 coefficient conditions; nullopt when none exists.
std::optional<std::vector<Rational>> constant_combination_witness(const MatP& F) {
    const int m = F.rows(), n = F.cols();
    int D = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) D = std::max(D, F(i, j).degree());
    MatQ A(m * std::max(D, 0), n);
    int r = 0;
    for (int i = 0; i < m; ++i)
        for (int d = 1; d <= D; ++d, ++r)
            for (int j = 0; j < n; ++j) A(r, j) = Rational(F(i, j).coeff(d));
    const auto K = kernel(A);
    if (K.empty()) return std::nullopt;
    std::vector<Int> z = primitive_scale(K.front());
    int first = -1;
    for (std::size_t i = 0; i < z.size(); ++i)
        if (z[i] != 0) { first = static_cast<int>(i); break; }
    if (first >= 0 && z[static_cast<std::size_t>(first)] < 0) negate(z);
    std::vector<Rational> out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) out[i] = Rational(z[i]);
    return out;
}

} // namespace

std::string to_string(ObstructionKind k) {
    switch (k) {
        case ObstructionKind::row_planar: return "row-planar";
        case ObstructionKind::column_planar: return "column-planar";
        case ObstructionKind::case1: return "case1";
        case ObstructionKind::case2: return "case2";
        case ObstructionKind::none_found: return "none-found";
        case ObstructionKind::not_checked: return "not-checked";
    }
    return "unknown";
}

std::optional<std::vector<Rational>> affine_relation(const std::vector<Poly>& fs) {
    return dependence_with_constant(fs);
}

bool NonplanarReport::all_rows_nonplanar() const {
    for (bool b : row_nonplanar)
        if (!b) return false;
    return true;
}

bool NonplanarReport::all_cols_nonplanar() const {
    for (bool b : col_nonplanar)
        if (!b) return false;
    return true;
}

NonplanarReport row_col_nonplanar(const MatP& F) {
    require(F.rows() >= 1 && F.cols() >= 1, "row_col_nonplanar: empty matrix");
    NonplanarReport rep;
    for (int i = 0; i < F.rows(); ++i) {
        std::vector<Poly> row(static_cast<std::size_t>(F.cols()));
        for (int j = 0; j < F.cols(); ++j) row[static_cast<std::size_t>(j)] = F(i, j);
        rep.row_nonplanar.push_back(!dependence_with_constant(row).has_value());
    }
    for (int j = 0; j < F.cols(); ++j) {
        std::vector<Poly> col(static_cast<std::size_t>(F.rows()));
        for (int i = 0; i < F.rows(); ++i) col[static_cast<std::size_t>(i)] = F(i, j);
        rep.col_nonplanar.push_back(!dependence_with_constant(col).has_value());
    }
    rep.constant_combination = constant_combination_witness(F);
    rep.no_constant_combination = !rep.constant_combination.has_value();
    rep.transpose_constant_combination = constant_combination_witness(F.transpose());
    rep.transpose_no_constant_combination = !rep.transpose_constant_combination.has_value();
    return rep;
}

ObstructionCertificate detect_case1(const MatP& F, long height) {
    require(height >= 1, "detect_case1: height must be >= 1");
    require(F.rows() >= 1 && F.cols() >= 1, "detect_case1: empty matrix");
    const int m = F.rows(), n = F.cols();
    if (m < 2) {
        // With one row there are no 2x2 minors: every combination is
        // trivially "proportional", so the search carries no information.
        ObstructionCertificate c;
        c.kind = ObstructionKind::not_checked;
        c.height = height;
        c.detail = "column-combination proportionality needs at least two rows";
        return c;
    }
    for (auto& q : height_box_vectors(n, height, /*canonical_sign=*/true)) {
        const std::vector<Poly> g = combine_columns(F, q);
        ObstructionCertificate c;
        c.kind = ObstructionKind::case1;
        c.height = height;
        c.q = q;
        if (all_zero(g)) {
            c.u.assign(static_cast<std::size_t>(m), Int(0));
            c.degenerate = true;
            c.factor_num = Poly();
            c.factor_den = Poly(1);
            c.detail = "degenerate: F(x) q vanishes identically for q = " + int_vec_to_string(q);
            require(verify_certificate(F, c), "detect_case1: certificate failed verification");
            return c;
        }
        // g = c(x) u forces every nonzero entry to share one degree, and u to
        // be the (primitive) vector of coefficients at that degree.
        int D = -1;
        bool uniform = true;
        for (const auto& p : g) {
            if (p.is_zero()) continue;
            if (D < 0) D = p.degree();
            else if (p.degree() != D) { uniform = false; break; }
        }
        if (!uniform) continue;
        std::vector<Rational> raw(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) raw[static_cast<std::size_t>(i)] = Rational(g[static_cast<std::size_t>(i)].coeff(D));
        std::vector<Int> u = primitive_scale(raw);
        int first = -1;
        for (int i = 0; i < m; ++i)
            if (u[static_cast<std::size_t>(i)] != 0) { first = i; break; }
        if (u[static_cast<std::size_t>(first)] < 0) negate(u);
        bool proportional = true;
        for (int i = 0; i < m && proportional; ++i)
            for (int j = i + 1; j < m && proportional; ++j)
                proportional = g[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(j)] ==
                               g[static_cast<std::size_t>(j)] * u[static_cast<std::size_t>(i)];
        if (!proportional) continue;
        c.u = u;
        set_reduced_factor(c, g[static_cast<std::size_t>(first)], Poly(u[static_cast<std::size_t>(first)]));
        c.detail = "F(x) q = (" + factor_to_string(c) + ") * " + int_vec_to_string(u) +
                   " for q = " + int_vec_to_string(q);
        require(verify_certificate(F, c), "detect_case1: certificate failed verification");
        return c;
    }
    ObstructionCertificate none;
    none.kind = ObstructionKind::none_found;
    none.height = height;
    none.detail = "no integer combination of columns with ||q||_inf <= " + std::to_string(height) +
                  " is proportional to a fixed integer vector";
    return none;
}

ObstructionCertificate detect_case2(const MatP& F, long height) {
    require(height >= 1, "detect_case2: height must be >= 1");
    require(F.rows() >= 1 && F.cols() >= 1, "detect_case2: empty matrix");
    const int m = F.rows();
    if (F.cols() != 2 || m < 2) {
        ObstructionCertificate c;
        c.kind = ObstructionKind::not_checked;
        c.height = height;
        c.detail = F.cols() != 2
                       ? "column-translate proportionality search covers two-column matrices only"
                       : "column-translate proportionality needs at least two rows";
        return c;
    }
    std::vector<Poly> y1(static_cast<std::size_t>(m)), y2(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        y1[static_cast<std::size_t>(i)] = F(i, 0);
        y2[static_cast<std::size_t>(i)] = F(i, 1);
    }
    // Cells in (||u1||_inf, a, lex u1) order: the box enumeration is already
    // (norm, lex)-sorted, so bucket it into norm shells.
    std::vector<std::vector<std::vector<Int>>> shells(static_cast<std::size_t>(height) + 1);
    for (auto& u1 : height_box_vectors(m, height, /*canonical_sign=*/false))
        shells[inf_norm(u1).get_ui()].push_back(std::move(u1));

    for (long norm = 0; norm <= height; ++norm)
        for (long a = 1; a <= height; ++a)
            for (const auto& u1 : shells[static_cast<std::size_t>(norm)]) {
                std::vector<Poly> P(static_cast<std::size_t>(m));
                for (int i = 0; i < m; ++i)
                    P[static_cast<std::size_t>(i)] = Poly(u1[static_cast<std::size_t>(i)]) +
                                                     y1[static_cast<std::size_t>(i)] * Int(a);
                if (all_zero(P)) continue;
                // Proportionality of (P, u2 + b y2) is linear in z = (u2, b):
                // for each pair i < j,  P_i u2_j - P_j u2_i + b (P_i y2_j - P_j y2_i) = 0.
                struct Eq { int i, j; Poly bpart; };
                std::vector<Eq> eqs;
                int rows = 0;
                for (int i = 0; i < m; ++i)
                    for (int j = i + 1; j < m; ++j) {
                        Eq e{i, j, P[static_cast<std::size_t>(i)] * y2[static_cast<std::size_t>(j)] -
                                       P[static_cast<std::size_t>(j)] * y2[static_cast<std::size_t>(i)]};
                        int deg = std::max({P[static_cast<std::size_t>(i)].degree(),
                                            P[static_cast<std::size_t>(j)].degree(), e.bpart.degree()});
                        rows += deg + 1;
                        eqs.push_back(std::move(e));
                    }
                MatQ A(std::max(rows, 0), m + 1);
                int r = 0;
                for (const auto& e : eqs) {
                    const Poly& Pi = P[static_cast<std::size_t>(e.i)];
                    const Poly& Pj = P[static_cast<std::size_t>(e.j)];
                    const int deg = std::max({Pi.degree(), Pj.degree(), e.bpart.degree()});
                    for (int d = 0; d <= deg; ++d, ++r) {
                        A(r, e.j) = Rational(Pi.coeff(d));
                        A(r, e.i) = Rational(-Pj.coeff(d));
                        A(r, m) = Rational(e.bpart.coeff(d));
                    }
                }
                const auto K = kernel(A);
                // Integer-scaled b = 0 kernel directions, used to pull u2
                // back into the height box when the solution line allows it.
                std::vector<std::vector<Int>> slack;
                for (const auto& kv : K)
                    if (kv[static_cast<std::size_t>(m)] == 0) slack.push_back(primitive_scale(kv));
                for (const auto& kv : K) {
                    if (kv[static_cast<std::size_t>(m)] == 0) continue;
                    std::vector<Int> z = primitive_scale(kv);
                    if (z[static_cast<std::size_t>(m)] < 0) negate(z);
                    const Int b = z[static_cast<std::size_t>(m)];
                    if (b > height) continue;
                    std::vector<Int> u2(z.begin(), z.end() - 1);
                    for (const auto& w : slack) {
                        // One-dimensional scan minimizing ||u2 + t w||_inf.
                        Int best_norm = inf_norm(u2);
                        long best_t = 0;
                        for (long t = -4 * height; t <= 4 * height; ++t) {
                            if (t == 0) continue;
                            std::vector<Int> cand = u2;
                            for (int i = 0; i < m; ++i) cand[static_cast<std::size_t>(i)] += w[static_cast<std::size_t>(i)] * t;
                            const Int cn = inf_norm(cand);
                            if (cn < best_norm) { best_norm = cn; best_t = t; }
                        }
                        if (best_t != 0)
                            for (int i = 0; i < m; ++i)
                                u2[static_cast<std::size_t>(i)] += w[static_cast<std::size_t>(i)] * best_t;
                    }
                    if (inf_norm(u2) > height) continue;
                    std::vector<Poly> Q(static_cast<std::size_t>(m));
                    for (int i = 0; i < m; ++i)
                        Q[static_cast<std::size_t>(i)] = Poly(u2[static_cast<std::size_t>(i)]) +
                                                         y2[static_cast<std::size_t>(i)] * b;
                    ObstructionCertificate c;
                    c.kind = ObstructionKind::case2;
                    c.height = height;
                    c.a = Int(a);
                    c.b = b;
                    c.u1 = u1;
                    c.u2 = u2;
                    c.translate_free = all_zero(u1) && all_zero(u2);
                    if (all_zero(Q)) {
                        c.degenerate = true;
                        c.factor_num = Poly();
                        c.factor_den = Poly(1);
                    } else {
                        int first = -1;
                        for (int i = 0; i < m; ++i)
                            if (!P[static_cast<std::size_t>(i)].is_zero()) { first = i; break; }
                        set_reduced_factor(c, Q[static_cast<std::size_t>(first)], P[static_cast<std::size_t>(first)]);
                    }
                    std::ostringstream os;
                    os << "(u2 + b y2) = (" << factor_to_string(c) << ") * (u1 + a y1) with a=" << a
                       << ", b=" << b.get_str() << ", u1=" << int_vec_to_string(u1)
                       << ", u2=" << int_vec_to_string(u2)
                       << (c.translate_free ? " (columns proportional)" : "");
                    c.detail = os.str();
                    require(verify_certificate(F, c), "detect_case2: certificate failed verification");
                    return c;
                }
            }
    ObstructionCertificate none;
    none.kind = ObstructionKind::none_found;
    none.height = height;
    none.detail = "no proportional integer translates of integer multiples of the columns with "
                  "a, b in [1," + std::to_string(height) + "] and ||u||_inf <= " + std::to_string(height);
    return none;
}

bool d_nondegenerate(const MatP& F) {
    require(F.rows() >= 1 && F.cols() >= 1, "d_nondegenerate: empty matrix");
    return !dependence_with_constant(minors_vector(F)).has_value();
}

ObstructionCertificate find_obstruction(const MatP& F, long height) {
    require(height >= 1, "find_obstruction: height must be >= 1");
    const NonplanarReport rep = row_col_nonplanar(F);
    for (int i = 0; i < F.rows(); ++i) {
        if (rep.row_nonplanar[static_cast<std::size_t>(i)]) continue;
        std::vector<Poly> row(static_cast<std::size_t>(F.cols()));
        for (int j = 0; j < F.cols(); ++j) row[static_cast<std::size_t>(j)] = F(i, j);
        ObstructionCertificate c;
        c.kind = ObstructionKind::row_planar;
        c.height = height;
        c.line_index = i;
        c.relation = *dependence_with_constant(row);
        c.detail = "row " + std::to_string(i) + " satisfies an affine dependence";
        require(verify_certificate(F, c), "find_obstruction: certificate failed verification");
        return c;
    }
    for (int j = 0; j < F.cols(); ++j) {
        if (rep.col_nonplanar[static_cast<std::size_t>(j)]) continue;
        std::vector<Poly> col(static_cast<std::size_t>(F.rows()));
        for (int i = 0; i < F.rows(); ++i) col[static_cast<std::size_t>(i)] = F(i, j);
        ObstructionCertificate c;
        c.kind = ObstructionKind::column_planar;
        c.height = height;
        c.line_index = j;
        c.relation = *dependence_with_constant(col);
        c.detail = "column " + std::to_string(j) + " satisfies an affine dependence";
        require(verify_certificate(F, c), "find_obstruction: certificate failed verification");
        return c;
    }
    ObstructionCertificate c1 = detect_case1(F, height);
    if (c1.kind == ObstructionKind::case1) return c1;
    ObstructionCertificate c2 = detect_case2(F, height);
    if (c2.kind == ObstructionKind::case2) return c2;
    ObstructionCertificate none;
    none.kind = ObstructionKind::none_found;
    none.height = height;
    none.detail = "rows and columns nonplanar; no column-combination or column-translate "
                  "obstruction at height " + std::to_string(height) +
                  (F.cols() != 2 ? " (column-translate search covers two-column matrices only)" : "");
    return none;
}

namespace {

// The affine dependence re-verified: sum of rel[0]*1 + rel[k]*fs[k-1] must be
// the zero polynomial, with at least one nonzero coefficient.
bool relation_holds(const std::vector<Poly>& fs, const std::vector<Rational>& rel) {
    if (rel.size() != fs.size() + 1) return false;
    bool nontrivial = false;
    for (const auto& c : rel)
        if (c != 0) { nontrivial = true; break; }
    if (!nontrivial) return false;
    const Int den = common_denominator(rel);
    Poly acc;
    for (std::size_t i = 0; i < rel.size(); ++i) {
        Rational s = rel[i] * Rational(den);
        const Int ci = s.get_num();
        if (i == 0) acc += Poly(ci);
        else acc += fs[i - 1] * ci;
    }
    return acc.is_zero();
}

} // namespace

bool verify_certificate(const MatP& F, const ObstructionCertificate& c) {
    const int m = F.rows(), n = F.cols();
    switch (c.kind) {
        case ObstructionKind::row_planar: {
            if (c.line_index < 0 || c.line_index >= m) return false;
            std::vector<Poly> row(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = F(c.line_index, j);
            return relation_holds(row, c.relation);
        }
        case ObstructionKind::column_planar: {
            if (c.line_index < 0 || c.line_index >= n) return false;
            std::vector<Poly> col(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) col[static_cast<std::size_t>(i)] = F(i, c.line_index);
            return relation_holds(col, c.relation);
        }
        case ObstructionKind::case1: {
            if (static_cast<int>(c.q.size()) != n || static_cast<int>(c.u.size()) != m) return false;
            if (all_zero(c.q)) return false;
            const std::vector<Poly> g = combine_columns(F, c.q);
            if (c.degenerate) return all_zero(g) && all_zero(c.u) && c.factor_num.is_zero();
            if (all_zero(c.u)) return false;
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    if (g[static_cast<std::size_t>(i)] * c.u[static_cast<std::size_t>(j)] !=
                        g[static_cast<std::size_t>(j)] * c.u[static_cast<std::size_t>(i)])
                        return false;
            if (c.factor_den.is_zero()) return false;
            for (int i = 0; i < m; ++i)
                if (g[static_cast<std::size_t>(i)] * c.factor_den !=
                    c.factor_num * c.u[static_cast<std::size_t>(i)])
                    return false;
            return true;
        }
        case ObstructionKind::case2: {
            if (n != 2) return false;
            if (static_cast<int>(c.u1.size()) != m || static_cast<int>(c.u2.size()) != m) return false;
            if (c.a < 1 || c.b < 1) return false;
            std::vector<Poly> P(static_cast<std::size_t>(m)), Q(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) {
                P[static_cast<std::size_t>(i)] = Poly(c.u1[static_cast<std::size_t>(i)]) + F(i, 0) * c.a;
                Q[static_cast<std::size_t>(i)] = Poly(c.u2[static_cast<std::size_t>(i)]) + F(i, 1) * c.b;
            }
            if (all_zero(P)) return false;
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    if (P[static_cast<std::size_t>(i)] * Q[static_cast<std::size_t>(j)] !=
                        P[static_cast<std::size_t>(j)] * Q[static_cast<std::size_t>(i)])
                        return false;
            if (c.translate_free != (all_zero(c.u1) && all_zero(c.u2))) return false;
            if (c.degenerate) return all_zero(Q) && c.factor_num.is_zero();
            if (c.factor_den.is_zero()) return false;
            for (int i = 0; i < m; ++i)
                if (Q[static_cast<std::size_t>(i)] * c.factor_den !=
                    P[static_cast<std::size_t>(i)] * c.factor_num)
                    return false;
            return true;
        }
        case ObstructionKind::none_found:
        case ObstructionKind::not_checked:
            return true;
    }
    return false;
}

Json json_of(const ObstructionCertificate& c) {
    Json j;
    j["kind"] = to_string(c.kind);
    j["height"] = c.height;
    switch (c.kind) {
        case ObstructionKind::row_planar:
        case ObstructionKind::column_planar:
            j["line_index"] = c.line_index;
            j["relation"] = json_of(c.relation);
            break;
        case ObstructionKind::case1:
            j["q"] = json_of(c.q);
            j["u"] = json_of(c.u);
            j["degenerate"] = c.degenerate;
            j["factor_num"] = json_of(c.factor_num);
            j["factor_den"] = json_of(c.factor_den);
            j["factor"] = factor_to_string(c);
            break;
        case ObstructionKind::case2:
            j["a"] = c.a.get_str();
            j["b"] = c.b.get_str();
            j["u1"] = json_of(c.u1);
            j["u2"] = json_of(c.u2);
            j["translate_free"] = c.translate_free;
            j["degenerate"] = c.degenerate;
            j["factor_num"] = json_of(c.factor_num);
            j["factor_den"] = json_of(c.factor_den);
            j["factor"] = factor_to_string(c);
            break;
        case ObstructionKind::none_found:
        case ObstructionKind::not_checked:
            break;
    }
    j["detail"] = c.detail;
    return j;
}

} // namespace latflow
