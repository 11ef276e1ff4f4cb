/* Exterior algebra of R^k, k = m + n, over the split basis
 *   e_I ∧ v_J,   I ⊆ {1..m}, J ⊆ {1..n},
 * with the two group actions the dictionary needs:
 *
 *   u_Y  (unipotent):  u_Y e_i = e_i,  u_Y v_j = v_j + Σ_i y_{ij} e_i,
 *   extended to ⋀^ℓ by  u_Y(e_I∧v_J) = Σ_{L⊆J} Σ_{K⊆{1..m}∖I, |K|=|L|}
 *       sign_v(L,J) · sign_e(I,K) · y_{K,L} · e_{I∪K} ∧ v_{J∖L},
 *   where y_{K,L} = det Y[K,L], sign_v(L,J) counts the transpositions that
 *   pull the chosen v_L factors in front of the untouched ones, and
 *   sign_e(I,K) the transpositions that merge e_K into e_I;
 *
 *   g_t  (diagonal):   every blade is an eigenvector with eigenvalue
 *   exp(Σ_{i∈I} t_i − Σ_{j∈J} t_{m+j}).
 *
 * Coefficients are a template parameter: exact rationals for the lattice
 * work, integer polynomials for symbolic matrix curves, doubles only in the
 * explicitly approximate g_action.
 *
 * find_witness implements the constructive step behind the escape analysis:
 * given an integer multivector w ≠ 0 of grade 1..k-1 it produces a blade w₀
 * in the span of {e_I, e_{1..m}∧v_J} and the exact symbolic expansion of
 * Y ↦ ⟨u_Y w, w₀⟩ as an integer combination of 1 and minors of Y, which is
 * automatically nontrivial.
 */
#pragma once

#include <map>
#include <string>

#include "latflow/combinat.hpp"
#include "latflow/flow_vector.hpp"
#include "latflow/io.hpp"
#include "latflow/mat.hpp"

namespace latflow {

struct BasisBlade {
    IndexSet I, J;  // strictly increasing, 1-based
    int grade() const { return static_cast<int>(I.size() + J.size()); }
    friend auto operator<=>(const BasisBlade&, const BasisBlade&) = default;
};

std::string to_string(const BasisBlade& b);

template <class R>
class MultiVector {
public:
    MultiVector(int m, int n) : m_(m), n_(n) {
        require(m >= 1 && n >= 1, "MultiVector: need m, n >= 1");
    }

    static MultiVector blade_unit(int m, int n, BasisBlade b, R coeff = R(1)) {
        MultiVector w(m, n);
        w.add_term(std::move(b), std::move(coeff));
        return w;
    }
    /// The basis vector e_i (1-based).
    static MultiVector e(int m, int n, int i) { return blade_unit(m, n, BasisBlade{{i}, {}}); }
    /// The basis vector v_j (1-based).
    static MultiVector v(int m, int n, int j) { return blade_unit(m, n, BasisBlade{{}, {j}}); }

    int m() const { return m_; }
    int n() const { return n_; }
    int k() const { return m_ + n_; }
    bool is_zero() const { return c_.empty(); }
    /// Grade of a nonzero homogeneous multivector; -1 when zero.
    int grade() const { return c_.empty() ? -1 : c_.begin()->first.grade(); }
    std::size_t term_count() const { return c_.size(); }

    void add_term(BasisBlade b, R coeff) {
        validate_blade(b);
        if (coeff == R(0)) return;
        require(c_.empty() || b.grade() == grade(), "MultiVector: mixed grades");
        auto it = c_.find(b);
        if (it == c_.end()) {
            c_.emplace(std::move(b), std::move(coeff));
        } else {
            it->second += coeff;
            if (it->second == R(0)) c_.erase(it);
        }
    }

    R coeff(const BasisBlade& b) const {
        auto it = c_.find(b);
        return it == c_.end() ? R(0) : it->second;
    }

    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }

    MultiVector operator+(const MultiVector& o) const {
        check_shape(o);
        MultiVector s = *this;
        for (const auto& [b, c] : o.c_) s.add_term(b, c);
        return s;
    }
    MultiVector operator-() const {
        MultiVector s = *this;
        for (auto& [b, c] : s.c_) c = -c;
        return s;
    }
    MultiVector operator-(const MultiVector& o) const { return *this + (-o); }
    MultiVector scaled(const R& f) const {
        MultiVector s(m_, n_);
        if (f == R(0)) return s;
        s.c_ = c_;
        for (auto& [b, c] : s.c_) c = c * f;
        return s;
    }

    bool operator==(const MultiVector& o) const {
        return m_ == o.m_ && n_ == o.n_ && c_ == o.c_;
    }

    /// Squared Euclidean norm in the orthonormal blade basis.
    R norm_sq() const {
        R s(0);
        for (const auto& [b, c] : c_) s += c * c;
        return s;
    }

    void check_shape(const MultiVector& o) const {
        require(m_ == o.m_ && n_ == o.n_, "MultiVector: shape mismatch");
    }

private:
    void validate_blade(const BasisBlade& b) const {
        int prev = 0;
        for (int i : b.I) {
            require(i > prev && i <= m_, "MultiVector: bad e-index in blade");
            prev = i;
        }
        prev = 0;
        for (int j : b.J) {
            require(j > prev && j <= n_, "MultiVector: bad v-index in blade");
            prev = j;
        }
    }

    int m_, n_;
    std::map<BasisBlade, R> c_;
};

using MV = MultiVector<Rational>;

/// Antisymmetric bilinear product with the sign bookkeeping induced by the
/// ordered basis (e_1,...,e_m,v_1,...,v_n).
template <class R>
MultiVector<R> wedge(const MultiVector<R>& a, const MultiVector<R>& b) {
    a.check_shape(b);
    MultiVector<R> out(a.m(), a.n());
    if (a.is_zero() || b.is_zero()) return out;
    require(a.grade() + b.grade() <= a.k(), "wedge: grade overflow");
    for (const auto& [ba, ca] : a) {
        for (const auto& [bb, cb] : b) {
            IndexSet I, J;
            int se = merge_sign(ba.I, bb.I, &I);
            if (se == 0) continue;
            int sv = merge_sign(ba.J, bb.J, &J);
            if (sv == 0) continue;
            // moving bb.I's e-factors left past ba.J's v-factors flips one
            // sign per crossing
            int cross = (ba.J.size() * bb.I.size()) % 2 == 0 ? 1 : -1;
            R term = ca * cb;
            if (se * sv * cross < 0) term = -term;
            out.add_term(BasisBlade{std::move(I), std::move(J)}, std::move(term));
        }
    }
    return out;
}

/// u_Y w via the minor expansion in the file comment.  Works over any exact
/// coefficient ring (rationals, integer polynomials).
template <class R>
MultiVector<R> u_action(const Mat<R>& Y, const MultiVector<R>& w) {
    require(Y.rows() == w.m() && Y.cols() == w.n(), "u_action: shape mismatch");
    MultiVector<R> out(w.m(), w.n());
    const IndexSet all_rows = full_range(w.m());
    for (const auto& [b, c] : w) {
        const IndexSet comp = set_difference(all_rows, b.I);
        // L runs over subsets of J (any size that fits in comp)
        const int lmax = static_cast<int>(std::min(comp.size(), b.J.size()));
        for (int s = 0; s <= lmax; ++s) {
            for (const auto& L : subsets_of_size(b.J, s)) {
                const IndexSet Jrem = set_difference(b.J, L);
                const int sign_v = merge_inversions(L, Jrem) % 2 == 0 ? 1 : -1;
                for (const auto& K : subsets_of_size(comp, s)) {
                    R minor_KL = s == 0 ? R(1) : Y.submatrix(K, L).det();
                    if (minor_KL == R(0)) continue;
                    IndexSet IK;
                    int sign_e = merge_sign(b.I, K, &IK);
                    R term = c * minor_KL;
                    if (sign_v * sign_e < 0) term = -term;
                    out.add_term(BasisBlade{std::move(IK), Jrem}, std::move(term));
                }
            }
        }
    }
    return out;
}

/// Exact eigenvalue of g_t on a blade: exp(Σ_{i∈I} t_i − Σ_{j∈J} t_{m+j}).
XReal g_eigenvalue(const FlowVector& t, const BasisBlade& b);

/// Its logarithm as a double (for display and fits).
double g_log_eigenvalue(const FlowVector& t, const BasisBlade& b);

/// Exact log-eigenvalue when the flow was built from rational exponents.
std::optional<Rational> g_log_eigenvalue_exact(const FlowVector& t, const BasisBlade& b);

/// g_t w with double coefficients (explicitly approximate; all verdicts are
/// made on exact eigenvalues and exact coefficients elsewhere).
MultiVector<double> g_action(const FlowVector& t, const MV& w);

/// Orthogonal projection onto E_t^+ = span of blades with nonnegative
/// log-eigenvalue: drops every blade with eigenvalue < 1, exactly.
template <class R>
MultiVector<R> project_plus(const FlowVector& t, const MultiVector<R>& w) {
    require(t.m() == w.m() && t.n() == w.n(), "project_plus: shape mismatch");
    MultiVector<R> out(w.m(), w.n());
    for (const auto& [b, c] : w)
        if (g_eigenvalue(t, b).cmp(XReal()) != std::strong_ordering::less) out.add_term(b, c);
    return out;
}

/// Projection onto E^+ = span{ e_I (all I), e_{1..m} ∧ v_J (all J) }.
template <class R>
MultiVector<R> project_Eplus(const MultiVector<R>& w) {
    MultiVector<R> out(w.m(), w.n());
    for (const auto& [b, c] : w)
        if (b.J.empty() || static_cast<int>(b.I.size()) == w.m()) out.add_term(b, c);
    return out;
}

/// Symbolic linear form  Y ↦ Σ coeff · y_{K,L}  over minor positions, with
/// the empty position standing for the constant 1.
struct WitnessForm {
    BasisBlade w0;                  // target blade in the E^+ basis
    std::map<IndexPair, Int> terms; // minor position -> integer coefficient
    bool degenerate = false;        // grade 0 or k: constant form
    int proof_case = 0;             // 1 or 2 (0 when degenerate)

    Rational eval(const MatQ& Y) const;
    bool nontrivial() const;
    std::string to_string() const;
};

/// Constructive escape form for an integer multivector w != 0: a blade w₀
/// with ⟨u_Y w, w₀⟩ expanded exactly as an integer combination of 1 and
/// minors of Y.  Grade ℓ ≤ m follows proof case 1 (w₀ = e_{I∪K}), grade
/// ℓ > m case 2 (w₀ = e_{1..m} ∧ v_{J∖K}); ties are broken by picking the
/// lexicographically smallest source blade and completion K.  Grades 0 and
/// k return the constant form, flagged degenerate.
WitnessForm find_witness(const MV& w);

/// Coefficient of `target` in u_Y(source) as a signed minor position;
/// nullopt when that coefficient is identically zero.  Exposed for tests.
std::optional<std::pair<int, IndexPair>> symbolic_u_coeff(int m, const BasisBlade& source,
                                                          const BasisBlade& target);

// JSON round trip for rational multivectors: [{"I":[...],"J":[...],"coeff":"p/q"}, ...]
Json json_of(const MV& w);
MV mv_from_json(int m, int n, const Json& j);

} // namespace latflow
