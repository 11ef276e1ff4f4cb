/* Scaled rational lattices: construction from a matrix, diagonal flows,
 * certified shortest-vector search in both norms, and the dual/transpose
 * symmetry.  The search pipeline is: floating LLL for a good basis (exact
 * unimodular transcript), floating enumeration for a complete candidate
 * list, exact re-scoring of every candidate.  Doubles steer, exact
 * arithmetic decides.
 */
#include "latflow/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "latflow/errors.hpp"
#include "lattice_internal.hpp"

namespace latflow {

// ------------------------------------------------------------ ApproxWitness

ApproxWitness make_witness(const MatQ& Y, std::vector<Int> q, std::vector<Int> p) {
    require(static_cast<int>(q.size()) == Y.cols(), "witness: q must have length n");
    require(static_cast<int>(p.size()) == Y.rows(), "witness: p must have length m");
    bool nonzero = false;
    for (const Int& v : q) nonzero = nonzero || v != 0;
    require(nonzero, "witness: q must be nonzero");
    ApproxWitness w{std::move(q), std::move(p), {}};
    std::vector<Rational> Yq = Y * detail::vec_q(w.q);
    w.residual.resize(Yq.size());
    for (std::size_t i = 0; i < Yq.size(); ++i) w.residual[i] = Yq[i] - Rational(w.p[i]);
    return w;
}

XReal weighted_sup(const FlowVector& t, const ApproxWitness& w) {
    require(t.m() == static_cast<int>(w.residual.size()) &&
                t.n() == static_cast<int>(w.q.size()),
            "weighted_sup: flow shape mismatch");
    std::optional<XReal> best;
    auto feed = [&](const Rational& coord, int l) {
        if (coord == 0) return;
        XReal cand = t.scale(l) * XReal::of(rabs(coord));
        if (!best || cand.cmp(*best) == std::strong_ordering::greater) best = cand;
    };
    for (int i = 0; i < t.m(); ++i) feed(w.residual[i], i);
    for (int j = 0; j < t.n(); ++j) feed(Rational(w.q[j]), t.m() + j);
    return *best;  // q nonzero, so at least one coordinate fed
}

// ------------------------------------------------------------- LatticeBasis

LatticeBasis::LatticeBasis(int m, int n, MatQ columns)
    : LatticeBasis(m, n, std::move(columns), {}) {}

LatticeBasis::LatticeBasis(int m, int n, MatQ columns, std::vector<XReal> scale)
    : m_(m), n_(n), k_(m + n), B_(std::move(columns)), scale_(std::move(scale)) {
    require(m_ >= 1 && n_ >= 1, "LatticeBasis: m and n must be positive");
    require(k_ <= 10, "LatticeBasis: dimension cap is 10");
    require(B_.rows() == k_ && B_.cols() == k_, "LatticeBasis: columns must be k x k");
    if (scale_.empty()) scale_.assign(static_cast<std::size_t>(k_), XReal());
    require(static_cast<int>(scale_.size()) == k_, "LatticeBasis: scale length mismatch");
    require(!(B_.det() == Rational(0)), "LatticeBasis: columns must be full rank");
}

std::vector<Rational> LatticeBasis::rational_part(const std::vector<Int>& x) const {
    require(static_cast<int>(x.size()) == k_, "LatticeBasis: coefficient length mismatch");
    return B_ * detail::vec_q(x);
}

XSum LatticeBasis::norm_sq(const std::vector<Int>& x) const {
    std::vector<Rational> r = rational_part(x);
    XSum s;
    for (int l = 0; l < k_; ++l)
        if (!(r[l] == 0)) s.add(r[l] * r[l], scale_[l].pow(Rational(2)));
    return s;
}

XReal LatticeBasis::sup_norm(const std::vector<Int>& x) const {
    std::vector<Rational> r = rational_part(x);
    std::optional<XReal> best;
    for (int l = 0; l < k_; ++l) {
        if (r[l] == 0) continue;
        XReal cand = scale_[l] * XReal::of(rabs(r[l]));
        if (!best || cand.cmp(*best) == std::strong_ordering::greater) best = cand;
    }
    require(best.has_value(), "sup_norm: zero vector");
    return *best;
}

XReal LatticeBasis::covolume() const {
    XReal c = XReal::of(rabs(B_.det()));
    for (const XReal& s : scale_) c *= s;
    return c;
}

LatticeBasis lambda_of(const MatQ& Y) {
    const int m = Y.rows(), n = Y.cols();
    require(m >= 1 && n >= 1, "lambda_of: matrix must be nonempty");
    MatQ B = MatQ::identity(m + n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) B(i, m + j) = Y(i, j);
    return LatticeBasis(m, n, std::move(B));
}

LatticeBasis apply_flow(const FlowVector& t, const LatticeBasis& B) {
    require(t.m() == B.m() && t.n() == B.n(), "apply_flow: shape mismatch");
    std::vector<XReal> s = B.scale();
    for (int l = 0; l < B.k(); ++l) s[l] *= t.scale(l);
    return LatticeBasis(B.m(), B.n(), B.columns(), std::move(s));
}

// ------------------------------------------------------------------ systole

SystoleResult systole(const LatticeBasis& B, Norm norm) {
    const int k = B.k();
    MatZ U = detail::reduce_transform(B);
    LatticeBasis red(B.m(), B.n(), detail::scaled_times_u(B, U), B.scale());

    detail::GsoData gso;
    if (!detail::gram_schmidt(detail::double_columns(red), gso))
        throw BudgetError("systole: scaled basis too skewed for floating preprocessing");

    // Initial bound from the best reduced column, measured exactly.  The
    // enumeration below is complete for the exact ball of that radius: the
    // 1e-6 inflation absorbs the floating error of the quadratic form, which
    // is tiny for an LLL-reduced basis.
    SystoleResult res;
    res.norm = norm;

    if (norm == Norm::euclidean) {
        double bound = 0.0;
        for (int j = 0; j < k; ++j) {
            double nj = B.norm_sq(U.col(j)).to_double();
            if (j == 0 || nj < bound) bound = nj;
        }
        if (!std::isfinite(bound) || bound <= 0.0)
            throw BudgetError("systole: column norms overflow doubles");
        auto cmp = [](const XSum& a, const XSum& b) { return a.cmp(b); };
        detail::BestTracker<XSum, decltype(cmp)> best;
        detail::enumerate_quadratic(gso, bound * (1.0 + 1e-6), [&](const std::vector<long>& x) {
            std::vector<Int> y = detail::u_times(U, x);
            detail::canonical_sign(y);
            XSum nsq = B.norm_sq(y);
            double d = nsq.to_double();
            best.consider(std::move(y), std::move(nsq), d, cmp);
        });
        require(best.set, "systole: enumeration returned no candidate");
        res.witness = best.tag;
        res.norm_sq = best.exact;
        res.value = std::sqrt(best.dbl);
    } else {
        double s0 = 0.0;
        for (int j = 0; j < k; ++j) {
            double sj = B.sup_norm(U.col(j)).to_double();
            if (j == 0 || sj < s0) s0 = sj;
        }
        if (!std::isfinite(s0) || s0 <= 0.0)
            throw BudgetError("systole: column norms overflow doubles");
        // Any vector with sup norm <= s has Euclidean norm <= sqrt(k) s, so a
        // Euclidean ball of that radius covers the sup-norm minimizer.
        double bound = static_cast<double>(k) * s0 * s0 * (1.0 + 1e-6);
        auto cmp = [](const XReal& a, const XReal& b) { return a.cmp(b); };
        detail::BestTracker<XReal, decltype(cmp)> best;
        detail::enumerate_quadratic(gso, bound, [&](const std::vector<long>& x) {
            std::vector<Int> y = detail::u_times(U, x);
            detail::canonical_sign(y);
            XReal s = B.sup_norm(y);
            double d = s.to_double();
            best.consider(std::move(y), std::move(s), d, cmp);
        });
        require(best.set, "systole: enumeration returned no candidate");
        res.witness = best.tag;
        res.sup_value = best.exact;
        res.value = best.dbl;
    }
    res.certified = true;
    return res;
}

bool SystoleResult::at_least(const XReal& eps) const {
    double e = eps.to_double();
    if (std::isfinite(value) && std::isfinite(e) && e > 0.0) {
        if (value >= e * (1.0 + 1e-9)) return true;
        if (value <= e * (1.0 - 1e-9)) return false;
    }
    if (norm == Norm::euclidean)
        return norm_sq.cmp(XSum::of_term(Rational(1), eps.pow(Rational(2)))) !=
               std::strong_ordering::less;
    return sup_value.cmp(eps) != std::strong_ordering::less;
}

bool in_K_eps(const LatticeBasis& B, const XReal& eps, Norm norm) {
    return systole(B, norm).at_least(eps);
}

// ----------------------------------------------------------------- duality

MatQ transference_dual(const MatQ& Y) { return -Y.transpose(); }

LatticeBasis dual_basis(const LatticeBasis& B) {
    MatQ Bstar = inverse(B.columns().transpose());
    std::vector<XReal> s;
    s.reserve(static_cast<std::size_t>(B.k()));
    for (const XReal& x : B.scale()) s.push_back(x.inv());
    return LatticeBasis(B.m(), B.n(), std::move(Bstar), std::move(s));
}

LatticeBasis dual_swapped(const LatticeBasis& B) {
    LatticeBasis d = dual_basis(B);
    const int k = B.k(), m = B.m(), n = B.n();
    MatQ C(k, k);
    std::vector<XReal> s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        int old = i < n ? m + i : i - n;  // block swap: last n coordinates first
        for (int j = 0; j < k; ++j) C(i, j) = d.columns()(old, j);
        s[static_cast<std::size_t>(i)] = d.scale()[static_cast<std::size_t>(old)];
    }
    return LatticeBasis(n, m, std::move(C), std::move(s));
}

bool same_lattice(const LatticeBasis& A, const LatticeBasis& B) {
    if (A.m() != B.m() || A.n() != B.n()) return false;
    for (int l = 0; l < A.k(); ++l)
        if (A.scale()[static_cast<std::size_t>(l)].cmp(B.scale()[static_cast<std::size_t>(l)]) !=
            std::strong_ordering::equal)
            return false;
    MatQ C = inverse(A.columns()) * B.columns();
    for (int i = 0; i < C.rows(); ++i)
        for (int j = 0; j < C.cols(); ++j) {
            Rational e = C(i, j);
            e.canonicalize();
            if (e.get_den() != 1) return false;
        }
    return rabs(C.det()) == 1;
}

// -------------------------------------------------------------------- JSON

Json json_of(const SystoleResult& r) {
    Json j;
    j["norm"] = r.norm == Norm::euclidean ? "euclidean" : "sup";
    j["value"] = r.value;
    Json w = Json::array();
    for (const Int& v : r.witness) w.push_back(v.get_str());
    j["witness"] = std::move(w);
    j["certified"] = r.certified;
    return j;
}

Json json_of(const PrimitiveResult& r) {
    Json j;
    j["ell"] = r.ell;
    j["value"] = r.value;
    Json terms = Json::array();
    for (const auto& [b, c] : r.witness) {
        Json t;
        t["I"] = b.I;
        t["J"] = b.J;
        t["coeff"] = c.get_str();
        terms.push_back(std::move(t));
    }
    j["witness"] = std::move(terms);
    j["certified"] = r.certified;
    j["height"] = r.height;
    j["outside_height_bound"] = r.outside_height_bound;
    return j;
}

} // namespace latflow
