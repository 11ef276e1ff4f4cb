/* Shared internals of the lattice searches: conversions between exact and
 * floating bases, the iterated-LLL transform, and the running-minimum
 * tracker that combines a double prefilter with exact comparisons.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "latflow/lattice.hpp"
#include "reduction.hpp"

namespace latflow::detail {

inline std::vector<Rational> vec_q(const std::vector<Int>& x) {
    std::vector<Rational> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = Rational(x[i]);
    return r;
}

inline MatQ mat_q(const MatZ& A) {
    MatQ B(A.rows(), A.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) B(i, j) = Rational(A(i, j));
    return B;
}

/// Flip signs so the first nonzero entry is positive; no-op on zero.
inline void canonical_sign(std::vector<Int>& y) {
    for (const Int& v : y) {
        if (v == 0) continue;
        if (v < 0)
            for (Int& w : y) w = -w;
        return;
    }
}

inline bool lex_less(const std::vector<Int>& a, const std::vector<Int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Scaled columns of B as doubles (column-major).
inline DCols double_columns(const LatticeBasis& B) {
    const int k = B.k();
    std::vector<double> sd(static_cast<std::size_t>(k));
    for (int l = 0; l < k; ++l) sd[static_cast<std::size_t>(l)] = B.scale()[l].to_double();
    DCols cols(static_cast<std::size_t>(k), std::vector<double>(static_cast<std::size_t>(k)));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i)
            cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                sd[static_cast<std::size_t>(i)] * to_double(B.columns()(i, j));
    return cols;
}

inline MatQ scaled_times_u(const LatticeBasis& B, const MatZ& U) {
    return B.columns() * mat_q(U);
}

/// Iterated floating LLL from fresh exact data; returns the accumulated
/// exact unimodular transform.  A pass that degenerates keeps the transform
/// found so far (the caller's Gram-Schmidt check decides usability).
inline MatZ reduce_transform(const LatticeBasis& B) {
    const int k = B.k();
    MatZ U = MatZ::identity(k);
    for (int pass = 0; pass < 4; ++pass) {
        LatticeBasis cur(B.m(), B.n(), scaled_times_u(B, U), B.scale());
        LllOutcome out = lll_unimodular(double_columns(cur));
        if (!out.ok) break;
        if (out.U == MatZ::identity(k)) break;
        U = U * out.U;
    }
    return U;
}

inline std::vector<Int> u_times(const MatZ& U, const std::vector<long>& x) {
    const int k = U.rows();
    std::vector<Int> y(static_cast<std::size_t>(k), Int(0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (x[static_cast<std::size_t>(j)] != 0)
                y[static_cast<std::size_t>(i)] += U(i, j) * Int(x[static_cast<std::size_t>(j)]);
    return y;
}

/// Running minimum with a double prefilter (1e-9 relative guard band) and
/// exact comparisons inside the band; ties broken by lexicographically
/// smallest tag vector.  The tag is the sign-normalized coefficient (or
/// blade-coordinate) vector identifying the candidate.
template <class Exact, class CmpExact>
struct BestTracker {
    std::vector<Int> tag;
    Exact exact{};
    double dbl = 0.0;
    bool set = false;

    /// True when the candidate is certainly worse than the incumbent by the
    /// double prefilter alone (no exact work needed).
    bool prefilter_worse(double cand_dbl) const {
        return set && std::isfinite(cand_dbl) && std::isfinite(dbl) &&
               cand_dbl > dbl * (1.0 + 1e-9);
    }

    void consider(std::vector<Int> cand_tag, Exact cand_exact, double cand_dbl,
                  const CmpExact& cmp) {
        if (!set) {
            tag = std::move(cand_tag);
            exact = std::move(cand_exact);
            dbl = cand_dbl;
            set = true;
            return;
        }
        if (std::isfinite(cand_dbl) && std::isfinite(dbl)) {
            if (cand_dbl > dbl * (1.0 + 1e-9)) return;
            if (cand_dbl < dbl * (1.0 - 1e-9)) {
                tag = std::move(cand_tag);
                exact = std::move(cand_exact);
                dbl = cand_dbl;
                return;
            }
        }
        std::strong_ordering c = cmp(cand_exact, exact);
        if (c == std::strong_ordering::greater) return;
        if (c == std::strong_ordering::equal && !lex_less(cand_tag, tag)) return;
        tag = std::move(cand_tag);
        exact = std::move(cand_exact);
        dbl = cand_dbl;
    }
};

} // namespace latflow::detail
