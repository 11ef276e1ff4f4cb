/* Internal preprocessing for the lattice searches: floating-point LLL that
 * tracks an exact unimodular transform, and a Fincke–Pohst / Schnorr–Euchner
 * style enumerator over a floating quadratic form.  This is deliberately not
 * a public reduction library; the exactness story lives in the callers,
 * which re-verify every candidate with exact arithmetic.  Floating-point
 * noise here can cost work, never correctness.
 */
#pragma once

#include <functional>
#include <vector>

#include "latflow/mat.hpp"

namespace latflow::detail {

using DCols = std::vector<std::vector<double>>;  // cols[j][i], column-major

/// LLL (delta = 0.99) on floating columns; returns the exact unimodular U
/// accumulated from the swap/size-reduction steps.  `ok` is false when the
/// Gram–Schmidt data degenerated (caller should retry or give up), but U is
/// unimodular either way.
struct LllOutcome {
    MatZ U;
    bool ok;
};
LllOutcome lll_unimodular(DCols cols, double delta = 0.99);

/// Gram–Schmidt data of a floating basis: mu[i][j] (j < i) and squared
/// orthogonal lengths c[i].  Returns false when some c[i] fails to be a
/// strictly positive finite number.
struct GsoData {
    std::vector<std::vector<double>> mu;
    std::vector<double> c;
};
bool gram_schmidt(const DCols& cols, GsoData& out);

/// Enumerate every nonzero integer vector x with Q(x) <= bound, where
/// Q(x) = sum_i c[i] (x_i + sum_{j>i} mu[j][i] x_j)^2, in the canonical sign
/// convention: the outermost (highest-index) nonzero coordinate is positive.
/// The visitor receives x; node and candidate budgets throw BudgetError.
void enumerate_quadratic(const GsoData& gso, double bound,
                         const std::function<void(const std::vector<long>&)>& visit,
                         long node_cap = 50'000'000, long candidate_cap = 2'000'000);

} // namespace latflow::detail
