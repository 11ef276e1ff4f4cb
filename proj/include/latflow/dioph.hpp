/* Direct Diophantine approximation for an m x n rational matrix Y.
 *
 * Notation: for a vector x, Pi(x) = prod |x_i| and Pi+(x) = prod max(|x_i|,1).
 * A witness is an integer pair (p, q), q != 0, with exact residual Yq - p.
 * The quality of q is measured either by the sup norm of the residual
 * (ordinary approximation) or by Pi of the residual against Pi+(q)
 * (multiplicative approximation).
 *
 * Beyond exhaustive best-approximation search and exponent estimation this
 * file provides three constructive steps that turn a good multiplicative
 * approximation into a diagonal-flow certificate:
 *
 *  - improve_solution: a pigeonhole scan over fractional parts of l*Yq
 *    upgrades a witness of Pi(Yq-p) <= Pi+(q)^{-(1+d0)} to a multiple
 *    q~ = (j-i)q that also satisfies the sup-norm bound
 *    ||Yq~-p~|| < Pi+(q~)^{-d/m} with the certified exponent
 *    d = d0/(m+n+1+n*d0).  Both output inequalities are re-verified in
 *    exact arithmetic before returning.
 *  - split_factors: given z_i < r with prod z_i < r^m / C and C > 1, the
 *    greedy rule C_i = min(r/z_i, C/prod_{j<i} C_j) on the descending-sorted
 *    z produces factors C_i >= 1 with prod C_i = C and C_i z_i <= r.
 *  - solution_to_time: a witness satisfying Pi(Yq-p) < Pi+(q)^{-(1+d)} and
 *    ||Yq-p|| < Pi+(q)^{-d/m} yields a balanced flow direction t with
 *    every component of g_t (Yq-p, q) at most e^{-gamma t},
 *    gamma = d s/(1+d n s).  All scale factors are power products of
 *    positive rationals, so the certificate is checked exactly.
 */
#pragma once

#include <utility>
#include <vector>

#include "latflow/flow_vector.hpp"
#include "latflow/io.hpp"
#include "latflow/lattice.hpp"
#include "latflow/mat.hpp"
#include "latflow/rational.hpp"
#include "latflow/xreal.hpp"

namespace latflow {

/// (Pi, Pi+) = (prod |x_i|, prod max(|x_i|, 1)), exact.
std::pair<Rational, Rational> prod_norms(const std::vector<Rational>& x);

/// Pi+(q) for an integer vector, as an integer.
Int pi_plus(const std::vector<Int>& q);

enum class ApproxObjective {
    sup,           ///< minimize ||Yq - p||_inf over 0 < ||q||_inf <= Q
    multiplicative ///< minimize Pi(Yq - p) over 0 < Pi+(q) <= Q^n
};

/// Best witness at height Q.  Since (p,q) and (-p,-q) carry the same errors,
/// only representatives with positive first nonzero coordinate of q are
/// enumerated; ties are broken by smallest ||q||_inf, then lexicographic q.
struct BestApproxResult {
    ApproxWitness witness;
    Rational sup_error;
    Rational pi_error;
    bool complete = true;    ///< false when the candidate budget cut the scan short
    long long examined = 0;  ///< candidates actually scored
};

inline constexpr long long kDefaultApproxBudget = 20'000'000;

/// Exhaustive best approximation under the chosen objective.  When the
/// candidate count exceeds `budget` the scan runs serially over a
/// deterministic prefix and the result is flagged incomplete instead of
/// failing outright.
BestApproxResult best_approx(const MatQ& Y, const Int& Q, ApproxObjective objective,
                             long long budget = kDefaultApproxBudget);

/// One rung of the geometric ladder: both objectives at height Q.
struct LadderRung {
    Int Q;
    BestApproxResult sup;  ///< sup objective over ||q||_inf <= Q
    BestApproxResult mult; ///< multiplicative objective over Pi+(q) <= Q^n
};

/// Exponent estimates from a ladder Q = 2, 4, ..., <= Qmax.
///   omega      : least-squares slope of -log(sup error) vs log Q,
///   omega_mult : least-squares slope of -log(Pi error)  vs n log Q,
/// both fitted on the top half of the ladder (small-Q transients excluded),
/// skipping rungs with exactly zero error.  When zero errors leave fewer
/// than two usable rungs the estimate is +infinity (exact approximations);
/// with fewer than two rungs overall it is NaN.
struct ExponentReport {
    double omega = 0;
    double omega_mult = 0;
    std::vector<LadderRung> ladder;
    bool rational_obstruction = false; ///< some rung reached Pi error exactly 0
    bool complete = true;              ///< every rung exhausted its search space
};

/// Build the ladder and fit both exponents.  Ladder errors are verified to
/// be non-increasing in Q by exact comparison.
ExponentReport exponent_estimate(const MatQ& Y, const Int& Qmax,
                                 long long budget = kDefaultApproxBudget);

/// Exact comparison of a nonnegative rational against base^e (base >= 1
/// integer, e rational), by clearing denominators and cross-multiplying.
std::strong_ordering compare_with_power(const Rational& a, const Int& base, const Rational& e);

/// Result of the pigeonhole refinement: the improved witness, the exponent
/// delta it is certified for, and whether the residual is exactly zero.
struct ImprovedWitness {
    ApproxWitness witness;
    Rational delta;
    bool exact_solution = false; ///< residual is exactly zero (Yq integral)
};

/// Pigeonhole refinement.  Requires Pi(Yq-p) <= Pi+(q)^{-(1+delta0)}
/// (boundary allowed) and the scan-size condition
/// floor(Pi+(q)^{delta0/(m+n+1)}) >= Pi+(q)^{delta0/(m+n+1)} / 2.
/// Scans v_l = l*Yq mod 1 for l = 1..q+1 (q the floor above), picks the
/// closest pair i < j, and returns q~ = (j-i) q with the nearest integer
/// vector p~.  The output inequalities
///   Pi(Yq~-p~) < Pi+(q~)^{-(1+delta)}  and  ||Yq~-p~|| < Pi+(q~)^{-delta/m}
/// with delta = delta0/(m+n+1+n*delta0) are re-verified exactly; witnesses
/// too small for the construction are rejected with a precondition error.
/// If Yq is integral the scan degenerates; the witness (q, Yq) with zero
/// residual is returned with exact_solution set.
ImprovedWitness improve_solution(const MatQ& Y, const ApproxWitness& w, const Rational& delta0);

/// Greedy factor split (exact rationals).  Preconditions z_i >= 0, z_i < r,
/// prod z_i < r^m / C, C > 1; the convention r/0 = infinity makes a zero z_i
/// absorb all remaining C.  Postconditions prod C_i = C, C_i z_i <= r and
/// C_i >= 1 are verified before returning, in the original input order.
std::vector<Rational> split_factors(const std::vector<Rational>& z, const Rational& r,
                                    const Rational& C);
/// Same split with exact positive-real bounds r, C (power products); the
/// z_i stay rational so the zero convention is still decidable.
std::vector<XReal> split_factors(const std::vector<Rational>& z, const XReal& r, const XReal& C);

/// delta = (1+n*gamma)/(1-ell*gamma) - 1 for 0 < gamma < 1/ell.
Rational gamma_to_delta(const Rational& gamma, int n, int ell);
/// gamma = delta*s/(1 + delta*n*s) for delta > 0, s > 0.
Rational delta_to_gamma(const Rational& delta, const Rational& s, int n);

/// Flow direction certifying linear growth for the witness it was built
/// from: every component of g_t (residual, q) is at most decay = e^{-gamma t}
/// exactly, where e^{t_l} are the stored weights of t.
struct TimeCertificate {
    FlowVector t;
    Rational gamma;
    XReal decay; ///< e^{-gamma t} = Pi+(q)^{-delta s}
};

/// Build the flow direction from a witness satisfying
/// Pi(Yq-p) < Pi+(q)^{-(1+delta)} and ||Yq-p|| < Pi+(q)^{-delta/m}, for
/// 0 < s < 1/(m+n):  r = Pi+(q)^{-delta s},  e^{t_{m+j}} = |q_j|_+ / r,
/// e^{t_i} = C_i from split_factors(z_i = |residual_i|, r, C = e^t).
/// The certificate inequality is verified exactly component by component.
/// Requires Pi+(q) >= 2 (otherwise e^t = 1 and no split exists).
TimeCertificate solution_to_time(const MatQ& Y, const ApproxWitness& w, const Rational& delta,
                                 const Rational& s);

} // namespace latflow
