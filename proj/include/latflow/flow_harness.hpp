/* Dynamical harness: observe lattice orbits under diagonal flows and turn
 * them into verdicts.
 *
 * Four instruments live here:
 *   - growth_rate: walk a grid of flow times, record the sup-norm systole of
 *     g_t u_Y Z^k at each point, fit a decay exponent to the running minima,
 *     and classify the orbit as bounded / linear-growth / inconclusive.
 *   - dirichlet_improvable: exact test whether the weighted sup-norm systole
 *     drops below a target eps at every sufficiently late time on a grid
 *     (strictly, or non-strictly for the eps = 1 sanity bound).
 *   - correspondence_check: run the number-theoretic exponent estimate and
 *     the dynamical growth fit side by side on the same matrix, translate
 *     between the exponent excess delta and the growth rate gamma, and
 *     report whether the two detectors agree.  Mismatches are reported as
 *     evidence, never auto-resolved.
 *   - uniform_inf_check: for a polynomial matrix curve, lower-bound
 *     inf over integer blades w of sup over curve samples of the expanding
 *     projection norm ||pi+_t u_{F(x)} w||.  A numerically-zero infimum is
 *     re-checked symbolically; an exact identically-zero projection is
 *     diagnosed with the witnessing blade and flow direction.
 *
 * Everything the verdicts depend on is computed exactly (rational or
 * extended-exponent arithmetic); doubles appear only in fitted slopes and
 * reported log-scale values.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "latflow/dioph.hpp"
#include "latflow/exterior.hpp"
#include "latflow/flow_vector.hpp"
#include "latflow/io.hpp"
#include "latflow/lattice.hpp"
#include "latflow/poly.hpp"

namespace latflow {

// ---------------------------------------------------------------------------
// Growth along flow rays
// ---------------------------------------------------------------------------

enum class GrowthVerdict {
    bounded,       ///< no decay trend: the orbit's systole stays bounded away from 0
    linear_growth, ///< -log systole grows linearly: gamma above threshold with
                   ///< enough record points beneath the fitted exponential
    inconclusive,  ///< not enough evidence either way at this grid resolution
};

std::string to_string(GrowthVerdict v);

/// One visited grid point: flow time, exact systole, and whether it set a
/// new running minimum (ordered by scalar time).
struct GridPoint {
    FlowVector t;          ///< the flow exponent vector
    double time;           ///< scalar time t_scalar() (sum of expanding entries)
    SystoleResult systole; ///< exact sup-norm systole of g_t u_Y Z^k
    bool record = false;   ///< true if this point set a new running minimum
};

struct GrowthReport {
    std::vector<GridPoint> grid; ///< visited points, sorted by (time, exponents)
    double gamma = 0.0;          ///< fitted slope of -log systole vs time on records
    double threshold = 0.0;      ///< gamma threshold used for the verdict
    int points_below = 0;        ///< records at time>0 with systole <= e^{-gamma t}
    GrowthVerdict verdict = GrowthVerdict::inconclusive;
};

/// How to sweep flow space in growth_rate.
struct RaySpec {
    enum class Kind { central, direction, full_grid };
    Kind kind = Kind::central;
    /// For Kind::direction: the ray direction (must carry rational exponents;
    /// it is normalized so its scalar time is 1, then stepped).
    std::optional<FlowVector> direction;

    static RaySpec central() { return RaySpec{Kind::central, std::nullopt}; }
    static RaySpec along(FlowVector d) { return RaySpec{Kind::direction, std::move(d)}; }
    static RaySpec full_grid() { return RaySpec{Kind::full_grid, std::nullopt}; }
};

/// Default gamma threshold for declaring linear growth, and the minimum
/// number of record points that must sit beneath the fitted exponential.
inline constexpr double kDefaultGammaThreshold = 0.05;
inline constexpr int kMinRecordPoints = 5;

/// Sweep flow times along `ray` up to scalar time `t_max` and classify the
/// orbit of Lambda_Y = u_Y Z^k.
///
/// - central / direction rays visit `steps` points j * t_max / steps
///   (j = 1..steps) along the ray, all with exact rational exponents.
/// - full_grid visits every balanced flow vector with nonnegative integer
///   expanding coordinates summing to at most floor(t_max); the contracting
///   side is split evenly.  `steps` is ignored.
///
/// The systole is measured in the sup norm, exactly.  Records are running
/// minima in scalar-time order; gamma is the least-squares slope of
/// -log(systole) vs time over the records with time > 0.  A linear-growth
/// verdict additionally requires at least kMinRecordPoints records lying on
/// or beneath e^{-gamma t}.  Grid points are evaluated in parallel;
/// assembly order (sorted by time, then exponents) is deterministic.
/// Budget failures are rethrown with the offending flow time attached.
GrowthReport growth_rate(const MatQ& Y, const RaySpec& ray, const Rational& t_max,
                         int steps, double gamma_threshold = kDefaultGammaThreshold);

Json json_of(const GrowthReport& rep);

/// Write the visited grid as CSV: t_1..t_k, t, systole, witness.
std::string growth_csv(const GrowthReport& rep);

// ---------------------------------------------------------------------------
// Dirichlet improvability on a time grid
// ---------------------------------------------------------------------------

/// Exact per-time outcome of the improved Dirichlet test.
struct DirichletPoint {
    FlowVector t;
    double time;         ///< scalar time
    XReal systole;       ///< exact weighted sup-norm systole at t
    bool solvable;       ///< systole < eps (strict) or <= eps (non-strict)
};

struct DirichletReport {
    std::vector<DirichletPoint> per_t; ///< sorted by (time, exponents)
    Rational eps;
    bool strict = true;
    bool improvable = false; ///< all grid times after T0 pass, and some do
    double T0 = 0.0;         ///< latest failing scalar time (0 if none fail)
};

/// Decide (eps, T)-Dirichlet improvability on the given time grid, exactly.
/// With strict=true this requires 0 < eps < 1 and tests systole < eps at
/// each t; with strict=false eps <= 1 is allowed and the test is
/// systole <= eps (the eps = 1 case is the classical Dirichlet/Minkowski
/// bound, which always holds).  `improvable` is true iff at least one grid
/// time passes and every grid time after the last failure passes; T0 is the
/// last failing time.
DirichletReport dirichlet_improvable(const MatQ& Y, const Rational& eps,
                                     const std::vector<FlowVector>& grid,
                                     bool strict = true);

Json json_of(const DirichletReport& rep);

// ---------------------------------------------------------------------------
// Number theory vs dynamics correspondence
// ---------------------------------------------------------------------------

struct CorrespondenceReport {
    ExponentReport number_theory; ///< exponent ladder from the counting side
    GrowthReport dynamics;        ///< full-grid growth fit from the flow side
    bool nt_fires = false;   ///< exponent side detects very-well-approximable behaviour
    bool dyn_fires = false;  ///< dynamics side reports linear growth
    bool consistent = false; ///< the two detectors agree
    double delta_threshold = 0.0; ///< exponent excess matching the gamma threshold
    double delta_hat = 0.0;       ///< measured multiplicative exponent excess
    std::string detail;
};

/// Run exponent_estimate(Y, Qmax) and growth_rate(Y, full_grid, t_max) and
/// compare their verdicts.  The gamma threshold is translated into an
/// exponent-excess threshold via delta = (n + l) gamma / (1 - l gamma) with
/// l = 1 (single-solution certificates); the number-theory side fires when a
/// rational obstruction is found or the multiplicative exponent exceeds the
/// Dirichlet exponent by more than that threshold.  Requires m + n <= 6.
CorrespondenceReport correspondence_check(const MatQ& Y, const Int& Qmax,
                                          const Rational& t_max,
                                          double gamma_threshold = kDefaultGammaThreshold);

Json json_of(const CorrespondenceReport& rep);

// ---------------------------------------------------------------------------
// Uniform lower bounds for projected blade norms along a curve
// ---------------------------------------------------------------------------

struct UniformInfResult {
    double inf_value = 0.0;     ///< the infimum of the sup over samples (euclidean norm)
    Rational inf_value_sq;      ///< its exact square
    MultiVector<Rational> w;    ///< the blade attaining the infimum
    std::optional<FlowVector> t_attain; ///< flow time attaining the inner sup... see detail
    Rational x_attain;          ///< sample point attaining the sup for the worst blade
    bool exact_zero = false;    ///< the infimum is exactly zero
    bool identically_zero = false; ///< ...and the projection vanishes for ALL x, not
                                   ///< just the sampled ones (symbolically verified)
    std::string detail;
    long blades_scanned = 0;
};

/// Estimate inf over nonzero integer blades w (coefficients bounded by
/// `height`) of  sup over equally spaced samples x in [a,b], flow times t in
/// `t_grid`, of the euclidean norm of pi+_t (u_{F(x)} w), where pi+_t keeps
/// the blade components g_t does not contract.
///
/// Grades 1 and k-1 are enumerated completely (every nonzero coefficient box
/// point is a decomposable blade there); for k = 4, grade 2 the Pluecker
/// quadric is used to keep exactly the decomposable points; other middle
/// grades fall back to wedges of enumerated vector pairs/triples.  The outer
/// inf / inner sup are resolved in exact arithmetic with a deterministic
/// tie-break.  If the infimum is exactly zero, the projected coefficients of
/// the worst (w, t) pair are re-checked as polynomials in x: if they all
/// vanish identically the result is flagged identically_zero with the
/// witnessing blade and flow time.
/// Requires height >= 1, samples >= 1, a <= b, nonempty t_grid.
UniformInfResult uniform_inf_check(const MatP& F, const Rational& a, const Rational& b,
                                   int samples, long height,
                                   const std::vector<FlowVector>& t_grid);

Json json_of(const UniformInfResult& res);

} // namespace latflow
