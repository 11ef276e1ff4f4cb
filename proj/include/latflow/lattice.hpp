/* Lattices attached to a rational matrix: the unipotent basis u_Y, diagonal
 * flows acting by per-coordinate scalings, exact shortest-vector and
 * shortest-primitive-ell-subgroup searches, and the duality that swaps a
 * matrix with minus its transpose.  Values that decide anything are exact;
 * doubles appear only as search heuristics and in reports.
 */
#pragma once

#include <optional>
#include <vector>

#include "latflow/exterior.hpp"
#include "latflow/flow_vector.hpp"
#include "latflow/io.hpp"
#include "latflow/mat.hpp"
#include "latflow/rational.hpp"
#include "latflow/xreal.hpp"

namespace latflow {

/// An integer approximation pair (q, p) for a matrix Y, with the exact
/// residual Yq - p.  q must be a nonzero integer n-vector, p an integer
/// m-vector.
struct ApproxWitness {
    std::vector<Int> q;
    std::vector<Int> p;
    std::vector<Rational> residual;  // Yq - p, exact

    /// Witness with p the nearest integer vector to Yq.
    static ApproxWitness from_q(const MatQ& Y, std::vector<Int> q);
    /// Witness with an explicit p.
    static ApproxWitness from_parts(const MatQ& Y, std::vector<Int> q, std::vector<Int> p);

    Rational sup_error() const;  ///< max_i |residual_i|
    Rational pi_error() const;   ///< prod_i |residual_i|

    /// Check q != 0, dimensions, and residual = Yq - p exactly.
    void check(const MatQ& Y) const;
};

/// Build a witness from Y and integer vectors, computing the exact residual.
ApproxWitness make_witness(const MatQ& Y, std::vector<Int> q, std::vector<Int> p);

Json json_of(const ApproxWitness& w);

/// max( max_i e^{t_i} |residual_i| , max_j e^{-t_{m+j}} |q_j| ), exactly.
/// This equals the sup norm of the lattice vector of Lambda_Y with
/// coordinates (p, q) after applying the flow, which ties approximation
/// quality to lattice geometry.
XReal weighted_sup(const FlowVector& t, const ApproxWitness& w);

/// A full-rank lattice in R^k presented as exact rational basis columns
/// together with per-coordinate scalings (the diagonal flow, kept as exact
/// power products rather than folded into the rationals).
class LatticeBasis {
  public:
    /// columns exact, scalings default to 1.  Throws PreconditionError if the
    /// columns are not square full-rank or k exceeds the supported cap (10).
    LatticeBasis(int m, int n, MatQ columns);
    LatticeBasis(int m, int n, MatQ columns, std::vector<XReal> scale);

    int m() const { return m_; }
    int n() const { return n_; }
    int k() const { return k_; }
    const MatQ& columns() const { return B_; }
    const std::vector<XReal>& scale() const { return scale_; }

    /// Exact coordinates of the lattice vector with coefficients x:
    /// coordinate l is scale_l * (B x)_l, returned as (rational, scale) pairs.
    std::vector<Rational> rational_part(const std::vector<Int>& x) const;

    /// Exact squared Euclidean norm of the lattice vector with coefficients x.
    XSum norm_sq(const std::vector<Int>& x) const;

    /// Exact sup norm of the lattice vector with coefficients x.
    XReal sup_norm(const std::vector<Int>& x) const;

    /// det of the scaled basis, as an exact power product times |det B|.
    XReal covolume() const;

  private:
    int m_, n_, k_;
    MatQ B_;
    std::vector<XReal> scale_;
};

/// Lambda_Y: the unipotent lattice u_Y Z^k with u_Y = [[I_m, Y],[0, I_n]].
LatticeBasis lambda_of(const MatQ& Y);

/// Apply the diagonal flow with data t: multiplies the first m scalings by
/// e^{t_i} and the last n by e^{-t_{m+j}} (exactly, as power products).
LatticeBasis apply_flow(const FlowVector& t, const LatticeBasis& B);

enum class Norm { euclidean, sup };

/// Result of a shortest-vector search.  `witness` holds integer coefficients
/// with respect to the basis the search was given (sign-normalized so the
/// first nonzero coefficient is positive; ties broken lexicographically).
/// The exact artifacts allow later comparisons without re-searching.
struct SystoleResult {
    Norm norm = Norm::euclidean;
    double value = 0.0;              // numeric report of the minimum
    std::vector<Int> witness;
    XSum norm_sq;                    // exact squared value (euclidean mode)
    XReal sup_value;                 // exact value (sup mode); 1 until filled
    bool certified = true;           // searches either certify or throw

    /// Exact test `systole >= eps`.  Uses a double prefilter with a 1e-9
    /// relative guard band, falling back to exact comparison near ties.
    bool at_least(const XReal& eps) const;
};

/// Shortest nonzero vector of the scaled lattice.  Complete search: either
/// returns the certified minimum or throws BudgetError; never a silent
/// wrong answer.
SystoleResult systole(const LatticeBasis& B, Norm norm = Norm::euclidean);

/// Whether the lattice lies in K_eps, i.e. systole(B, norm) >= eps exactly.
bool in_K_eps(const LatticeBasis& B, const XReal& eps, Norm norm = Norm::euclidean);

/// Result of the shortest-primitive-subgroup search in grade ell.  The
/// witness is the decomposable integer multivector (wedge of a basis of the
/// minimizing subgroup, primitive and sign-normalized); `covol_sq` is its
/// exact squared covolume under the scaled basis.  `certified` reports
/// whether the search provably covered every primitive rank-ell subgroup
/// (the short-vector pool radius dominates the ell-th minimum of the
/// minimizer by Minkowski's second theorem); when a budget was exhausted the
/// value is the best found and certified is false.  `outside_height_bound`
/// is an informational lower bound on the norm of any blade with some
/// coordinate exceeding the height argument, derived from the ell smallest
/// singular values of the scaled basis (exposed rather than asserted).
struct PrimitiveResult {
    int ell = 1;
    double value = 0.0;
    MultiVector<Int> witness{1, 1};
    XSum covol_sq;
    bool certified = false;
    long height = 10;
    double outside_height_bound = 0.0;
};

/// Least covolume of a primitive rank-ell subgroup of the scaled lattice.
/// ell = 1 reduces to the systole; ell = k is the covolume of the lattice.
/// Intermediate grades score saturations of spans of short-vector subsets;
/// completeness is certified whenever the pool enumeration fits its budget.
PrimitiveResult primitive_systole(const LatticeBasis& B, int ell, long height = 10);

/// Duality on matrices: Y -> -Y^T (m x n -> n x m).
MatQ transference_dual(const MatQ& Y);

/// Dual lattice basis: columns B^{-T}, scalings inverted, (m, n) preserved.
LatticeBasis dual_basis(const LatticeBasis& B);

/// The dual of Lambda_Y, with coordinates permuted by the block swap
/// (first m last), presented on (n, m).  Equals Lambda_{-Y^T} as a lattice.
LatticeBasis dual_swapped(const LatticeBasis& B);

/// Exact test: do the two scaled bases generate the same lattice?  Requires
/// equal shapes, exactly equal per-coordinate scalings, and an integer
/// change of basis with determinant +-1.
bool same_lattice(const LatticeBasis& A, const LatticeBasis& B);

Json json_of(const SystoleResult& r);
Json json_of(const PrimitiveResult& r);

} // namespace latflow
