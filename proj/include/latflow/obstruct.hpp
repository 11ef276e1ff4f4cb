/* Exact symbolic obstruction detection for integer-polynomial matrix curves.
 *
 * A curve x -> F(x) can fail to be (strongly) extremal for structural
 * reasons that are visible symbolically:
 *   - a row or column of F is affinely degenerate (planar),
 *   - some integer combination F(x) q of the columns is proportional to a
 *     fixed integer vector (case1),
 *   - integer translates of integer multiples of the two columns are
 *     proportional as polynomial vectors (case2, n = 2 only).
 * Every certificate this module returns has been re-verified symbolically:
 * the asserted identity is the identically-zero polynomial, with no floating
 * point anywhere.  Searches are exhaustive over a height box, so "none-found"
 * is a statement about the searched bounds, which the certificate records.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latflow/poly.hpp"

namespace latflow {

enum class ObstructionKind {
    row_planar,    // a row of F has an affine dependence
    column_planar, // a column of F has an affine dependence
    case1,         // F(x) q = factor(x) * u for integer q != 0, u
    case2,         // (u1 + a y1) and (u2 + b y2) proportional (n = 2)
    none_found,    // exhaustive search up to the recorded height found nothing
    not_checked,   // shape outside the implemented search (case2 with n != 2)
};

std::string to_string(ObstructionKind k);

struct ObstructionCertificate {
    ObstructionKind kind = ObstructionKind::none_found;
    long height = 0; // height box the search used (soundness is unconditional)

    // row_planar / column_planar: 0-based line index and the affine
    // dependence on {1, entries...} (constant's coefficient first).
    int line_index = -1;
    std::vector<Rational> relation;

    // case1 data: F(x) q = (factor_num/factor_den)(x) * u.
    std::vector<Int> q, u;
    bool degenerate = false; // the asserted combination vanished identically

    // case2 data: (u2 + b y2) = (factor_num/factor_den)(x) * (u1 + a y1).
    Int a = 0, b = 0;
    std::vector<Int> u1, u2;
    bool translate_free = false; // the u1 = u2 = 0 regime fired

    // Reduced rational-function proportionality factor (den has a positive
    // leading coefficient; num = 0, den = 1 in degenerate cases).
    Poly factor_num, factor_den = Poly(1);

    std::string detail; // human-readable proof line
};

/// Nontrivial rational dependence a0*1 + a1*f1 + ... + aN*fN = 0, or nullopt
/// when {1, f1, ..., fN} are linearly independent over Q.  The returned
/// vector is the canonical primitive-integer dependence supported on the
/// shortest prefix, with the last nonzero coefficient negative.
std::optional<std::vector<Rational>> affine_relation(const std::vector<Poly>& fs);

/// Per-row / per-column affine independence, plus the matrix-level condition:
/// is there a nonzero real v with x -> F(x) v constant?  (Solved exactly: the
/// kernel of a rational coefficient matrix is spanned by rational vectors.)
struct NonplanarReport {
    std::vector<bool> row_nonplanar; // row i: {1, F(i,0..n-1)} independent
    std::vector<bool> col_nonplanar; // col j: {1, F(0..m-1,j)} independent
    bool no_constant_combination = false;           // no v != 0: F(x) v constant
    bool transpose_no_constant_combination = false; // same for F^T
    std::optional<std::vector<Rational>> constant_combination;           // witness v
    std::optional<std::vector<Rational>> transpose_constant_combination; // witness
    bool all_rows_nonplanar() const;
    bool all_cols_nonplanar() const;
};

NonplanarReport row_col_nonplanar(const MatP& F);

/// Search q in Z^n \ {0}, ||q||_inf <= height, with F(x) q = c(x) * u for a
/// scalar polynomial c and a fixed integer vector u: equivalently all 2x2
/// minors of [F(x) q | u] vanish identically.  q runs over sign-canonical
/// representatives ordered by (||q||_inf, lex); the first hit is returned.
ObstructionCertificate detect_case1(const MatP& F, long height = 5);

/// For n = 2 only: search a, b in [1, height] and integer u1, u2 with
/// ||.||_inf <= height such that (u1 + a*y1(x)) and (u2 + b*y2(x)) are
/// proportional as polynomial vectors (all 2x2 minors vanish identically).
/// For each (a, u1) cell the condition is linear in (b, u2) and is solved by
/// an exact rational kernel on coefficient vectors.  Cells are scanned in
/// (||u1||_inf, a, lex u1) order, so the translate-free regime is tried
/// first.  Shapes with n != 2 come back as kind not_checked.
ObstructionCertificate detect_case2(const MatP& F, long height = 5);

/// Whether {1} union the components of the full minors map of F are linearly
/// independent over Q (the exact nondegeneracy criterion for a univariate
/// polynomial curve of matrices).
bool d_nondegenerate(const MatP& F);

/// Battery of all detectors in a fixed precedence order: planar row, planar
/// column, case1, case2 (n = 2), else none-found at the given height.
ObstructionCertificate find_obstruction(const MatP& F, long height = 5);

/// Re-verify a certificate symbolically against F (exact; no search).
bool verify_certificate(const MatP& F, const ObstructionCertificate& c);

Json json_of(const ObstructionCertificate& c);

} // namespace latflow
