/* Dense matrices over an exact ring, plus the minors map.
 *
 * Mat<R> works for any commutative ring with exact division (rationals,
 * integers, integer polynomials); determinants use fraction-free Bareiss
 * elimination so only exact divisions ever occur.  Field-only operations
 * (kernel, inverse, rank) are provided for R = Rational.
 *
 * The minors map sends an m x n matrix Y to the vector of all of its minors
 * y_{I,J} = det Y[I,J] over nonempty I subset {1..m}, J subset {1..n} with
 * |I| = |J|, listed in the canonical order: size ascending, then I
 * lexicographic, then J lexicographic.  Its length is C(m+n, m) - 1.
 */
#pragma once

#include <compare>
#include <string>
#include <vector>

#include "latflow/combinat.hpp"
#include "latflow/errors.hpp"
#include "latflow/rational.hpp"

namespace latflow {

// Exact division hooks used by Bareiss elimination.  The generic overload is
// for fields; rings provide their own (Int here, Poly in its own header).
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline Int exact_div(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

template <class R>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
        require(rows >= 0 && cols >= 0, "Mat: negative dimension");
    }
    Mat(int rows, int cols, std::vector<R> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        require(a_.size() == static_cast<std::size_t>(rows) * cols, "Mat: entry count mismatch");
    }

    static Mat identity(int n) {
        Mat I(n, n);
        for (int i = 0; i < n; ++i) I(i, i) = R(1);
        return I;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    R& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const R& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        require(cols_ == o.rows_, "Mat: inner dimension mismatch");
        Mat p(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int l = 0; l < cols_; ++l) {
                const R& x = (*this)(i, l);
                if (x == R(0)) continue;
                for (int j = 0; j < o.cols_; ++j) p(i, j) += x * o(l, j);
            }
        return p;
    }

    std::vector<R> operator*(const std::vector<R>& v) const {
        require(static_cast<int>(v.size()) == cols_, "Mat: vector length mismatch");
        std::vector<R> out(rows_, R(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    Mat operator+(const Mat& o) const {
        require(rows_ == o.rows_ && cols_ == o.cols_, "Mat: shape mismatch");
        Mat s = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] += o.a_[i];
        return s;
    }

    Mat operator-() const {
        Mat s = *this;
        for (auto& x : s.a_) x = -x;
        return s;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    std::vector<R> col(int j) const {
        std::vector<R> c(rows_);
        for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    /// Submatrix with 1-based row set I and column set J (both increasing).
    Mat submatrix(const IndexSet& I, const IndexSet& J) const {
        Mat s(static_cast<int>(I.size()), static_cast<int>(J.size()));
        for (std::size_t i = 0; i < I.size(); ++i)
            for (std::size_t j = 0; j < J.size(); ++j) s(static_cast<int>(i), static_cast<int>(j)) = (*this)(I[i] - 1, J[j] - 1);
        return s;
    }

    /// Determinant by fraction-free Bareiss elimination (exact divisions only).
    R det() const {
        require(rows_ == cols_, "det: matrix not square");
        const int n = rows_;
        if (n == 0) return R(1);
        Mat w = *this;
        R prev(1);
        int sign = 1;
        for (int c = 0; c < n - 1; ++c) {
            // pivot selection: first nonzero entry in this column
            int piv = -1;
            for (int r = c; r < n; ++r)
                if (!(w(r, c) == R(0))) { piv = r; break; }
            if (piv < 0) return R(0);
            if (piv != c) {
                for (int j = c; j < n; ++j) std::swap(w(piv, j), w(c, j));
                sign = -sign;
            }
            for (int r = c + 1; r < n; ++r) {
                for (int j = c + 1; j < n; ++j) {
                    R num = w(c, c) * w(r, j) - w(r, c) * w(c, j);
                    w(r, j) = exact_div(num, prev);
                }
                w(r, c) = R(0);
            }
            prev = w(c, c);
        }
        R d = w(n - 1, n - 1);
        return sign == 1 ? d : R(-d);
    }

private:
    int rows_, cols_;
    std::vector<R> a_;
};

using MatQ = Mat<Rational>;
using MatZ = Mat<Int>;

// ----------------------------------------------------------- field-only ops

/// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(MatQ& A);

/// Basis of the right kernel {v : Av = 0}.
std::vector<std::vector<Rational>> kernel(const MatQ& A);

int rank(const MatQ& A);

/// Inverse of a square nonsingular matrix (throws PreconditionError if singular).
MatQ inverse(const MatQ& A);

// ------------------------------------------------------------- minors map

/// A minor position: 1-based row set I and column set J with |I| = |J|.
struct IndexPair {
    IndexSet I, J;
    friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

std::string to_string(const IndexPair& p);

/// Minor y_{I,J} = det Y[I,J]; the empty pair gives y_{}, {} = 1.
Rational minor(const MatQ& Y, const IndexPair& p);

/// Canonical enumeration of all nonempty minor positions of an m x n matrix:
/// by size ascending, then I lexicographic, then J lexicographic.
std::vector<IndexPair> minor_index_order(int m, int n);

/// The minors map d(Y): all minors in canonical order, length C(m+n, m) - 1.
std::vector<Rational> minors_vector(const MatQ& Y);

} // namespace latflow
