#include "latflow/mat.hpp"

#include <sstream>

namespace latflow {

std::vector<int> rref(MatQ& A) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < A.cols() && r < A.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < A.rows(); ++i)
            if (sgn(A(i, c)) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < A.cols(); ++j) std::swap(A(piv, j), A(r, j));
        Rational inv = 1 / A(r, c);
        for (int j = c; j < A.cols(); ++j) A(r, j) *= inv;
        for (int i = 0; i < A.rows(); ++i) {
            if (i == r || sgn(A(i, c)) == 0) continue;
            Rational f = A(i, c);
            for (int j = c; j < A.cols(); ++j) A(i, j) -= f * A(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Rational>> kernel(const MatQ& A) {
    MatQ R = A;
    std::vector<int> pivots = rref(R);
    std::vector<bool> is_pivot(A.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < A.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(A.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -R(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank(const MatQ& A) {
    MatQ R = A;
    return static_cast<int>(rref(R).size());
}

MatQ inverse(const MatQ& A) {
    require(A.rows() == A.cols(), "inverse: matrix not square");
    const int n = A.rows();
    MatQ aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = A(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<int> pivots = rref(aug);
    require(static_cast<int>(pivots.size()) == n && pivots.back() == n - 1,
            "inverse: singular matrix");
    MatQ inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::string to_string(const IndexPair& p) {
    std::ostringstream os;
    os << "y_{";
    for (std::size_t i = 0; i < p.I.size(); ++i) os << (i ? "," : "") << p.I[i];
    os << "},{";
    for (std::size_t j = 0; j < p.J.size(); ++j) os << (j ? "," : "") << p.J[j];
    os << "}";
    return os.str();
}

Rational minor(const MatQ& Y, const IndexPair& p) {
    require(p.I.size() == p.J.size(), "minor: |I| != |J|");
    if (p.I.empty()) return Rational(1);
    for (int i : p.I) require(1 <= i && i <= Y.rows(), "minor: row index out of range");
    for (int j : p.J) require(1 <= j && j <= Y.cols(), "minor: column index out of range");
    return Y.submatrix(p.I, p.J).det();
}

std::vector<IndexPair> minor_index_order(int m, int n) {
    require(m >= 1 && n >= 1, "minor_index_order: need m, n >= 1");
    std::vector<IndexPair> order;
    const IndexSet rows = full_range(m), cols = full_range(n);
    const int smax = std::min(m, n);
    for (int s = 1; s <= smax; ++s)
        for (const auto& I : subsets_of_size(rows, s))
            for (const auto& J : subsets_of_size(cols, s)) order.push_back({I, J});
    return order;
}

std::vector<Rational> minors_vector(const MatQ& Y) {
    std::vector<Rational> d;
    for (const auto& p : minor_index_order(Y.rows(), Y.cols())) d.push_back(minor(Y, p));
    return d;
}

} // namespace latflow
