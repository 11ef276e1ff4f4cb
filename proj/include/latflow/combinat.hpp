/* Small combinatorial helpers shared by the minors map and the exterior
 * algebra: lexicographic subset enumeration and merge-inversion signs for
 * wedge reordering.  Index sets are strictly increasing vectors of 1-based
 * indices throughout.
 */
#pragma once

#include <algorithm>
#include <vector>

namespace latflow {

using IndexSet = std::vector<int>;

/// All size-s subsets of `universe` (which must be strictly increasing),
/// in lexicographic order.  s = 0 yields the single empty set.
inline std::vector<IndexSet> subsets_of_size(const IndexSet& universe, int s) {
    std::vector<IndexSet> out;
    const int n = static_cast<int>(universe.size());
    if (s < 0 || s > n) return out;
    IndexSet idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    while (true) {
        IndexSet sub(s);
        for (int i = 0; i < s; ++i) sub[i] = universe[idx[i]];
        out.push_back(std::move(sub));
        int i = s - 1;
        while (i >= 0 && idx[i] == n - s + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

/// {1, 2, ..., n}
inline IndexSet full_range(int n) {
    IndexSet r(n);
    for (int i = 0; i < n; ++i) r[i] = i + 1;
    return r;
}

/// Elements of `universe` not in `sub` (both strictly increasing).
inline IndexSet set_difference(const IndexSet& universe, const IndexSet& sub) {
    IndexSet out;
    std::set_difference(universe.begin(), universe.end(), sub.begin(), sub.end(),
                        std::back_inserter(out));
    return out;
}

inline bool is_subset(const IndexSet& sub, const IndexSet& sup) {
    return std::includes(sup.begin(), sup.end(), sub.begin(), sub.end());
}

/// Number of pairs (a, b) with a in A, b in B and b < a.  This is the number
/// of transpositions needed to interleave the concatenation A|B into sorted
/// order when A and B are themselves sorted and disjoint.
inline long merge_inversions(const IndexSet& A, const IndexSet& B) {
    long count = 0;
    std::size_t j = 0;
    for (int a : A) {
        while (j < B.size() && B[j] < a) ++j;
        count += static_cast<long>(j);
    }
    return count;
}

/// Sign (-1)^merge_inversions(A, B), or 0 if A and B intersect.  When
/// nonzero, `unions` (if given) receives the sorted union.
inline int merge_sign(const IndexSet& A, const IndexSet& B, IndexSet* unions = nullptr) {
    IndexSet u;
    u.reserve(A.size() + B.size());
    std::size_t i = 0, j = 0;
    long inv = 0;
    while (i < A.size() && j < B.size()) {
        if (A[i] == B[j]) return 0;
        if (A[i] < B[j]) {
            u.push_back(A[i++]);
        } else {
            inv += static_cast<long>(A.size() - i);
            u.push_back(B[j++]);
        }
    }
    while (i < A.size()) u.push_back(A[i++]);
    while (j < B.size()) u.push_back(B[j++]);
    if (unions) *unions = std::move(u);
    return (inv % 2 == 0) ? 1 : -1;
}

} // namespace latflow
