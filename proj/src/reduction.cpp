/* Floating LLL with an exact unimodular transcript, plus the depth-first
 * enumerator used by the systole searches.  All decisions taken here on
 * doubles are advisory: the returned transform is exactly unimodular by
 * construction, and callers re-score candidates exactly.
 */
#include "reduction.hpp"

#include <cmath>
#include <cstdlib>

#include "latflow/errors.hpp"

namespace latflow::detail {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

bool gram_schmidt(const DCols& cols, GsoData& out) {
    const int k = static_cast<int>(cols.size());
    out.mu.assign(k, std::vector<double>(k, 0.0));
    out.c.assign(k, 0.0);
    std::vector<std::vector<double>> star = cols;  // orthogonalized columns
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < i; ++j) {
            double m = out.c[j] > 0.0 ? dot(cols[i], star[j]) / out.c[j] : 0.0;
            out.mu[i][j] = m;
            for (std::size_t r = 0; r < star[i].size(); ++r)
                star[i][r] -= m * star[j][r];
        }
        out.c[i] = dot(star[i], star[i]);
        if (!std::isfinite(out.c[i]) || out.c[i] <= 0.0) return false;
    }
    return true;
}

LllOutcome lll_unimodular(DCols cols, double delta) {
    const int k = static_cast<int>(cols.size());
    LllOutcome res{MatZ::identity(k), true};
    GsoData gso;
    if (!gram_schmidt(cols, gso)) {
        res.ok = false;
        return res;
    }

    auto size_reduce = [&](int i, int j) {
        double m = gso.mu[i][j];
        if (!std::isfinite(m)) { res.ok = false; return; }
        if (std::fabs(m) <= 0.5) return;
        long q = std::lround(m);
        // cols[i] -= q * cols[j]; update U the same way (exact integers).
        for (std::size_t r = 0; r < cols[i].size(); ++r)
            cols[i][r] -= static_cast<double>(q) * cols[j][r];
        for (int r = 0; r < k; ++r)
            res.U(r, i) -= Int(q) * res.U(r, j);
        for (int l = 0; l < j; ++l) gso.mu[i][l] -= static_cast<double>(q) * gso.mu[j][l];
        gso.mu[i][j] -= static_cast<double>(q);
    };

    long iter = 0;
    const long iter_cap = 20000L * k * k + 4000;
    int i = 1;
    while (i < k) {
        if (++iter > iter_cap || !res.ok) { res.ok = false; break; }
        size_reduce(i, i - 1);
        if (!res.ok) break;
        double lhs = gso.c[i] + gso.mu[i][i - 1] * gso.mu[i][i - 1] * gso.c[i - 1];
        if (lhs < (delta - 1e-12) * gso.c[i - 1]) {
            std::swap(cols[i], cols[i - 1]);
            for (int r = 0; r < k; ++r) std::swap(res.U(r, i), res.U(r, i - 1));
            if (!gram_schmidt(cols, gso)) { res.ok = false; break; }
            i = std::max(i - 1, 1);
        } else {
            for (int j = i - 2; j >= 0; --j) {
                size_reduce(i, j);
                if (!res.ok) break;
            }
            ++i;
        }
    }
    return res;
}

void enumerate_quadratic(const GsoData& gso, double bound,
                         const std::function<void(const std::vector<long>&)>& visit,
                         long node_cap, long candidate_cap) {
    const int k = static_cast<int>(gso.c.size());
    for (int i = 0; i < k; ++i)
        require(std::isfinite(gso.c[i]) && gso.c[i] > 0.0,
                "enumeration needs a positive definite form");
    if (!(bound > 0.0) || !std::isfinite(bound))
        throw BudgetError("enumeration bound is not a positive finite number");

    std::vector<long> x(k, 0);
    long nodes = 0, found = 0;

    // Depth-first from the last coordinate.  `used` is the weight consumed by
    // the levels above; `outer_zero` tracks whether all of them chose 0, in
    // which case the canonical sign convention restricts this level to x >= 0.
    std::function<void(int, double, bool)> descend =
        [&](int level, double used, bool outer_zero) {
        if (level < 0) {
            if (outer_zero) return;  // the zero vector
            if (++found > candidate_cap)
                throw BudgetError("enumeration candidate budget exhausted");
            visit(x);
            return;
        }
        double center = 0.0;
        for (int j = level + 1; j < k; ++j)
            center -= gso.mu[j][level] * static_cast<double>(x[j]);
        double room = bound - used;
        if (room < 0.0) return;
        double w = std::sqrt(room / gso.c[level]);
        long lo = static_cast<long>(std::ceil(center - w - 1e-12));
        long hi = static_cast<long>(std::floor(center + w + 1e-12));
        if (outer_zero && lo < 0) lo = 0;
        for (long v = lo; v <= hi; ++v) {
            if (++nodes > node_cap)
                throw BudgetError("enumeration node budget exhausted");
            double d = static_cast<double>(v) - center;
            double next = used + gso.c[level] * d * d;
            if (next > bound * (1.0 + 1e-12)) continue;
            x[level] = v;
            descend(level - 1, next, outer_zero && v == 0);
        }
        x[level] = 0;
    };
    descend(k - 1, 0.0, true);
}

} // namespace latflow::detail
