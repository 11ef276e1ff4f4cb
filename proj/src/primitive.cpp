/* Shortest primitive rank-ell subgroup of a scaled lattice.
 *
 * Strategy: collect the pool of all lattice vectors inside a radius R with
 *   R = (2^ell / w_ell) * V_cand / (lambda_1 ... lambda_{ell-1}),
 * where V_cand is the best covolume seen so far (every ell-subset of the
 * LLL-reduced columns is scored first), lambda_1 the exact systole,
 * lambda_i for i >= 2 a Gram-Schmidt lower bound on the i-th minimum, and
 * w_ell a rational lower bound for the volume of the ell-ball.
 * Minkowski's second theorem gives
 * lambda_1(D) ... lambda_ell(D) <= (2^ell / w_ell) covol(D) for any rank-ell
 * subgroup D, so the minimizer's ell-th minimum is at most R; vectors of D
 * attaining its minima are independent, lie in the pool, and span a
 * finite-index subgroup of D whose saturation is D itself.  Scoring each
 * ell-subset of the pool by the covolume of the *saturation* of its span
 * (divide the wedge by the gcd of its coordinates) therefore visits the true
 * minimizer whenever the pool enumeration completes — for every grade.
 *
 * Every score is exact (XSum of squared-minor terms); doubles only steer a
 * prefilter with a guarded band.  Budget overruns degrade to a heuristic
 * answer with certified = false, never to a silent wrong answer.
 */
#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "latflow/combinat.hpp"
#include "latflow/errors.hpp"
#include "latflow/lattice.hpp"
#include "lattice_internal.hpp"

namespace latflow {

namespace {

// Rational lower bounds for the volume of the unit ell-ball, ell = 1..9.
// Each is strictly below the true volume, so 2^ell / bound over-estimates
// 2^ell / w_ell and the pool radius only grows (soundness is one-sided).
const Rational kBallVolumeLower[10] = {
    Rational(1),        // unused (ell = 0)
    Rational(2),        // 2
    Rational(25, 8),    // pi ~ 3.14159
    Rational(33, 8),    // 4pi/3 ~ 4.18879
    Rational(39, 8),    // pi^2/2 ~ 4.93480
    Rational(21, 4),    // 8pi^2/15 ~ 5.26379
    Rational(41, 8),    // pi^3/6 ~ 5.16771
    Rational(33, 7),    // 16pi^3/105 ~ 4.72477
    Rational(4),        // pi^4/24 ~ 4.05871
    Rational(13, 4),    // 32pi^4/945 ~ 3.29851
};

Int gcd_all(const std::vector<Int>& v) {
    Int g(0);
    for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

/// Blade multivector from Pluecker coordinates listed over `Ts`.
MultiVector<Int> blade_of(int m, int n, const std::vector<IndexSet>& Ts,
                          const std::vector<Int>& w) {
    MultiVector<Int> mv(m, n);
    for (std::size_t t = 0; t < Ts.size(); ++t) {
        if (w[t] == 0) continue;
        IndexSet I, J;
        for (int l : Ts[t])
            (l <= m ? I : J).push_back(l <= m ? l : l - m);
        mv.add_term(BasisBlade{std::move(I), std::move(J)}, w[t]);
    }
    return mv;
}

/// Product of the ell smallest singular values of the scaled basis (doubles),
/// deflated by 1% — the informational lower bound on |g B w| per unit of the
/// largest Pluecker coordinate of w.
double small_singular_product(const LatticeBasis& B, int ell) {
    const int k = B.k();
    Eigen::MatrixXd M(k, k);
    detail::DCols cols = detail::double_columns(B);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) M(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    double prod = 1.0;
    for (int i = k - ell; i < k; ++i) prod *= svd.singularValues()(i);
    return prod * 0.99;
}

} // namespace

PrimitiveResult primitive_systole(const LatticeBasis& B, int ell, long height) {
    const int k = B.k(), m = B.m(), n = B.n();
    require(1 <= ell && ell <= k, "primitive_systole: grade out of range");
    require(height >= 1, "primitive_systole: height must be positive");

    PrimitiveResult res;
    res.ell = ell;
    res.height = height;
    res.outside_height_bound =
        static_cast<double>(height + 1) * small_singular_product(B, ell);

    if (ell == k) {
        XReal covol = B.covolume();
        res.value = covol.to_double();
        res.covol_sq = XSum::of_term(Rational(1), covol.pow(Rational(2)));
        res.witness = blade_of(m, n, {full_range(k)}, {Int(1)});
        res.certified = true;
        return res;
    }

    if (ell == 1) {
        SystoleResult s = systole(B, Norm::euclidean);
        MultiVector<Int> mv(m, n);
        for (int l = 0; l < k; ++l) {
            if (s.witness[static_cast<std::size_t>(l)] == 0) continue;
            BasisBlade b = l < m ? BasisBlade{{l + 1}, {}} : BasisBlade{{}, {l - m + 1}};
            mv.add_term(std::move(b), s.witness[static_cast<std::size_t>(l)]);
        }
        res.value = s.value;
        res.covol_sq = s.norm_sq;
        res.witness = std::move(mv);
        res.certified = true;
        return res;
    }

    // ---- intermediate grade: short-vector pool + saturation scoring ----

    SystoleResult s1 = systole(B, Norm::euclidean);
    MatZ U = detail::reduce_transform(B);
    LatticeBasis red(m, n, detail::scaled_times_u(B, U), B.scale());

    const std::vector<IndexSet> Ts = subsets_of_size(full_range(k), ell);
    const std::size_t nT = Ts.size();

    // Pluecker scoring data: exact minors det B[T, S] and the per-T scale
    // products (squared) as exact keys.
    std::vector<std::vector<Rational>> detB(nT, std::vector<Rational>(nT));
    std::vector<XReal> keyT(nT);
    for (std::size_t t = 0; t < nT; ++t) {
        XReal key;
        for (int l : Ts[t]) key *= B.scale()[static_cast<std::size_t>(l - 1)];
        keyT[t] = key.pow(Rational(2));
        for (std::size_t s = 0; s < nT; ++s)
            detB[t][s] = B.columns().submatrix(Ts[t], Ts[s]).det();
    }

    // Exact covolume^2 of the subgroup with Pluecker coordinates w.
    auto covol_sq_exact = [&](const std::vector<Int>& w) {
        XSum out;
        for (std::size_t t = 0; t < nT; ++t) {
            Rational inner(0);
            for (std::size_t s = 0; s < nT; ++s)
                if (w[s] != 0) inner += detB[t][s] * Rational(w[s]);
            if (!(inner == 0)) out.add(inner * inner, keyT[t]);
        }
        return out;
    };
    // No floating shortcut here: the inner sums can cancel, which makes a
    // double-only score unreliable.  Exact sums of squares have no
    // cancellation, so their to_double() is a sound prefilter key.

    auto cmp = [](const XSum& a, const XSum& b) { return a.cmp(b); };
    detail::BestTracker<XSum, decltype(cmp)> best;
    std::set<std::vector<Int>> seen;

    // Score the saturation of the span of the given pool members (scoring a
    // saturation twice is skipped via `seen`).
    auto score_subset = [&](const std::vector<std::vector<Int>>& vecs,
                            const std::vector<int>& idx) {
        MatZ X(k, ell);
        for (int j = 0; j < ell; ++j)
            for (int i = 0; i < k; ++i)
                X(i, j) = vecs[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])][static_cast<std::size_t>(i)];
        std::vector<Int> w(nT);
        for (std::size_t t = 0; t < nT; ++t) w[t] = X.submatrix(Ts[t], full_range(ell)).det();
        Int g = gcd_all(w);
        if (g == 0) return;  // dependent subset
        if (g != 1)
            for (Int& x : w) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        detail::canonical_sign(w);
        if (!seen.insert(w).second) return;
        XSum exact = covol_sq_exact(w);
        double d = exact.to_double();
        best.consider(w, std::move(exact), d, cmp);
    };

    auto for_each_subset = [&](std::size_t count, auto&& fn) {
        if (count < static_cast<std::size_t>(ell)) return;
        std::vector<int> idx(static_cast<std::size_t>(ell));
        for (int i = 0; i < ell; ++i) idx[static_cast<std::size_t>(i)] = i;
        const int P = static_cast<int>(count);
        while (true) {
            fn(idx);
            int j = ell - 1;
            while (j >= 0 && idx[static_cast<std::size_t>(j)] == P - ell + j) --j;
            if (j < 0) break;
            ++idx[static_cast<std::size_t>(j)];
            for (int i = j + 1; i < ell; ++i)
                idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
    };

    // Seed with every ell-subset of the reduced basis columns: always scores
    // at least one candidate (the columns are independent) and supplies the
    // covolume ceiling V_cand that controls the pool radius.
    std::vector<std::vector<Int>> ucols;
    for (int j = 0; j < k; ++j) ucols.push_back(U.col(j));
    for_each_subset(static_cast<std::size_t>(k),
                    [&](const std::vector<int>& idx) { score_subset(ucols, idx); });
    require(best.set, "primitive_systole: no independent subset scored");

    detail::GsoData gso;
    if (!detail::gram_schmidt(detail::double_columns(red), gso))
        throw BudgetError("primitive_systole: scaled basis too skewed for floating preprocessing");

    // Lower bounds on the successive minima lambda_1 .. lambda_{ell-1}.
    // lambda_1 is the exact systole.  For the rest, hunt the true minima:
    // enumerate complete balls of growing radius and track the exact rank of
    // the vectors found (in ascending norm order, the norm at which the rank
    // first reaches i is lambda_i).  If a ball blows its budget before rank
    // ell-1 is reached, the last complete radius still floors the missing
    // minima, as does the Gram-Schmidt bound min_{j >= i} |b*_j|.
    std::vector<double> lam_low(static_cast<std::size_t>(ell), 0.0);
    lam_low[0] = s1.value;  // index i-1 holds the bound for lambda_i
    for (int i = 2; i <= ell - 1; ++i) {
        double low = 0.0;
        for (int j = i - 1; j < k; ++j) {
            double c = std::sqrt(gso.c[static_cast<std::size_t>(j)]);
            if (j == i - 1 || c < low) low = c;
        }
        lam_low[static_cast<std::size_t>(i - 1)] = std::max(low * (1.0 - 1e-6), s1.value);
    }
    if (ell >= 3) {
        // Exact rank over the rationals, built incrementally in echelon form.
        auto rank_of_prefix = [&](const std::vector<std::pair<double, std::vector<Int>>>& vecs,
                                  std::vector<double>& at_rank) {
            std::vector<std::vector<Rational>> ech;
            std::vector<int> pivot;
            for (const auto& [nd, y] : vecs) {
                std::vector<Rational> row(static_cast<std::size_t>(k));
                for (int l = 0; l < k; ++l) row[static_cast<std::size_t>(l)] = Rational(y[static_cast<std::size_t>(l)]);
                for (std::size_t r = 0; r < ech.size(); ++r) {
                    const Rational& p = row[static_cast<std::size_t>(pivot[r])];
                    if (p == 0) continue;
                    Rational f = p / ech[r][static_cast<std::size_t>(pivot[r])];
                    for (int l = 0; l < k; ++l)
                        row[static_cast<std::size_t>(l)] -= f * ech[r][static_cast<std::size_t>(l)];
                }
                int pc = -1;
                for (int l = 0; l < k; ++l)
                    if (!(row[static_cast<std::size_t>(l)] == 0)) { pc = l; break; }
                if (pc < 0) continue;
                ech.push_back(std::move(row));
                pivot.push_back(pc);
                at_rank.push_back(nd);
                if (static_cast<int>(ech.size()) >= ell - 1) break;
            }
        };
        double beta = 4.0 * s1.value * s1.value * 1.0001;
        for (int grow = 0; grow < 40; ++grow) {
            std::vector<std::pair<double, std::vector<Int>>> found;
            try {
                detail::enumerate_quadratic(
                    gso, beta,
                    [&](const std::vector<long>& x) {
                        std::vector<Int> y = detail::u_times(U, x);
                        double d = std::sqrt(B.norm_sq(y).to_double());
                        found.emplace_back(d, std::move(y));
                    },
                    2'000'000, 4000);
            } catch (const BudgetError&) {
                break;  // keep the floors from the last complete ball
            }
            std::sort(found.begin(), found.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            std::vector<double> at_rank;
            rank_of_prefix(found, at_rank);
            for (std::size_t r = 0; r < at_rank.size(); ++r)
                lam_low[r] = std::max(lam_low[r], at_rank[r] * (1.0 - 1e-6));
            if (static_cast<int>(at_rank.size()) >= ell - 1) break;
            // No i-th independent vector inside this complete ball: every
            // missing minimum exceeds its radius.
            double floor_all = std::sqrt(beta) * (1.0 - 1e-6);
            for (std::size_t r = at_rank.size(); r < lam_low.size() - 1; ++r)
                lam_low[r] = std::max(lam_low[r], floor_all);
            beta *= 4.0;
            if (!(beta < 1e30)) break;
        }
    }
    double lam_prod = 1.0;
    for (int i = 1; i <= ell - 1; ++i) lam_prod *= lam_low[static_cast<std::size_t>(i - 1)];
    const double two_over_w = std::pow(2.0, ell) / to_double(kBallVolumeLower[ell]);

    // Score all pool subsets whose norm product can belong to the minimizer:
    // the minima vectors of the optimal subgroup D* satisfy
    //   prod |v_i| = prod lambda_i(D*) <= (2^ell/w_ell) covol(D*),
    // and covol(D*) is at most the best candidate seen, so subsets above the
    // product limit cannot realize D* and are skipped without loss.
    auto score_pool = [&](const std::vector<std::vector<Int>>& pool,
                          const std::vector<double>& nd) -> bool {
        const std::size_t P = pool.size();
        long scored_cap = std::max<long>(
            2000, static_cast<long>(3e8 / static_cast<double>(nT * nT)));
        scored_cap = std::min<long>(scored_cap, 50'000);
        long visit_cap = 20 * scored_cap;
        long visited = 0, scored = 0;
        std::vector<int> idx(static_cast<std::size_t>(ell));
        bool complete = true;
        auto dfs = [&](auto&& self, int depth, std::size_t from, double prod) -> void {
            if (!complete) return;
            double limit = two_over_w * std::sqrt(best.dbl) * (1.0 + 1e-6);
            for (std::size_t j = from; j < P; ++j) {
                double p = prod * nd[j];
                // cheapest possible completion uses the next-smallest norms
                double rest = p;
                for (int r = 1; r <= ell - 1 - depth; ++r) {
                    if (j + static_cast<std::size_t>(r) >= P) { rest = -1.0; break; }
                    rest *= nd[j + static_cast<std::size_t>(r)];
                }
                if (rest < 0.0) break;           // not enough vectors left
                if (rest > limit) break;         // sorted: no later j works
                if (++visited > visit_cap) { complete = false; return; }
                idx[static_cast<std::size_t>(depth)] = static_cast<int>(j);
                if (depth == ell - 1) {
                    if (++scored > scored_cap) { complete = false; return; }
                    score_subset(pool, idx);
                } else {
                    self(self, depth + 1, j + 1, p);
                }
            }
        };
        dfs(dfs, 0, 0, 1.0);
        return complete;
    };

    // Every improvement of the best covolume shrinks the radius, so a pass
    // that blew a budget may succeed when repeated with the tighter bound.
    bool certified = false;
    double prev_bound = std::numeric_limits<double>::infinity();
    for (int pass = 0; pass < 3 && !certified; ++pass) {
        double V_cand = std::sqrt(best.exact.to_double()) * (1.0 + 1e-9);
        double R = two_over_w * V_cand / lam_prod;
        if (!std::isfinite(R) || R <= 0.0)
            throw BudgetError("primitive_systole: pool radius overflows doubles");
        double bound = R * R * 1.0201;  // (1.01 R)^2: double-pipeline margin
        if (bound >= prev_bound * 0.83) break;  // no meaningful shrink
        prev_bound = bound;

        bool pool_complete = true;
        std::vector<std::vector<Int>> pool;
        try {
            detail::enumerate_quadratic(
                gso, bound,
                [&](const std::vector<long>& x) {
                    std::vector<Int> y = detail::u_times(U, x);
                    detail::canonical_sign(y);
                    pool.push_back(std::move(y));
                },
                50'000'000, 6000);
        } catch (const BudgetError&) {
            pool_complete = false;  // score what we have; report heuristic
        }

        // Deterministic pool order, shortest vectors first.
        std::vector<std::pair<double, std::size_t>> order(pool.size());
        for (std::size_t i = 0; i < pool.size(); ++i)
            order[i] = {B.norm_sq(pool[i]).to_double(), i};
        std::sort(order.begin(), order.end(),
                  [&](const std::pair<double, std::size_t>& a,
                      const std::pair<double, std::size_t>& b) {
                      if (a.first != b.first) return a.first < b.first;
                      return detail::lex_less(pool[a.second], pool[b.second]);
                  });
        std::vector<std::vector<Int>> sorted;
        std::vector<double> nd;
        sorted.reserve(pool.size());
        nd.reserve(pool.size());
        for (const auto& oi : order) {
            sorted.push_back(std::move(pool[oi.second]));
            nd.push_back(std::sqrt(oi.first));
        }
        pool = std::move(sorted);

        bool scoring_complete = score_pool(pool, nd);
        certified = pool_complete && scoring_complete;
    }

    res.value = std::sqrt(best.exact.to_double());
    res.covol_sq = best.exact;
    res.witness = blade_of(m, n, Ts, best.tag);
    res.certified = certified;
    return res;
}

} // namespace latflow
