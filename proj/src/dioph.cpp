/* Diophantine approximation: product norms, exhaustive best approximations,
 * exponent ladders, and the constructive pigeonhole / factor-split /
 * flow-direction steps.  See dioph.hpp for the contracts.
 */
#include "latflow/dioph.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <type_traits>
#include <utility>

#include "latflow/errors.hpp"
#include "latflow/parallel.hpp"

namespace latflow {

namespace {

// ---------------------------------------------------------------- witnesses

std::vector<Rational> matrix_times(const MatQ& Y, const std::vector<Int>& q) {
    require(static_cast<int>(q.size()) == Y.cols(), "vector length must match matrix columns");
    std::vector<Rational> out(Y.rows(), Rational(0));
    for (int i = 0; i < Y.rows(); ++i)
        for (int j = 0; j < Y.cols(); ++j) out[i] += Y(i, j) * q[j];
    return out;
}

bool all_zero(const std::vector<Int>& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

Int sup_norm_int(const std::vector<Int>& v) {
    Int best(0);
    for (const Int& x : v) {
        Int a = abs(x);
        if (a > best) best = a;
    }
    return best;
}

// ------------------------------------------------------------- enumeration
//
// Candidates q are enumerated up to the sign symmetry (p,q) ~ (-p,-q): only
// representatives whose first nonzero coordinate is positive are visited.
// Coordinates run in ascending order (0,1,..,bound before the first nonzero
// coordinate; -bound..bound after), which fixes a deterministic order for
// budget cuts.  The callback returns false to stop the walk.

template <class F>
bool walk_sup(std::vector<Int>& q, std::size_t j, bool nonzero, const Int& Q, F& f) {
    if (j == q.size()) return nonzero ? f(q) : true;
    Int v = nonzero ? -Q : Int(0);
    for (; v <= Q; v += 1) {
        q[j] = v;
        if (!walk_sup(q, j + 1, nonzero || v != 0, Q, f)) return false;
    }
    return true;
}

// b is the remaining multiplicative budget: the coordinates left must keep
// prod |q_j|_+ <= b, so |q_j| <= b and the budget divides down by |q_j|_+.
template <class F>
bool walk_mult(std::vector<Int>& q, std::size_t j, bool nonzero, const Int& b, F& f) {
    if (j == q.size()) return nonzero ? f(q) : true;
    Int v = nonzero ? -b : Int(0);
    for (; v <= b; v += 1) {
        q[j] = v;
        Int a = abs(v);
        const Int nb = a <= 1 ? b : b / a;
        if (!walk_mult(q, j + 1, nonzero || v != 0, nb, f)) return false;
    }
    return true;
}

// Number of integer tuples (both signs, zero tuple included) of length
// `depth` with prod |q_j|_+ <= b, via floor-quotient blocks.
Int count_mult_all(const Int& b, int depth, std::vector<std::map<Int, Int>>& memo) {
    if (depth == 0) return Int(1);
    auto& level = memo[static_cast<std::size_t>(depth)];
    auto it = level.find(b);
    if (it != level.end()) return it->second;
    Int total = count_mult_all(b, depth - 1, memo); // q_j = 0 keeps the budget
    Int h(1);
    while (h <= b) {
        Int v = b / h;
        Int h2 = b / v; // last h with the same quotient
        total += 2 * (h2 - h + 1) * count_mult_all(v, depth - 1, memo);
        h = h2 + 1;
    }
    level.emplace(b, total);
    return total;
}

struct Cand {
    std::vector<Int> q, p;
    std::vector<Rational> res;
    Rational sup, pi;
    Int norm;
};

Cand score(const MatQ& Y, const std::vector<Int>& q) {
    Cand c;
    c.q = q;
    c.p.resize(static_cast<std::size_t>(Y.rows()));
    c.res.resize(static_cast<std::size_t>(Y.rows()));
    c.sup = 0;
    c.pi = 1;
    for (int i = 0; i < Y.rows(); ++i) {
        Rational acc(0);
        for (int j = 0; j < Y.cols(); ++j) acc += Y(i, j) * q[static_cast<std::size_t>(j)];
        c.p[static_cast<std::size_t>(i)] = rnearest(acc);
        c.res[static_cast<std::size_t>(i)] = acc - Rational(c.p[static_cast<std::size_t>(i)]);
        Rational a = rabs(c.res[static_cast<std::size_t>(i)]);
        if (a > c.sup) c.sup = a;
        c.pi *= a;
    }
    c.norm = sup_norm_int(q);
    return c;
}

/// Strict "a beats b": smaller error, then smaller ||q||_inf, then lex q.
bool better(const Cand& a, const Cand& b, ApproxObjective obj) {
    const Rational& ea = obj == ApproxObjective::sup ? a.sup : a.pi;
    const Rational& eb = obj == ApproxObjective::sup ? b.sup : b.pi;
    if (ea != eb) return ea < eb;
    if (a.norm != b.norm) return a.norm < b.norm;
    return std::lexicographical_compare(a.q.begin(), a.q.end(), b.q.begin(), b.q.end());
}

struct BestAcc {
    std::optional<Cand> best;
    long long examined = 0;
};

double fit_slope(const std::vector<std::pair<double, double>>& pts) {
    const double n = static_cast<double>(pts.size());
    double sx = 0, sy = 0;
    for (const auto& [x, y] : pts) sx += x, sy += y;
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) sxx += (x - mx) * (x - mx), sxy += (x - mx) * (y - my);
    return sxy / sxx;
}

Rational frac_part(const Rational& r) { return r - Rational(rfloor(r)); }

unsigned long to_ulong_checked(const Int& x, const char* what) {
    require(x.fits_ulong_p(), std::string(what) + " is too large");
    return x.get_ui();
}

} // namespace

// ------------------------------------------------------------- ApproxWitness

ApproxWitness ApproxWitness::from_q(const MatQ& Y, std::vector<Int> q) {
    std::vector<Rational> yq = matrix_times(Y, q);
    std::vector<Int> p(yq.size());
    std::vector<Rational> res(yq.size());
    for (std::size_t i = 0; i < yq.size(); ++i) {
        p[i] = rnearest(yq[i]);
        res[i] = yq[i] - Rational(p[i]);
    }
    ApproxWitness w{std::move(q), std::move(p), std::move(res)};
    w.check(Y);
    return w;
}

ApproxWitness ApproxWitness::from_parts(const MatQ& Y, std::vector<Int> q, std::vector<Int> p) {
    std::vector<Rational> yq = matrix_times(Y, q);
    require(p.size() == yq.size(), "p must have one entry per matrix row");
    std::vector<Rational> res(yq.size());
    for (std::size_t i = 0; i < yq.size(); ++i) res[i] = yq[i] - Rational(p[i]);
    ApproxWitness w{std::move(q), std::move(p), std::move(res)};
    w.check(Y);
    return w;
}

Rational ApproxWitness::sup_error() const {
    Rational best(0);
    for (const Rational& r : residual) {
        Rational a = rabs(r);
        if (a > best) best = a;
    }
    return best;
}

Rational ApproxWitness::pi_error() const {
    Rational prod(1);
    for (const Rational& r : residual) prod *= rabs(r);
    return prod;
}

void ApproxWitness::check(const MatQ& Y) const {
    require(static_cast<int>(q.size()) == Y.cols(), "witness q must have one entry per column");
    require(static_cast<int>(p.size()) == Y.rows(), "witness p must have one entry per row");
    require(residual.size() == p.size(), "witness residual must have one entry per row");
    require(!all_zero(q), "witness q must be nonzero");
    std::vector<Rational> yq = matrix_times(Y, q);
    for (std::size_t i = 0; i < yq.size(); ++i)
        require(residual[i] == yq[i] - Rational(p[i]), "witness residual must equal Yq - p");
}

Json json_of(const ApproxWitness& w) {
    Json j;
    j["q"] = json_of(w.q);
    j["p"] = json_of(w.p);
    j["residual"] = json_of(w.residual);
    return j;
}

// ------------------------------------------------------------ product norms

std::pair<Rational, Rational> prod_norms(const std::vector<Rational>& x) {
    Rational pi(1), pi_plus(1);
    for (const Rational& v : x) {
        Rational a = rabs(v);
        pi *= a;
        pi_plus *= std::max(a, Rational(1));
    }
    return {pi, pi_plus};
}

Int pi_plus(const std::vector<Int>& q) {
    Int prod(1);
    for (const Int& v : q) {
        Int a = abs(v);
        prod *= std::max(a, Int(1));
    }
    return prod;
}

// -------------------------------------------------------------- best_approx

BestApproxResult best_approx(const MatQ& Y, const Int& Q, ApproxObjective objective,
                             long long budget) {
    require(Y.rows() >= 1 && Y.cols() >= 1, "matrix must be nonempty");
    require(Q >= 1, "height bound must be at least 1");
    require(budget >= 1, "candidate budget must be positive");
    const int n = Y.cols();
    const bool sup_mode = objective == ApproxObjective::sup;
    const Int bound = sup_mode ? Q : ipow(Q, static_cast<unsigned long>(n));
    const Int budget_i(static_cast<long>(budget));

    // Canonical candidate count, to decide between a full (parallelizable)
    // walk and a deterministic budget-capped serial prefix.
    Int count;
    if (sup_mode) {
        count = (ipow(2 * Q + 1, static_cast<unsigned long>(n)) - 1) / 2;
    } else if (bound > budget_i) {
        count = bound; // lower bound: (h,0,..,0) for h = 1..bound already exceed
    } else {
        std::vector<std::map<Int, Int>> memo(static_cast<std::size_t>(n) + 1);
        count = (count_mult_all(bound, n, memo) - 1) / 2;
    }
    const bool capped = count > budget_i;

    BestAcc acc;
    if (capped) {
        long long left = budget;
        auto visit = [&](const std::vector<Int>& q) {
            Cand c = score(Y, q);
            if (!acc.best || better(c, *acc.best, objective)) acc.best = std::move(c);
            ++acc.examined;
            return --left > 0;
        };
        std::vector<Int> q(static_cast<std::size_t>(n));
        if (sup_mode)
            walk_sup(q, 0, false, bound, visit);
        else
            walk_mult(q, 0, false, bound, visit);
    } else {
        // Parallel over the first coordinate (0..bound); chunk results merge
        // in coordinate order, so the outcome matches the serial walk.
        const std::size_t firsts = static_cast<std::size_t>(bound.get_ui()) + 1;
        acc = parallel_fold<BestAcc>(
            firsts, default_thread_count(),
            [&](BestAcc& a, std::size_t i) {
                std::vector<Int> q(static_cast<std::size_t>(n));
                q[0] = Int(static_cast<unsigned long>(i));
                auto visit = [&](const std::vector<Int>& qq) {
                    Cand c = score(Y, qq);
                    if (!a.best || better(c, *a.best, objective)) a.best = std::move(c);
                    ++a.examined;
                    return true;
                };
                if (sup_mode) {
                    walk_sup(q, 1, i != 0, bound, visit);
                } else {
                    const Int nb = i <= 1 ? bound : bound / q[0];
                    walk_mult(q, 1, i != 0, nb, visit);
                }
            },
            [&](BestAcc& a, BestAcc& part) {
                a.examined += part.examined;
                if (part.best && (!a.best || better(*part.best, *a.best, objective)))
                    a.best = std::move(part.best);
            });
    }
    require(acc.best.has_value(), "search visited no candidate");

    Cand& b = *acc.best;
    ApproxWitness w{std::move(b.q), std::move(b.p), std::move(b.res)};
    w.check(Y);
    return BestApproxResult{std::move(w), std::move(b.sup), std::move(b.pi), !capped,
                            acc.examined};
}

// -------------------------------------------------------- exponent_estimate

ExponentReport exponent_estimate(const MatQ& Y, const Int& Qmax, long long budget) {
    require(Qmax >= 2, "ladder needs Qmax >= 2");
    ExponentReport rep;
    for (Int Q(2); Q <= Qmax; Q *= 2) {
        LadderRung rung{Q, best_approx(Y, Q, ApproxObjective::sup, budget),
                        best_approx(Y, Q, ApproxObjective::multiplicative, budget)};
        rung.sup.witness.check(Y);
        rung.mult.witness.check(Y);
        rep.complete = rep.complete && rung.sup.complete && rung.mult.complete;
        if (rung.mult.pi_error == 0) rep.rational_obstruction = true;
        rep.ladder.push_back(std::move(rung));
    }
    // Complete searches minimize over nested candidate sets, so their errors
    // cannot increase with Q.  Budget-capped rungs only cover an enumeration
    // prefix and carry no such guarantee.
    for (std::size_t i = 1; i < rep.ladder.size(); ++i) {
        if (rep.ladder[i].sup.complete && rep.ladder[i - 1].sup.complete)
            require(rep.ladder[i].sup.sup_error <= rep.ladder[i - 1].sup.sup_error,
                    "sup-error ladder must be non-increasing");
        if (rep.ladder[i].mult.complete && rep.ladder[i - 1].mult.complete)
            require(rep.ladder[i].mult.pi_error <= rep.ladder[i - 1].mult.pi_error,
                    "Pi-error ladder must be non-increasing");
    }

    const double n = static_cast<double>(Y.cols());
    auto fit = [&](auto err_of, double xscale) {
        std::vector<std::pair<double, double>> pts;
        bool zero_seen = false;
        for (std::size_t i = rep.ladder.size() / 2; i < rep.ladder.size(); ++i) {
            const Rational e = err_of(rep.ladder[i]);
            if (e == 0) {
                zero_seen = true;
                continue;
            }
            pts.emplace_back(xscale * std::log(rep.ladder[i].Q.get_d()),
                             -XReal::of(e).log_double());
        }
        if (pts.size() < 2)
            return zero_seen ? std::numeric_limits<double>::infinity()
                             : std::numeric_limits<double>::quiet_NaN();
        return fit_slope(pts);
    };
    rep.omega = fit([](const LadderRung& r) { return r.sup.sup_error; }, 1.0);
    rep.omega_mult = fit([](const LadderRung& r) { return r.mult.pi_error; }, n);
    return rep;
}

// ------------------------------------------------------- power comparisons

std::strong_ordering compare_with_power(const Rational& a, const Int& base, const Rational& e) {
    require(a >= 0, "comparison requires a nonnegative left-hand side");
    require(base >= 1, "comparison requires an integer base >= 1");
    if (a == 0) return std::strong_ordering::less; // base^e > 0 always
    // a <=> base^(c/d)  reduces to  a^d <=> base^c  (d >= 1 keeps direction).
    const Int c = e.get_num();
    const unsigned long d = to_ulong_checked(e.get_den(), "exponent denominator");
    const unsigned long cu = to_ulong_checked(abs(c), "exponent numerator");
    Int lhs = ipow(a.get_num(), d);
    Int rhs = ipow(a.get_den(), d);
    if (c >= 0)
        rhs *= ipow(base, cu);
    else
        lhs *= ipow(base, cu);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------- improve_solution

ImprovedWitness improve_solution(const MatQ& Y, const ApproxWitness& w, const Rational& delta0) {
    w.check(Y);
    require(delta0 > 0, "delta0 must be positive");
    const int m = Y.rows(), n = Y.cols();
    const Int P = pi_plus(w.q);

    // Product inequality Pi(Yq-p) <= Pi+(q)^{-(1+delta0)}, boundary allowed.
    require(compare_with_power(w.pi_error(), P, -(1 + delta0)) != std::strong_ordering::greater,
            "witness must satisfy the product inequality with exponent 1+delta0");

    const std::vector<Rational> yq = matrix_times(Y, w.q);
    const Rational delta = delta0 / (Rational(m + n + 1) + Rational(n) * delta0);

    long gap = 1; // q~ = gap * q
    bool integral = true;
    for (const Rational& v : yq) integral = integral && v.get_den() == 1;
    if (!integral) {
        // Scan size q = floor(Pi+(q)^{delta0/(m+n+1)}) and the size condition
        // q >= Pi+(q)^{delta0/(m+n+1)} / 2, both checked exactly.
        const Int c = delta0.get_num();
        const Int d_total = delta0.get_den() * (m + n + 1);
        const unsigned long cu = to_ulong_checked(c, "delta0 numerator");
        const unsigned long du = to_ulong_checked(d_total, "scan exponent denominator");
        const Int q_scan = iroot_floor(ipow(P, cu), du);
        require(ipow(2 * q_scan, du) >= ipow(P, cu),
                "witness too small: pigeonhole scan length below half the target");
        if (q_scan > 4096)
            throw BudgetError("pigeonhole scan would need " + q_scan.get_str() +
                              " points; witness height is beyond the scan budget");
        const long scan = q_scan.get_si();
        // v_l = l*Yq mod 1 for l = 1..scan+1; closest pair by exact sup norm,
        // ties to the smallest gap j-i, then the smallest i.
        std::vector<std::vector<Rational>> v(static_cast<std::size_t>(scan) + 1);
        std::vector<Rational> acc(yq.size(), Rational(0));
        for (long l = 0; l <= scan; ++l) {
            for (std::size_t i = 0; i < yq.size(); ++i) acc[i] += yq[i];
            v[static_cast<std::size_t>(l)].resize(yq.size());
            for (std::size_t i = 0; i < yq.size(); ++i)
                v[static_cast<std::size_t>(l)][i] = frac_part(acc[i]);
        }
        std::optional<Rational> best;
        long bi = 0, bj = 0;
        for (long i = 0; i < scan; ++i)
            for (long j = i + 1; j <= scan; ++j) {
                Rational dist(0);
                for (std::size_t k = 0; k < yq.size(); ++k) {
                    Rational a = rabs(v[static_cast<std::size_t>(i)][k] -
                                      v[static_cast<std::size_t>(j)][k]);
                    if (a > dist) dist = a;
                }
                const bool take =
                    !best || dist < *best ||
                    (dist == *best && (j - i < bj - bi || (j - i == bj - bi && i < bi)));
                if (take) {
                    best = dist;
                    bi = i;
                    bj = j;
                }
            }
        gap = bj - bi;
    }

    std::vector<Int> q_bar(w.q.size());
    for (std::size_t j = 0; j < w.q.size(); ++j) q_bar[j] = Int(gap) * w.q[j];
    ApproxWitness improved = ApproxWitness::from_q(Y, std::move(q_bar));
    const Int P_bar = pi_plus(improved.q);

    // Both output inequalities are strict and re-verified exactly; failure
    // means the witness was too small for the construction.
    require(compare_with_power(improved.pi_error(), P_bar, -(1 + delta)) ==
                std::strong_ordering::less,
            "witness too small: improved pair fails the product inequality");
    require(compare_with_power(improved.sup_error(), P_bar, -(delta / m)) ==
                std::strong_ordering::less,
            "witness too small: improved pair fails the sup-norm inequality");

    bool zero = true;
    for (const Rational& r : improved.residual) zero = zero && r == 0;
    return ImprovedWitness{std::move(improved), delta, zero};
}

// ------------------------------------------------------------ split_factors

namespace {

template <class T>
std::vector<T> split_impl(const std::vector<Rational>& z, const T& r, const T& C) {
    constexpr bool xr = std::is_same_v<T, XReal>;
    const std::size_t m = z.size();
    require(m >= 1, "factor split needs at least one entry");
    auto embed = [](const Rational& v) {
        if constexpr (xr)
            return XReal::of(v);
        else
            return v;
    };
    const T one = [] {
        if constexpr (xr)
            return XReal();
        else
            return Rational(1);
    }();

    Rational prod_z(1);
    for (const Rational& zi : z) {
        require(zi >= 0, "factor split requires nonnegative z_i");
        prod_z *= zi;
    }
    if constexpr (!xr) require(r > 0, "factor split requires r > 0");
    for (const Rational& zi : z)
        if (zi > 0) require(embed(zi) < r, "factor split requires z_i < r for every i");
    require(C > one, "factor split requires C > 1");
    const T r_m = [&] {
        if constexpr (xr)
            return r.pow(Rational(static_cast<long>(m)));
        else
            return rpow(r, static_cast<long>(m));
    }();
    if (prod_z > 0)
        require(embed(prod_z) * C < r_m, "factor split requires prod z_i < r^m / C");

    // Greedy rule on the descending-sorted z: C_i = min(r/z_i, C/prod_so_far),
    // with r/0 = infinity (a zero z_i absorbs all remaining C).
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return z[a] > z[b]; });

    std::vector<T> out(m, one);
    T prod = one;
    for (std::size_t idx : order) {
        T rest = C / prod;
        if (z[idx] > 0) {
            T first = r / embed(z[idx]);
            out[idx] = first < rest ? first : rest;
        } else {
            out[idx] = std::move(rest);
        }
        prod = prod * out[idx];
    }

    require(prod == C, "factor split postcondition failed: product of C_i != C");
    for (std::size_t i = 0; i < m; ++i) {
        require(out[i] >= one, "factor split postcondition failed: C_i < 1");
        if (z[i] > 0)
            require(out[i] * embed(z[i]) <= r, "factor split postcondition failed: C_i z_i > r");
    }
    return out;
}

} // namespace

std::vector<Rational> split_factors(const std::vector<Rational>& z, const Rational& r,
                                    const Rational& C) {
    return split_impl<Rational>(z, r, C);
}

std::vector<XReal> split_factors(const std::vector<Rational>& z, const XReal& r, const XReal& C) {
    return split_impl<XReal>(z, r, C);
}

// -------------------------------------------------------------- conversions

Rational gamma_to_delta(const Rational& gamma, int n, int ell) {
    require(n >= 1 && ell >= 1, "dimensions must be positive");
    require(gamma > 0 && Rational(ell) * gamma < 1, "gamma must lie in (0, 1/ell)");
    return (1 + Rational(n) * gamma) / (1 - Rational(ell) * gamma) - 1;
}

Rational delta_to_gamma(const Rational& delta, const Rational& s, int n) {
    require(n >= 1, "dimension must be positive");
    require(delta > 0, "delta must be positive");
    require(s > 0, "s must be positive");
    return delta * s / (1 + delta * Rational(n) * s);
}

// ----------------------------------------------------------- solution_to_time

TimeCertificate solution_to_time(const MatQ& Y, const ApproxWitness& w, const Rational& delta,
                                 const Rational& s) {
    w.check(Y);
    const int m = Y.rows(), n = Y.cols();
    require(delta > 0, "delta must be positive");
    require(s > 0 && Rational(m + n) * s < 1, "s must lie in (0, 1/(m+n))");
    const Int P = pi_plus(w.q);
    require(P >= 2, "witness has Pi+(q) = 1, so e^t = 1 and no factor split exists");

    // Both defining inequalities, checked exactly.
    require(compare_with_power(w.pi_error(), P, -(1 + delta)) == std::strong_ordering::less,
            "witness must satisfy the product inequality with exponent 1+delta");
    require(compare_with_power(w.sup_error(), P, -(delta / m)) == std::strong_ordering::less,
            "witness must satisfy the sup-norm inequality with exponent delta/m");

    // r = Pi+(q)^{-delta s};  e^{t_{m+j}} = |q_j|_+ / r;  e^t = Pi+(q)^{1+n delta s}.
    const Rational Pq(P);
    const XReal r = XReal::pow(Pq, -(delta * s));
    const XReal exp_t = XReal::pow(Pq, 1 + Rational(n) * delta * s);

    std::vector<Rational> z(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) z[static_cast<std::size_t>(i)] = rabs(w.residual[static_cast<std::size_t>(i)]);
    std::vector<XReal> weights = split_factors(z, r, exp_t); // e^{t_i} = C_i
    weights.reserve(static_cast<std::size_t>(m + n));
    for (int j = 0; j < n; ++j) {
        Int a = abs(w.q[static_cast<std::size_t>(j)]);
        weights.push_back(XReal::of(Rational(std::max(a, Int(1)))) / r);
    }
    FlowVector t = FlowVector::from_weights(m, n, std::move(weights)); // exact balance check

    const Rational gamma = delta * s / (1 + delta * Rational(n) * s);
    require(t.exp_t().pow(-gamma) == r, "decay identity e^{-gamma t} = Pi+(q)^{-delta s} failed");

    // Linear-growth certificate: every component of g_t (residual, q) is at
    // most e^{-gamma t} = r, verified exactly.
    for (int i = 0; i < m; ++i)
        if (z[static_cast<std::size_t>(i)] > 0)
            require(t.weight(i) * XReal::of(z[static_cast<std::size_t>(i)]) <= r,
                    "certificate failed on a residual component");
    for (int j = 0; j < n; ++j) {
        Int a = abs(w.q[static_cast<std::size_t>(j)]);
        if (a != 0)
            require(XReal::of(Rational(a)) * t.weight(m + j).inv() <= r,
                    "certificate failed on a q component");
    }
    return TimeCertificate{std::move(t), gamma, r};
}

} // namespace latflow
