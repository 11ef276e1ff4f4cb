/* Balanced diagonal flow directions.
 *
 * A flow vector t = (t_1..t_m, t_{m+1}..t_{m+n}) has nonnegative entries
 * with  sum_{i<=m} t_i = sum_{j<=n} t_{m+j},  and acts on R^{m+n} by
 * g_t = diag(e^{t_1}, ..., e^{t_m}, e^{-t_{m+1}}, ..., e^{-t_{m+n}}).
 *
 * Entries are stored as exact weights w_l = e^{t_l} (XReal), so both the
 * balance identity and every later magnitude comparison stay exact.  The
 * scalar time of the flow is t = sum_{i<=m} t_i; the central ray spreads t
 * evenly, t_i = t/m and t_{m+j} = t/n.
 */
#pragma once

#include <optional>
#include <vector>

#include "latflow/xreal.hpp"

namespace latflow {

class FlowVector {
public:
    /// Weights w_l = e^{tau_l} from rational exponents tau (size m+n).
    static FlowVector from_exponents(int m, int n, const std::vector<Rational>& tau);
    /// General exact weights w_l >= 1, checked for exact balance.
    static FlowVector from_weights(int m, int n, std::vector<XReal> w);
    /// Central ray at scalar time t: exponents (t/m,...,t/m, t/n,...,t/n).
    static FlowVector central(int m, int n, const Rational& t);
    static FlowVector zero(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    int k() const { return m_ + n_; }

    /// w_l = e^{t_l} (always >= 1).
    const XReal& weight(int l) const { return w_[l]; }
    /// Diagonal entry of g_t at position l: w_l for l < m, 1/w_l otherwise.
    XReal scale(int l) const { return l < m_ ? w_[l] : w_[l].inv(); }

    /// t_l as a double.
    double t_entry(int l) const { return w_[l].log_double(); }
    /// Scalar time t = sum of the first m entries, as a double.
    double t_scalar() const;
    /// e^t exactly (product of the first m weights).
    XReal exp_t() const;
    /// max_l t_l as a double.
    double t_sup() const;

    /// Pointwise composition: g_{t+s} = g_t g_s.
    FlowVector compose(const FlowVector& o) const;

    /// Block swap sigma(t) = (t_{m+1}..t_{m+n}, t_1..t_m), a flow for (n, m).
    FlowVector sigma() const;

    /// Rational exponents when this flow was built from them.
    const std::optional<std::vector<Rational>>& exponents() const { return exps_; }

private:
    FlowVector(int m, int n, std::vector<XReal> w) : m_(m), n_(n), w_(std::move(w)) {}
    void check() const;
    int m_, n_;
    std::vector<XReal> w_;
    std::optional<std::vector<Rational>> exps_;
};

} // namespace latflow
