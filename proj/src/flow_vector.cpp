#include "latflow/flow_vector.hpp"

#include <algorithm>

namespace latflow {

void FlowVector::check() const {
    require(m_ >= 1 && n_ >= 1, "FlowVector: need m, n >= 1");
    require(static_cast<int>(w_.size()) == m_ + n_, "FlowVector: wrong entry count");
    XReal one;
    XReal left, right;
    for (int l = 0; l < m_ + n_; ++l) {
        require(w_[l].cmp(one) != std::strong_ordering::less, "FlowVector: entries must be >= 0");
        (l < m_ ? left : right) *= w_[l];
    }
    require(left.cmp(right) == std::strong_ordering::equal,
            "FlowVector: balance sum(t_1..t_m) = sum(t_{m+1}..t_{m+n}) violated");
}

FlowVector FlowVector::from_exponents(int m, int n, const std::vector<Rational>& tau) {
    std::vector<XReal> w;
    w.reserve(tau.size());
    for (const auto& t : tau) w.push_back(XReal::exp(t));
    FlowVector f(m, n, std::move(w));
    f.exps_ = tau;
    f.check();
    return f;
}

FlowVector FlowVector::from_weights(int m, int n, std::vector<XReal> w) {
    FlowVector f(m, n, std::move(w));
    f.check();
    return f;
}

FlowVector FlowVector::central(int m, int n, const Rational& t) {
    require(sgn(t) >= 0, "FlowVector: central ray needs t >= 0");
    std::vector<Rational> tau;
    tau.reserve(m + n);
    for (int i = 0; i < m; ++i) tau.emplace_back(t / m);
    for (int j = 0; j < n; ++j) tau.emplace_back(t / n);
    return from_exponents(m, n, tau);
}

FlowVector FlowVector::zero(int m, int n) {
    return from_exponents(m, n, std::vector<Rational>(m + n, Rational(0)));
}

double FlowVector::t_scalar() const {
    double s = 0;
    for (int i = 0; i < m_; ++i) s += t_entry(i);
    return s;
}

XReal FlowVector::exp_t() const {
    XReal p;
    for (int i = 0; i < m_; ++i) p *= w_[i];
    return p;
}

double FlowVector::t_sup() const {
    double s = 0;
    for (int l = 0; l < k(); ++l) s = std::max(s, t_entry(l));
    return s;
}

FlowVector FlowVector::compose(const FlowVector& o) const {
    require(m_ == o.m_ && n_ == o.n_, "FlowVector: shape mismatch in compose");
    std::vector<XReal> w(w_);
    for (int l = 0; l < k(); ++l) w[l] *= o.w_[l];
    FlowVector f(m_, n_, std::move(w));
    if (exps_ && o.exps_) {
        std::vector<Rational> tau(*exps_);
        for (int l = 0; l < k(); ++l) tau[l] += (*o.exps_)[l];
        f.exps_ = std::move(tau);
    }
    f.check();
    return f;
}

FlowVector FlowVector::sigma() const {
    std::vector<XReal> w;
    w.reserve(k());
    for (int j = 0; j < n_; ++j) w.push_back(w_[m_ + j]);
    for (int i = 0; i < m_; ++i) w.push_back(w_[i]);
    FlowVector f(n_, m_, std::move(w));
    if (exps_) {
        std::vector<Rational> tau;
        tau.reserve(k());
        for (int j = 0; j < n_; ++j) tau.push_back((*exps_)[m_ + j]);
        for (int i = 0; i < m_; ++i) tau.push_back((*exps_)[i]);
        f.exps_ = std::move(tau);
    }
    f.check();
    return f;
}

} // namespace latflow
