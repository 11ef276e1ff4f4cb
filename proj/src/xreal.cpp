#include "latflow/xreal.hpp"

#include <mpfr.h>

#include <cmath>
#include <sstream>

namespace latflow {

namespace {

// Escalation schedule for interval refinement, in mantissa bits.
constexpr mpfr_prec_t kStartPrec = 128;
constexpr mpfr_prec_t kPurePrecCap = 1 << 16;   // pure-exponential sums: verdict guaranteed
constexpr mpfr_prec_t kMixedPrecCap = 1 << 14;  // mixed algebraic sums: may stay undecided

// Bit-size guard for the cleared-denominator rational power product.
constexpr unsigned long kPowerBitCap = 1ul << 22;

/* Minimal directed-rounding interval on top of raw mpfr_t. */
struct MpfrIval {
    mpfr_t lo, hi;
    explicit MpfrIval(mpfr_prec_t prec) {
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
        mpfr_set_zero(lo, 1);
        mpfr_set_zero(hi, 1);
    }
    ~MpfrIval() {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }
    MpfrIval(const MpfrIval&) = delete;
    MpfrIval& operator=(const MpfrIval&) = delete;

    void set_q(const Rational& q) {
        mpfr_set_q(lo, q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi, q.get_mpq_t(), MPFR_RNDU);
    }
    void add(const MpfrIval& o) {
        mpfr_add(lo, lo, o.lo, MPFR_RNDD);
        mpfr_add(hi, hi, o.hi, MPFR_RNDU);
    }
    // multiply by an exact rational (sign-aware)
    void mul_q(const Rational& q) {
        if (sgn(q) >= 0) {
            mpfr_mul_q(lo, lo, q.get_mpq_t(), MPFR_RNDD);
            mpfr_mul_q(hi, hi, q.get_mpq_t(), MPFR_RNDU);
        } else {
            mpfr_swap(lo, hi);
            mpfr_mul_q(lo, lo, q.get_mpq_t(), MPFR_RNDD);
            mpfr_mul_q(hi, hi, q.get_mpq_t(), MPFR_RNDU);
        }
    }
    void exp_inplace() {
        mpfr_exp(lo, lo, MPFR_RNDD);
        mpfr_exp(hi, hi, MPFR_RNDU);
    }
};

// Interval enclosure of ln(x) for the power product x at the given precision.
void log_enclosure(const Rational& a, const std::map<Rational, Rational>& p, mpfr_prec_t prec,
                   MpfrIval& out) {
    out.set_q(a);
    MpfrIval term(prec);
    for (const auto& [base, g] : p) {
        mpfr_set_q(term.lo, base.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(term.hi, base.get_mpq_t(), MPFR_RNDU);
        mpfr_log(term.lo, term.lo, MPFR_RNDD);
        mpfr_log(term.hi, term.hi, MPFR_RNDU);
        // base < 1 gives negative logs; directed rounding already preserves
        // lo <= hi, and mul_q handles the sign of g.
        term.mul_q(g);
        out.add(term);
    }
}

// Exact value of prod base^{g} assuming every g is an integer; throws
// BudgetError if the result would exceed the bit-size guard.
Rational integral_power_product(const std::map<Rational, Rational>& p) {
    unsigned long bits = 0;
    for (const auto& [base, g] : p) {
        unsigned long bbits =
            mpz_sizeinbase(base.get_num().get_mpz_t(), 2) + mpz_sizeinbase(base.get_den().get_mpz_t(), 2);
        Rational ag = rabs(g);
        if (ag.get_den() != 1 || !ag.get_num().fits_ulong_p())
            throw BudgetError("power product: exponent out of range");
        bits += bbits * ag.get_num().get_ui();
        if (bits > kPowerBitCap) throw BudgetError("power product: cleared-denominator value too large");
    }
    Rational r(1);
    for (const auto& [base, g] : p) {
        long e = g.get_num().get_si();
        r *= rpow(base, e);
    }
    return r;
}

} // namespace

void XReal::set_factor(const Rational& base, const Rational& g) {
    require(sgn(base) > 0, "XReal: base must be positive");
    if (base == 1 || sgn(g) == 0) return;
    auto it = p_.find(base);
    if (it == p_.end()) {
        p_.emplace(base, g);
    } else {
        it->second += g;
        if (sgn(it->second) == 0) p_.erase(it);
    }
}

XReal XReal::of(const Rational& r) {
    require(sgn(r) > 0, "XReal: value must be positive");
    XReal x;
    x.set_factor(r, Rational(1));
    return x;
}

XReal XReal::exp(const Rational& a) {
    XReal x;
    x.a_ = a;
    return x;
}

XReal XReal::pow(const Rational& base, const Rational& g) {
    require(sgn(base) > 0, "XReal: base must be positive");
    XReal x;
    x.set_factor(base, g);
    return x;
}

XReal& XReal::operator*=(const XReal& o) {
    a_ += o.a_;
    for (const auto& [base, g] : o.p_) set_factor(base, g);
    return *this;
}

XReal& XReal::operator/=(const XReal& o) {
    a_ -= o.a_;
    for (const auto& [base, g] : o.p_) set_factor(base, Rational(-g));
    return *this;
}

XReal XReal::pow(const Rational& g) const {
    XReal x;
    if (sgn(g) == 0) return x;
    x.a_ = a_ * g;
    for (const auto& [base, e] : p_) x.p_.emplace(base, e * g);
    return x;
}

std::optional<Rational> XReal::as_rational() const {
    if (sgn(a_) != 0) return std::nullopt;
    for (const auto& [base, g] : p_)
        if (g.get_den() != 1) return std::nullopt;
    // integral exponents: evaluate exactly
    return integral_power_product(p_);
}

std::strong_ordering XReal::cmp(const XReal& o) const {
    XReal z = *this / o;
    if (z.p_.empty()) {
        // e^a vs 1
        int s = sgn(z.a_);
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    // Clear exponent denominators: z <=> 1  iff  R <=> e^{-aD}, where
    // D = lcm of exponent denominators, R = prod base^{g D} (exact rational).
    std::vector<Rational> gs;
    for (const auto& [base, g] : z.p_) gs.push_back(g);
    Int D = common_denominator(gs);
    std::map<Rational, Rational> cleared;
    for (const auto& [base, g] : z.p_) cleared.emplace(base, Rational(g * Rational(D)));
    Rational R = integral_power_product(cleared);
    Rational negAD = -z.a_ * Rational(D);

    if (sgn(negAD) == 0) {
        int s = mpq_cmp(R.get_mpq_t(), Rational(1).get_mpq_t());
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    // R vs e^{negAD}: never equal, refine until separated.
    for (mpfr_prec_t prec = kStartPrec;; prec *= 2) {
        MpfrIval ev(prec);
        ev.set_q(negAD);
        ev.exp_inplace();
        if (mpfr_cmp_q(ev.lo, R.get_mpq_t()) > 0) return std::strong_ordering::less;     // e^{..} > R
        if (mpfr_cmp_q(ev.hi, R.get_mpq_t()) < 0) return std::strong_ordering::greater;  // e^{..} < R
        if (prec > kPurePrecCap)
            throw BudgetError("XReal::cmp: precision cap reached");
    }
}

double XReal::to_double() const { return std::exp(log_double()); }

double XReal::log_double() const {
    double l = latflow::to_double(a_);
    for (const auto& [base, g] : p_) l += latflow::to_double(g) * std::log(latflow::to_double(base));
    return l;
}

std::string XReal::to_string() const {
    std::ostringstream os;
    bool first = true;
    if (sgn(a_) != 0) {
        os << "e^(" << latflow::to_string(a_) << ")";
        first = false;
    }
    for (const auto& [base, g] : p_) {
        if (!first) os << "*";
        os << "(" << latflow::to_string(base) << ")^(" << latflow::to_string(g) << ")";
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

// ----------------------------------------------------------------- XSum

void XSum::add(const Rational& c, const XReal& x) {
    if (sgn(c) == 0) return;
    // fold rational-valued factors into the coefficient
    Rational coeff = c;
    XReal key = x;
    if (auto r = key.as_rational()) {
        coeff *= *r;
        key = XReal();
    }
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        if (it->second.cmp(key) == std::strong_ordering::equal) {
            it->first += coeff;
            if (sgn(it->first) == 0) terms_.erase(it);
            return;
        }
    }
    terms_.emplace_back(coeff, key);
}

XSum& XSum::operator+=(const XSum& o) {
    for (const auto& [c, x] : o.terms_) add(c, x);
    return *this;
}

XSum& XSum::operator-=(const XSum& o) {
    for (const auto& [c, x] : o.terms_) add(Rational(-c), x);
    return *this;
}

std::strong_ordering XSum::cmp(const XSum& o) const {
    XSum diff = *this;
    diff -= o;
    if (diff.terms_.empty()) return std::strong_ordering::equal;
    if (diff.terms_.size() == 1) {
        int s = sgn(diff.terms_[0].first);  // keys are positive reals
        return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    bool pure = true;
    for (const auto& [c, x] : diff.terms_)
        if (!x.is_pure_exp()) { pure = false; break; }

    const mpfr_prec_t cap = pure ? kPurePrecCap : kMixedPrecCap;
    for (mpfr_prec_t prec = kStartPrec;; prec *= 2) {
        MpfrIval total(prec), term(prec);
        bool first = true;
        for (const auto& [c, x] : diff.terms_) {
            log_enclosure(x.a_, x.p_, prec, term);
            term.exp_inplace();
            term.mul_q(c);
            if (first) {
                mpfr_set(total.lo, term.lo, MPFR_RNDD);
                mpfr_set(total.hi, term.hi, MPFR_RNDU);
                first = false;
            } else {
                total.add(term);
            }
        }
        if (mpfr_sgn(total.lo) > 0) return std::strong_ordering::greater;
        if (mpfr_sgn(total.hi) < 0) return std::strong_ordering::less;
        if (prec > cap) {
            if (pure)
                throw BudgetError("XSum::cmp: precision cap reached on pure-exponential sum");
            throw BudgetError(
                "XSum::cmp: undecided at precision cap (sum mixes non-exponential irrationals)");
        }
    }
}

double XSum::to_double() const {
    double s = 0;
    for (const auto& [c, x] : terms_) s += latflow::to_double(c) * x.to_double();
    return s;
}

} // namespace latflow
