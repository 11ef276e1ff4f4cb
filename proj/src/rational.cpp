#include "latflow/rational.hpp"

#include <cctype>
#include <charconv>

namespace latflow {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Base-10 always; the mpz_class string constructor auto-detects the base,
// which turns "025" into octal.
Int int_from_digits(std::string_view s) {
    Int z;
    int rc = mpz_set_str(z.get_mpz_t(), std::string(s).c_str(), 10);
    require(rc == 0, "parse_rational: bad digit string '" + std::string(s) + "'");
    return z;
}

} // namespace

Rational parse_rational(std::string_view s) {
    // strip surrounding whitespace
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    require(!s.empty(), "parse_rational: empty string");

    bool neg = false;
    if (s.front() == '+' || s.front() == '-') {
        neg = (s.front() == '-');
        s.remove_prefix(1);
        require(!s.empty(), "parse_rational: sign with no digits");
    }

    auto fail = [&] { throw PreconditionError("parse_rational: malformed number '" + std::string(s) + "'"); };

    // "p/q" form
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view ps = s.substr(0, slash), qs = s.substr(slash + 1);
        if (!all_digits(ps) || !all_digits(qs)) fail();
        Int p = int_from_digits(ps), q = int_from_digits(qs);
        require(sgn(q) != 0, "parse_rational: zero denominator");
        Rational r(p, q);
        r.canonicalize();
        return neg ? Rational(-r) : r;
    }

    // decimal / scientific: mantissa [. fraction] [eE exponent]
    std::string_view mant = s;
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        mant = s.substr(0, e);
        std::string_view es = s.substr(e + 1);
        bool eneg = false;
        if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
            eneg = (es.front() == '-');
            es.remove_prefix(1);
        }
        if (!all_digits(es) || es.size() > 6) fail();
        auto [p, ec] = std::from_chars(es.data(), es.data() + es.size(), exp10);
        if (ec != std::errc() || p != es.data() + es.size()) fail();
        if (eneg) exp10 = -exp10;
    }

    std::string digits;
    long frac_len = 0;
    if (auto dot = mant.find('.'); dot != std::string_view::npos) {
        std::string_view ip = mant.substr(0, dot), fp = mant.substr(dot + 1);
        if (ip.empty() && fp.empty()) fail();
        if (!ip.empty() && !all_digits(ip)) fail();
        if (!fp.empty() && !all_digits(fp)) fail();
        digits = std::string(ip) + std::string(fp);
        frac_len = static_cast<long>(fp.size());
    } else {
        if (!all_digits(mant)) fail();
        digits = std::string(mant);
    }
    if (digits.empty()) fail();

    Int num = int_from_digits(digits);
    long shift = exp10 - frac_len;
    Rational value(num);
    if (shift > 0)
        value *= Rational(ipow(Int(10), static_cast<unsigned long>(shift)));
    else if (shift < 0)
        value /= Rational(ipow(Int(10), static_cast<unsigned long>(-shift)));
    value.canonicalize();
    return neg ? Rational(-value) : value;
}

std::string to_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Int rfloor(const Rational& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Int rceil(const Rational& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Int rnearest(const Rational& r) { return rfloor(r + Rational(1, 2)); }

Rational rpow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    require(sgn(r) != 0 || e > 0, "rpow: zero base with negative exponent");
    unsigned long ae = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational out;
    mpz_pow_ui(out.get_num().get_mpz_t(), r.get_num().get_mpz_t(), ae);
    mpz_pow_ui(out.get_den().get_mpz_t(), r.get_den().get_mpz_t(), ae);
    out.canonicalize();
    if (e < 0) out = 1 / out;
    return out;
}

Int ipow(const Int& b, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
}

Int iroot_floor(const Int& a, unsigned long n) {
    require(sgn(a) >= 0, "iroot_floor: negative radicand");
    require(n >= 1, "iroot_floor: order must be >= 1");
    Int out;
    mpz_root(out.get_mpz_t(), a.get_mpz_t(), n);
    return out;
}

Int binom(unsigned n, unsigned k) {
    if (k > n) return Int(0);
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Int common_denominator(const std::vector<Rational>& rs) {
    Int d(1);
    for (const auto& r : rs) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), r.get_den().get_mpz_t());
    return d;
}

std::uint64_t parse_u64(std::string_view s) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    require(ec == std::errc() && p == s.data() + s.size() && !s.empty(),
            "parse_u64: malformed unsigned integer '" + std::string(s) + "'");
    return v;
}

} // namespace latflow
