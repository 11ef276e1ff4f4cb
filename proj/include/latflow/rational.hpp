/* Exact integer / rational layer on top of GMP's C++ bindings.
 *
 * Everything downstream manipulates mpz_class / mpq_class directly; this
 * header only adds the handful of helpers GMP does not ship: canonical
 * string round-trips (including decimal literals, which parse to the exact
 * rational they denote), floor/ceil/nearest on rationals, signed powers,
 * integer k-th roots and binomials.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "latflow/errors.hpp"

namespace latflow {

using Int = mpz_class;
using Rational = mpq_class;

/// Parse "p", "p/q", or a decimal literal ("-3.25", "6.1e-4") into the exact
/// rational it denotes.  Throws PreconditionError on malformed input or q=0.
Rational parse_rational(std::string_view s);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

inline int sgn(const Rational& r) { return mpq_sgn(r.get_mpq_t()); }
inline int sgn(const Int& z) { return mpz_sgn(z.get_mpz_t()); }

inline Rational rabs(const Rational& r) { return abs(r); }

/// floor(r) as an integer.
Int rfloor(const Rational& r);
/// ceil(r) as an integer.
Int rceil(const Rational& r);
/// Nearest integer to r; exact halves round up (floor(r + 1/2)).
Int rnearest(const Rational& r);

/// r^e for a (possibly negative) machine exponent.  Throws on 0^(e<0).
Rational rpow(const Rational& r, long e);

/// b^e for a non-negative machine exponent.
Int ipow(const Int& b, unsigned long e);

/// floor(a^(1/n)) for a >= 0, n >= 1.
Int iroot_floor(const Int& a, unsigned long n);

/// Binomial coefficient C(n, k); 0 outside the triangle.
Int binom(unsigned n, unsigned k);

/// lcm of denominators of a list of rationals (>= 1).
Int common_denominator(const std::vector<Rational>& rs);

/// Parse a decimal string of an unsigned integer into uint64_t (CLI use).
std::uint64_t parse_u64(std::string_view s);

} // namespace latflow
