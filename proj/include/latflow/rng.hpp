/* Deterministic random source for Monte-Carlo estimators and test-instance
 * generation.  The engine is std::mt19937_64 (bit-exact across platforms by
 * the standard); the distributions are hand-rolled here because the standard
 * library's are not portable bit-for-bit.  unit_rational() returns the dyadic
 * rational (x >> 11) / 2^53, so sampled points are exact inputs downstream.
 */
#pragma once

#include <cstdint>
#include <random>

#include "latflow/rational.hpp"

namespace latflow {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : mt_(seed) {}

    std::uint64_t next_u64() { return mt_(); }

    /// Uniform in [0, n), unbiased (rejection sampling).  n >= 1.
    std::uint64_t below(std::uint64_t n) {
        require(n >= 1, "Rng::below: empty range");
        if (n == 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = mt_();
        } while (x >= limit);
        return x % n;
    }

    /// Uniform integer in [lo, hi] inclusive.
    long long int_in(long long lo, long long hi) {
        require(lo <= hi, "Rng::int_in: empty range");
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// Dyadic rational uniform on [0, 1): (x >> 11) / 2^53, exact.
    Rational unit_rational() {
        Rational r(Int((mt_() >> 11)), ipow(Int(2), 53));
        r.canonicalize();
        return r;
    }

    double unit_double() { return static_cast<double>(mt_() >> 11) * 0x1.0p-53; }

    /// Uniform rational with numerator in [-num_max, num_max] and denominator
    /// in [1, den_max].
    Rational rational(long long num_max, long long den_max) {
        Rational r(Int(static_cast<long>(int_in(-num_max, num_max))),
                   Int(static_cast<long>(int_in(1, den_max))));
        r.canonicalize();
        return r;
    }

private:
    std::mt19937_64 mt_;
};

} // namespace latflow
