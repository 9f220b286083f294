#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

#include "kbcount/errors.hpp"

namespace kb {

/// Exact arbitrary-precision rational, always reduced, denominator > 0.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p/q" or "p"; signs allowed on the numerator.
inline Rational parse_rational(const std::string& s) {
    try {
        Rational q(s);
        q.canonicalize();
        if (q.get_den() <= 0) throw ParseError("non-positive denominator in '" + s + "'");
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational '" + s + "'");
    }
}

inline std::string rational_str(const Rational& q) {
    return q.get_den() == 1 ? q.get_num().get_str()
                            : q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Seeded integer draw in [-10^4, 10^4] \ {0}, used for "general coefficient" probes.
inline Rational random_coefficient(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(-10000, 10000);
    long v = 0;
    while (v == 0) v = dist(rng);
    return Rational(v);
}

}  // namespace kb
