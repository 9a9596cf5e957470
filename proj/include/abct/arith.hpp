#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace abct {

/// Arbitrary-precision integer. All Schur coefficients, degrees and
/// Eulerian numbers are exact integers of this type.
using Int = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator (mpq_class canonical form).
using Rat = mpq_class;

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// 2^m as an exact integer.
inline Int pow2(unsigned long m) {
    Int r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), m);
    return r;
}

inline long binomial_long(int n, int k) {
    if (k < 0 || k > n) return 0;
    return binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)).get_si();
}

/// Renders a rational as "p/q", omitting "/q" when the denominator is 1.
inline std::string format_rational(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

/// Parses "p" or "p/q" with optional leading minus. Throws on malformed
/// input or zero denominator.
inline Rat parse_rational(const std::string& s) {
    Rat x;
    if (s.empty() || mpq_set_str(x.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational: '" + s + "'");
    if (x.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational: '" + s + "'");
    x.canonicalize();
    return x;
}

}  // namespace abct
