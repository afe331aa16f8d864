#pragma once

#include <stdexcept>

#include "arx/rational.hpp"

namespace arx::exact {

// Binomial coefficient with the Gamma-pole convention: a!/(b!(a-b)!) for
// 0 <= b <= a, and 0 when b < 0 or b > a. Negative tops are rejected
// (never evaluated in scope).
inline Rational binomial(long a, long b) {
    if (a < 0) throw std::domain_error("binomial: negative top");
    if (b < 0 || b > a) return Rational(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return Rational(r);
}

// sum_j binom(A,j)(-1)^j (A-j+B)!/(B-j)! == A!  for A, B >= 0.
// The factorial ratio is computed as a rising product so intermediates stay small.
inline bool verify_comb_identity(long A, long B) {
    if (A < 0 || B < 0) throw std::domain_error("verify_comb_identity: negative argument");
    Integer sum(0);
    for (long j = 0; j <= std::min(A, B); ++j) {
        Integer term(1);
        // (A-j+B)!/(B-j)! = (B-j+1)(B-j+2)...(B-j+A)
        for (long k = 1; k <= A; ++k) term *= Integer(B - j + k);
        Integer bn;
        mpz_bin_uiui(bn.get_mpz_t(), static_cast<unsigned long>(A), static_cast<unsigned long>(j));
        term *= bn;
        if (j % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum == factorial(A);
}

// sum_{c in Z} (-1)^c binom(alpha,c) binom(n-alpha, n/2-c), evaluated directly.
// Vanishes for odd alpha; for even alpha it equals
// (-1)^{alpha/2} binom(n/2,alpha/2) binom(n,n/2) binom(n,alpha)^{-1}.
inline Rational bessel_sign_sum(long n, long alpha) {
    if (n < 0 || n % 2 != 0) throw std::domain_error("bessel_sign_sum: n must be even and >= 0");
    if (alpha < 0 || alpha > n) throw std::domain_error("bessel_sign_sum: alpha out of [0,n]");
    Rational sum(0);
    for (long c = 0; c <= alpha; ++c) {
        Rational t = binomial(alpha, c) * binomial(n - alpha, n / 2 - c);
        if (c % 2 == 0)
            sum += t;
        else
            sum -= t;
    }
    return sum;
}

inline Rational bessel_sign_sum_closed(long n, long alpha) {
    if (n < 0 || n % 2 != 0) throw std::domain_error("bessel_sign_sum_closed: n must be even and >= 0");
    if (alpha < 0 || alpha > n) throw std::domain_error("bessel_sign_sum_closed: alpha out of [0,n]");
    if (alpha % 2 != 0) return Rational(0);
    Rational v = binomial(n / 2, alpha / 2) * binomial(n, n / 2) / binomial(n, alpha);
    return (alpha / 2) % 2 == 0 ? v : -v;
}

}  // namespace arx::exact
