#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace arx {

// Exact rational number. mpq_class keeps values canonical: reduced, denominator > 0.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// (n)!! with (-1)!! = 0!! = 1.
inline Integer double_factorial(long n) {
    if (n < -1) throw std::domain_error("double_factorial: argument < -1");
    if (n <= 0) return Integer(1);
    Integer r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0 && e < 0) throw std::domain_error("pow_rational: 0^negative");
    Rational num, den;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_num().get_mpz_t(), base.get_num().get_mpz_t(), a);
    mpz_pow_ui(num.get_den().get_mpz_t(), base.get_den().get_mpz_t(), a);
    num.canonicalize();
    if (e > 0) return num;
    den = 1 / num;
    return den;
}

inline Rational pow2(long e) { return pow_rational(Rational(2), e); }

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace arx
