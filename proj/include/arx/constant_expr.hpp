#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "arx/ball_complex.hpp"
#include "arx/bihom_poly.hpp"
#include "arx/gaussian_rational.hpp"

namespace arx {

// Exact symbolic product: gaussian-rational coefficient, power of pi, an optional
// square root of a square-free rational, and named placeholder factors with integer
// exponents (L-values, epsilon-factors, volumes, ...). Canonical-form equality.
struct ConstantExpr {
    GaussianRational coeff;  // default-constructed value is the ring zero
    long pi_pow = 0;
    Rational sqrt_arg{1};
    std::map<std::string, long> placeholders;

    ConstantExpr() = default;
    explicit ConstantExpr(GaussianRational c) : coeff(std::move(c)) {}
    explicit ConstantExpr(const Rational& c) : coeff(c) {}
    ConstantExpr(long c) : coeff(GaussianRational(c)) {}

    static ConstantExpr zero() { return ConstantExpr(); }
    static ConstantExpr one() { return ConstantExpr(1); }
    static ConstantExpr pi_power(long k) {
        ConstantExpr e(1);
        e.pi_pow = k;
        return e;
    }
    static ConstantExpr placeholder(const std::string& name, long exp = 1) {
        ConstantExpr e(1);
        if (exp != 0) e.placeholders[name] = exp;
        return e;
    }
    // sqrt(r) for positive rational r, canonicalized as q * sqrt(s) with s square-free
    static ConstantExpr sqrt_of(const Rational& r);

    bool is_zero() const { return coeff.is_zero(); }

    void normalize() {
        if (coeff.is_zero()) {
            pi_pow = 0;
            sqrt_arg = 1;
            placeholders.clear();
        }
        for (auto it = placeholders.begin(); it != placeholders.end();) {
            if (it->second == 0)
                it = placeholders.erase(it);
            else
                ++it;
        }
    }

    ConstantExpr& operator*=(const ConstantExpr& o);
    friend ConstantExpr operator*(ConstantExpr a, const ConstantExpr& b) { return a *= b; }
    friend ConstantExpr operator*(const GaussianRational& s, ConstantExpr e) {
        e.coeff *= s;
        e.normalize();
        return e;
    }

    ConstantExpr& operator+=(const ConstantExpr& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) {
            *this = o;
            return *this;
        }
        if (pi_pow != o.pi_pow || sqrt_arg != o.sqrt_arg || placeholders != o.placeholders)
            throw std::domain_error("ConstantExpr: sum of non-aligned symbolic products");
        coeff += o.coeff;
        normalize();
        return *this;
    }

    ConstantExpr pow(long e) const {
        if (e < 0) throw std::domain_error("ConstantExpr::pow: negative exponent unsupported");
        ConstantExpr acc(1);
        for (long k = 0; k < e; ++k) acc *= *this;
        return acc;
    }

    friend bool operator==(const ConstantExpr& a, const ConstantExpr& b) {
        return a.coeff == b.coeff && a.pi_pow == b.pi_pow && a.sqrt_arg == b.sqrt_arg &&
               a.placeholders == b.placeholders;
    }

    // canonical text form: coeff [* pi^k] [* sqrt(s)] [* name^e ...], names sorted
    std::string to_string() const {
        std::ostringstream os;
        os << arx::to_string(coeff);
        if (pi_pow != 0) os << " * pi^" << pi_pow;
        if (sqrt_arg != 1) os << " * sqrt(" << sqrt_arg.get_str() << ")";
        for (const auto& [n, e] : placeholders) {
            os << " * " << n;
            if (e != 1) os << "^" << e;
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const ConstantExpr& e) { return os << e.to_string(); }

    bool has_placeholders() const { return !placeholders.empty(); }

    // numeric evaluation; `values` must cover all placeholders ("exp(-4pi)" is built in)
    BallComplex eval(mpfr_prec_t prec,
                     const std::map<std::string, BallComplex>& values = {}) const {
        BallComplex v(coeff, prec);
        if (pi_pow != 0) {
            BallReal p = pow_si(BallReal::pi(prec), pi_pow);
            v = v * p;
        }
        if (sqrt_arg != 1) v = v * sqrt(BallReal(sqrt_arg, prec));
        for (const auto& [name, e] : placeholders) {
            BallComplex base(prec);
            if (auto it = values.find(name); it != values.end()) {
                base = it->second;
            } else if (name == "exp(-4pi)") {
                base = BallComplex(exp(BallReal::pi(prec) * (-4)), BallReal(prec));
            } else {
                throw std::domain_error("ConstantExpr::eval: unbound placeholder " + name);
            }
            if (e < 0) base = base.conj() * (BallReal(1, prec) / base.norm());
            long ae = e < 0 ? -e : e;
            v = v * pow_si(base, ae);
        }
        return v;
    }
};

namespace detail_ce {

// split r > 0 as q^2 * s with s square-free (trial division; leftover kept under the radical)
inline void square_split(const Integer& n_in, Integer& q, Integer& s) {
    q = 1;
    s = 1;
    Integer n = n_in;
    for (long p = 2; p * p <= 1000000L * 1000000L && Integer(p) * Integer(p) <= n; ++p) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p) * p)) {
            n /= p * p;
            q *= p;
        }
        if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
            n /= p;
            s *= p;
        }
        if (p > 100000) break;  // desk-scale inputs; anything left stays under the radical
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Integer r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        q *= r;
    } else {
        s *= n;
    }
}

}  // namespace detail_ce

inline ConstantExpr ConstantExpr::sqrt_of(const Rational& r) {
    if (!(r > 0)) throw std::domain_error("ConstantExpr::sqrt_of: requires positive argument");
    // sqrt(num/den) = sqrt(num*den)/den
    Integer nd = r.get_num() * r.get_den();
    Integer q, s;
    detail_ce::square_split(nd, q, s);
    ConstantExpr e;
    e.coeff = GaussianRational(Rational(q) / Rational(r.get_den()));
    e.sqrt_arg = Rational(s);
    return e;
}

inline ConstantExpr& ConstantExpr::operator*=(const ConstantExpr& o) {
    coeff *= o.coeff;
    pi_pow += o.pi_pow;
    for (const auto& [n, e] : o.placeholders) placeholders[n] += e;
    if (o.sqrt_arg != 1 || sqrt_arg != 1) {
        ConstantExpr s = sqrt_of(sqrt_arg * o.sqrt_arg);
        coeff *= s.coeff;
        sqrt_arg = s.sqrt_arg;
    }
    normalize();
    return *this;
}

inline bool ring_is_zero(const ConstantExpr& e) { return e.is_zero(); }
inline ConstantExpr ring_scale_int(const ConstantExpr& e, long k) {
    return GaussianRational(k) * e;
}

template <>
struct RingTraits<ConstantExpr> {
    static ConstantExpr one() { return ConstantExpr(1); }
};

}  // namespace arx
