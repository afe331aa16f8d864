#pragma once

#include <mpfr.h>

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "arx/rational.hpp"

namespace arx {

// Arbitrary-precision real with a rigorous error radius (midpoint-radius form).
// The midpoint carries `precision_bits` bits; the radius is a low-precision
// upper bound maintained with upward rounding, so every arithmetic result
// encloses the exact value.
class BallReal {
  public:
    static constexpr mpfr_prec_t kRadPrec = 32;

    explicit BallReal(mpfr_prec_t prec = 128) : prec_(prec) {
        mpfr_init2(mid_, prec_);
        mpfr_init2(rad_, kRadPrec);
        mpfr_set_zero(mid_, 1);
        mpfr_set_zero(rad_, 1);
    }
    BallReal(long v, mpfr_prec_t prec) : BallReal(prec) { mpfr_set_si(mid_, v, MPFR_RNDN); }
    BallReal(const Rational& v, mpfr_prec_t prec) : BallReal(prec) {
        mpfr_set_q(mid_, v.get_mpq_t(), MPFR_RNDN);
        bump_ulp();
    }

    BallReal(const BallReal& o) : prec_(o.prec_) {
        mpfr_init2(mid_, prec_);
        mpfr_init2(rad_, kRadPrec);
        mpfr_set(mid_, o.mid_, MPFR_RNDN);
        mpfr_set(rad_, o.rad_, MPFR_RNDU);
    }
    BallReal(BallReal&& o) noexcept : prec_(o.prec_) {
        mid_[0] = o.mid_[0];
        rad_[0] = o.rad_[0];
        o.moved_ = true;
    }
    BallReal& operator=(const BallReal& o) {
        if (this != &o) {
            BallReal tmp(o);
            swap(tmp);
        }
        return *this;
    }
    BallReal& operator=(BallReal&& o) noexcept {
        swap(o);
        return *this;
    }
    ~BallReal() {
        if (!moved_) {
            mpfr_clear(mid_);
            mpfr_clear(rad_);
        }
    }
    void swap(BallReal& o) noexcept {
        std::swap(prec_, o.prec_);
        mpfr_swap(mid_, o.mid_);
        mpfr_swap(rad_, o.rad_);
        std::swap(moved_, o.moved_);
    }

    static BallReal pi(mpfr_prec_t prec) {
        BallReal r(prec);
        mpfr_const_pi(r.mid_, MPFR_RNDN);
        r.bump_ulp();
        return r;
    }

    mpfr_prec_t precision_bits() const { return prec_; }
    const mpfr_t& mid() const { return mid_; }
    const mpfr_t& rad() const { return rad_; }
    mpfr_t& mid_mut() { return mid_; }

    double mid_d() const { return mpfr_get_d(mid_, MPFR_RNDN); }
    bool is_zero_exact() const { return mpfr_zero_p(mid_) && mpfr_zero_p(rad_); }
    bool is_finite() const { return mpfr_number_p(mid_) && mpfr_number_p(rad_); }

    // manual radius inflation (for externally certified truncation bounds)
    void add_error(const BallReal& e) {
        if (mpfr_sgn(e.rad_) != 0) {
            mpfr_t t;
            mpfr_init2(t, kRadPrec);
            mpfr_abs(t, e.mid_, MPFR_RNDU);
            mpfr_add(t, t, e.rad_, MPFR_RNDU);
            mpfr_add(rad_, rad_, t, MPFR_RNDU);
            mpfr_clear(t);
        } else {
            mpfr_t t;
            mpfr_init2(t, kRadPrec);
            mpfr_abs(t, e.mid_, MPFR_RNDU);
            mpfr_add(rad_, rad_, t, MPFR_RNDU);
            mpfr_clear(t);
        }
    }
    void add_error_2exp(long e) {  // radius += 2^e
        mpfr_t t;
        mpfr_init2(t, kRadPrec);
        mpfr_set_ui_2exp(t, 1, e, MPFR_RNDU);
        mpfr_add(rad_, rad_, t, MPFR_RNDU);
        mpfr_clear(t);
    }

    // |mid| + rad, rounded up
    BallReal abs_upper() const {
        BallReal r(prec_);
        mpfr_abs(r.mid_, mid_, MPFR_RNDU);
        mpfr_add(r.mid_, r.mid_, rad_, MPFR_RNDU);
        return r;
    }
    // max(|mid| - rad, 0), rounded down
    BallReal abs_lower() const {
        BallReal r(prec_);
        mpfr_abs(r.mid_, mid_, MPFR_RNDD);
        mpfr_sub(r.mid_, r.mid_, rad_, MPFR_RNDD);
        if (mpfr_sgn(r.mid_) < 0) mpfr_set_zero(r.mid_, 1);
        return r;
    }

    bool definitely_positive() const {
        mpfr_t lo;
        mpfr_init2(lo, kRadPrec);
        mpfr_sub(lo, mid_, rad_, MPFR_RNDD);
        bool r = mpfr_sgn(lo) > 0;
        mpfr_clear(lo);
        return r;
    }
    bool definitely_negative() const {
        mpfr_t hi;
        mpfr_init2(hi, kRadPrec);
        mpfr_add(hi, mid_, rad_, MPFR_RNDU);
        bool r = mpfr_sgn(hi) < 0;
        mpfr_clear(hi);
        return r;
    }
    bool contains_zero() const { return !definitely_positive() && !definitely_negative(); }

    bool contains(const Rational& v) const {
        // |mid - v| <= rad, checked with outward rounding
        mpfr_t d;
        mpfr_init2(d, prec_ + 64);
        mpfr_set_q(d, v.get_mpq_t(), MPFR_RNDN);
        mpfr_sub(d, mid_, d, MPFR_RNDA);
        mpfr_abs(d, d, MPFR_RNDU);
        // one ulp slack for the v rounding
        mpfr_t ulp;
        mpfr_init2(ulp, kRadPrec);
        if (mpfr_zero_p(d))
            mpfr_set_zero(ulp, 1);
        else
            mpfr_set_ui_2exp(ulp, 1, mpfr_get_exp(d) - (prec_ + 64) + 2, MPFR_RNDU);
        mpfr_add(d, d, ulp, MPFR_RNDU);
        bool r = mpfr_cmp(d, rad_) <= 0;
        mpfr_clear(d);
        mpfr_clear(ulp);
        return r;
    }

    bool overlaps(const BallReal& o) const {
        // |mid-a - mid_b| <= rad_a + rad_b
        mpfr_t d, s;
        mpfr_init2(d, kRadPrec);
        mpfr_init2(s, kRadPrec);
        mpfr_sub(d, mid_, o.mid_, MPFR_RNDA);
        mpfr_abs(d, d, MPFR_RNDD);
        mpfr_add(s, rad_, o.rad_, MPFR_RNDU);
        bool r = mpfr_cmp(d, s) <= 0;
        mpfr_clear(d);
        mpfr_clear(s);
        return r;
    }

    // rad / |mid| as double (inf when mid ~ 0)
    double rel_width() const {
        if (mpfr_zero_p(rad_)) return 0.0;
        mpfr_t q;
        mpfr_init2(q, kRadPrec);
        mpfr_abs(q, mid_, MPFR_RNDD);
        if (mpfr_zero_p(q)) {
            mpfr_clear(q);
            return 1.0 / 0.0;
        }
        mpfr_div(q, rad_, q, MPFR_RNDU);
        double r = mpfr_get_d(q, MPFR_RNDU);
        mpfr_clear(q);
        return r;
    }
    double rad_d() const { return mpfr_get_d(rad_, MPFR_RNDU); }
    long rad_exp2() const {  // ceil(log2(rad)), or very negative when rad == 0
        if (mpfr_zero_p(rad_)) return -(1L << 30);
        return mpfr_get_exp(rad_);
    }

    friend BallReal operator+(const BallReal& a, const BallReal& b) {
        BallReal r(std::max(a.prec_, b.prec_));
        mpfr_add(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
        mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
        r.bump_ulp();
        return r;
    }
    friend BallReal operator-(const BallReal& a, const BallReal& b) {
        BallReal r(std::max(a.prec_, b.prec_));
        mpfr_sub(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
        mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
        r.bump_ulp();
        return r;
    }
    BallReal operator-() const {
        BallReal r(*this);
        mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);
        return r;
    }
    friend BallReal operator*(const BallReal& a, const BallReal& b) {
        BallReal r(std::max(a.prec_, b.prec_));
        mpfr_mul(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
        // rad = |a_m| rb + |b_m| ra + ra rb
        mpfr_t t, u;
        mpfr_init2(t, kRadPrec);
        mpfr_init2(u, kRadPrec);
        mpfr_abs(t, a.mid_, MPFR_RNDU);
        mpfr_mul(t, t, b.rad_, MPFR_RNDU);
        mpfr_abs(u, b.mid_, MPFR_RNDU);
        mpfr_mul(u, u, a.rad_, MPFR_RNDU);
        mpfr_add(t, t, u, MPFR_RNDU);
        mpfr_mul(u, a.rad_, b.rad_, MPFR_RNDU);
        mpfr_add(r.rad_, t, u, MPFR_RNDU);
        mpfr_clear(t);
        mpfr_clear(u);
        r.bump_ulp();
        return r;
    }
    friend BallReal operator/(const BallReal& a, const BallReal& b) {
        BallReal r(std::max(a.prec_, b.prec_));
        mpfr_t blo;
        mpfr_init2(blo, kRadPrec);
        mpfr_abs(blo, b.mid_, MPFR_RNDD);
        mpfr_sub(blo, blo, b.rad_, MPFR_RNDD);
        if (mpfr_sgn(blo) <= 0) {
            mpfr_clear(blo);
            throw std::domain_error("BallReal: division by ball containing zero");
        }
        mpfr_div(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
        // |a/b - am/bm| <= (ra + |am/bm| rb) / (|bm| - rb)
        mpfr_t t, u;
        mpfr_init2(t, kRadPrec);
        mpfr_init2(u, kRadPrec);
        mpfr_abs(t, r.mid_, MPFR_RNDU);
        mpfr_mul(t, t, b.rad_, MPFR_RNDU);
        mpfr_add(t, t, a.rad_, MPFR_RNDU);
        mpfr_div(u, t, blo, MPFR_RNDU);
        mpfr_set(r.rad_, u, MPFR_RNDU);
        mpfr_clear(t);
        mpfr_clear(u);
        mpfr_clear(blo);
        r.bump_ulp();
        return r;
    }

    friend BallReal operator*(const BallReal& a, long k) { return a * BallReal(k, a.prec_); }
    friend BallReal operator*(long k, const BallReal& a) { return a * BallReal(k, a.prec_); }
    friend BallReal operator+(const BallReal& a, long k) { return a + BallReal(k, a.prec_); }
    friend BallReal operator-(const BallReal& a, long k) { return a - BallReal(k, a.prec_); }
    friend BallReal operator-(long k, const BallReal& a) { return BallReal(k, a.prec_) - a; }
    friend BallReal operator/(const BallReal& a, long k) { return a / BallReal(k, a.prec_); }
    friend BallReal operator*(const BallReal& a, const Rational& q) { return a * BallReal(q, a.prec_); }
    friend BallReal operator*(const Rational& q, const BallReal& a) { return a * BallReal(q, a.prec_); }
    friend BallReal operator+(const BallReal& a, const Rational& q) { return a + BallReal(q, a.prec_); }
    friend BallReal operator-(const BallReal& a, const Rational& q) { return a - BallReal(q, a.prec_); }
    friend BallReal operator/(const BallReal& a, const Rational& q) { return a / BallReal(q, a.prec_); }

    friend void swap(BallReal& a, BallReal& b) noexcept { a.swap(b); }

    friend std::ostream& operator<<(std::ostream& os, const BallReal& x) { return os << x.to_string(20); }

    std::string to_string(int digits = 30) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", digits, mid_);
        std::string out(s);
        mpfr_free_str(s);
        if (!mpfr_zero_p(rad_)) {
            mpfr_asprintf(&s, "%.2Rg", rad_);
            out += " +/- ";
            out += s;
            mpfr_free_str(s);
        }
        return out;
    }

    void bump_ulp() {  // absorb the rounding of the last mid operation
        if (mpfr_zero_p(mid_) || !mpfr_number_p(mid_)) return;
        mpfr_t u;
        mpfr_init2(u, kRadPrec);
        mpfr_set_ui_2exp(u, 1, mpfr_get_exp(mid_) - prec_ + 1, MPFR_RNDU);
        mpfr_add(rad_, rad_, u, MPFR_RNDU);
        mpfr_clear(u);
    }

  private:
    mpfr_prec_t prec_;
    mpfr_t mid_;
    mpfr_t rad_;
    bool moved_ = false;

    friend BallReal ball_unary_lipschitz(const BallReal& x, int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t),
                                         const BallReal& deriv_bound);
    friend BallReal sqrt(const BallReal& x);
    friend BallReal exp(const BallReal& x);
    friend BallReal log(const BallReal& x);
    friend BallReal abs(const BallReal& x);
    friend BallReal sin(const BallReal& x);
    friend BallReal cos(const BallReal& x);
    friend BallReal sinh(const BallReal& x);
    friend BallReal cosh(const BallReal& x);
    friend BallReal gamma_ball(const BallReal& x);
};

// f applied to midpoint, radius propagated through a Lipschitz bound
inline BallReal ball_unary_lipschitz(const BallReal& x, int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t),
                                     const BallReal& deriv_bound) {
    BallReal r(x.prec_);
    op(r.mid_, x.mid_, MPFR_RNDN);
    mpfr_t t;
    mpfr_init2(t, BallReal::kRadPrec);
    mpfr_abs(t, deriv_bound.mid_, MPFR_RNDU);
    mpfr_add(t, t, deriv_bound.rad_, MPFR_RNDU);
    mpfr_mul(t, t, x.rad_, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, t, MPFR_RNDU);
    mpfr_clear(t);
    r.bump_ulp();
    return r;
}

inline BallReal abs(const BallReal& x) {
    BallReal r(x);
    mpfr_abs(r.mid_mut(), r.mid(), MPFR_RNDN);
    return r;
}

inline BallReal sqrt(const BallReal& x) {
    BallReal lo = x.abs_lower();
    if (!x.definitely_positive()) {
        if (x.is_zero_exact()) return BallReal(x.precision_bits());
        throw std::domain_error("BallReal sqrt: ball not strictly positive");
    }
    BallReal r(x.prec_);
    mpfr_sqrt(r.mid_, x.mid_, MPFR_RNDN);
    // |sqrt(x)-sqrt(m)| <= rx / (2 sqrt(lo))
    mpfr_t t;
    mpfr_init2(t, BallReal::kRadPrec);
    mpfr_sqrt(t, lo.mid(), MPFR_RNDD);
    mpfr_mul_ui(t, t, 2, MPFR_RNDD);
    mpfr_div(t, x.rad_, t, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, t, MPFR_RNDU);
    mpfr_clear(t);
    r.bump_ulp();
    return r;
}

inline BallReal exp(const BallReal& x) {
    BallReal r(x.prec_);
    mpfr_exp(r.mid_, x.mid_, MPFR_RNDN);
    // |exp(x)-exp(m)| <= exp(m + rx) * rx
    mpfr_t hi;
    mpfr_init2(hi, BallReal::kRadPrec);
    mpfr_add(hi, x.mid_, x.rad_, MPFR_RNDU);
    mpfr_exp(hi, hi, MPFR_RNDU);
    mpfr_mul(hi, hi, x.rad_, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, hi, MPFR_RNDU);
    mpfr_clear(hi);
    r.bump_ulp();
    return r;
}

inline BallReal log(const BallReal& x) {
    if (!x.definitely_positive()) throw std::domain_error("BallReal log: ball not strictly positive");
    BallReal lo = x.abs_lower();
    BallReal r(x.prec_);
    mpfr_log(r.mid_, x.mid_, MPFR_RNDN);
    mpfr_t t;
    mpfr_init2(t, BallReal::kRadPrec);
    mpfr_div(t, x.rad_, lo.mid(), MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, t, MPFR_RNDU);
    mpfr_clear(t);
    r.bump_ulp();
    return r;
}

// |sin'|,|cos'| <= 1
inline BallReal sin(const BallReal& x) {
    BallReal r(x.prec_);
    mpfr_sin(r.mid_, x.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, r.rad_, x.rad_, MPFR_RNDU);
    r.bump_ulp();
    return r;
}
inline BallReal cos(const BallReal& x) {
    BallReal r(x.prec_);
    mpfr_cos(r.mid_, x.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, r.rad_, x.rad_, MPFR_RNDU);
    r.bump_ulp();
    return r;
}

// |sinh'| = cosh <= cosh(|m|+r), |cosh'| = |sinh| <= cosh(|m|+r)
namespace detail {
inline void hyp_rad(const BallReal& x, mpfr_t& rad_io) {
    mpfr_t hi;
    mpfr_init2(hi, BallReal::kRadPrec);
    mpfr_abs(hi, x.mid(), MPFR_RNDU);
    mpfr_add(hi, hi, x.rad(), MPFR_RNDU);
    mpfr_cosh(hi, hi, MPFR_RNDU);
    mpfr_mul(hi, hi, x.rad(), MPFR_RNDU);
    mpfr_add(rad_io, rad_io, hi, MPFR_RNDU);
    mpfr_clear(hi);
}
}  // namespace detail

inline BallReal sinh(const BallReal& x) {
    BallReal r(x.prec_);
    mpfr_sinh(r.mid_, x.mid_, MPFR_RNDN);
    detail::hyp_rad(x, r.rad_);
    r.bump_ulp();
    return r;
}
inline BallReal cosh(const BallReal& x) {
    BallReal r(x.prec_);
    mpfr_cosh(r.mid_, x.mid_, MPFR_RNDN);
    detail::hyp_rad(x, r.rad_);
    r.bump_ulp();
    return r;
}

inline BallReal pow_si(const BallReal& x, long e) {
    if (e == 0) return BallReal(1, x.precision_bits());
    BallReal base = e < 0 ? BallReal(1, x.precision_bits()) / x : x;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    BallReal acc(1, x.precision_bits());
    BallReal sq = base;
    while (k) {
        if (k & 1) acc = acc * sq;
        k >>= 1;
        if (k) sq = sq * sq;
    }
    return acc;
}

// Gamma on a positive ball. |Gamma'| = Gamma*|digamma|; Gamma is convex and |digamma|
// takes its maximum over an interval at an endpoint, so endpoint values bound the
// derivative over the whole ball.
inline BallReal gamma_ball(const BallReal& x) {
    if (!x.definitely_positive()) throw std::domain_error("gamma_ball: requires positive ball");
    BallReal r(x.prec_);
    mpfr_gamma(r.mid_, x.mid_, MPFR_RNDN);
    mpfr_t g, d, lo, hi, t;
    mpfr_init2(g, BallReal::kRadPrec);
    mpfr_init2(d, BallReal::kRadPrec);
    mpfr_init2(lo, BallReal::kRadPrec);
    mpfr_init2(hi, BallReal::kRadPrec);
    mpfr_init2(t, BallReal::kRadPrec);
    mpfr_add(hi, x.mid_, x.rad_, MPFR_RNDU);
    mpfr_sub(lo, x.mid_, x.rad_, MPFR_RNDD);
    mpfr_gamma(g, hi, MPFR_RNDU);
    mpfr_gamma(t, lo, MPFR_RNDU);
    mpfr_max(g, g, t, MPFR_RNDU);
    mpfr_digamma(d, hi, MPFR_RNDU);
    mpfr_abs(d, d, MPFR_RNDU);
    mpfr_digamma(t, lo, MPFR_RNDD);
    mpfr_abs(t, t, MPFR_RNDU);
    mpfr_max(d, d, t, MPFR_RNDU);
    mpfr_mul(g, g, d, MPFR_RNDU);
    mpfr_mul(g, g, x.rad_, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, g, MPFR_RNDU);
    mpfr_clear(g);
    mpfr_clear(d);
    mpfr_clear(lo);
    mpfr_clear(hi);
    mpfr_clear(t);
    r.bump_ulp();
    return r;
}

inline BallReal ball_from_rational(const Rational& q, mpfr_prec_t prec) { return BallReal(q, prec); }

inline BallReal max_upper(const BallReal& a, const BallReal& b) {
    mpfr_t ua, ub;
    mpfr_init2(ua, BallReal::kRadPrec);
    mpfr_init2(ub, BallReal::kRadPrec);
    mpfr_add(ua, a.mid(), a.rad(), MPFR_RNDU);
    mpfr_add(ub, b.mid(), b.rad(), MPFR_RNDU);
    bool a_bigger = mpfr_cmp(ua, ub) >= 0;
    mpfr_clear(ua);
    mpfr_clear(ub);
    return a_bigger ? a : b;
}

}  // namespace arx
