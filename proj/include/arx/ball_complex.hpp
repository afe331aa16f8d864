#pragma once

#include <ostream>

#include "arx/ball.hpp"
#include "arx/gaussian_rational.hpp"

namespace arx {

// Component-wise ball arithmetic over C.
struct BallComplex {
    BallReal re;
    BallReal im;

    explicit BallComplex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    BallComplex(BallReal r, BallReal i) : re(std::move(r)), im(std::move(i)) {}
    BallComplex(long v, mpfr_prec_t prec) : re(v, prec), im(prec) {}
    BallComplex(const GaussianRational& g, mpfr_prec_t prec) : re(g.re, prec), im(g.im, prec) {}

    mpfr_prec_t precision_bits() const { return re.precision_bits(); }

    BallComplex conj() const { return BallComplex(re, -im); }

    BallComplex operator-() const { return BallComplex(-re, -im); }

    friend BallComplex operator+(const BallComplex& a, const BallComplex& b) {
        return BallComplex(a.re + b.re, a.im + b.im);
    }
    friend BallComplex operator-(const BallComplex& a, const BallComplex& b) {
        return BallComplex(a.re - b.re, a.im - b.im);
    }
    friend BallComplex operator*(const BallComplex& a, const BallComplex& b) {
        return BallComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend BallComplex operator*(const BallComplex& a, const BallReal& b) {
        return BallComplex(a.re * b, a.im * b);
    }
    friend BallComplex operator*(const BallReal& b, const BallComplex& a) { return a * b; }
    friend BallComplex operator/(const BallComplex& a, const BallReal& b) {
        return BallComplex(a.re / b, a.im / b);
    }

    // |z|^2 as a ball
    BallReal norm() const { return re * re + im * im; }
    // upper bound on |z| (point value, radius zero)
    BallReal abs_upper() const {
        BallReal ur = re.abs_upper();
        BallReal ui = im.abs_upper();
        BallReal out(re.precision_bits());
        mpfr_t t;
        mpfr_init2(t, re.precision_bits());
        mpfr_mul(t, ur.mid(), ur.mid(), MPFR_RNDU);
        mpfr_mul(out.mid_mut(), ui.mid(), ui.mid(), MPFR_RNDU);
        mpfr_add(out.mid_mut(), out.mid_mut(), t, MPFR_RNDU);
        mpfr_sqrt(out.mid_mut(), out.mid_mut(), MPFR_RNDU);
        mpfr_clear(t);
        return out;
    }

    // multiply by i^k
    BallComplex mul_i_pow(long k) const {
        switch (((k % 4) + 4) % 4) {
            case 0: return *this;
            case 1: return BallComplex(-im, re);
            case 2: return -*this;
            default: return BallComplex(im, -re);
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const BallComplex& z) {
        return os << "(" << z.re << ") + (" << z.im << ")*i";
    }
};

inline BallComplex exp_i_theta(const BallReal& theta) { return BallComplex(cos(theta), sin(theta)); }

inline BallComplex pow_si(const BallComplex& z, long e) {
    if (e < 0) throw std::domain_error("pow_si(BallComplex): negative exponent unsupported");
    BallComplex acc(1, z.precision_bits());
    BallComplex sq = z;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc = acc * sq;
        k >>= 1;
        if (k) sq = sq * sq;
    }
    return acc;
}

}  // namespace arx
