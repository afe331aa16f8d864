#pragma once

#include <ostream>
#include <stdexcept>
#include <vector>

#include "arx/gaussian_rational.hpp"

namespace arx {

inline bool ring_is_zero(const GaussianRational& x) { return x.is_zero(); }
inline bool ring_is_zero(const Rational& x) { return x == 0; }

inline GaussianRational ring_scale_int(const GaussianRational& x, long k) {
    return GaussianRational(k) * x;
}
inline Rational ring_scale_int(const Rational& x, long k) { return Rational(k) * x; }

template <class R>
struct RingTraits {
    static R one() { return R(1); }
};

// Homogeneous polynomial of fixed degree in (X, Y); coefficient i belongs to X^i Y^(deg-i).
template <class R>
class BiHomPoly {
  public:
    BiHomPoly() : deg_(0), c_(1) {}
    explicit BiHomPoly(long degree) : deg_(degree), c_(static_cast<size_t>(degree) + 1) {
        if (degree < 0) throw std::invalid_argument("BiHomPoly: negative degree");
    }

    static BiHomPoly monomial(long degree, long x_exp, R coeff) {
        BiHomPoly p(degree);
        p.at(x_exp) = std::move(coeff);
        return p;
    }

    long degree() const { return deg_; }
    const R& at(long x_exp) const { return c_.at(static_cast<size_t>(x_exp)); }
    R& at(long x_exp) { return c_.at(static_cast<size_t>(x_exp)); }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!ring_is_zero(x)) return false;
        return true;
    }

    BiHomPoly& operator+=(const BiHomPoly& o) {
        if (deg_ != o.deg_) throw std::invalid_argument("BiHomPoly: degree mismatch in addition");
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    BiHomPoly operator-() const {
        BiHomPoly r(deg_);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
        return r;
    }
    friend BiHomPoly operator+(BiHomPoly a, const BiHomPoly& b) { return a += b; }
    friend BiHomPoly operator-(BiHomPoly a, const BiHomPoly& b) { return a += -b; }

    friend BiHomPoly operator*(const BiHomPoly& a, const BiHomPoly& b) {
        BiHomPoly r(a.deg_ + b.deg_);
        for (long i = 0; i <= a.deg_; ++i) {
            if (ring_is_zero(a.at(i))) continue;
            for (long j = 0; j <= b.deg_; ++j) {
                if (ring_is_zero(b.at(j))) continue;
                r.at(i + j) += a.at(i) * b.at(j);
            }
        }
        return r;
    }
    friend BiHomPoly operator*(const R& s, const BiHomPoly& p) {
        BiHomPoly r(p.deg_);
        for (long i = 0; i <= p.deg_; ++i) r.at(i) = s * p.at(i);
        return r;
    }

    friend bool operator==(const BiHomPoly& a, const BiHomPoly& b) {
        return a.deg_ == b.deg_ && a.c_ == b.c_;
    }

    BiHomPoly conj() const {
        BiHomPoly r(deg_);
        for (long i = 0; i <= deg_; ++i) r.at(i) = at(i).conj();
        return r;
    }

    BiHomPoly pow(long e) const {
        if (e < 0) throw std::invalid_argument("BiHomPoly::pow: negative exponent");
        BiHomPoly acc = monomial(0, 0, R(1));
        for (long k = 0; k < e; ++k) acc = acc * *this;
        return acc;
    }

    template <class F, class R2>
    BiHomPoly<R2> map(F f, R2 /*tag*/) const {
        BiHomPoly<R2> r(deg_);
        for (long i = 0; i <= deg_; ++i) r.at(i) = f(at(i));
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const BiHomPoly& p) {
        bool first = true;
        for (long i = p.deg_; i >= 0; --i) {
            if (ring_is_zero(p.at(i))) continue;
            if (!first) os << " + ";
            os << "(" << p.at(i) << ")";
            if (i > 0) os << "*X^" << i;
            if (p.deg_ - i > 0) os << "*Y^" << (p.deg_ - i);
            first = false;
        }
        if (first) os << "0";
        return os;
    }

  private:
    long deg_;
    std::vector<R> c_;
};

template <class R>
inline bool ring_is_zero(const BiHomPoly<R>& p) {
    return p.is_zero();
}

template <class R>
inline BiHomPoly<R> ring_scale_int(const BiHomPoly<R>& p, long k) {
    return R(k) * p;
}

template <class R>
struct RingTraits<BiHomPoly<R>> {
    static BiHomPoly<R> one() { return BiHomPoly<R>::monomial(0, 0, R(1)); }
};

}  // namespace arx
