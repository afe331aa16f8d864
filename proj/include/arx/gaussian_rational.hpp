#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

#include "arx/rational.hpp"

namespace arx {

// Exact element a + b*i of Q(i); the coefficient ring for all symbolic polynomial work.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long r) : re(r), im(0) {}
    GaussianRational(const Rational& r) : re(r), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    // i^k for any integer k
    static GaussianRational i_pow(long k) {
        switch (((k % 4) + 4) % 4) {
            case 0: return GaussianRational(1);
            case 1: return i();
            case 2: return GaussianRational(-1);
            default: return GaussianRational(Rational(0), Rational(-1));
        }
    }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return GaussianRational(re, -im); }

    // x * conj(x), always a real rational
    Rational norm() const { return re * re + im * im; }

    GaussianRational operator-() const { return GaussianRational(-re, -im); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        Rational n = o.norm();
        if (n == 0) throw std::domain_error("GaussianRational: division by zero");
        *this *= o.conj();
        re /= n;
        im /= n;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& x) {
        os << x.re.get_str();
        if (x.im != 0) os << (x.im > 0 ? "+" : "") << x.im.get_str() << "*i";
        return os;
    }
};

inline std::string to_string(const GaussianRational& x) {
    std::string s = x.re.get_str();
    if (x.im != 0) s += (x.im > 0 ? "+" : "") + x.im.get_str() + "*i";
    return s;
}

}  // namespace arx
