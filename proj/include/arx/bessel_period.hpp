#pragma once

#include <map>
#include <vector>

#include "arx/constant_expr.hpp"
#include "arx/gaussian_moments.hpp"
#include "arx/poly_ops.hpp"
#include "arx/special.hpp"

namespace arx::bessel {

using poly::BiHom;
using poly::GR;

// s^w_* closed form: (1/4) (2 pi)^{-(n+2)} (n/2)!^2
inline ConstantExpr s_w(long n) {
    if (n < 0 || n % 2 != 0) throw std::domain_error("s_w: n must be even and >= 0");
    Rational f(factorial(n / 2));
    ConstantExpr e{GaussianRational(Rational(1, 4) * pow2(-(n + 2)) * f * f)};
    e.pi_pow = -(n + 2);
    return e;
}

// The defining multi-sum of s^w_lambda (or s^w_mu), evaluated through the
// Gaussian-weighted K-Bessel Mellin integrals; exercises the omega identities and the
// factorial identity en route to the closed form.
// Preconditions: alpha + w even, 0 <= (alpha+w)/2 <= alpha, 0 <= (n-alpha+w)/2 <= n-alpha.
inline BallReal s_w_multisum(long n, long alpha, long w, bool lambda_variant, mpfr_prec_t prec) {
    if (n < 0 || n % 2 != 0) throw std::domain_error("s_w_multisum: n must be even and >= 0");
    if ((alpha + w) % 2 != 0) throw std::domain_error("s_w_multisum: alpha + w must be even");
    long lp = (alpha + w) / 2, lm = (alpha - w) / 2;
    long mp = (n - alpha + w) / 2, mm = (n - alpha - w) / 2;
    if (lp < 0 || lp > alpha || mp < 0 || mp > n - alpha)
        throw std::domain_error("s_w_multisum: w out of range");
    long ru = lambda_variant ? lm + 1 : lm;
    long rb = lambda_variant ? mm : mm + 1;
    BallReal total(prec);
    BallReal minus_pi = -BallReal::pi(prec);
    for (long u = 0; u <= ru; ++u)
        for (long v = 0; v <= lp; ++v)
            for (long a = 0; a <= mp; ++a)
                for (long b = 0; b <= rb; ++b)
                    for (long j = 0; j <= std::min(u + a, v + b); ++j) {
                        Rational c = exact::binomial(mp, a) * exact::binomial(lp, v) *
                                     exact::binomial(u + a, j) * exact::binomial(v + b, j);
                        c *= lambda_variant ? exact::binomial(ru, u) * exact::binomial(mm, b)
                                            : exact::binomial(lm, u) * exact::binomial(rb, b);
                        if (c == 0) continue;
                        c *= pow2(-u - v - a - b) * Rational(factorial(j));
                        BallReal integ =
                            special::bessel_gauss_mellin(n + u + v + a + b + 2 - 2 * j,
                                                         a - b + u - v, Rational(1), prec);
                        total = total + BallReal(c, prec) * pow_si(minus_pi, -j) * integ;
                    }
    return total;
}

// Q^alpha(z, zbar; X, Y) as a polynomial in the formal variables (z, zb) with
// C[X,Y]_{2n+2}-values:
//   2 i^{n-alpha+1} (z X^2 - 2 XY - zb Y^2)(X^2 - (z-zb) XY + Y^2)^alpha
//                   (X^2 + (z+zb) XY - Y^2)^{n-alpha}
inline MultiPoly<BiHom> build_Q_alpha(long n, long alpha) {
    if (n < 0 || n % 2 != 0) throw std::domain_error("build_Q_alpha: n must be even and >= 0");
    if (alpha < 0 || alpha > n) throw std::domain_error("build_Q_alpha: alpha out of [0,n]");
    std::vector<std::string> vars = {"z", "zb"};
    using MP = MultiPoly<BiHom>;
    auto mono = [&](long ez, long ezb, long x_exp, const GR& c) {
        MP p(vars);
        p.add_term({static_cast<int>(ez), static_cast<int>(ezb)}, BiHom::monomial(2, x_exp, c));
        return p;
    };
    MP f1 = mono(1, 0, 2, GR(1)) + mono(0, 0, 1, GR(-2)) + mono(0, 1, 0, GR(-1));
    MP f2 = mono(0, 0, 2, GR(1)) + mono(1, 0, 1, GR(-1)) + mono(0, 1, 1, GR(1)) + mono(0, 0, 0, GR(1));
    MP f3 = mono(0, 0, 2, GR(1)) + mono(1, 0, 1, GR(1)) + mono(0, 1, 1, GR(1)) + mono(0, 0, 0, GR(-1));
    MP q = f1 * f2.pow(alpha) * f3.pow(n - alpha);
    return q.scaled(BiHom::monomial(0, 0, GR(2) * GR::i_pow(n - alpha + 1)));
}

// Q^alpha(zb, z; Y, -X): swap the formal variables and substitute (X,Y) -> (Y,-X)
inline MultiPoly<BiHom> q_swap_transform(const MultiPoly<BiHom>& q) {
    MultiPoly<BiHom> out(q.variables());
    for (const auto& [e, v] : q.terms()) {
        long d = v.degree();
        BiHom nv(d);
        for (long i = 0; i <= d; ++i) {
            if (ring_is_zero(v.at(i))) continue;
            // X^i Y^{d-i} -> Y^i (-X)^{d-i}
            GR c = v.at(i);
            if ((d - i) % 2 != 0) c = -c;
            nv.at(d - i) += c;
        }
        out.add_term({e[1], e[0]}, nv);
    }
    return out;
}

// W^0_alpha(t) = (1/2) e^{-4 pi} int psi_F(z t) Q^alpha(z, zb; X, Y) e^{-4 pi z zb} dx dy,
// with the z-integral done term-by-term through the Gaussian-Fourier closed form.
inline BiHomPoly<BallComplex> compute_W0_alpha(long n, long alpha, const BallComplex& t,
                                               const MultiPoly<BiHom>* q_prebuilt = nullptr) {
    mpfr_prec_t prec = t.precision_bits();
    MultiPoly<BiHom> q = q_prebuilt ? *q_prebuilt : build_Q_alpha(n, alpha);
    BiHomPoly<BallComplex> out(2 * n + 2);
    for (long i = 0; i <= 2 * n + 2; ++i) out.at(i) = BallComplex(prec);
    for (const auto& [e, v] : q.terms()) {
        BallComplex g = quad::complex_gaussian_fourier(e[0], e[1], t);
        for (long i = 0; i <= 2 * n + 2; ++i) {
            if (ring_is_zero(v.at(i))) continue;
            out.at(i) = out.at(i) + BallComplex(v.at(i), prec) * g;
        }
    }
    BallReal half_e = exp(BallReal::pi(prec) * (-4)) * Rational(1, 2);
    for (long i = 0; i <= 2 * n + 2; ++i) out.at(i) = out.at(i) * half_e;
    return out;
}

struct BesselPeriodResult {
    long n = 0;
    long alpha = 0;
    ConstantExpr closed_form;
    BallComplex closed_value;
    BallComplex oracle;
    double rel_error = 0.0;
    bool oracle_matches = false;

    BesselPeriodResult() : closed_value(64), oracle(64) {}
};

// Closed form of B^0_alpha. The (-1)^{n/2} factor follows the lemma's own proof (the
// displayed statement drops it); the numeric oracle below pins the sign.
inline ConstantExpr compute_B0_alpha_closed(long n, long alpha) {
    Rational ss = exact::bessel_sign_sum(n, alpha);
    long m = (n + 2) / 2;
    // Gamma_C(m)^2 = 2^{2-2m} ((m-1)!)^2 pi^{-2m}
    Rational g = pow2(2 - 2 * m) * Rational(factorial(m - 1) * factorial(m - 1));
    Rational r = Rational(-1, 2) * g * ss;
    if ((n / 2) % 2 != 0) r = -r;
    ConstantExpr e{GR::i_pow(n - alpha + 1) * GR(r)};
    e.pi_pow = -2 * m;
    if (!e.is_zero()) e.placeholders["exp(-4pi)"] = 1;
    return e;
}

// Numeric oracle: the theta-average is an exact finite trapezoid over the torus angle
// (the integrand is a trigonometric polynomial), followed by the radial t-integral
// against the K-Bessel Whittaker profile.
inline BallComplex compute_B0_alpha_oracle(long n, long alpha, mpfr_prec_t prec) {
    MultiPoly<BiHom> q = build_Q_alpha(n, alpha);
    const long M = 4 * n + 12;  // exceeds twice the trigonometric degree
    BallReal pi = BallReal::pi(prec);
    auto radial = [&](const BallReal& r, const BallReal&) -> BallComplex {
        std::vector<BallReal> kv;
        kv.reserve(n + 3);
        for (long w = 0; w <= n + 2; ++w) kv.push_back(special::bessel_k(w, r * 4 * pi, prec));
        BallComplex acc(prec);
        for (long mi = 0; mi < M; ++mi) {
            BallReal theta = pi * 2 * mi / M;
            BallComplex t = exp_i_theta(theta) * r;
            BiHomPoly<BallComplex> w0 = compute_W0_alpha(n, alpha, t, &q);
            for (long w = -(n + 2); w <= n + 2; ++w) {
                long xi = n + 1 + w;
                if (xi < 0 || xi > 2 * n + 2) continue;
                BallComplex cw = w0.at(xi);
                BallComplex phase = exp_i_theta(theta * w).mul_i_pow(w);
                acc = acc + cw * phase * kv[static_cast<size_t>(w < 0 ? -w : w)];
            }
        }
        BallReal scale = pow_si(r, n + 2) * Rational(16, M) / r;
        return acc * scale;
    };
    return quad::integrate_complex(radial, quad::Domain::ZeroInf, prec, 11);
}

inline BesselPeriodResult compute_B0_alpha(long n, long alpha, mpfr_prec_t prec,
                                           mpfr_prec_t oracle_prec = 0) {
    if (oracle_prec == 0) oracle_prec = prec >= 96 ? 96 : prec;
    BesselPeriodResult res;
    res.n = n;
    res.alpha = alpha;
    res.closed_form = compute_B0_alpha_closed(n, alpha);
    res.closed_value = res.closed_form.eval(prec);
    res.oracle = compute_B0_alpha_oracle(n, alpha, oracle_prec);
    BallComplex d = res.closed_value - res.oracle;
    BallReal dn = d.abs_upper();
    BallReal cn = res.closed_value.abs_upper();
    if (mpfr_zero_p(cn.mid())) {
        res.rel_error = dn.mid_d();
        res.oracle_matches = res.oracle.re.contains_zero() && res.oracle.im.contains_zero();
    } else {
        res.rel_error = (dn / cn).mid_d();
        res.oracle_matches = res.oracle.re.overlaps(res.closed_value.re) &&
                             res.oracle.im.overlaps(res.closed_value.im);
    }
    return res;
}

// Assembles sum_alpha i^{n-alpha} [sign sum] binom(n,alpha) X^alpha Y^{n-alpha} and checks
// it equals (-1)^{n/2} binom(n, n/2) (X^2+Y^2)^{n/2} exactly.
struct TheoremBesselPolynomial {
    BiHom assembled;
    BiHom closed;
    bool equal = false;
};

inline TheoremBesselPolynomial theorem_bessel_polynomial(long n) {
    if (n < 0 || n % 2 != 0) throw std::domain_error("theorem_bessel_polynomial: n must be even >= 0");
    BiHom lhs(n);
    for (long alpha = 0; alpha <= n; ++alpha) {
        Rational s = exact::bessel_sign_sum(n, alpha) * exact::binomial(n, alpha);
        lhs.at(alpha) += GR::i_pow(n - alpha) * GR(s);
    }
    BiHom sq(2);
    sq.at(2) = GR(1);
    sq.at(0) = GR(1);
    BiHom rhs = sq.pow(n / 2);
    Rational c = exact::binomial(n, n / 2);
    if ((n / 2) % 2 != 0) c = -c;
    rhs = GR(c) * rhs;
    return {lhs, rhs, lhs == rhs};
}

}  // namespace arx::bessel
