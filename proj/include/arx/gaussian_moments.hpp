#pragma once

#include <map>
#include <string>

#include "arx/ball_complex.hpp"
#include "arx/constant_expr.hpp"
#include "arx/exact.hpp"
#include "arx/multi_poly.hpp"
#include "arx/poly_ops.hpp"

namespace arx::quad {

// int_{-inf}^{inf} u^k e^{-c pi u^2} du: 0 for odd k,
// (k-1)!! (2 c pi)^{-k/2} c^{-1/2} for even k.
inline ConstantExpr gaussian_moment_exact(long k, const Rational& c) {
    if (k < 0) throw std::domain_error("gaussian_moment: k >= 0 required");
    if (!(c > 0)) throw std::domain_error("gaussian_moment: c > 0 required");
    if (k % 2 == 1) return ConstantExpr::zero();
    ConstantExpr e(GaussianRational(Rational(double_factorial(k - 1)) /
                                    (pow2(k / 2) * pow_rational(c, k / 2))));
    e.pi_pow = -k / 2;
    return e * ConstantExpr::sqrt_of(Rational(1) / c);
}

inline BallReal gaussian_moment(long k, const Rational& c, mpfr_prec_t prec) {
    return gaussian_moment_exact(k, c).eval(prec).re;
}

// Closed form of int int z^A zbar^B e^{-4 pi z zbar} psi_F(z t) dx dy:
//   2^{-2-A-B} i^{A+B} sum_j binom(A,j) binom(B,j) j! (-pi)^{-j} tbar^{A-j} t^{B-j} e^{-pi t tbar}
inline BallComplex complex_gaussian_fourier(long A, long B, const BallComplex& t) {
    if (A < 0 || B < 0) throw std::domain_error("complex_gaussian_fourier: A, B >= 0 required");
    mpfr_prec_t prec = t.precision_bits();
    BallComplex tb = t.conj();
    BallComplex sum(prec);
    BallReal minus_pi = -BallReal::pi(prec);
    for (long j = 0; j <= std::min(A, B); ++j) {
        Rational coef = exact::binomial(A, j) * exact::binomial(B, j) * Rational(factorial(j));
        BallComplex term = pow_si(tb, A - j) * pow_si(t, B - j) * BallReal(coef, prec);
        term = term * pow_si(minus_pi, -j);
        sum = sum + term;
    }
    BallReal gauss = exp(-(BallReal::pi(prec) * t.norm()));
    BallComplex pref(BallReal(pow2(-2 - A - B), prec), BallReal(prec));
    return (pref * sum * gauss).mul_i_pow(A + B);
}

// Integrates every coordinate monomial of P against prod_v e^{-c_v pi u_v^2} du_v by
// exact Gaussian moments, leaving the (X,Y)-valued part with ConstantExpr coefficients.
// Linear in P, multiplicative over disjoint variable sets.
inline BiHomPoly<ConstantExpr> reduce_gaussian_polynomial_integral(
    const MultiPoly<BiHomPoly<GaussianRational>>& P, const std::map<std::string, Rational>& variances) {
    const auto& vars = P.variables();
    std::vector<Rational> cs;
    cs.reserve(vars.size());
    for (const auto& v : vars) {
        auto it = variances.find(v);
        if (it == variances.end())
            throw std::invalid_argument("reduce_gaussian_polynomial_integral: missing variance for " + v);
        cs.push_back(it->second);
    }
    long value_degree = 0;
    for (const auto& [e, val] : P.terms()) value_degree = std::max(value_degree, val.degree());
    BiHomPoly<ConstantExpr> out(value_degree);
    for (const auto& [e, val] : P.terms()) {
        ConstantExpr m(1);
        bool zero = false;
        for (size_t i = 0; i < e.size() && !zero; ++i) {
            ConstantExpr mi = gaussian_moment_exact(e[i], cs[i]);
            if (mi.is_zero()) zero = true;
            m *= mi;
        }
        if (zero) continue;
        for (long i = 0; i <= val.degree(); ++i) {
            if (ring_is_zero(val.at(i))) continue;
            out.at(i) += val.at(i) * m;
        }
    }
    return out;
}

}  // namespace arx::quad
