#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "arx/exact.hpp"
#include "arx/multi_poly.hpp"

namespace arx::poly {

using GR = GaussianRational;
using BiHom = BiHomPoly<GR>;
using CoordPoly = MultiPoly<GR>;             // scalar polynomial in coordinates
using TestFunctionPoly = MultiPoly<BiHom>;   // C[X,Y]-valued polynomial in coordinates

// the six real coordinates of X^0_infty, z_k = x_k + i y_k
inline const std::vector<std::string>& coord_vars() {
    static const std::vector<std::string> v = {"t1", "x1", "y1", "t2", "x2", "y2"};
    return v;
}

// p([[a,b],[b,c]]) = a X^2 + 2b XY + c Y^2
inline BiHom p_map(const GR& a, const GR& b, const GR& c) {
    BiHom p(2);
    p.at(2) = a;
    p.at(1) = GR(2) * b;
    p.at(0) = c;
    return p;
}

// p applied to a symmetric matrix of coordinate polynomials
inline TestFunctionPoly p_map(const CoordPoly& a, const CoordPoly& b, const CoordPoly& c) {
    TestFunctionPoly out(a.variables());
    auto embed = [&](const CoordPoly& s, long x_exp, const GR& scale) {
        for (const auto& [e, v] : s.terms()) {
            BiHom val(2);
            val.at(x_exp) = scale * v;
            out.add_term(e, val);
        }
    };
    embed(a, 2, GR(1));
    embed(b, 1, GR(2));
    embed(c, 0, GR(1));
    return out;
}

namespace detail {

struct Coords {
    CoordPoly t1, x1, y1, t2, x2, y2, z1, z1b, z2, z2b;
};

inline Coords make_coords() {
    const auto& vars = coord_vars();
    Coords c;
    auto v = [&](const std::string& n) { return CoordPoly::variable(vars, n, GR(1)); };
    c.t1 = v("t1");
    c.x1 = v("x1");
    c.y1 = v("y1");
    c.t2 = v("t2");
    c.x2 = v("x2");
    c.y2 = v("y2");
    auto i = CoordPoly::constant(vars, GR::i());
    c.z1 = c.x1 + i * c.y1;
    c.z1b = c.x1 - i * c.y1;
    c.z2 = c.x2 + i * c.y2;
    c.z2b = c.x2 - i * c.y2;
    return c;
}

}  // namespace detail

// P^alpha(x1, x2) = p( (1/2)(x1 w0 x2 + t(x1 w0 x2)) ) p(x1)^alpha p(x2)^(n-alpha),
// in the coordinates (t1, x1, y1, t2, x2, y2); value degree 2n+2 in (X, Y).
inline TestFunctionPoly build_P_alpha(long n, long alpha) {
    if (n < 0 || n % 2 != 0) throw std::domain_error("build_P_alpha: n must be even and >= 0");
    if (alpha < 0 || alpha > n) throw std::domain_error("build_P_alpha: alpha out of [0,n]");
    auto c = detail::make_coords();
    const auto& vars = coord_vars();
    auto i = CoordPoly::constant(vars, GR::i());
    auto half = CoordPoly::constant(vars, GR(Rational(1, 2)));
    // (1/2)(x1 w0 x2 + transpose) has entries
    //   [ i(z1 t2 - t1 z2),            (z1 z2b - z1b z2)/2 ]
    //   [ (z1 z2b - z1b z2)/2,        -i(z1b t2 - t1 z2b)  ]
    CoordPoly m11 = i * (c.z1 * c.t2 - c.t1 * c.z2);
    CoordPoly m12 = half * (c.z1 * c.z2b - c.z1b * c.z2);
    CoordPoly m22 = -(i * (c.z1b * c.t2 - c.t1 * c.z2b));
    TestFunctionPoly first = p_map(m11, m12, m22);
    TestFunctionPoly p1 = p_map(c.z1, i * c.t1, c.z1b);
    TestFunctionPoly p2 = p_map(c.z2, i * c.t2, c.z2b);
    return first * p1.pow(alpha) * p2.pow(n - alpha);
}

// The three pluri-harmonicity operators, with Wirtinger derivatives expanded into real
// coordinates: d^2/dt1^2 + 4 d^2/dz1 dz1b = d^2/dt1^2 + d^2/dx1^2 + d^2/dy1^2, etc.
inline std::array<TestFunctionPoly, 3> apply_pluriharmonic_ops(const TestFunctionPoly& P) {
    if (P.variables() != coord_vars())
        throw std::invalid_argument("apply_pluriharmonic_ops: expected variables (t1,x1,y1,t2,x2,y2)");
    auto d2 = [&](const std::string& a, const std::string& b) {
        return P.derivative(a).derivative(b);
    };
    TestFunctionPoly D11 = d2("t1", "t1") + d2("x1", "x1") + d2("y1", "y1");
    TestFunctionPoly D12 = d2("t1", "t2") + d2("x1", "x2") + d2("y1", "y2");
    TestFunctionPoly D22 = d2("t2", "t2") + d2("x2", "x2") + d2("y2", "y2");
    return {D11, D12, D22};
}

// <X^i Y^(n-i), X^j Y^(n-j)>_n = (-1)^i binom(n,i)^(-1) when i+j = n, else 0
inline GR pairing_n(const BiHom& u, const BiHom& v) {
    if (u.degree() != v.degree()) throw std::invalid_argument("pairing_n: degree mismatch");
    long n = u.degree();
    GR total;
    for (long i = 0; i <= n; ++i) {
        if (ring_is_zero(u.at(i)) || ring_is_zero(v.at(n - i))) continue;
        Rational w = Rational(1) / exact::binomial(n, i);
        if (i % 2 != 0) w = -w;
        total += GR(w) * u.at(i) * v.at(n - i);
    }
    return total;
}

// rho_lambda(g) P = P((X,Y) g) (det g)^b for lambda = (n+b, b)
inline BiHom rho_action(const std::array<std::array<GR, 2>, 2>& g, long b, const BiHom& P) {
    long n = P.degree();
    GR det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    GR det_pow(1);
    if (b >= 0) {
        for (long k = 0; k < b; ++k) det_pow *= det;
    } else {
        if (det.is_zero()) throw std::domain_error("rho_action: det g = 0 with negative b");
        for (long k = 0; k < -b; ++k) det_pow /= det;
    }
    // (X,Y) g = (g00 X + g10 Y, g01 X + g11 Y)
    BiHom xs(1), ys(1);
    xs.at(1) = g[0][0];
    xs.at(0) = g[1][0];
    ys.at(1) = g[0][1];
    ys.at(0) = g[1][1];
    BiHom out(n);
    for (long i = 0; i <= n; ++i) {
        if (ring_is_zero(P.at(i))) continue;
        BiHom term = xs.pow(i) * ys.pow(n - i);
        out += P.at(i) * term;
    }
    return det_pow * out;
}

// tau_m(w0) u = u((X,Y) w0) with w0 = [[0,1],[-1,0]] (det = 1)
inline BiHom tau_w0(const BiHom& u) {
    static const std::array<std::array<GR, 2>, 2> w0 = {{{GR(0), GR(1)}, {GR(-1), GR(0)}}};
    return rho_action(w0, 0, u);
}

// B_W(u1, u2) = <u1, tau_{2n+2}(w0) conj(u2)>_W; diagonal binom(2n+2, n+1+i)^(-1) on monomials
inline GR hermitian_B_W(const BiHom& u, const BiHom& v) {
    if (u.degree() != v.degree()) throw std::invalid_argument("hermitian_B_W: degree mismatch");
    return pairing_n(u, tau_w0(v.conj()));
}

}  // namespace arx::poly

namespace arx::exact {

// binom(n, n/2) <(X^2+Y^2)^(n/2), (X^2+Y^2)^(n/2)>_n = 2^n
inline Rational hermitian_square_norm(long n) {
    if (n < 0 || n % 2 != 0) throw std::domain_error("hermitian_square_norm: n must be even and >= 0");
    poly::BiHom s(2);
    s.at(2) = GaussianRational(1);
    s.at(0) = GaussianRational(1);
    poly::BiHom p = s.pow(n / 2);
    GaussianRational v = poly::pairing_n(p, p);
    return binomial(n, n / 2) * v.re;
}

}  // namespace arx::exact
