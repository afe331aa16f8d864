#include <catch2/catch_amalgamated.hpp>

#include "arx/poly_ops.hpp"

using namespace arx;
using namespace arx::poly;

namespace {

// second, deliberately naive expansion of P^alpha for cross-checking build_P_alpha:
// multiplies the three factors as raw coordinate polynomials term by term
TestFunctionPoly naive_P_alpha(long n, long alpha) {
    auto c = detail::make_coords();
    const auto& vars = coord_vars();
    auto i = CoordPoly::constant(vars, GR::i());
    auto half = CoordPoly::constant(vars, GR(Rational(1, 2)));
    CoordPoly m11 = i * (c.z1 * c.t2 - c.t1 * c.z2);
    CoordPoly m12 = half * (c.z1 * c.z2b - c.z1b * c.z2);
    CoordPoly m22 = -(i * (c.z1b * c.t2 - c.t1 * c.z2b));
    TestFunctionPoly acc = p_map(m11, m12, m22);
    for (long k = 0; k < alpha; ++k) acc = acc * p_map(c.z1, i * c.t1, c.z1b);
    for (long k = 0; k < n - alpha; ++k) acc = acc * p_map(c.z2, i * c.t2, c.z2b);
    return acc;
}

BiHom eval_at(const TestFunctionPoly& P, const std::vector<Rational>& pt, long value_degree) {
    BiHom out(value_degree);
    for (const auto& [e, v] : P.terms()) {
        Rational c(1);
        for (size_t k = 0; k < e.size(); ++k)
            for (int rep = 0; rep < e[k]; ++rep) c *= pt[k];
        out += GR(c) * v;
    }
    return out;
}

}  // namespace

TEST_CASE("p_map") {
    BiHom p = p_map(GR(1), GR(0), GR(1));
    CHECK(p.at(2) == GR(1));
    CHECK(p.at(1) == GR(0));
    CHECK(p.at(0) == GR(1));
    BiHom q = p_map(GR(0), GR(1), GR(0));
    CHECK(q.at(1) == GR(2));
    BiHom r = p_map(GR::i(), GR(0), -GR::i());
    CHECK(r.at(2) == GR::i());
    CHECK(r.at(0) == -GR::i());
}

TEST_CASE("build_P_alpha explicit value at a sample point") {
    // (t1, x1, y1, t2, x2, y2) = (1, 0, 0, 0, 1, 0): value -i X^2 + i Y^2
    auto P = build_P_alpha(0, 0);
    BiHom v = eval_at(P, {Rational(1), Rational(0), Rational(0), Rational(0), Rational(1), Rational(0)}, 2);
    CHECK(v.at(2) == -GR::i());
    CHECK(v.at(1) == GR(0));
    CHECK(v.at(0) == GR::i());
}

TEST_CASE("P_alpha vanishes on the diagonal x2 = x1") {
    for (long n : {0L, 2L}) {
        for (long alpha = 0; alpha <= n; ++alpha) {
            auto P = build_P_alpha(n, alpha);
            // substitute t2 = t1, x2 = x1, y2 = y1 at a few rational points and check zero
            for (const auto& pt : std::vector<std::vector<Rational>>{
                     {Rational(1), Rational(2), Rational(-1), Rational(1), Rational(2), Rational(-1)},
                     {Rational(1, 2), Rational(0), Rational(3), Rational(1, 2), Rational(0), Rational(3)}}) {
                BiHom v = eval_at(P, pt, 2 * n + 2);
                CHECK(v.is_zero());
            }
        }
    }
}

TEST_CASE("build_P_alpha matches independent naive expansion at n=2, alpha=1") {
    CHECK(build_P_alpha(2, 1) == naive_P_alpha(2, 1));
    CHECK(build_P_alpha(4, 3) == naive_P_alpha(4, 3));
}

TEST_CASE("pluri-harmonicity of P^alpha for even n <= 8") {
    for (long n = 0; n <= 8; n += 2) {
        for (long alpha = 0; alpha <= n; ++alpha) {
            auto ops = apply_pluriharmonic_ops(build_P_alpha(n, alpha));
            REQUIRE(ops[0].is_zero());
            REQUIRE(ops[1].is_zero());
            REQUIRE(ops[2].is_zero());
        }
    }
}

TEST_CASE("pluri-harmonic operators on a non-harmonic input") {
    auto t1 = CoordPoly::variable(coord_vars(), "t1", GR(1));
    auto t1sq = t1 * t1;
    TestFunctionPoly P(coord_vars());
    for (const auto& [e, v] : t1sq.terms()) {
        BiHom val(0);
        val.at(0) = v;
        P.add_term(e, val);
    }
    auto ops = apply_pluriharmonic_ops(P);
    // D11 t1^2 = 2, D12 = D22 = 0
    REQUIRE(ops[0].term_count() == 1);
    CHECK(ops[0].terms().begin()->second.at(0) == GR(2));
    CHECK(ops[1].is_zero());
    CHECK(ops[2].is_zero());
}

TEST_CASE("pairing_n values") {
    BiHom x2 = BiHom::monomial(2, 2, GR(1));
    BiHom y2 = BiHom::monomial(2, 0, GR(1));
    BiHom xy = BiHom::monomial(2, 1, GR(1));
    CHECK(pairing_n(x2, y2) == GR(1));
    CHECK(pairing_n(xy, xy) == GR(Rational(-1, 2)));
    CHECK(pairing_n(x2, x2) == GR(0));
    CHECK_THROWS_AS(pairing_n(x2, BiHom::monomial(4, 0, GR(1))), std::invalid_argument);
}

TEST_CASE("rho_action substitution and equivariance") {
    // identity fixes P
    std::array<std::array<GR, 2>, 2> id = {{{GR(1), GR(0)}, {GR(0), GR(1)}}};
    BiHom xn = BiHom::monomial(3, 3, GR(1));
    CHECK(rho_action(id, 0, xn) == xn);

    // w0 sends X^n to (-Y)^n
    std::array<std::array<GR, 2>, 2> w0 = {{{GR(0), GR(1)}, {GR(-1), GR(0)}}};
    BiHom img = rho_action(w0, 0, xn);
    CHECK(img == BiHom::monomial(3, 0, GR(-1)));

    // <rho(g)u, rho(g)v> = det(g)^{n+2b} <u,v> for g = [[1,1],[0,2]], n=2, b=0
    std::array<std::array<GR, 2>, 2> g = {{{GR(1), GR(1)}, {GR(0), GR(2)}}};
    BiHom x2 = BiHom::monomial(2, 2, GR(1));
    BiHom y2 = BiHom::monomial(2, 0, GR(1));
    GR lhs = pairing_n(rho_action(g, 0, x2), rho_action(g, 0, y2));
    GR det = GR(2);
    CHECK(lhs == det * det * pairing_n(x2, y2));

    CHECK_THROWS_AS(rho_action(std::array<std::array<GR, 2>, 2>{{{GR(1), GR(0)}, {GR(1), GR(0)}}}, -1, x2),
                    std::domain_error);
}

TEST_CASE("pairing equivariance on random rational matrices") {
    // deterministic pseudo-random rational entries
    long seed = 1;
    auto next = [&]() {
        seed = (seed * 1103515245 + 12345) % 2147483647;
        return Rational(seed % 7 - 3, 1 + seed % 5);
    };
    for (int trial = 0; trial < 12; ++trial) {
        std::array<std::array<GR, 2>, 2> g = {{{GR(next()), GR(next())}, {GR(next()), GR(next())}}};
        GR det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
        if (det.is_zero()) continue;
        long n = 4, b = 1;
        BiHom u(n), v(n);
        for (long i = 0; i <= n; ++i) {
            u.at(i) = GR(next());
            v.at(i) = GR(next());
        }
        GR lhs = pairing_n(rho_action(g, b, u), rho_action(g, b, v));
        GR scale(1);
        for (long k = 0; k < n + 2 * b; ++k) scale *= det;
        CHECK(lhs == scale * pairing_n(u, v));
    }
}

TEST_CASE("SU(2)-equivariance of P^alpha at rational unitary sample points") {
    // rational points with u * t(u) = 1: u = [[a,b],[-b,a]], a^2+b^2 = 1 (e.g. 3-4-5)
    std::array<std::array<GR, 2>, 2> u = {{{GR(Rational(3, 5)), GR(Rational(4, 5))},
                                           {GR(Rational(-4, 5)), GR(Rational(3, 5))}}};
    // check P^alpha(u^{-1} x (ubar*)^{-1}; (X,Y)) = P^alpha(x; (X,Y) u^{-1}) by evaluating both
    // sides on rational coordinate points. For real u in SO(2), ubar* = t(u), so the
    // transformed symmetric matrices have coordinates given by conjugation x -> u^{-1} x t(u)^{-1}.
    long n = 2, alpha = 1;
    auto P = build_P_alpha(n, alpha);
    // x_k = [[z_k, i t_k],[i t_k, z_k bar]] built from rational (t, x, y)
    auto conj_coords = [&](const std::vector<Rational>& pt) {
        // act on the 2x2 complex symmetric matrix by u^{-1} . x . t(u)^{-1}
        // entries: m11 = z, m12 = i t, m22 = zbar
        std::vector<Rational> out(6);
        for (int vec = 0; vec < 2; ++vec) {
            GR z(pt[1 + 3 * vec], pt[2 + 3 * vec]);
            GR it = GR::i() * GR(pt[0 + 3 * vec]);
            // m = [[z, it],[it, zb]]
            std::array<std::array<GR, 2>, 2> m = {{{z, it}, {it, z.conj()}}};
            // ui = u^{-1} = t(u) for rotation; compute ui * m * t(ui)
            std::array<std::array<GR, 2>, 2> ui = {{{u[1][1], -u[0][1]}, {-u[1][0], u[0][0]}}};
            std::array<std::array<GR, 2>, 2> tmp{}, res{};
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    tmp[i][j] = GR(0);
                    for (int k = 0; k < 2; ++k) tmp[i][j] += ui[i][k] * m[k][j];
                }
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    res[i][j] = GR(0);
                    for (int k = 0; k < 2; ++k) res[i][j] += tmp[i][k] * ui[j][k];
                }
            // res = [[z', i t'],[i t', z' bar]]
            GR zp = res[0][0];
            GR itp = res[0][1];
            out[0 + 3 * vec] = itp.im;  // t'
            out[1 + 3 * vec] = zp.re;
            out[2 + 3 * vec] = zp.im;
        }
        return out;
    };
    std::array<std::array<GR, 2>, 2> uinv = {{{u[1][1], -u[0][1]}, {-u[1][0], u[0][0]}}};
    std::vector<std::vector<Rational>> pts = {
        {Rational(1), Rational(2), Rational(0), Rational(-1), Rational(1, 2), Rational(3)},
        {Rational(2), Rational(0), Rational(1), Rational(1), Rational(1), Rational(-2)}};
    for (const auto& pt : pts) {
        BiHom lhs = eval_at(P, conj_coords(pt), 2 * n + 2);
        BiHom rhs = rho_action(uinv, 0, eval_at(P, pt, 2 * n + 2));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("hermitian_B_W diagonal values") {
    // n = 0: degree 2n+2 = 2
    BiHom xy = BiHom::monomial(2, 1, GR(1));
    BiHom x2 = BiHom::monomial(2, 2, GR(1));
    BiHom y2 = BiHom::monomial(2, 0, GR(1));
    CHECK(hermitian_B_W(xy, xy) == GR(Rational(1, 2)));
    CHECK(hermitian_B_W(x2, y2) == GR(0));
    CHECK(hermitian_B_W(x2, x2) == GR(1));
    // positivity on the monomial basis, degree 6 (n = 2)
    for (long i = 0; i <= 6; ++i) {
        BiHom m = BiHom::monomial(6, i, GR(1));
        GR v = hermitian_B_W(m, m);
        CHECK(v.im == 0);
        CHECK(v.re > 0);
    }
    // conjugate symmetry: B(u,v) = conj(B(v,u))
    BiHom u(2), v(2);
    u.at(2) = GR(Rational(1), Rational(2));
    u.at(0) = GR(Rational(-1, 3), Rational(0));
    v.at(1) = GR(Rational(2), Rational(-1));
    v.at(2) = GR(Rational(0), Rational(1, 5));
    CHECK(hermitian_B_W(u, v) == hermitian_B_W(v, u).conj());
}
