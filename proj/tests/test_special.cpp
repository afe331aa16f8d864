#include <catch2/catch_amalgamated.hpp>

#include "arx/special.hpp"

using namespace arx;
using namespace arx::special;

namespace {
constexpr mpfr_prec_t P = 128;

double rel_err(const BallReal& a, const BallReal& b) {
    BallReal d = (a - b).abs_upper();
    BallReal m = b.abs_lower();
    if (mpfr_zero_p(m.mid())) return mpfr_zero_p(d.mid()) ? 0.0 : 1.0;
    return (d / m).mid_d();
}
}  // namespace

TEST_CASE("bessel_k reference value and small-argument pole") {
    // K_0(1) = 0.42102443824070833...
    BallReal k0 = bessel_k(0, BallReal(1, P));
    BallReal ref(Rational(421024438240708333, 1000000000000000000), P);
    CHECK(rel_err(k0, ref) < 1e-16);
    // z K_1(z) -> 1 as z -> 0+
    BallReal z(Rational(1, 1000000), P);
    BallReal v = z * bessel_k(1, z);
    CHECK(std::abs(v.mid_d() - 1.0) < 1e-5);
    // symmetry through the integral representation
    BallReal a = bessel_k(-2, BallReal(3, P));
    BallReal b = bessel_k(2, BallReal(3, P));
    CHECK(a.overlaps(b));
    CHECK_THROWS_AS(bessel_k(0, BallReal(-1, P)), std::domain_error);
}

TEST_CASE("bessel_k positive and decreasing on a grid") {
    BallReal prev(P);
    bool first = true;
    for (long zi = 1; zi <= 12; ++zi) {
        BallReal v = bessel_k(1, BallReal(Rational(zi, 2), P));
        CHECK(v.definitely_positive());
        if (!first) CHECK((prev - v).definitely_positive());
        prev = v;
        first = false;
    }
}

TEST_CASE("gauss_2f1 basic values") {
    CHECK(gauss_2f1(Rational(3), Rational(5), Rational(7), BallReal(0, P)).contains(Rational(1)));

    // 2F1(2,2;4;z) against the elementary form 6(2 z^-3 (L - z - z^2/2) - z^-2 (L - z)),
    // L = -log(1-z), at z = 1/2
    BallReal z(Rational(1, 2), P);
    BallReal F = gauss_2f1(Rational(2), Rational(2), Rational(4), z);
    BallReal L = -log(BallReal(1, P) - z);
    BallReal el = 6 * ((L - z - z * z / 2) * 2 / (z * z * z) - (L - z) / (z * z));
    CHECK(rel_err(F, el) < 1e-30);

    // 2F1(3,2;4;z) = Gamma(4)/(Gamma(3)Gamma(2)) * sum (1 - 2/(n+3)) z^n at z = 1/3
    BallReal z2(Rational(1, 3), P);
    BallReal F2 = gauss_2f1(Rational(3), Rational(2), Rational(4), z2);
    BallReal S(P);
    BallReal zp(1, P);
    for (long n = 0; n < 300; ++n) {
        S = S + BallReal(Rational(1) - Rational(2, n + 3), P) * zp;
        zp = zp * z2;
    }
    CHECK(rel_err(F2, S * 3) < 1e-30);

    CHECK_THROWS_AS(gauss_2f1(Rational(1), Rational(1), Rational(-2), BallReal(Rational(1, 2), P)),
                    std::domain_error);
    CHECK_THROWS_AS(gauss_2f1(Rational(1), Rational(1), Rational(3), BallReal(2, P)), std::domain_error);
}

TEST_CASE("hyp2f1_near_one matches the direct series where both converge") {
    // F(a,b;a+b-m;z): m = nu cases used by the Mellin closed forms
    struct Case {
        Rational a, b;
        long m;
    };
    for (const Case& c : {Case{Rational(3), Rational(2), 1}, Case{Rational(4), Rational(3), 2},
                          Case{Rational(2), Rational(2), 0}, Case{Rational(7, 2), Rational(5, 2), 1},
                          Case{Rational(5, 2), Rational(5, 2), 0}}) {
        BallReal z(Rational(3, 5), P);
        BallReal w = BallReal(1, P) - z;
        BallReal direct = gauss_2f1(c.a, c.b, c.a + c.b - c.m, z);
        BallReal near1 = hyp2f1_near_one(c.a, c.b, c.m, w);
        INFO(c.a.get_str() << " " << c.b.get_str() << " m=" << c.m);
        CHECK(direct.overlaps(near1));
        CHECK(rel_err(near1, direct) < 1e-28);
    }
}

TEST_CASE("gamma_r and gamma_c exact instances") {
    BallReal pi = BallReal::pi(P);
    CHECK(rel_err(gamma_r(Rational(2), P), BallReal(1, P) / pi) < 1e-30);
    CHECK(rel_err(gamma_c(Rational(2), P), BallReal(1, P) / (2 * pi * pi)) < 1e-30);
    CHECK(rel_err(gamma_c(Rational(4), P), BallReal(Rational(3, 4), P) / pow_si(pi, 4)) < 1e-30);
    // half-integer: Gamma_R(1) = pi^{-1/2} Gamma(1/2) = 1
    CHECK(gamma_r(Rational(1), P).contains(Rational(1)));
}

TEST_CASE("omega identities") {
    BallReal z = BallReal::pi(P) * 4;
    CHECK(omega(z, Rational(1), Rational(5), P).contains(Rational(1)));
    CHECK(omega(z, Rational(7), Rational(0), P).contains(Rational(1)));
    // reflection omega(z;a,b) = omega(z;1-b,1-a)
    BallReal lhs = omega(z, Rational(-1), Rational(2), P);
    BallReal rhs = omega(z, Rational(1) - Rational(2), Rational(1) - Rational(-1), P);
    CHECK(lhs.overlaps(rhs));
    // recurrence omega(z;-a,b) = sum_k binom(n,k) (k+a)!/a! z^-k omega(z;-a-k, b+n), n=2, a=1, b=3
    long n = 2, a = 1;
    Rational b(3);
    BallReal target = omega(z, Rational(-a), b, P);
    BallReal sum(P);
    for (long k = 0; k <= n; ++k) {
        Rational coef = exact::binomial(n, k) * Rational(factorial(k + a)) / Rational(factorial(a));
        sum = sum + BallReal(coef, P) * pow_si(z, -k) * omega(z, Rational(-a - k), b + n, P);
    }
    CHECK(target.overlaps(sum));
    CHECK(rel_err(sum, target) < 1e-25);
}

TEST_CASE("bessel_gauss_mellin against direct quadrature") {
    struct Case {
        long alpha, beta;
        Rational c;
    };
    for (const Case& cs : {Case{4, 0, Rational(1)}, Case{3, 1, Rational(2)}}) {
        BallReal closed = bessel_gauss_mellin(cs.alpha, cs.beta, cs.c, P);
        auto f = [&](const BallReal& r, const BallReal&) {
            return pow_si(r, cs.alpha) * bessel_k(cs.beta, r * 4 * BallReal::pi(P)) *
                   exp(-(BallReal(cs.c, P) * BallReal::pi(P) * r * r)) / r;
        };
        BallReal q = quad::integrate(f, quad::Domain::ZeroInf, P);
        INFO("alpha=" << cs.alpha << " beta=" << cs.beta);
        CHECK(closed.overlaps(q));
        CHECK(rel_err(closed, q) < 1e-15);
    }
    // beta -> -beta symmetry
    BallReal p1 = bessel_gauss_mellin(5, 2, Rational(3), P);
    BallReal p2 = bessel_gauss_mellin(5, -2, Rational(3), P);
    CHECK(p1.overlaps(p2));
    CHECK_THROWS_AS(bessel_gauss_mellin(2, 3, Rational(1), P), std::domain_error);
}

TEST_CASE("bessel_pair_mellin appendix instances and quadrature") {
    BallReal half(Rational(1, 2), P);
    BallReal pi = BallReal::pi(P);
    // rho=4, mu=nu=0: 2^-7 pi^-4 (2 z^-3 (L-z-z^2/2) - z^-2 (L-z)), z = 1-a^2,
    // with L = -log(1-z) = -log(a^2) (the sign the series expansion forces)
    {
        BallReal a = half;
        BallReal z = BallReal(1, P) - a * a;
        BallReal L = -log(a * a);
        BallReal el = (BallReal(pow2(-7), P) / pow_si(pi, 4)) *
                      ((L - z - z * z / 2) * 2 / pow_si(z, 3) - (L - z) / (z * z));
        BallReal v = bessel_pair_mellin(4, 0, 0, a, P);
        CHECK(v.overlaps(el));
        CHECK(rel_err(v, el) < 1e-25);
    }
    // rho=4, mu=nu=1: 2^-7 pi^-4 a (1/(1-z) - 2 z^-3 (L-z-z^2/2)), same L convention
    {
        BallReal a = half;
        BallReal z = BallReal(1, P) - a * a;
        BallReal L = -log(a * a);
        BallReal el = (BallReal(pow2(-7), P) / pow_si(pi, 4)) * a *
                      (BallReal(1, P) / (a * a) - (L - z - z * z / 2) * 2 / pow_si(z, 3));
        BallReal v = bessel_pair_mellin(4, 1, 1, a, P);
        CHECK(v.overlaps(el));
        CHECK(rel_err(v, el) < 1e-25);
    }
    // against direct quadrature
    {
        BallReal a(Rational(3, 4), P);
        BallReal closed = bessel_pair_mellin(6, 2, 1, a, P);
        auto f = [&](const BallReal& t, const BallReal&) {
            return pow_si(t, 6) * bessel_k(2, t * 4 * pi) * bessel_k(1, t * a * 4 * pi) / t;
        };
        BallReal q = quad::integrate(f, quad::Domain::ZeroInf, P);
        CHECK(closed.overlaps(q));
        CHECK(rel_err(closed, q) < 1e-15);
    }
    // near-one branch engages for small a and matches quadrature
    {
        BallReal a(Rational(1, 5), P);
        BallReal closed = bessel_pair_mellin(4, 1, 1, a, P);
        auto f = [&](const BallReal& t, const BallReal&) {
            return pow_si(t, 4) * bessel_k(1, t * 4 * pi) * bessel_k(1, t * a * 4 * pi) / t;
        };
        BallReal q = quad::integrate(f, quad::Domain::ZeroInf, P);
        CHECK(closed.overlaps(q));
        CHECK(rel_err(closed, q) < 1e-15);
    }
}

TEST_CASE("k_bessel_square_mellin closed form and cross-check") {
    // n=0, k=0: 2^-4 Gamma_C(4) / (9 * binom(2,1)) * binom(2,1)^{-1}
    BallReal v = k_bessel_square_mellin(0, 0, P, /*cross_check=*/true);
    BallReal expect = BallReal(Rational(1, 16), P) * gamma_c(Rational(4), P) / BallReal(Rational(36), P);
    CHECK(v.overlaps(expect));
    BallReal v1 = k_bessel_square_mellin(0, 1, P, true);
    BallReal expect1 = BallReal(Rational(1, 16), P) * gamma_c(Rational(4), P) / BallReal(Rational(18), P);
    CHECK(v1.overlaps(expect1));
    // n=2, k=0 against direct quadrature of t^7 K_0(4 pi t)^2
    BallReal v2 = k_bessel_square_mellin(2, 0, P, true);
    BallReal pi = BallReal::pi(P);
    auto f = [&](const BallReal& t, const BallReal&) {
        BallReal k0 = bessel_k(0, t * 4 * pi);
        return pow_si(t, 7) * k0 * k0;
    };
    BallReal q = quad::integrate(f, quad::Domain::ZeroInf, P);
    CHECK(v2.overlaps(q));
    CHECK(rel_err(v2, q) < 1e-15);
}
