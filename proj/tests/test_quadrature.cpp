#include <catch2/catch_amalgamated.hpp>

#include "arx/quadrature.hpp"

using namespace arx;
using namespace arx::quad;

namespace {
constexpr mpfr_prec_t P = 128;
}

TEST_CASE("log-singular endpoint integral: int_0^1 a(1-a^2)log(a)/(1+a^2)^3 da = -1/8") {
    auto f = [](const BallReal& a, const BallReal&) {
        BallReal a2 = a * a;
        BallReal den = BallReal(1, P) + a2;
        return a * (BallReal(1, P) - a2) * log(a) / (den * den * den);
    };
    QuadratureTask t;
    t.integrand = f;
    t.domain = Domain::ZeroOne;
    t.singularity_hint = SingularityHint::LogEndpoint;
    t.target_precision_bits = P;
    BallReal v = integrate(t);
    CHECK(v.contains(Rational(-1, 8)));
    // enclosure tighter than 1e-20
    CHECK(v.rad_d() < 1.25e-21);
}

TEST_CASE("half-line: int_0^inf e^{-t} dt = 1") {
    auto f = [](const BallReal& t, const BallReal&) { return exp(-t); };
    BallReal v = integrate(f, Domain::ZeroInf, P);
    CHECK(v.contains(Rational(1)));
    CHECK(v.rel_width() < 1e-30);
}

TEST_CASE("real line: int e^{-pi u^2} du = 1") {
    auto f = [](const BallReal& u, const BallReal&) { return exp(-(BallReal::pi(P) * u * u)); };
    BallReal v = integrate(f, Domain::RealLine, P);
    CHECK(v.contains(Rational(1)));
    CHECK(v.rel_width() < 1e-30);
}

TEST_CASE("power singularity at zero: int_0^1 x^{-1/2} dx = 2") {
    auto f = [](const BallReal& x, const BallReal&) { return BallReal(1, P) / sqrt(x); };
    BallReal v = integrate(f, Domain::ZeroOne, P);
    CHECK(v.contains(Rational(2)));
}

TEST_CASE("the complement argument is exact near 1: int_0^1 -log(1-x) dx = 1") {
    auto f = [](const BallReal&, const BallReal& omx) { return -log(omx); };
    BallReal v = integrate(f, Domain::ZeroOne, P);
    CHECK(v.contains(Rational(1)));
}

TEST_CASE("divergence is reported") {
    auto f = [](const BallReal& x, const BallReal&) { return BallReal(1, P) / x; };
    QuadratureTask t;
    t.integrand = f;
    t.domain = Domain::ZeroOne;
    t.target_precision_bits = 64;
    t.max_level = 6;
    t.max_nodes = 3000;
    CHECK_THROWS_AS(integrate(t), QuadratureError);
}

TEST_CASE("complex integrand") {
    // int_0^inf e^{-t}(cos t + i sin t) dt = (1 + i)/2
    auto f = [](const BallReal& t, const BallReal&) {
        return BallComplex(exp(-t) * cos(t), exp(-t) * sin(t));
    };
    BallComplex v = integrate_complex(f, Domain::ZeroInf, P);
    CHECK(v.re.contains(Rational(1, 2)));
    CHECK(v.im.contains(Rational(1, 2)));
}
