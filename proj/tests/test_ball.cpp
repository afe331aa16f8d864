#include <catch2/catch_amalgamated.hpp>

#include "arx/ball.hpp"
#include "arx/ball_complex.hpp"

using namespace arx;

namespace {
constexpr mpfr_prec_t P = 128;
}

TEST_CASE("ball arithmetic encloses exact rational results") {
    BallReal a(Rational(1, 3), P);
    BallReal b(Rational(2, 7), P);
    CHECK((a + b).contains(Rational(13, 21)));
    CHECK((a * b).contains(Rational(2, 21)));
    CHECK((a - b).contains(Rational(1, 21)));
    CHECK((a / b).contains(Rational(7, 6)));
    CHECK(pow_si(a, 3).contains(Rational(1, 27)));
    CHECK(pow_si(a, -2).contains(Rational(9)));
}

TEST_CASE("radius grows with operations but stays tiny at 128 bits") {
    BallReal x(Rational(1, 3), P);
    BallReal acc(1, P);
    for (int i = 0; i < 1000; ++i) acc = acc * x + x;
    CHECK(acc.is_finite());
    CHECK(acc.rel_width() < 1e-30);
}

TEST_CASE("elementary functions are consistent") {
    BallReal one(1, P);
    CHECK(log(exp(one)).contains(Rational(1)));
    BallReal two(2, P);
    CHECK((sqrt(two) * sqrt(two)).contains(Rational(2)));
    BallReal pi = BallReal::pi(P);
    // sin(pi) is a ball straddling zero
    CHECK(sin(pi).contains_zero());
    CHECK(cos(BallReal(0, P)).contains(Rational(1)));
    // cosh^2 - sinh^2 = 1
    BallReal t(Rational(7, 5), P);
    CHECK((cosh(t) * cosh(t) - sinh(t) * sinh(t)).contains(Rational(1)));
}

TEST_CASE("division by a ball containing zero is rejected") {
    BallReal z(0, P);
    z.add_error_2exp(-10);
    CHECK_THROWS_AS(BallReal(1, P) / z, std::domain_error);
}

TEST_CASE("gamma on positive balls") {
    CHECK(gamma_ball(BallReal(5, P)).contains(Rational(24)));
    BallReal g = gamma_ball(BallReal(Rational(1, 2), P));
    // Gamma(1/2)^2 = pi
    BallReal pi = BallReal::pi(P);
    CHECK((g * g - pi).contains_zero());
}

TEST_CASE("complex ball basics") {
    BallComplex i(BallReal(0, P), BallReal(1, P));
    BallComplex z = i * i;
    CHECK(z.re.contains(Rational(-1)));
    CHECK(z.im.contains(Rational(0)));
    CHECK(pow_si(i, 4).re.contains(Rational(1)));
    BallComplex w(GaussianRational(Rational(3), Rational(4)), P);
    CHECK(w.norm().contains(Rational(25)));
    CHECK(w.mul_i_pow(2).re.contains(Rational(-3)));
}
