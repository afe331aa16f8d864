#include <catch2/catch_amalgamated.hpp>

#include "arx/exact.hpp"
#include "arx/gaussian_rational.hpp"
#include "arx/poly_ops.hpp"

using namespace arx;
using exact::binomial;

TEST_CASE("binomial with Gamma-pole convention") {
    CHECK(binomial(4, 2) == Rational(6));
    CHECK(binomial(3, -1) == Rational(0));
    CHECK(binomial(5, 7) == Rational(0));
    CHECK(binomial(0, 0) == Rational(1));
    CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
}

TEST_CASE("comb identity: sum_j binom(A,j)(-1)^j (A-j+B)!/(B-j)! = A!") {
    CHECK(exact::verify_comb_identity(0, 0));
    CHECK(exact::verify_comb_identity(2, 3));  // 20 - 24 + 6 = 2
    for (long A = 0; A <= 30; ++A)
        for (long B = 0; B <= 30; ++B) REQUIRE(exact::verify_comb_identity(A, B));
}

TEST_CASE("bessel_sign_sum values and closed form") {
    CHECK(exact::bessel_sign_sum(2, 1) == Rational(0));
    CHECK(exact::bessel_sign_sum(2, 0) == Rational(2));
    CHECK(exact::bessel_sign_sum(0, 0) == Rational(1));
    CHECK_THROWS_AS(exact::bessel_sign_sum(3, 1), std::domain_error);

    for (long n = 0; n <= 20; n += 2) {
        for (long alpha = 0; alpha <= n; ++alpha) {
            Rational direct = exact::bessel_sign_sum(n, alpha);
            if (alpha % 2 == 1) {
                REQUIRE(direct == Rational(0));
            }
            REQUIRE(direct == exact::bessel_sign_sum_closed(n, alpha));
        }
    }
}

TEST_CASE("hermitian_square_norm equals 2^n") {
    CHECK(exact::hermitian_square_norm(0) == Rational(1));
    CHECK(exact::hermitian_square_norm(2) == Rational(4));
    CHECK(exact::hermitian_square_norm(4) == Rational(16));
    CHECK(exact::hermitian_square_norm(8) == Rational(256));
}

TEST_CASE("GaussianRational field ops and conjugation") {
    GaussianRational x(Rational(3, 7), Rational(-2, 5));
    CHECK(x.conj().conj() == x);
    GaussianRational n = x * x.conj();
    CHECK(n.im == 0);
    CHECK(n.re == x.norm());
    GaussianRational y(Rational(1, 2), Rational(4));
    CHECK((x / y) * y == x);
    CHECK(GaussianRational::i_pow(5) == GaussianRational::i());
    CHECK(GaussianRational::i_pow(-1) == GaussianRational::i().conj());
}
