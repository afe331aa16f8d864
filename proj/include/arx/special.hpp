#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "arx/ball.hpp"
#include "arx/exact.hpp"
#include "arx/quadrature.hpp"

namespace arx::special {

// ---------------------------------------------------------------------------
// Gamma helpers for integer and half-integer arguments (exact rational * pi^(k/2))

struct GammaExact {
    Rational coeff;      // rational part
    int sqrt_pi_power;   // power of sqrt(pi), 0 or 1 for a single Gamma value
};

// Gamma(s) for s = half/2 > 0 given as half-units (half = 2s)
inline GammaExact gamma_half_units(long half) {
    if (half <= 0) throw std::domain_error("gamma_half_units: need s > 0");
    if (half % 2 == 0) return {Rational(factorial(half / 2 - 1)), 0};
    // Gamma(n + 1/2) = (2n-1)!! / 2^n * sqrt(pi)
    long n = (half - 1) / 2;
    return {Rational(double_factorial(2 * n - 1)) / pow2(n), 1};
}

inline BallReal gamma_rational(const Rational& s, mpfr_prec_t prec) {
    Rational two_s = s * 2;
    if (two_s.get_den() == 1) {
        long half = static_cast<long>(two_s.get_num().get_si());
        if (half > 0) {
            GammaExact g = gamma_half_units(half);
            BallReal v(g.coeff, prec);
            if (g.sqrt_pi_power != 0) v = v * sqrt(BallReal::pi(prec));
            return v;
        }
        if (half % 2 == 0) throw std::domain_error("gamma_rational: pole at non-positive integer");
    }
    // general rational: shift into [1, 2) and use the ball gamma
    Rational t = s;
    BallReal denom(1, prec);
    while (t < 1) {
        denom = denom * BallReal(t, prec);
        t += 1;
    }
    return gamma_ball(BallReal(t, prec)) / denom;
}

// Gamma_R(s) = pi^{-s/2} Gamma(s/2)
inline BallReal gamma_r(const Rational& s, mpfr_prec_t prec) {
    BallReal pi = BallReal::pi(prec);
    BallReal p = exp(BallReal(-s / 2, prec) * log(pi));
    return p * gamma_rational(s / 2, prec);
}

// Gamma_C(s) = 2 (2 pi)^{-s} Gamma(s)
inline BallReal gamma_c(const Rational& s, mpfr_prec_t prec) {
    BallReal two_pi = BallReal::pi(prec) * 2;
    BallReal p = exp(BallReal(-s, prec) * log(two_pi));
    return 2 * p * gamma_rational(s, prec);
}

// ---------------------------------------------------------------------------
// K-Bessel function via the integral representation
//   K_nu(z) = int_0^inf exp(-z cosh t) cosh(nu t) dt,   z > 0
// evaluated by the trapezoid rule with node doubling; the integrand decays
// doubly exponentially, and the tail is bounded explicitly.

inline BallReal bessel_k(long nu, const BallReal& z, mpfr_prec_t prec_hint = 0) {
    if (!z.definitely_positive()) throw std::domain_error("bessel_k: z must be positive");
    nu = nu < 0 ? -nu : nu;
    mpfr_prec_t prec = prec_hint ? prec_hint : z.precision_bits();

    // crude envelope K_nu(z) <= e^{-z + nu^2/(2z)} sqrt(2 pi / z); when it underflows the
    // working scale entirely, return the enclosure [0, bound]
    {
        BallReal zl = z.abs_lower();
        double zd = zl.mid_d();
        if (zd > 3 * (static_cast<double>(prec) + 64) + nu * nu) {
            BallReal bound = exp(-zl + BallReal(Rational(nu * nu), prec) / (zl * 2)) *
                             sqrt(BallReal::pi(prec) * 2 / zl);
            BallReal out(prec);
            out.add_error(bound.abs_upper());
            return out;
        }
    }

    auto f = [&](const Rational& t) {
        BallReal tb(t, prec);
        return exp(-(z * cosh(tb))) * cosh(BallReal(nu, prec) * tb);
    };

    // tail bound past T: int_T^inf e^{-z cosh t + nu t} dt <= e^{-z cosh T + nu T}/(z sinh T - nu)
    auto tail_bound = [&](const Rational& T) -> BallReal {
        BallReal Tb(T, prec);
        BallReal margin = z * sinh(Tb) - BallReal(nu, prec);
        if (!margin.definitely_positive()) return BallReal(1, prec);  // not yet usable
        return exp(-(z * cosh(Tb)) + BallReal(nu, prec) * Tb) / margin;
    };

    // initial step ~ 1/sqrt(z): for large z the integrand is a spike of that width
    long z_exp2 = mpfr_get_exp(z.mid());  // ~ log2(z) + 1
    long L0 = z_exp2 > 1 ? (z_exp2 + 1) / 2 : 0;
    Rational h = pow_rational(Rational(1, 2), L0);

    BallReal f0 = f(Rational(0));
    long scale_exp = mpfr_zero_p(f0.mid()) ? -(1L << 20) : mpfr_get_exp(f0.mid());
    const long cutoff_exp = scale_exp - static_cast<long>(prec) - 20;

    BallReal grid_sum = f0 * Rational(1, 2);  // trapezoid half-weight at 0
    Rational T_reached(0);
    for (long k = 1;; ++k) {
        Rational t = Rational(k) * h;
        BallReal v = f(t);
        grid_sum = grid_sum + v;
        if (mpfr_zero_p(v.mid()) || mpfr_get_exp(v.mid()) < cutoff_exp) {
            BallReal tb = tail_bound(t);
            BallReal tbu = tb.abs_upper();
            if (mpfr_zero_p(tbu.mid()) || mpfr_get_exp(tbu.mid()) < cutoff_exp) {
                T_reached = t;
                break;
            }
        }
        if (k > 20000) throw quad::QuadratureError("bessel_k: truncation not reached");
    }

    BallReal prev = grid_sum;
    for (int level = 1; level <= 16; ++level) {
        Rational h2 = h / 2;
        BallReal add(prec);
        for (long k = 1;; k += 2) {
            Rational tk = Rational(k) * h2;
            if (tk > T_reached) break;
            add = add + f(tk);
            if (k > 800000) throw quad::QuadratureError("bessel_k: node budget");
        }
        BallReal total = prev + add;
        BallReal cur = total * BallReal(h2, prec);
        BallReal diff = quad::detail::mid_abs_upper(cur - prev * BallReal(h, prec));
        prev = total;
        h = h2;
        long mag_exp = mpfr_zero_p(cur.mid()) ? 0 : mpfr_get_exp(cur.mid());
        if (mpfr_zero_p(diff.mid()) || mpfr_get_exp(diff.mid()) < mag_exp - static_cast<long>(prec) + 14) {
            cur.add_error(diff);
            cur.add_error(tail_bound(T_reached));
            return cur;
        }
    }
    throw quad::QuadratureError("bessel_k: did not converge");
}

// ---------------------------------------------------------------------------
// Gauss 2F1 by its series, |z| < 1, with a geometric tail bound.

inline BallReal gauss_2f1(const Rational& a, const Rational& b, const Rational& c, const BallReal& z,
                          mpfr_prec_t prec_hint = 0) {
    if (c.get_den() == 1 && c <= 0) throw std::domain_error("gauss_2f1: c at a pole");
    mpfr_prec_t prec = prec_hint ? prec_hint : z.precision_bits();
    BallReal zu = z.abs_upper();
    if (!(BallReal(1, prec) - zu).definitely_positive())
        throw std::domain_error("gauss_2f1: |z| must be < 1");
    const long tiny_exp = -(static_cast<long>(prec) + 16);

    BallReal sum(1, prec);
    BallReal term(1, prec);
    double zu_d = zu.mid_d();
    for (long k = 0;; ++k) {
        Rational ratio = (a + k) * (b + k) / ((c + k) * Rational(k + 1));
        term = term * BallReal(ratio, prec) * z;
        sum = sum + term;
        // geometric tail once the step ratio bound falls below 1
        if (k >= 8) {
            double rho = zu_d * (1.0 + std::abs(a.get_d()) / k) * (1.0 + std::abs(b.get_d()) / k);
            double cg = c.get_d() + k;
            if (cg < k + 1) rho *= (k + 1.0) / cg;
            if (rho < 0.9) {
                BallReal tu = term.abs_upper();
                long se = mpfr_zero_p(sum.mid()) ? 0 : mpfr_get_exp(sum.mid());
                if (mpfr_zero_p(tu.mid()) || mpfr_get_exp(tu.mid()) < se + tiny_exp) {
                    BallReal tail = tu * BallReal(Rational(9, 10), prec) /
                                    (BallReal(1, prec) - BallReal(Rational(9, 10), prec));
                    sum.add_error(tail);
                    return sum;
                }
            }
        }
        if (k > 200000) throw quad::QuadratureError("gauss_2f1: series did not converge");
    }
}

// ---------------------------------------------------------------------------
// 2F1(a, b; a+b-m; z) for w = 1-z small, integer m >= 0, a and b integers or
// half-integers: Euler transform to F(a-m, b-m; a+b-m; z) = w^m F(a,b;..),
// then the logarithmic expansion around z = 1.

namespace detail {

struct QLog2 {  // q + l * log(2)
    Rational q;
    long log2_coeff;
};

// psi(x) + Euler gamma, for x a positive integer or half-integer
inline QLog2 psi_plus_gamma(const Rational& x) {
    if (x.get_den() == 1) {
        long n = static_cast<long>(x.get_num().get_si());
        Rational h(0);
        for (long j = 1; j < n; ++j) h += Rational(1, j);
        return {h, 0};
    }
    // x = n + 1/2
    Rational t = x - Rational(1, 2);
    long n = static_cast<long>(t.get_num().get_si());
    Rational h(0);
    for (long j = 1; j <= n; ++j) h += Rational(2, 2 * j - 1);
    return {h, -2};
}

// Gamma-product ratio Gamma(n1)Gamma(n2)/(Gamma(d1)Gamma(d2)) as rational * pi^(p/2)
struct RatPiHalf {
    Rational coeff;
    long pi_half_power;
};

inline RatPiHalf gamma_ratio(const Rational& n1, const Rational& n2, const Rational& d1,
                             const Rational& d2) {
    auto g = [](const Rational& s) {
        Rational two_s = s * 2;
        return gamma_half_units(static_cast<long>(two_s.get_num().get_si()));
    };
    GammaExact a = g(n1), b = g(n2), c = g(d1), d = g(d2);
    return {a.coeff * b.coeff / (c.coeff * d.coeff),
            a.sqrt_pi_power + b.sqrt_pi_power - c.sqrt_pi_power - d.sqrt_pi_power};
}

inline BallReal eval_rat_pi_half(const RatPiHalf& r, mpfr_prec_t prec) {
    BallReal v(r.coeff, prec);
    if (r.pi_half_power != 0) {
        BallReal sp = sqrt(BallReal::pi(prec));
        v = v * pow_si(sp, r.pi_half_power);
    }
    return v;
}

}  // namespace detail

// F(a,b; a+b-m; z) evaluated from w = 1-z (0 < w <= 1/2 recommended); exact for
// integer/half-integer a,b with a-m >= 1/2, b-m >= 1/2.
inline BallReal hyp2f1_near_one(const Rational& a, const Rational& b, long m, const BallReal& w,
                                mpfr_prec_t prec_hint = 0) {
    using detail::QLog2;
    mpfr_prec_t prec = prec_hint ? prec_hint : w.precision_bits();
    if (!w.definitely_positive()) throw std::domain_error("hyp2f1_near_one: w must be positive");
    const long tiny_exp = -(static_cast<long>(prec) + 16);
    Rational c = a + b - m;
    Rational A = a - m, B = b - m;

    BallReal logw = log(w);
    BallReal log2 = log(BallReal(2, prec));

    // finite part: Gamma(m)Gamma(c)/(Gamma(a)Gamma(b)) sum_{k<m} (A)_k(B)_k/(k!(1-m)_k) w^k
    BallReal s1(prec);
    if (m > 0) {
        detail::RatPiHalf pref = detail::gamma_ratio(Rational(m), c, a, b);
        Rational coef(1);
        BallReal wp(1, prec);
        for (long k = 0; k < m; ++k) {
            if (k > 0) {
                coef *= (A + (k - 1)) * (B + (k - 1)) / (Rational(k) * Rational(1 - m + (k - 1)));
                wp = wp * w;
            }
            s1 = s1 + BallReal(coef, prec) * wp;
        }
        s1 = s1 * detail::eval_rat_pi_half(pref, prec);
    }

    // log series: (-1)^m Gamma(c)/(Gamma(A)Gamma(B)) sum_k (a)_k(b)_k/(k!(k+m)!) w^{k+m} *
    //             [log w - psi(k+1) - psi(k+m+1) + psi(a+k) + psi(b+k)]
    detail::RatPiHalf pref2 = detail::gamma_ratio(c, Rational(1), A, B);
    if (m % 2 != 0) pref2.coeff = -pref2.coeff;
    BallReal pref2_ball = detail::eval_rat_pi_half(pref2, prec);

    BallReal s2(prec);
    Rational poch = Rational(1) / Rational(factorial(m));  // (a)_k (b)_k / (k! (k+m)!)
    BallReal wp = pow_si(w, m);
    QLog2 psi_k1 = detail::psi_plus_gamma(Rational(1));
    QLog2 psi_km1 = detail::psi_plus_gamma(Rational(m + 1));
    QLog2 psi_ak = detail::psi_plus_gamma(a);
    QLog2 psi_bk = detail::psi_plus_gamma(b);
    // the bracket log w + q_k has q_k >= 0 decreasing (a,b >= m+1), so its magnitude
    // never exceeds |log w| + q_0 + 2|l2 log 2|
    BallReal bracket_sup(prec);
    for (long k = 0;; ++k) {
        Rational q = -psi_k1.q - psi_km1.q + psi_ak.q + psi_bk.q;
        long l2 = -psi_k1.log2_coeff - psi_km1.log2_coeff + psi_ak.log2_coeff + psi_bk.log2_coeff;
        BallReal bracket = logw + BallReal(q, prec);
        if (l2 != 0) bracket = bracket + BallReal(l2, prec) * log2;
        if (k == 0)
            bracket_sup = logw.abs_upper() + BallReal(q, prec).abs_upper() +
                          (BallReal(2 * (l2 < 0 ? -l2 : l2), prec) * log2).abs_upper();
        BallReal pw = BallReal(poch, prec) * wp;
        s2 = s2 + pw * bracket;
        // geometric tail on poch * w^k with the bracket supremum as coefficient bound;
        // the step ratio (a+k)(b+k)w/((k+1)(k+m+1)) decreases since a,b >= m+1
        BallReal pw_mag = pw.abs_upper();
        long se = mpfr_zero_p(s2.mid()) ? (mpfr_zero_p(s1.mid()) ? 0 : mpfr_get_exp(s1.mid()))
                                        : mpfr_get_exp(s2.mid());
        BallReal tail_probe = pw_mag * bracket_sup;
        if (k >= 4 && (mpfr_zero_p(tail_probe.mid()) || mpfr_get_exp(tail_probe.mid()) < se + tiny_exp)) {
            BallReal r =
                w.abs_upper() * BallReal((a + k) * (b + k) / (Rational(k + 1) * Rational(k + m + 1)), prec);
            if ((BallReal(1, prec) - r).definitely_positive()) {
                BallReal tail = pw_mag * bracket_sup * r / (BallReal(1, prec) - r);
                s2.add_error(tail);
                break;
            }
        }
        poch *= (a + k) * (b + k) / (Rational(k + 1) * Rational(k + m + 1));
        wp = wp * w;
        psi_k1.q += Rational(1, k + 1);
        psi_km1.q += Rational(1, k + m + 1);
        // psi(x+1) = psi(x) + 1/x
        psi_ak.q += Rational(1) / (a + k);
        psi_bk.q += Rational(1) / (b + k);
        if (k > 200000) throw quad::QuadratureError("hyp2f1_near_one: series did not converge");
    }

    return (s1 - pref2_ball * s2) * pow_si(w, -m);
}

// ---------------------------------------------------------------------------
// zeta(z; alpha, beta) = int_0^inf (1+x)^(alpha-1) x^(beta-1) e^{-zx} dx  and
// omega(z; alpha, beta) = z^beta Gamma(beta)^{-1} zeta(z; alpha, beta),
// with the degenerate values omega(.; alpha, 0) = omega(.; 1, beta) = 1 and
// omega(z; alpha, beta) = omega(z; 1-beta, 1-alpha) used for beta <= 0.

inline BallReal zeta_integral(const BallReal& z, const Rational& alpha, const Rational& beta,
                              mpfr_prec_t prec) {
    if (!(beta > 0)) throw std::domain_error("zeta_integral: beta must be > 0");
    auto f = [&](const BallReal& x, const BallReal&) -> BallReal {
        BallReal one_plus = BallReal(1, prec) + x;
        BallReal a_part = (alpha == 1) ? BallReal(1, prec) : exp(BallReal(alpha - 1, prec) * log(one_plus));
        BallReal b_part = (beta == 1) ? BallReal(1, prec) : exp(BallReal(beta - 1, prec) * log(x));
        return a_part * b_part * exp(-(z * x));
    };
    return quad::integrate(f, quad::Domain::ZeroInf, prec);
}

inline BallReal omega(const BallReal& z, const Rational& alpha, const Rational& beta, mpfr_prec_t prec) {
    if (beta == 0) return BallReal(1, prec);
    if (alpha == 1) return BallReal(1, prec);
    if (beta < 0) {
        // reflection; requires 1 - alpha > 0 for convergence of the reflected integral
        if (!(alpha < 1)) throw std::domain_error("omega: divergent parameter regime");
        return omega(z, Rational(1) - beta, Rational(1) - alpha, prec);
    }
    BallReal zb = exp(BallReal(beta, prec) * log(z));
    return zb / gamma_rational(beta, prec) * zeta_integral(z, alpha, beta, prec);
}

// ---------------------------------------------------------------------------
// int_0^inf r^alpha K_beta(4 pi r) e^{-c pi r^2} dr/r
//   = (1/4) Gamma((alpha-beta)/2) Gamma((alpha+beta)/2) (2 pi)^{-alpha}
//     * omega(4 pi / c; (beta-alpha)/2 + 1, (alpha+beta)/2)

inline BallReal bessel_gauss_mellin(long alpha, long beta, const Rational& c, mpfr_prec_t prec) {
    long abeta = beta < 0 ? -beta : beta;
    if (alpha <= abeta) throw std::domain_error("bessel_gauss_mellin: requires alpha > |beta|");
    if (!(c > 0)) throw std::domain_error("bessel_gauss_mellin: requires c > 0");
    Rational g1(alpha - beta, 2), g2(alpha + beta, 2);
    g1.canonicalize();
    g2.canonicalize();
    BallReal z = BallReal::pi(prec) * BallReal(Rational(4) / c, prec);
    BallReal om = omega(z, (Rational(beta - alpha) / 2) + 1, g2, prec);
    BallReal two_pi_pow = exp(BallReal(-alpha, prec) * log(BallReal::pi(prec) * 2));
    return gamma_rational(g1, prec) * gamma_rational(g2, prec) / 4 * two_pi_pow * om;
}

// ---------------------------------------------------------------------------
// Weber-Schafheitlin closed form:
// int_0^inf t^rho K_mu(4 pi t) K_nu(4 pi a t) dt/t
//   = 2^{rho-3} (4 pi)^{-rho} a^nu Gamma(rho)^{-1}
//     Gamma((rho+mu+nu)/2) Gamma((rho-mu+nu)/2) Gamma((rho+mu-nu)/2) Gamma((rho-mu-nu)/2)
//     * 2F1((rho+mu+nu)/2, (rho-mu+nu)/2; rho; 1-a^2)
// The hypergeometric argument 1-a^2 is taken from the exact complement 1-a when supplied.

inline BallReal bessel_pair_mellin(long rho, long mu, long nu, const BallReal& a, mpfr_prec_t prec,
                                   const BallReal* one_minus_a = nullptr) {
    mu = mu < 0 ? -mu : mu;
    nu = nu < 0 ? -nu : nu;
    if (rho <= mu + nu) throw std::domain_error("bessel_pair_mellin: requires rho > |mu| + |nu|");
    if (!a.definitely_positive()) throw std::domain_error("bessel_pair_mellin: a must be > 0");

    Rational pa(rho + mu + nu, 2), pb(rho - mu + nu, 2), pc(rho + mu - nu, 2), pd(rho - mu - nu, 2);
    for (Rational* r : {&pa, &pb, &pc, &pd}) r->canonicalize();

    BallReal w = one_minus_a ? (*one_minus_a) * (BallReal(1, prec) + a)  // 1 - a^2 = (1-a)(1+a)
                             : (BallReal(1, prec) - a) * (BallReal(1, prec) + a);
    BallReal F(prec);
    bool w_zero = mpfr_zero_p(w.mid()) && mpfr_zero_p(w.rad());
    if (w_zero) {
        F = BallReal(1, prec);
    } else if (!(w - BallReal(Rational(1, 2), prec)).definitely_negative()) {
        // z = 1 - a^2 close to 1: logarithmic expansion in the complement a^2,
        // with m = (pa + pb) - rho = nu
        F = hyp2f1_near_one(pa, pb, nu, a * a, prec);
    } else {
        F = gauss_2f1(pa, pb, Rational(rho), w, prec);
    }

    BallReal pref = pow_si(BallReal(2, prec), rho - 3);
    BallReal fourpi = BallReal::pi(prec) * 4;
    pref = pref * pow_si(fourpi, -rho);
    pref = pref * pow_si(a, nu);
    pref = pref / gamma_rational(Rational(rho), prec);
    pref = pref * gamma_rational(pa, prec) * gamma_rational(pb, prec) * gamma_rational(pc, prec) *
           gamma_rational(pd, prec);
    return pref * F;
}

// int_0^inf t^{2n+3} K_k(4 pi t)^2 dt, closed form from the pairing lemma, with a
// cross-check against the Weber-Schafheitlin evaluation at a = 1.
inline BallReal k_bessel_square_mellin(long n, long k, mpfr_prec_t prec, bool cross_check = false) {
    long ak = k < 0 ? -k : k;
    if (n < 0 || n % 2 != 0) throw std::domain_error("k_bessel_square_mellin: n must be even >= 0");
    if (ak > n + 1) throw std::domain_error("k_bessel_square_mellin: |k| <= n+1 required");
    Rational dim(2 * n + 3);
    Rational closed_rat = pow2(-4) / (dim * dim * exact::binomial(2 * n + 2, n + 1)) /
                          exact::binomial(2 * n + 2, n + 1 + ak);
    BallReal value = BallReal(closed_rat, prec) * gamma_c(Rational(2 * n + 4), prec);
    if (cross_check) {
        BallReal ws = bessel_pair_mellin(2 * n + 4, ak, ak, BallReal(1, prec), prec);
        if (!value.overlaps(ws))
            throw std::runtime_error("k_bessel_square_mellin: closed form disagrees with Weber-Schafheitlin");
    }
    return value;
}

}  // namespace arx::special
