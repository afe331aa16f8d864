#pragma once

#include <chrono>
#include <map>
#include <vector>

#include "arx/constant_expr.hpp"
#include "arx/gaussian_moments.hpp"
#include "arx/poly_ops.hpp"
#include "arx/report.hpp"
#include "arx/special.hpp"

namespace arx::inprod {

using poly::BiHom;
using poly::GR;

// Conjecture value: (-1)^{n/2} 2^{-4n-8} (n+1)!^2 n! pi^{-3n-6}
inline ConstantExpr conjectured_In(long n) {
    if (n < 0 || n % 2 != 0) throw std::domain_error("conjectured_In: n must be even and >= 0");
    Rational r = pow2(-4 * n - 8) * Rational(factorial(n + 1) * factorial(n + 1) * factorial(n));
    if ((n / 2) % 2 != 0) r = -r;
    ConstantExpr e{GaussianRational(r)};
    e.pi_pow = -3 * n - 6;
    return e;
}

// C_infty = 2^{-4} dim^2 binom(2n+2, n+1) / Gamma_C(2n+4), dim = 2n+3; exact rational * pi^(2n+4)
inline ConstantExpr pairB0_constant(long n) {
    if (n < 0 || n % 2 != 0) throw std::domain_error("pairB0_constant: n must be even and >= 0");
    Rational dim(2 * n + 3);
    // Gamma_C(2n+4) = 2 (2pi)^{-(2n+4)} (2n+3)!
    Rational r = pow2(-4) * dim * dim * exact::binomial(2 * n + 2, n + 1) * pow2(2 * n + 4) /
                 (Rational(2) * Rational(factorial(2 * n + 3)));
    ConstantExpr e{GaussianRational(r)};
    e.pi_pow = 2 * n + 4;
    return e;
}

// Z_infty two ways: the Gamma-ratio route of the archimedean-integral lemma, and
// pi/2 * C_infty * I_n with the conjectured I_n. Returns the (asserted equal) value.
struct ZInftyResult {
    ConstantExpr via_gamma;
    ConstantExpr via_C_infty_In;
    bool equal = false;
};

inline ZInftyResult z_infty(long n) {
    if (n < 0 || n % 2 != 0) throw std::domain_error("z_infty: n must be even and >= 0");
    // (-1)^{n/2} 2^{-n-9} (2n+3)/(n+1) * L(1, As+(pi_inf)) / (Gamma_R(2) Gamma_R(4)),
    // L(1, As+(pi_inf)) = Gamma_C(n+2) Gamma_R(2)^2
    ConstantExpr g;
    {
        Rational r = pow2(-n - 9) * Rational(2 * n + 3) / Rational(n + 1);
        if ((n / 2) % 2 != 0) r = -r;
        // Gamma_C(n+2) = 2 (2pi)^{-(n+2)} (n+1)! ; Gamma_R(2)/Gamma_R(4) = pi
        r *= Rational(2) * pow2(-n - 2) * Rational(factorial(n + 1));
        g = ConstantExpr{GaussianRational(r)};
        g.pi_pow = -(n + 2) + 1;
    }
    ConstantExpr c = ConstantExpr{GaussianRational(Rational(1, 2))} * ConstantExpr::pi_power(1) *
                     pairB0_constant(n) * conjectured_In(n);
    ZInftyResult res{g, c, g == c};
    return res;
}

// B^0_{sigma_infty}(W^i, W^j) assembled from the Schur-orthogonality diagonal form and
// the K-Bessel square Mellin integrals; compared against delta_ij binom(2n+2, n+1+i)^{-1}.
inline VerificationReport verify_pairB0(long n, long i, long j, mpfr_prec_t prec) {
    auto t0 = std::chrono::steady_clock::now();
    if (n < 0 || n % 2 != 0) throw std::domain_error("verify_pairB0: n must be even and >= 0");
    if (std::abs(i) > n + 1 || std::abs(j) > n + 1)
        throw std::domain_error("verify_pairB0: |i|, |j| <= n+1 required");
    VerificationReport r;
    r.task_id = "pairb0/n" + std::to_string(n) + "/i" + std::to_string(i) + "/j" + std::to_string(j);
    r.paper_anchor = "pairing normalization (diagonal Whittaker norm)";
    r.precision_bits = prec;

    BallReal value(prec);
    if (i == j) {
        BallReal ksum(prec);
        for (long k = -(n + 1); k <= n + 1; ++k) {
            BallReal ksm = special::k_bessel_square_mellin(n, k, prec);
            ksum = ksum + BallReal(exact::binomial(2 * n + 2, n + 1 + k), prec) * ksm;
        }
        BallReal c_inf = pairB0_constant(n).eval(prec).re;
        value = c_inf * ksum * pow2(8) / (Rational(2 * n + 3) * exact::binomial(2 * n + 2, n + 1 + i));
    }
    Rational expected = (i == j) ? Rational(1) / exact::binomial(2 * n + 2, n + 1 + i) : Rational(0);

    BallReal diff = (value - BallReal(expected, prec)).abs_upper();
    r.computed = value.to_string(30);
    r.expected = expected.get_str();
    r.abs_error = diff.mid_d();
    r.rel_error = expected == 0 ? r.abs_error : (diff / BallReal(expected, prec)).abs_upper().mid_d();
    if (i == j) {
        r.tolerance = "rel <= 1e-15";
        r.status = (value.contains(expected) && r.rel_error < 1e-15) ? "pass" : "fail";
    } else {
        r.tolerance = "abs < 1e-20";
        r.status = r.abs_error < 1e-20 ? "pass" : "fail";
    }
    r.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    return r;
}

// ---------------------------------------------------------------------------
// The semi-analytic I_n pipeline.

namespace detail {

// exact function of a: sum of coeff * a^a_pow * (1+a^2)^opa2_pow * pi^pi_pow
struct ATermKey {
    long a_pow;
    long opa2_pow;
    long pi_pow;
    auto operator<=>(const ATermKey&) const = default;
};
using AExpr = std::map<ATermKey, GaussianRational>;

inline void aexpr_add(AExpr& e, const ATermKey& k, const GaussianRational& c) {
    auto it = e.find(k);
    if (it == e.end()) {
        if (!c.is_zero()) e.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) e.erase(it);
    }
}

// Laurent polynomial in a over the Gaussian rationals
using Laurent = std::map<long, GR>;

inline Laurent laurent_mul(const Laurent& x, const Laurent& y) {
    Laurent out;
    for (const auto& [ea, ca] : x)
        for (const auto& [eb, cb] : y) {
            GR c = ca * cb;
            if (c.is_zero()) continue;
            auto it = out.find(ea + eb);
            if (it == out.end())
                out.emplace(ea + eb, c);
            else {
                it->second += c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

// scalar polynomial in the eight pipeline coordinates with Laurent-in-a coefficients;
// coordinate order (u1, v1, q1, r1, u2, v2, q2, r2)
using Pipe8 = std::map<std::array<int, 8>, Laurent>;

// transform a u_j-coefficient polynomial in (t1,x1,y1,t2,x2,y2) to the pipeline
// coordinates; scaled: t_k -> (q_k/a + a r_k)/2, otherwise t_k -> (q_k + r_k)/2
inline Pipe8 to_pipeline(const poly::CoordPoly& p, bool scaled, bool conjugate) {
    Pipe8 out;
    for (const auto& [e, c0] : p.terms()) {
        GR c = conjugate ? c0.conj() : c0;
        // e = (t1, x1, y1, t2, x2, y2)
        long et[2] = {e[0], e[3]};
        // expand both t powers
        for (long i1 = 0; i1 <= et[0]; ++i1) {
            for (long i2 = 0; i2 <= et[1]; ++i2) {
                Rational bin = exact::binomial(et[0], i1) * exact::binomial(et[1], i2) /
                               (pow2(et[0]) * pow2(et[1]));
                std::array<int, 8> k{};
                k[0] = e[1];                    // u1 <- x1
                k[1] = e[2];                    // v1 <- y1
                k[2] = static_cast<int>(i1);    // q1
                k[3] = static_cast<int>(et[0] - i1);  // r1
                k[4] = e[4];
                k[5] = e[5];
                k[6] = static_cast<int>(i2);
                k[7] = static_cast<int>(et[1] - i2);
                long apow = scaled ? (et[0] - 2 * i1) + (et[1] - 2 * i2) : 0;
                GR coeff = GR(bin) * c;
                auto& lau = out[k];
                auto it = lau.find(apow);
                if (it == lau.end())
                    lau.emplace(apow, coeff);
                else {
                    it->second += coeff;
                    if (it->second.is_zero()) lau.erase(it);
                }
            }
        }
    }
    // prune empty laurents
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.empty())
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

// Gaussian x-reduction of a monomial product: returns zero ATerm contribution unless all
// coordinate exponents are even. u,v carry variance 4; q carries (1+a^2)/a^2; r carries 1+a^2.
inline bool reduce_monomial(const std::array<int, 8>& k, Rational& coeff_out, long& a_pow_out,
                            long& opa2_pow_out, long& pi_pow_out) {
    for (int e : k)
        if (e % 2 != 0) return false;
    Rational c(1);
    long pi_pow = 0;
    // u, v coordinates (indices 0,1,4,5): (e-1)!! 2^{-3e/2 - 1} pi^{-e/2}
    for (int idx : {0, 1, 4, 5}) {
        long e = k[idx];
        c *= Rational(double_factorial(e - 1)) * pow2(-3 * e / 2 - 1);
        pi_pow -= e / 2;
    }
    // q, r pairs: (kq-1)!!(kr-1)!! 2^{-(kq+kr)/2} pi^{-(kq+kr)/2} a^{kq+1} (1+a^2)^{-(kq+kr)/2-1}
    long a_pow = 0, opa2 = 0;
    for (int base : {2, 6}) {
        long kq = k[base], kr = k[base + 1];
        c *= Rational(double_factorial(kq - 1) * double_factorial(kr - 1)) * pow2(-(kq + kr) / 2);
        pi_pow -= (kq + kr) / 2;
        a_pow += kq + 1;
        opa2 -= (kq + kr) / 2 + 1;
    }
    coeff_out = c;
    a_pow_out = a_pow;
    opa2_pow_out = opa2;
    pi_pow_out = pi_pow;
    return true;
}

}  // namespace detail

struct InResult {
    long n = 0;
    BallReal computed;
    ConstantExpr conjectured;
    BallReal conjectured_value;
    double rel_error = 0.0;
    std::string method;  // "semianalytic" | "appendix_path"
    bool enclosure_contains_conjectured = false;

    InResult() : computed(64), conjectured_value(64) {}
};

// Full semi-analytic evaluation of I_n:
//  (1) expand the paired test functions symbolically per (alpha, j, j'),
//  (2) eliminate the X_infty integral by exact Gaussian moments (a-dependent variances),
//  (3) eliminate the t integral by the Weber-Schafheitlin closed form,
//  (4) integrate the remaining function of a over (0,1) by tanh-sinh quadrature.
inline InResult compute_In(long n, mpfr_prec_t prec) {
    if (n < 0 || n % 2 != 0) throw std::domain_error("compute_In: n must be even and >= 0");
    if (n > 8) throw std::domain_error("compute_In: n <= 8 supported");

    // exact phase: accumulate per (|j'|,|j|) pair after folding signs; coefficients must
    // come out real, which is asserted below
    std::map<std::pair<long, long>, detail::AExpr> merged;

    for (long alpha = 0; alpha <= n; ++alpha) {
        auto P_s = poly::build_P_alpha(n, alpha);
        auto P_u = poly::build_P_alpha(n, n - alpha);
        // u_j coefficients as scalar coordinate polynomials
        std::map<long, poly::CoordPoly> su, uu;
        for (long j = -(n + 1); j <= n + 1; ++j) {
            poly::CoordPoly cj(poly::coord_vars()), cu(poly::coord_vars());
            for (const auto& [e, v] : P_s.terms())
                if (!ring_is_zero(v.at(n + 1 + j))) cj.add_term(e, v.at(n + 1 + j));
            for (const auto& [e, v] : P_u.terms())
                if (!ring_is_zero(v.at(n + 1 + j))) cu.add_term(e, v.at(n + 1 + j));
            if (!cj.is_zero()) su.emplace(j, std::move(cj));
            if (!cu.is_zero()) uu.emplace(j, std::move(cu));
        }
        Rational a_sign = exact::binomial(n, alpha);
        if (alpha % 2 != 0) a_sign = -a_sign;

        for (const auto& [j, cj] : su) {
            detail::Pipe8 pj = detail::to_pipeline(cj, /*scaled=*/true, /*conjugate=*/false);
            for (const auto& [jp, cjp] : uu) {
                if ((j + jp) % 2 != 0) continue;
                detail::Pipe8 pjp = detail::to_pipeline(cjp, /*scaled=*/false, /*conjugate=*/true);
                // i^{j-j'} 2^8 (-1)^alpha binom(n,alpha) a^{n+2}
                GR weight = GR::i_pow(j - jp) * GR(Rational(256) * a_sign);
                detail::AExpr& acc = merged[{std::labs(jp), std::labs(j)}];
                for (const auto& [ka, la] : pj) {
                    for (const auto& [kb, lb] : pjp) {
                        std::array<int, 8> k{};
                        for (int t = 0; t < 8; ++t) k[t] = ka[t] + kb[t];
                        Rational mc;
                        long apow, opa2, pipow;
                        if (!detail::reduce_monomial(k, mc, apow, opa2, pipow)) continue;
                        detail::Laurent lc = detail::laurent_mul(la, lb);
                        for (const auto& [ae, c] : lc) {
                            detail::ATermKey key{apow + ae + n + 2, opa2, pipow};
                            detail::aexpr_add(acc, key, weight * GR(mc) * c);
                        }
                    }
                }
            }
        }
    }

    // the merged coefficients are real
    for (auto& [pk, e] : merged) {
        for (auto it = e.begin(); it != e.end();) {
            if (!it->second.is_real())
                throw std::logic_error("compute_In: non-real merged coefficient");
            if (it->second.is_zero())
                it = e.erase(it);
            else
                ++it;
        }
    }

    // numeric phase
    BallReal pi = BallReal::pi(prec);
    auto integrand = [&](const BallReal& a, const BallReal& one_minus_a) -> BallReal {
        std::map<std::pair<long, long>, BallReal> wcache;
        BallReal total(prec);
        for (const auto& [pk, expr] : merged) {
            if (expr.empty()) continue;
            auto wit = wcache.find(pk);
            if (wit == wcache.end()) {
                BallReal W =
                    special::bessel_pair_mellin(2 * n + 4, pk.first, pk.second, a, prec, &one_minus_a);
                wit = wcache.emplace(pk, W).first;
            }
            BallReal opa2 = BallReal(1, prec) + a * a;
            BallReal s(prec);
            for (const auto& [key, c] : expr) {
                BallReal term = BallReal(c.re, prec) * pow_si(a, key.a_pow) *
                                pow_si(opa2, key.opa2_pow) * pow_si(pi, key.pi_pow);
                s = s + term;
            }
            total = total + s * wit->second;
        }
        // measure (a - 1/a)^2 / a = (1-a^2)^2 / a^3, with 1-a^2 = (1-a)(1+a)
        BallReal om2 = one_minus_a * (BallReal(1, prec) + a);
        return total * om2 * om2 * pow_si(a, -3);
    };

    quad::QuadratureTask task;
    task.integrand = integrand;
    task.domain = quad::Domain::ZeroOne;
    task.singularity_hint = quad::SingularityHint::LogEndpoint;
    task.target_precision_bits = prec;
    BallReal value = quad::integrate(task);

    InResult res;
    res.n = n;
    res.method = "semianalytic";
    res.computed = value;
    res.conjectured = conjectured_In(n);
    res.conjectured_value = res.conjectured.eval(prec).re;
    BallReal diff = (value - res.conjectured_value).abs_upper();
    res.rel_error = (diff / res.conjectured_value.abs_lower()).mid_d();
    res.enclosure_contains_conjectured = value.overlaps(res.conjectured_value);
    return res;
}

// The reduced two-term route for n = 0, with the two X_infty-reduced coefficients
// hard-coded from their closed forms:
//   K0K0: a^4 / (2^5 (1+a^2)^2 pi^2),  K1K1: a^5 / (2^4 (1+a^2)^3 pi^2),  overall 2^6.
inline InResult compute_I0_appendix_path(mpfr_prec_t prec) {
    BallReal pi = BallReal::pi(prec);
    auto integrand = [&](const BallReal& a, const BallReal& one_minus_a) -> BallReal {
        BallReal opa2 = BallReal(1, prec) + a * a;
        BallReal pi2 = pi * pi;
        BallReal c00 = pow_si(a, 4) / (BallReal(32, prec) * opa2 * opa2 * pi2);
        BallReal c11 = pow_si(a, 5) / (BallReal(16, prec) * pow_si(opa2, 3) * pi2);
        BallReal w00 = special::bessel_pair_mellin(4, 0, 0, a, prec, &one_minus_a);
        BallReal w11 = special::bessel_pair_mellin(4, 1, 1, a, prec, &one_minus_a);
        BallReal om2 = one_minus_a * (BallReal(1, prec) + a);
        return BallReal(64, prec) * (c00 * w00 + c11 * w11) * om2 * om2 * pow_si(a, -3);
    };
    quad::QuadratureTask task;
    task.integrand = integrand;
    task.domain = quad::Domain::ZeroOne;
    task.singularity_hint = quad::SingularityHint::LogEndpoint;
    task.target_precision_bits = prec;
    BallReal value = quad::integrate(task);

    InResult res;
    res.n = 0;
    res.method = "appendix_path";
    res.computed = value;
    res.conjectured = conjectured_In(0);
    res.conjectured_value = res.conjectured.eval(prec).re;
    BallReal diff = (value - res.conjectured_value).abs_upper();
    res.rel_error = (diff / res.conjectured_value.abs_lower()).mid_d();
    res.enclosure_contains_conjectured = value.overlaps(res.conjectured_value);
    return res;
}

}  // namespace arx::inprod
