#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "arx/bessel_period.hpp"
#include "arx/constant_expr.hpp"
#include "arx/exact.hpp"
#include "arx/poly_ops.hpp"

namespace arx::assembly {

enum class Splitting { Split, Inert, Ramified };

inline std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline long ord_p(long n, long p) {
    long e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

struct ArithmeticContext {
    long n = 0;              // even weight parameter
    long N = 1;              // positive integer with N Z = ideal cap Z
    long Delta_F = 3;        // absolute discriminant of the imaginary quadratic field
    long C = 1;              // conductor integer, condition (CF)
    std::map<long, Splitting> prime_splitting;
    std::map<long, int> eps_p;           // local root numbers, +-1, for p | N
    std::set<long> P_set;                // primes p | N with the level-raising condition
    std::set<long> sigma1;               // finite places in Sigma_1
    int delta_infty = -1;                // running assumption
    std::map<long, int> delta_v;         // finite delta values (default +1)
    std::map<long, int> eps_half;        // epsilon(1/2, pi_v x phi_v) for p | N, +-1
    std::map<long, int> eps_half_inv;    // epsilon(1/2, pi_v x phi_v^{-1}) for p in P, +-1

    long N_F() const { return std::lcm(N, Delta_F); }
    long r_F() const { return static_cast<long>(prime_factors(Delta_F).size()); }
    long r_F2() const { return Delta_F % 2 == 0 ? 1 : 0; }

    Splitting splitting_of(long p) const {
        if (Delta_F % p == 0) return Splitting::Ramified;
        auto it = prime_splitting.find(p);
        if (it == prime_splitting.end())
            throw std::invalid_argument("ArithmeticContext: unknown splitting for prime " +
                                        std::to_string(p));
        return it->second;
    }

    void validate() const {
        if (n < 0 || n % 2 != 0) throw std::invalid_argument("context: n must be even and >= 0");
        if (N <= 0 || Delta_F <= 0 || C <= 0) throw std::invalid_argument("context: N, Delta_F, C > 0");
        for (long p : prime_factors(Delta_F)) {
            auto it = prime_splitting.find(p);
            if (it != prime_splitting.end() && it->second != Splitting::Ramified)
                throw std::invalid_argument("context: prime dividing Delta_F must be ramified");
        }
        for (long p : P_set) {
            if (N % p != 0) throw std::invalid_argument("context: P_set primes must divide N");
            if (splitting_of(p) != Splitting::Split)
                throw std::invalid_argument("context: P_set primes must split");
        }
        if (std::gcd(C, N_F()) != 1) throw std::invalid_argument("context: (CF) requires gcd(C, N_F) = 1");
        for (long p : prime_factors(C)) {
            if (splitting_of(p) != Splitting::Split)
                throw std::invalid_argument("context: (CF) requires primes dividing C to split");
        }
    }
};

// flat key-value context file: one "key = value" per line, '#' comments;
// keys: n, N, Delta_F, C, split, inert, ramified, eps, P, sigma1, delta_inf, eps_half, eps_half_inv
inline ArithmeticContext parse_context(std::istream& in) {
    ArithmeticContext ctx;
    std::string line;
    auto parse_pairs = [](const std::string& v, std::map<long, int>& out) {
        std::istringstream ss(v);
        std::string tok;
        while (ss >> tok) {
            auto p = tok.find(':');
            if (p == std::string::npos) throw std::invalid_argument("context: expected p:+-1, got " + tok);
            out[std::stol(tok.substr(0, p))] = std::stoi(tok.substr(p + 1));
        }
    };
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        auto trim = [](std::string& s) {
            s.erase(0, s.find_first_not_of(" \t\r"));
            s.erase(s.find_last_not_of(" \t\r") + 1);
        };
        trim(key);
        trim(val);
        if (key.empty()) continue;
        std::istringstream vs(val);
        if (key == "n") vs >> ctx.n;
        else if (key == "N") vs >> ctx.N;
        else if (key == "Delta_F") vs >> ctx.Delta_F;
        else if (key == "C") vs >> ctx.C;
        else if (key == "delta_inf") vs >> ctx.delta_infty;
        else if (key == "split" || key == "inert" || key == "ramified") {
            long p;
            Splitting s = key == "split" ? Splitting::Split
                                         : key == "inert" ? Splitting::Inert : Splitting::Ramified;
            while (vs >> p) ctx.prime_splitting[p] = s;
        } else if (key == "P") {
            long p;
            while (vs >> p) ctx.P_set.insert(p);
        } else if (key == "sigma1") {
            long p;
            while (vs >> p) ctx.sigma1.insert(p);
        } else if (key == "eps") parse_pairs(val, ctx.eps_p);
        else if (key == "delta_v") parse_pairs(val, ctx.delta_v);
        else if (key == "eps_half") parse_pairs(val, ctx.eps_half);
        else if (key == "eps_half_inv") parse_pairs(val, ctx.eps_half_inv);
        else throw std::invalid_argument("context: unknown key " + key);
    }
    ctx.validate();
    return ctx;
}

inline ArithmeticContext parse_context_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("context: cannot open " + path);
    return parse_context(f);
}

// beta = #P + 4 r_{F,2} - 2n - 9 - r_F
inline long beta_exponent(const ArithmeticContext& ctx) {
    return static_cast<long>(ctx.P_set.size()) + 4 * ctx.r_F2() - 2 * ctx.n - 9 - ctx.r_F();
}

// 2^beta N_F Delta^{-3} L(1,As+) prod_{p|N}(1+eps_p) prod_{p|Delta}(1+p^{-1})
inline ConstantExpr inner_product_constant(const ArithmeticContext& ctx) {
    if (std::gcd(ctx.N, ctx.Delta_F) != 1)
        throw std::invalid_argument("inner_product_constant: requires gcd(N, Delta_F) = 1");
    Rational r = pow2(beta_exponent(ctx)) * Rational(ctx.N_F()) /
                 pow_rational(Rational(ctx.Delta_F), 3);
    for (long p : prime_factors(ctx.N)) {
        auto it = ctx.eps_p.find(p);
        if (it == ctx.eps_p.end())
            throw std::invalid_argument("inner_product_constant: missing eps_p for p = " +
                                        std::to_string(p));
        r *= Rational(1 + it->second);
    }
    for (long p : prime_factors(ctx.Delta_F)) r *= Rational(1) + Rational(1, p);
    ConstantExpr e{GaussianRational(r)};
    if (e.is_zero()) return e;
    e.placeholders["L_As_plus"] = 1;
    return e;
}

// (-1)^{n/2} vol(U_{N,1}) (2n+3) 2^{#P} / (2^{n+9} (n+1) N_F^2 Delta^3 2^{-4 r_{F,2}})
//   * L(1,As+)/(zeta(2)zeta(4)) * [zeta_{N_F}(4)/zeta_{N_F}(1)] * prod(1+eps_p) prod(1+p^{-1})
inline ConstantExpr adelic_inner_product_constant(const ArithmeticContext& ctx) {
    Rational r = Rational(2 * ctx.n + 3) * pow2(static_cast<long>(ctx.P_set.size())) /
                 (pow2(ctx.n + 9) * Rational(ctx.n + 1) * Rational(ctx.N_F()) * Rational(ctx.N_F()) *
                  pow_rational(Rational(ctx.Delta_F), 3) * pow2(-4 * ctx.r_F2()));
    if ((ctx.n / 2) % 2 != 0) r = -r;
    for (long p : prime_factors(ctx.N)) {
        auto it = ctx.eps_p.find(p);
        if (it == ctx.eps_p.end())
            throw std::invalid_argument("adelic_inner_product_constant: missing eps_p for p = " +
                                        std::to_string(p));
        r *= Rational(1 + it->second);
    }
    for (long p : prime_factors(ctx.Delta_F)) r *= Rational(1) + Rational(1, p);
    ConstantExpr e{GaussianRational(r)};
    if (e.is_zero()) return e;
    e.placeholders["vol_UN1"] = 1;
    e.placeholders["L_As_plus"] = 1;
    e.placeholders["zeta2_zeta4"] = -1;
    e.placeholders["zeta_NF_4_over_zeta_NF_1"] = 1;
    return e;
}

// local inner-product factor at a finite place
inline ConstantExpr nonarch_inner_factor(const ArithmeticContext& ctx, long p) {
    std::string ps = std::to_string(p);
    Splitting s = ctx.splitting_of(p);
    ConstantExpr e(1);
    e.placeholders["vol_UN1_" + ps] = 1;
    if (s == Splitting::Ramified) {
        // vol * |2^{-4} Delta^3|_p (1 + p^{-1}) L(1,As+_p)/(zeta_p(1) zeta_p(2))
        long o = 3 * ord_p(ctx.Delta_F, p) + (p == 2 ? -4 : 0);
        Rational abs_v = pow_rational(Rational(p), -o);
        e.coeff = GaussianRational(abs_v * (Rational(1) + Rational(1, p)));
        e.placeholders["L_As_zeta12_" + ps] = 1;
        return e;
    }
    // unramified: vol * L/(zeta_p(2) zeta_p(4)) * {1  or  p^{-2}(1+eps_p)}
    e.placeholders["L_As_zeta24_" + ps] = 1;
    if (ctx.N % p == 0) {
        auto it = ctx.eps_p.find(p);
        if (it == ctx.eps_p.end())
            throw std::invalid_argument("nonarch_inner_factor: missing eps_p for p = " + ps);
        e.coeff = GaussianRational(Rational(1 + it->second, p * p));
        e.normalize();
    }
    return e;
}

// e(pi, phi, delta) = 2^{-#Sigma_1}(1-delta(inf)) prod_{v in Sigma_1}(1+delta(v))
//   * prod_{p|N}(1+eps(1/2, pi_p x phi_p)) * prod_{p in P}(1+eps(1/2, pi_p x phi_p^{-1}))
inline Rational e_factor(const ArithmeticContext& ctx) {
    Rational e = pow2(-static_cast<long>(ctx.sigma1.size())) * Rational(1 - ctx.delta_infty);
    for (long v : ctx.sigma1) {
        int dv = 1;
        if (auto it = ctx.delta_v.find(v); it != ctx.delta_v.end()) dv = it->second;
        e *= Rational(1 + dv);
    }
    for (long p : prime_factors(ctx.N)) {
        auto it = ctx.eps_half.find(p);
        if (it == ctx.eps_half.end())
            throw std::invalid_argument("e_factor: missing eps_half for p = " + std::to_string(p));
        e *= Rational(1 + it->second);
    }
    for (long p : ctx.P_set) {
        auto it = ctx.eps_half_inv.find(p);
        if (it == ctx.eps_half_inv.end())
            throw std::invalid_argument("e_factor: missing eps_half_inv for p = " + std::to_string(p));
        e *= Rational(1 + it->second);
    }
    return e;
}

struct BesselFormula {
    ConstantExpr prefactor;   // vol * e^{-4pi} * (-i) * 2^{-1} * C^{-2}
    Rational e_factor;        // the delta/epsilon product, exact
    ConstantExpr full;        // prefactor * e * L(1/2) * prod eps(0, phi_v^{-1})
    poly::BiHom polynomial;   // (-1)^{n/2} binom(n, n/2) (X^2+Y^2)^{n/2}
};

inline BesselFormula bessel_formula_constant(const ArithmeticContext& ctx) {
    ctx.validate();
    BesselFormula out;
    ConstantExpr pref{GaussianRational(Rational(0), Rational(-1, 2)) *
                      GaussianRational(Rational(1, ctx.C * ctx.C))};
    pref.placeholders["vol_UN1"] = 1;
    pref.placeholders["exp(-4pi)"] = 1;
    out.prefactor = pref;
    out.e_factor = e_factor(ctx);
    ConstantExpr full = pref * ConstantExpr{GaussianRational(out.e_factor)};
    if (!full.is_zero()) {
        full.placeholders["L_half"] = 1;
        for (long p : prime_factors(ctx.C)) full.placeholders["eps0_inv_" + std::to_string(p)] = 1;
    }
    out.full = full;
    auto thm = bessel::theorem_bessel_polynomial(ctx.n);
    if (!thm.equal) throw std::logic_error("bessel_formula_constant: polynomial identity failed");
    out.polynomial = thm.closed;
    return out;
}

// 2^{-3} i Delta^{(n+2)/2} [unit index] C^{n+2} / #Cl^a_F(C), with the index and class
// number as placeholders; also re-derives the 2^n pairing factor via the exact pairing.
struct FourierBesselConstant {
    ConstantExpr prefactor;
    Rational pairing_factor;  // = 2^n, from the exact polynomial pairing
};

inline FourierBesselConstant fourier_bessel_constant(const ArithmeticContext& ctx) {
    FourierBesselConstant out;
    Rational delta_pow = pow_rational(Rational(ctx.Delta_F), (ctx.n + 2) / 2);
    ConstantExpr e{GaussianRational(Rational(0), Rational(1, 8)) *
                   GaussianRational(delta_pow * pow_rational(Rational(ctx.C), ctx.n + 2))};
    e.placeholders["unit_index_C"] = 1;
    e.placeholders["Cl_a_F_C"] = -1;
    out.prefactor = e;
    out.pairing_factor = exact::hermitian_square_norm(ctx.n);
    return out;
}

// classical normalization chain applied to the adelic constant: multiplies by
// zeta(2)zeta(4), (n+1) i^{-n}, N_F^3 prod (1-p^{-4})/(1-p^{-1}), 2^{-r_F}, divides by
// vol(U_{N,1}), and replaces the zeta_{N_F} placeholder by its local-Euler-product value.
inline ConstantExpr classical_from_adelic(const ArithmeticContext& ctx) {
    ConstantExpr a = adelic_inner_product_constant(ctx);
    if (a.is_zero()) return a;
    // remove the placeholders the chain cancels
    a.placeholders.erase("zeta2_zeta4");
    a.placeholders.erase("vol_UN1");
    a.placeholders.erase("zeta_NF_4_over_zeta_NF_1");
    Rational chain = Rational(ctx.n + 1) * pow2(-ctx.r_F()) * pow_rational(Rational(ctx.N_F()), 3);
    for (long p : prime_factors(ctx.N_F())) {
        Rational z4 = Rational(1) - pow_rational(Rational(p), -4);
        Rational z1 = Rational(1) - pow_rational(Rational(p), -1);
        chain *= z4 / z1;  // index factor
        chain *= z1 / z4;  // zeta_{N_F}(4)/zeta_{N_F}(1) as the local Euler products
    }
    a.coeff *= GaussianRational::i_pow(-ctx.n) * GaussianRational(chain);
    a.normalize();
    return a;
}

}  // namespace arx::assembly
