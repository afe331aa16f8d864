#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "arx/ball.hpp"
#include "arx/ball_complex.hpp"

namespace arx::quad {

enum class Domain { ZeroOne, ZeroInf, RealLine };
enum class SingularityHint { None, LogEndpoint, PowerEndpoint };

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One node of the transformed trapezoid sum: abscissa, its complement from 1 (exact
// for (0,1), so integrands can use 1-x without cancellation), and the weight.
struct Node {
    BallReal x;
    BallReal one_minus_x;
    BallReal weight;
};

struct QuadratureTask {
    // f(x, 1-x); the second argument is meaningful only on (0,1)
    std::function<BallReal(const BallReal&, const BallReal&)> integrand;
    Domain domain = Domain::ZeroOne;
    SingularityHint singularity_hint = SingularityHint::None;
    mpfr_prec_t target_precision_bits = 128;
    int max_level = 13;
    long max_nodes = 400000;
};

namespace detail {

// abscissa/weight of the double-exponential map at parameter u (u may be negative)
inline Node de_node(Domain dom, const BallReal& u, mpfr_prec_t prec) {
    Node n{BallReal(prec), BallReal(prec), BallReal(prec)};
    BallReal pi = BallReal::pi(prec);
    switch (dom) {
        case Domain::ZeroOne: {
            // x = 1/(1+e^{-pi sinh u}), 1-x = e^{-pi sinh u}/(1+e^{-pi sinh u})
            BallReal s = pi * sinh(u);
            BallReal es = exp(-abs(s));
            BallReal den = BallReal(1, prec) + es;
            BallReal big = BallReal(1, prec) / den;
            BallReal small = es / den;
            bool pos = !s.definitely_negative();
            n.x = pos ? big : small;
            n.one_minus_x = pos ? small : big;
            // dx/du = pi cosh(u) e^{-|s|} / (1+e^{-|s|})^2
            n.weight = pi * cosh(u) * es / (den * den);
            break;
        }
        case Domain::ZeroInf: {
            // x = exp(2 sinh u), dx = 2 cosh(u) x du
            BallReal s = sinh(u);
            n.x = exp(s + s);
            n.one_minus_x = BallReal(prec);
            n.weight = 2 * cosh(u) * n.x;
            break;
        }
        case Domain::RealLine: {
            // x = sinh(2 sinh u), dx = 2 cosh(u) cosh(2 sinh u) du
            BallReal s = sinh(u) * 2;
            n.x = sinh(s);
            n.one_minus_x = BallReal(prec);
            n.weight = 2 * cosh(u) * cosh(s);
            break;
        }
    }
    return n;
}

inline BallReal value_upper(const BallReal& v) { return v.abs_upper(); }
inline BallReal value_upper(const BallComplex& v) { return v.abs_upper(); }

// |midpoint| only, ignoring the carried radius
inline BallReal mid_abs_upper(const BallReal& v) {
    BallReal r(v.precision_bits());
    mpfr_abs(r.mid_mut(), v.mid(), MPFR_RNDU);
    return r;
}
inline BallReal mid_abs_upper(const BallComplex& v) {
    BallReal r(v.precision_bits());
    mpfr_abs(r.mid_mut(), v.re.mid(), MPFR_RNDU);
    mpfr_t t;
    mpfr_init2(t, v.precision_bits());
    mpfr_abs(t, v.im.mid(), MPFR_RNDU);
    mpfr_add(r.mid_mut(), r.mid_mut(), t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

}  // namespace detail

// Node-doubling double-exponential quadrature. The returned ball carries the
// accumulated arithmetic radius plus the last level-doubling difference as the
// discretization/truncation estimate.
template <class V, class F>
V integrate_core(F&& f, Domain dom, mpfr_prec_t prec, int max_level, long max_nodes, V zero) {
    const long tiny_exp = -(static_cast<long>(prec) + 24);
    long nodes_used = 0;

    auto eval_at = [&](const BallReal& u) -> V {
        Node n = detail::de_node(dom, u, prec);
        try {
            V fv = f(n);
            return fv * n.weight;
        } catch (const std::domain_error& e) {
            throw QuadratureError(std::string("integrate: integrand failed at an extreme node (") +
                                  e.what() + ")");
        }
    };

    // scale estimate from a few coarse probes so "negligible" has a reference
    BallReal scale(prec);
    for (int k = -2; k <= 2; ++k) {
        V v = eval_at(BallReal(k, prec));
        scale = max_upper(scale, detail::value_upper(v));
    }
    if (mpfr_zero_p(scale.mid()) && mpfr_zero_p(scale.rad())) scale = BallReal(1, prec);

    auto negligible = [&](const V& term) {
        BallReal t = detail::value_upper(term);
        if (mpfr_zero_p(t.mid())) return true;
        return mpfr_get_exp(t.mid()) < mpfr_get_exp(scale.abs_upper().mid()) + tiny_exp;
    };

    // level 0: h = 1
    V sum = eval_at(BallReal(0, prec));
    for (int dir : {1, -1}) {
        int consecutive_small = 0;
        for (long k = 1; k <= max_nodes; ++k) {
            V term = eval_at(BallReal(dir * k, prec));
            sum = sum + term;
            ++nodes_used;
            if (negligible(term)) {
                if (++consecutive_small >= 2) break;
            } else {
                consecutive_small = 0;
            }
            if (k == max_nodes) throw QuadratureError("integrate: tail truncation not reached at level 0");
        }
    }

    V prev = sum;  // h = 1 estimate (times h = 1)
    BallReal last_diff(prec);
    bool converged = false;
    Rational h(1);
    for (int level = 1; level <= max_level; ++level) {
        h /= 2;
        // add odd multiples of h
        V add = zero;
        for (int dir : {1, -1}) {
            int consecutive_small = 0;
            for (long k = 1;; k += 2) {
                if (++nodes_used > max_nodes)
                    throw QuadratureError("integrate: node budget exhausted at level " +
                                          std::to_string(level));
                V term = eval_at(BallReal(Rational(dir * k) * h, prec));
                add = add + term;
                if (negligible(term)) {
                    if (++consecutive_small >= 2) break;
                } else {
                    consecutive_small = 0;
                }
            }
        }
        V total = prev + add;  // sum of f over the h-grid
        V cur_int = total * BallReal(h, prec);
        V prev_int = prev * BallReal(h * 2, prec);
        // midpoint distance only: the arithmetic radius is already carried by cur_int
        last_diff = detail::mid_abs_upper(cur_int - prev_int);
        prev = total;
        BallReal mag = detail::value_upper(cur_int);
        long mag_exp = mpfr_zero_p(mag.mid()) ? 0 : mpfr_get_exp(mag.mid());
        long diff_exp = mpfr_zero_p(last_diff.mid()) ? mag_exp - prec - 99 : mpfr_get_exp(last_diff.mid());
        if (diff_exp <= mag_exp - static_cast<long>(prec) + 14) {
            converged = true;
            V out = cur_int;
            // fold the discretization estimate into the enclosure
            if constexpr (std::is_same_v<V, BallReal>) {
                out.add_error(last_diff);
            } else {
                out.re.add_error(last_diff);
                out.im.add_error(last_diff);
            }
            return out;
        }
    }
    (void)converged;
    throw QuadratureError("integrate: did not converge within level budget (last diff " +
                          last_diff.to_string(4) + ")");
}

inline BallReal integrate(const QuadratureTask& task) {
    mpfr_prec_t prec = task.target_precision_bits;
    auto f = [&](const Node& n) -> BallReal { return task.integrand(n.x, n.one_minus_x); };
    return integrate_core<BallReal>(f, task.domain, prec, task.max_level, task.max_nodes,
                                    BallReal(prec));
}

inline BallReal integrate(std::function<BallReal(const BallReal&, const BallReal&)> f, Domain dom,
                          mpfr_prec_t prec, int max_level = 13) {
    QuadratureTask t;
    t.integrand = std::move(f);
    t.domain = dom;
    t.target_precision_bits = prec;
    t.max_level = max_level;
    return integrate(t);
}

inline BallComplex integrate_complex(std::function<BallComplex(const BallReal&, const BallReal&)> f,
                                     Domain dom, mpfr_prec_t prec, int max_level = 13) {
    auto g = [&](const Node& n) -> BallComplex { return f(n.x, n.one_minus_x); };
    return integrate_core<BallComplex>(g, dom, prec, max_level, 400000, BallComplex(prec));
}

}  // namespace arx::quad
