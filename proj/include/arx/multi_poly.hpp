#pragma once

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "arx/bihom_poly.hpp"

namespace arx {

// Sparse polynomial in named variables with values in an arbitrary ring C
// (scalars, or BiHomPoly for C[X,Y]-valued polynomials). No zero values are stored.
template <class C>
class MultiPoly {
  public:
    using Exponents = std::vector<int>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<Exponents, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    long var_index(const std::string& name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<long>(i);
        throw std::invalid_argument("MultiPoly: unknown variable " + name);
    }

    void add_term(const Exponents& e, const C& v) {
        if (e.size() != vars_.size()) throw std::invalid_argument("MultiPoly: exponent arity mismatch");
        if (ring_is_zero(v)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, v);
        } else {
            it->second += v;
            if (ring_is_zero(it->second)) terms_.erase(it);
        }
    }

    static MultiPoly constant(std::vector<std::string> vars, const C& v) {
        MultiPoly p(std::move(vars));
        p.add_term(Exponents(p.vars_.size(), 0), v);
        return p;
    }
    static MultiPoly variable(std::vector<std::string> vars, const std::string& name, const C& coeff) {
        MultiPoly p(std::move(vars));
        Exponents e(p.vars_.size(), 0);
        e[static_cast<size_t>(p.var_index(name))] = 1;
        p.add_term(e, coeff);
        return p;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_vars(o);
        for (const auto& [e, v] : o.terms_) add_term(e, v);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    MultiPoly operator-() const {
        MultiPoly r(vars_);
        for (const auto& [e, v] : terms_) r.terms_.emplace(e, -v);
        return r;
    }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a += -b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_vars(b);
        MultiPoly r(a.vars_);
        for (const auto& [ea, va] : a.terms_) {
            for (const auto& [eb, vb] : b.terms_) {
                Exponents e(ea);
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, va * vb);
            }
        }
        return r;
    }

    MultiPoly scaled(const C& s) const {
        MultiPoly r(vars_);
        for (const auto& [e, v] : terms_) r.add_term(e, s * v);
        return r;
    }

    MultiPoly pow(long k) const {
        if (k < 0) throw std::invalid_argument("MultiPoly::pow: negative exponent");
        MultiPoly acc = constant(vars_, RingTraits<C>::one());
        for (long i = 0; i < k; ++i) acc = acc * *this;
        return acc;
    }

    MultiPoly derivative(const std::string& var) const {
        size_t vi = static_cast<size_t>(var_index(var));
        MultiPoly r(vars_);
        for (const auto& [e, v] : terms_) {
            if (e[vi] == 0) continue;
            Exponents e2(e);
            e2[vi] -= 1;
            r.add_term(e2, ring_scale_int(v, e[vi]));
        }
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
        if (p.terms_.empty()) return os << "0";
        bool first = true;
        for (const auto& [e, v] : p.terms_) {
            if (!first) os << " + ";
            os << "[" << v << "]";
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) os << "*" << p.vars_[i] << "^" << e[i];
            first = false;
        }
        return os;
    }

  private:
    void check_vars(const MultiPoly& o) const {
        if (vars_ != o.vars_) throw std::invalid_argument("MultiPoly: variable set mismatch");
    }

    std::vector<std::string> vars_;
    std::map<Exponents, C> terms_;
};

}  // namespace arx
