#pragma once

#include "nicomach/rational.hpp"
#include "nicomach/surd.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

namespace nicomach {

// Packed monomial over at most 8 variables: one byte per exponent, variable 0
// in the most significant byte, so raw key comparison is lexicographic with
// the leftmost variable dominant. Exponents are capped at 255, far above any
// degree this library produces; the cap is enforced, never assumed.
struct Mono {
    std::uint64_t key = 0;

    unsigned exp(int var) const { return unsigned(key >> (8 * (7 - var))) & 0xffu; }

    Mono with_exp(int var, unsigned e) const {
        if (e > 255) throw std::domain_error("Mono: exponent exceeds representation");
        int sh = 8 * (7 - var);
        return Mono{(key & ~(std::uint64_t(0xff) << sh)) | (std::uint64_t(e) << sh)};
    }

    unsigned total_degree() const {
        std::uint64_t k = key;
        unsigned s = 0;
        while (k) {
            s += unsigned(k & 0xff);
            k >>= 8;
        }
        return s;
    }

    // Exponentwise sum; the carry check catches any per-variable overflow.
    friend Mono operator*(Mono a, Mono b) {
        std::uint64_t s = a.key + b.key;
        if (((s ^ a.key ^ b.key) & 0x0101010101010100ULL) != 0 || s < a.key)
            throw std::domain_error("Mono: exponent overflow in product");
        return Mono{s};
    }

    bool divides(Mono b) const {
        for (int v = 0; v < 8; ++v)
            if (exp(v) > b.exp(v)) return false;
        return true;
    }

    // b / a, valid only when a.divides(b).
    friend Mono mono_quotient(Mono b, Mono a) { return Mono{b.key - a.key}; }

    friend bool operator==(Mono a, Mono b) { return a.key == b.key; }
};

// Graded lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
    bool operator()(Mono a, Mono b) const {
        unsigned da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return a.key < b.key;
    }
};

// Sparse multivariate polynomial with coefficients in C (Rational or Surd).
// Terms are kept in a deterministic graded-lex map with no zero coefficients,
// so term counts and printed forms are reproducible bit for bit.
template <class C>
class MPoly {
  public:
    using Terms = std::map<Mono, C, GrlexLess>;

    MPoly() = default;

    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
        if (vars_.size() > 8) throw std::domain_error("MPoly: more than 8 variables");
        for (std::size_t i = 0; i < vars_.size(); ++i)
            for (std::size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j]) throw std::domain_error("MPoly: duplicate variable");
    }

    static MPoly constant(std::vector<std::string> vars, const C& c) {
        MPoly p(std::move(vars));
        p.add_term(Mono{}, c);
        return p;
    }

    static MPoly variable(std::vector<std::string> vars, const std::string& name) {
        MPoly p(std::move(vars));
        p.add_term(Mono{}.with_exp(p.require_var(name), 1), C(1));
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return int(i);
        return -1;
    }

    int require_var(const std::string& name) const {
        int i = var_index(name);
        if (i < 0) throw std::domain_error("MPoly: unknown variable " + name);
        return i;
    }

    void add_term(Mono m, const C& c) {
        if (c == C(0)) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == C(0)) terms_.erase(it);
        }
    }

    C coeff(Mono m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }

    C constant_term() const { return coeff(Mono{}); }

    int degree_in(const std::string& name) const {
        int vi = require_var(name);
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, int(m.exp(vi)));
        return d;
    }

    int total_degree() const {
        return terms_.empty() ? 0 : int(terms_.rbegin()->first.total_degree());
    }

    // Terms whose exponent in `name` equals k, with that exponent removed.
    MPoly coeff_of(const std::string& name, unsigned k) const {
        int vi = require_var(name);
        MPoly out(vars_);
        for (const auto& [m, c] : terms_)
            if (m.exp(vi) == k) out.add_term(m.with_exp(vi, 0), c);
        return out;
    }

    MPoly leading_coeff_in(const std::string& name) const {
        return coeff_of(name, unsigned(degree_in(name)));
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly out = a.check_same_vars(b);
        out.terms_ = a.terms_;
        for (const auto& [m, c] : b.terms_) out.add_term(m, c);
        return out;
    }

    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        MPoly out = a.check_same_vars(b);
        out.terms_ = a.terms_;
        for (const auto& [m, c] : b.terms_) out.add_term(m, C(0) - c);
        return out;
    }

    MPoly operator-() const {
        MPoly out(vars_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, C(0) - c);
        return out;
    }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly out = a.check_same_vars(b);
        std::unordered_map<std::uint64_t, C> acc;
        acc.reserve(a.terms_.size() * 2);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Mono m = ma * mb;
                C p = ca * cb;
                auto [it, fresh] = acc.emplace(m.key, p);
                if (!fresh) it->second += p;
            }
        for (auto& [k, c] : acc)
            if (!(c == C(0))) out.terms_.emplace(Mono{k}, std::move(c));
        return out;
    }

    friend MPoly operator*(const MPoly& a, const C& s) {
        MPoly out(a.vars_);
        if (s == C(0)) return out;
        for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, c * s);
        return out;
    }
    friend MPoly operator*(const C& s, const MPoly& a) { return a * s; }

    MPoly& operator+=(const MPoly& o) { *this = *this + o; return *this; }
    MPoly& operator-=(const MPoly& o) { *this = *this - o; return *this; }
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly pow(unsigned e) const {
        MPoly r = constant(vars_, C(1));
        MPoly b = *this;
        while (e) {
            if (e & 1) r *= b;
            if (e >>= 1) b *= b;
        }
        return r;
    }

    MPoly derivative(const std::string& name) const {
        int vi = require_var(name);
        MPoly out(vars_);
        for (const auto& [m, c] : terms_) {
            unsigned e = m.exp(vi);
            if (e == 0) continue;
            out.add_term(m.with_exp(vi, e - 1), c * C(long(e)));
        }
        return out;
    }

    // Exact composition p[var := rep]; rep must live over the same variables.
    MPoly substitute(const std::string& name, const MPoly& rep) const {
        int vi = require_var(name);
        check_same_vars(rep);
        std::vector<MPoly> powers{constant(vars_, C(1))};
        MPoly out(vars_);
        for (const auto& [m, c] : terms_) {
            unsigned e = m.exp(vi);
            while (powers.size() <= e) powers.push_back(powers.back() * rep);
            MPoly rest(vars_);
            rest.add_term(m.with_exp(vi, 0), c);
            out += rest * powers[e];
        }
        return out;
    }

    MPoly substitute(const std::string& name, const C& value) const {
        return substitute(name, constant(vars_, value));
    }

    // Full evaluation; point[i] is the value of vars()[i].
    C eval(const std::vector<C>& point) const {
        if (point.size() != vars_.size())
            throw std::domain_error("MPoly: evaluation point arity mismatch");
        std::vector<std::vector<C>> pows(vars_.size(), std::vector<C>{C(1)});
        C out(0);
        for (const auto& [m, c] : terms_) {
            C t = c;
            for (std::size_t v = 0; v < vars_.size(); ++v) {
                unsigned e = m.exp(int(v));
                auto& pv = pows[v];
                while (pv.size() <= e) pv.push_back(pv.back() * point[v]);
                if (e) t = t * pv[e];
            }
            out += t;
        }
        return out;
    }

    // Quotient f/g when g divides f exactly, nullopt otherwise. Single-divisor
    // division in graded-lex order decides divisibility: whenever g | r, the
    // leading term of g divides the leading term of r, so a failed step proves
    // indivisibility.
    static std::optional<MPoly> divide_exact(const MPoly& f, const MPoly& g) {
        f.check_same_vars(g);
        if (g.is_zero()) throw std::domain_error("MPoly: division by zero polynomial");
        MPoly q(f.vars_), r = f;
        auto gl = *g.terms_.rbegin();
        while (!r.is_zero()) {
            auto rl = *r.terms_.rbegin();
            if (!gl.first.divides(rl.first)) return std::nullopt;
            Mono m = mono_quotient(rl.first, gl.first);
            C c = rl.second / gl.second;
            MPoly t(f.vars_);
            t.add_term(m, c);
            q += t;
            r -= t * g;
        }
        return q;
    }

    // Positive gcd of all coefficients (Rational coefficients only).
    template <class D = C>
    std::enable_if_t<std::is_same_v<D, Rational>, Rational> content() const {
        Rational g(0);
        for (const auto& [m, c] : terms_) g = rational_gcd(g, c);
        return g;
    }

    // Canonical text form: descending graded-lex, explicit signs, stable.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            bool neg = c.sign() < 0;
            C mag = neg ? C(0) - c : c;
            if (it == terms_.rbegin())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            std::string ms = mono_str(m);
            if (ms.empty())
                out += coeff_str(mag);
            else if (mag == C(1))
                out += ms;
            else
                out += coeff_str(mag) + "*" + ms;
        }
        return out;
    }

  private:
    MPoly check_same_vars(const MPoly& o) const {
        if (vars_ != o.vars_) throw std::domain_error("MPoly: mixed variable sets");
        return MPoly(vars_);
    }

    std::string mono_str(Mono m) const {
        std::string out;
        for (std::size_t v = 0; v < vars_.size(); ++v) {
            unsigned e = m.exp(int(v));
            if (!e) continue;
            if (!out.empty()) out += "*";
            out += vars_[v];
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out;
    }

    static std::string coeff_str(const C& c) {
        if constexpr (std::is_same_v<C, Surd>) {
            if (!c.is_rational()) return "(" + c.str() + ")";
            return c.rational_part().str();
        } else {
            return c.str();
        }
    }

    std::vector<std::string> vars_;
    Terms terms_;
};

// Re-expresses p over a different variable list. Every variable of p that
// carries a positive exponent anywhere must be present in newVars.
template <class C>
MPoly<C> restrict_vars(const MPoly<C>& p, std::vector<std::string> newVars) {
    MPoly<C> out(std::move(newVars));
    std::vector<int> map(p.vars().size(), -1);
    for (std::size_t i = 0; i < p.vars().size(); ++i) map[i] = out.var_index(p.vars()[i]);
    for (const auto& [m, c] : p.terms()) {
        Mono nm{};
        for (std::size_t i = 0; i < p.vars().size(); ++i) {
            unsigned e = m.exp(int(i));
            if (!e) continue;
            if (map[i] < 0)
                throw std::domain_error("restrict_vars: " + p.vars()[i] + " still occurs");
            nm = nm.with_exp(map[i], e);
        }
        out.add_term(nm, c);
    }
    return out;
}

using QPoly = MPoly<Rational>;
using SPoly = MPoly<Surd>;

}  // namespace nicomach
