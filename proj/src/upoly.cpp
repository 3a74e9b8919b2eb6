#include "nicomach/upoly.hpp"

#include <stdexcept>

namespace nicomach {

namespace {

// Rational dense helpers backing gcd and Sturm remainders.
using RVec = std::vector<Rational>;

RVec to_rvec(const IPoly& p) {
    RVec v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.emplace_back(c);
    return v;
}

void rtrim(RVec& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// Remainder of a / b over Q; b nonzero.
RVec rrem(RVec a, const RVec& b) {
    Rational binv = b.back().inverse();
    while (a.size() >= b.size()) {
        Rational f = a.back() * binv;
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();  // leading term cancels exactly
        rtrim(a);
        if (a.empty()) break;
    }
    return a;
}

// Scale a rational vector by a positive constant into a primitive IPoly.
IPoly clear_to_primitive(const RVec& v) {
    if (v.empty()) return IPoly{};
    Integer den(1);
    for (const auto& q : v) den = Integer(den * q.den() / gcd(den, q.den()));
    std::vector<Integer> w;
    w.reserve(v.size());
    for (const auto& q : v) w.push_back(Integer(q.num() * (den / q.den())));
    return IPoly(std::move(w)).primitive();
}

}  // namespace

IPoly::IPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

void IPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Integer& IPoly::lc() const {
    if (c_.empty()) throw std::domain_error("IPoly: zero polynomial has no leading coefficient");
    return c_.back();
}

IPoly IPoly::from_mpoly(const QPoly& p, const std::string& var) {
    QPoly uni = restrict_vars(p, {var});
    int d = uni.is_zero() ? -1 : uni.degree_in(var);
    RVec v(std::size_t(d + 1), Rational(0));
    for (int i = 0; i <= d; ++i) v[std::size_t(i)] = uni.coeff_of(var, unsigned(i)).constant_term();
    return clear_to_primitive(v);
}

int IPoly::sign_at(const Rational& t) const {
    if (c_.empty()) return 0;
    // sign(p(n/d)) = sign(sum c_i n^i d^{deg-i}) since d > 0.
    const Integer& n = t.num();
    const Integer& d = t.den();
    Integer acc = c_.back();
    Integer dp(1);
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
        dp *= d;
        acc = Integer(acc * n + c_[i] * dp);
    }
    return sgn(acc);
}

Rational IPoly::eval(const Rational& t) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + Rational(c_[i]);
    return acc;
}

IPoly IPoly::derivative() const {
    if (c_.size() <= 1) return IPoly{};
    std::vector<Integer> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Integer(c_[i] * long(i));
    return IPoly(std::move(d));
}

Integer IPoly::content() const {
    Integer g(0);
    for (const auto& x : c_) g = gcd(g, x);
    return g;
}

IPoly IPoly::primitive() const {
    if (c_.empty()) return IPoly{};
    Integer g = content();
    std::vector<Integer> w(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) w[i] = Integer(c_[i] / g);
    return IPoly(std::move(w));
}

IPoly IPoly::mobius(const Integer& a) const {
    if (c_.empty()) return IPoly{};
    std::size_t d = c_.size() - 1;
    std::vector<Integer> out(c_.size(), Integer(0));
    // sum_i c_i (a y + 1)^i y^{d-i}
    std::vector<Integer> pw{Integer(1)};  // (a y + 1)^i, ascending
    for (std::size_t i = 0; i <= d; ++i) {
        if (c_[i] != 0)
            for (std::size_t k = 0; k < pw.size(); ++k)
                out[(d - i) + k] += Integer(c_[i] * pw[k]);
        if (i == d) break;
        std::vector<Integer> nxt(pw.size() + 1, Integer(0));
        for (std::size_t k = 0; k < pw.size(); ++k) {
            nxt[k] += pw[k];
            nxt[k + 1] += Integer(pw[k] * a);
        }
        pw = std::move(nxt);
    }
    return IPoly(std::move(out)).primitive();
}

IPoly IPoly::deflate_root(const Rational& r) const {
    if (deg() < 1) throw std::domain_error("deflate_root: degree too small");
    RVec q(c_.size() - 1, Rational(0));
    Rational carry(c_.back());
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = carry * r + Rational(c_[i]);
    }
    if (!carry.is_zero()) throw std::domain_error("deflate_root: not a root");
    return clear_to_primitive(q);
}

std::string IPoly::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Integer a = c_[i];
        if (s.empty()) {
            if (a < 0) s += "-";
        } else {
            s += a < 0 ? " - " : " + ";
        }
        Integer mag = Integer(abs(a));
        bool one = mag == 1;
        if (!one || i == 0) s += mag.get_str();
        if (i > 0) {
            if (!one) s += "*";
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

IPoly gcd_ipoly(const IPoly& a, const IPoly& b) {
    RVec u = to_rvec(a), v = to_rvec(b);
    rtrim(u);
    rtrim(v);
    while (!v.empty()) {
        RVec r = rrem(u, v);
        u = std::move(v);
        v = std::move(r);
    }
    IPoly g = clear_to_primitive(u);
    if (!g.is_zero() && g.lc() < 0) {
        std::vector<Integer> w = g.coeffs();
        for (auto& x : w) x = Integer(-x);
        return IPoly(std::move(w));
    }
    return g;
}

IPoly squarefree_part(const IPoly& p) {
    if (p.deg() < 1) return p;
    IPoly g = gcd_ipoly(p, p.derivative());
    if (g.deg() == 0) return p.primitive();
    RVec num = to_rvec(p), den = to_rvec(g);
    // exact long division
    RVec q(num.size() - den.size() + 1, Rational(0));
    Rational dinv = den.back().inverse();
    while (num.size() >= den.size()) {
        Rational f = num.back() * dinv;
        std::size_t off = num.size() - den.size();
        q[off] = f;
        for (std::size_t i = 0; i < den.size(); ++i) num[off + i] -= f * den[i];
        num.pop_back();
        rtrim(num);
        if (num.empty()) break;
    }
    if (!num.empty()) throw std::runtime_error("squarefree_part: inexact division");
    return clear_to_primitive(q);
}

IPoly compose_linear(const IPoly& p, const Rational& s, const Rational& t) {
    // Horner: result = (((c_d (s x + t)) + c_{d-1})(s x + t) + ...).
    RVec acc;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        // acc = acc * (s x + t) + c_i
        RVec nxt(acc.size() + 1, Rational(0));
        for (std::size_t k = 0; k < acc.size(); ++k) {
            nxt[k] += acc[k] * t;
            nxt[k + 1] += acc[k] * s;
        }
        if (nxt.empty()) nxt.assign(1, Rational(0));
        nxt[0] += Rational(p.coeffs()[i]);
        rtrim(nxt);
        acc = std::move(nxt);
    }
    return clear_to_primitive(acc);
}

SturmChain::SturmChain(const IPoly& p) {
    if (p.is_zero()) throw std::domain_error("SturmChain: zero polynomial");
    seq_.push_back(p.primitive());
    if (p.deg() >= 1) {
        seq_.push_back(p.derivative().primitive());
        while (seq_.back().deg() >= 0) {
            RVec r = rrem(to_rvec(seq_[seq_.size() - 2]), to_rvec(seq_.back()));
            if (r.empty()) break;
            for (auto& x : r) x = -x;
            seq_.push_back(clear_to_primitive(r));
            if (seq_.back().deg() == 0) break;
        }
    }
}

int SturmChain::variations(const Rational& t) const {
    int var = 0, prev = 0;
    for (const auto& q : seq_) {
        int s = q.sign_at(t);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::count_open(const Rational& a, const Rational& b) const {
    if (!(a < b)) throw std::domain_error("count_open: empty interval");
    if (seq_.front().sign_at(a) == 0 || seq_.front().sign_at(b) == 0)
        throw std::domain_error("count_open: endpoint is a root");
    return variations(a) - variations(b);
}

}  // namespace nicomach
