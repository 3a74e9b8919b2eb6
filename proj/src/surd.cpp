#include "nicomach/surd.hpp"

#include <stdexcept>

namespace nicomach {

namespace {

// Squarefree check by trial division up to 1000 followed by a perfect-square
// test on the remaining cofactor. A cofactor of the form p^2*q with two
// distinct primes beyond the bound would slip through; no radicand anywhere
// near that size is ever constructed here (d = 11 in practice).
void require_squarefree(const Integer& d) {
    if (d <= 1) throw std::domain_error("Surd: radicand must be > 1");
    Integer m = d;
    auto strip = [&](const Integer& p) {
        if (m % p != 0) return;
        m /= p;
        if (m % p == 0) throw std::domain_error("Surd: radicand not squarefree");
    };
    strip(2);
    for (Integer p = 3; p <= 1000 && p * p <= m; p += 2) strip(p);
    if (m > 1 && isqrt(m).exact) throw std::domain_error("Surd: radicand not squarefree");
}

// Common radicand of two operands; pure rationals adopt the other side's field.
Integer join_radicand(const Surd& x, const Surd& y) {
    if (x.is_rational()) return y.radicand();
    if (y.is_rational()) return x.radicand();
    if (x.radicand() != y.radicand())
        throw std::domain_error("Surd: mismatched radicands " + str(x.radicand()) + " vs " +
                                str(y.radicand()));
    return x.radicand();
}

}  // namespace

Surd::Surd(Rational rationalPart, Rational surdPart, Integer radicand)
    : a_(std::move(rationalPart)), b_(std::move(surdPart)), d_(std::move(radicand)) {
    if (b_.is_zero()) {
        d_ = 1;  // canonical form for embedded rationals
        return;
    }
    require_squarefree(d_);
}

Rational Surd::to_rational() const {
    if (!is_rational()) throw std::domain_error("Surd: value is irrational");
    return a_;
}

int Surd::sign() const {
    if (b_.is_zero()) return a_.sign();
    if (a_.is_zero()) return b_.sign();
    if (a_.sign() == b_.sign()) return a_.sign();
    // Opposite signs: compare a^2 against b^2 d exactly via the norm.
    // For a > 0 > b: value > 0 iff norm > 0; for a < 0 < b the test flips.
    return a_.sign() * norm().sign();
}

Surd operator+(const Surd& x, const Surd& y) {
    return Surd(x.a_ + y.a_, x.b_ + y.b_, join_radicand(x, y));
}

Surd operator-(const Surd& x, const Surd& y) {
    return Surd(x.a_ - y.a_, x.b_ - y.b_, join_radicand(x, y));
}

Surd operator*(const Surd& x, const Surd& y) {
    Integer d = join_radicand(x, y);
    return Surd(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, d);
}

Surd Surd::inverse() const {
    if (is_zero()) throw std::domain_error("Surd: inverse of zero");
    // Nonzero norm is automatic: a^2 = b^2 d with b != 0 would force d to be
    // a rational square, impossible for squarefree d > 1.
    Rational n = norm();
    return Surd(a_ / n, -b_ / n, d_);
}

Surd operator/(const Surd& x, const Surd& y) { return x * y.inverse(); }

Surd Surd::pow(unsigned long e) const {
    Surd r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string Surd::str() const {
    if (b_.is_zero()) return a_.str();
    std::string out = a_.str();
    if (b_.sign() < 0)
        out += " - " + (-b_ == Rational(1) ? std::string() : (-b_).str() + "*");
    else
        out += " + " + (b_ == Rational(1) ? std::string() : b_.str() + "*");
    out += "sqrt(" + d_.get_str() + ")";
    return out;
}

}  // namespace nicomach
