#pragma once

#include "nicomach/integer.hpp"

#include <stdexcept>
#include <string>

namespace nicomach {

// Exact rational number, always reduced, denominator > 0.
// Thin wrapper over mpq_class that enforces canonicalization at every
// construction point so the reduced-form invariant can't be sidestepped.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }

    // Accepts "p" or "p/q" in decimal.
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(parse_integer(s));
        return Rational(parse_integer(s.substr(0, slash)), parse_integer(s.substr(slash + 1)));
    }

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Integer floor() const { return floor_div(num(), den()); }
    Integer ceil() const { return ceil_div(num(), den()); }

    Rational abs() const { return sign() < 0 ? Rational(-v_) : *this; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.v_ / b.v_);
    }
    Rational operator-() const { return Rational(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational pow(unsigned long e) const {
        Rational r(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(den(), num());
    }

    std::string str() const {
        if (is_integer()) return num().get_str();
        return num().get_str() + "/" + den().get_str();
    }

  private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;  // mpq arithmetic keeps results canonical
};

inline std::string str(const Rational& q) { return q.str(); }

inline Integer rational_floor(const Rational& q) { return q.floor(); }

// gcd on rationals: gcd(p1/q1, p2/q2) = gcd(p1 q2, p2 q1)/(q1 q2), always >= 0.
// This is what makes "content" of a rational polynomial well defined.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), Integer(a.num() * b.den()).get_mpz_t(),
            Integer(b.num() * a.den()).get_mpz_t());
    return Rational(g, a.den() * b.den());
}

}  // namespace nicomach
