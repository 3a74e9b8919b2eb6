#pragma once

#include "nicomach/rational.hpp"

#include <string>

namespace nicomach {

// Element a + b*sqrt(d) of a real quadratic field, exact rational components.
// d must be squarefree and > 1 whenever b != 0; pure rationals are stored with
// the sentinel radicand 1 so that equality stays componentwise. Arithmetic is
// closed for a fixed radicand; mixing two genuine surds with different
// radicands is a domain error.
class Surd {
  public:
    Surd() : a_(0), b_(0), d_(1) {}
    Surd(int n) : a_(n), b_(0), d_(1) {}
    Surd(long n) : a_(n), b_(0), d_(1) {}
    Surd(const Integer& n) : a_(n), b_(0), d_(1) {}
    Surd(const Rational& q) : a_(q), b_(0), d_(1) {}
    Surd(Rational rationalPart, Rational surdPart, Integer radicand);

    static Surd sqrt(const Integer& radicand) { return Surd(0, 1, radicand); }

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    const Integer& radicand() const { return d_; }

    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    // Throws std::domain_error when the value has a genuine surd part.
    Rational to_rational() const;

    Surd conj() const { return Surd(a_, -b_, d_); }
    // a^2 - b^2 d; the product with the conjugate, always rational.
    Rational norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

    // Exact sign (-1, 0, +1); no floating point involved.
    int sign() const;

    friend Surd operator+(const Surd& x, const Surd& y);
    friend Surd operator-(const Surd& x, const Surd& y);
    friend Surd operator*(const Surd& x, const Surd& y);
    friend Surd operator/(const Surd& x, const Surd& y);
    Surd operator-() const { return Surd(-a_, -b_, d_); }

    Surd& operator+=(const Surd& o) { *this = *this + o; return *this; }
    Surd& operator-=(const Surd& o) { *this = *this - o; return *this; }
    Surd& operator*=(const Surd& o) { *this = *this * o; return *this; }

    friend bool operator==(const Surd& x, const Surd& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
    }
    friend bool operator!=(const Surd& x, const Surd& y) { return !(x == y); }

    Surd pow(unsigned long e) const;
    Surd inverse() const;

    std::string str() const;

  private:
    Rational a_, b_;
    Integer d_;
};

inline Surd surd_mul(const Surd& x, const Surd& y) { return x * y; }

inline std::string str(const Surd& s) { return s.str(); }

}  // namespace nicomach
