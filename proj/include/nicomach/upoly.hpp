#pragma once

#include "nicomach/mpoly.hpp"

#include <string>
#include <vector>

namespace nicomach {

// Dense univariate polynomial over Integer, ascending coefficients. The
// continued-fraction engine lives on these: all root work happens through
// exact sign evaluations at rationals, so the coefficient type never leaves Z.
class IPoly {
  public:
    IPoly() = default;  // zero polynomial
    explicit IPoly(std::vector<Integer> coeffs);

    // Clears denominators of a univariate MPoly (exactly one variable may
    // carry positive degree) and normalizes to primitive form.
    static IPoly from_mpoly(const QPoly& p, const std::string& var);

    int deg() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Integer>& coeffs() const { return c_; }
    const Integer& lc() const;

    // Exact sign of p(t): -1, 0, or +1.
    int sign_at(const Rational& t) const;
    Rational eval(const Rational& t) const;

    IPoly derivative() const;
    Integer content() const;  // nonnegative; 0 only for the zero polynomial
    IPoly primitive() const;  // p / content, leading sign preserved

    // primitive(y^d * p(a + 1/y)); the continued-fraction Mobius step.
    IPoly mobius(const Integer& a) const;

    // Exact division by (x - r); r must be a root.
    IPoly deflate_root(const Rational& r) const;

    std::string str() const;  // "3*x^2 - x + 7" style, descending

  private:
    std::vector<Integer> c_;
    void trim();
};

// Primitive gcd via the rational Euclidean algorithm.
IPoly gcd_ipoly(const IPoly& a, const IPoly& b);

// p / gcd(p, p'): same roots, all simple.
IPoly squarefree_part(const IPoly& p);

// primitive, denominator-cleared p(s*x + t); used to reflect a polynomial
// across a rational point.
IPoly compose_linear(const IPoly& p, const Rational& s, const Rational& t);

// Sturm chain with exact sign-variation counting.
class SturmChain {
  public:
    explicit SturmChain(const IPoly& p);
    int variations(const Rational& t) const;
    // Number of distinct real roots in the open interval (a, b). Endpoints
    // must not be roots of the base polynomial.
    int count_open(const Rational& a, const Rational& b) const;
    const IPoly& base() const { return seq_.front(); }

  private:
    std::vector<IPoly> seq_;
};

}  // namespace nicomach
