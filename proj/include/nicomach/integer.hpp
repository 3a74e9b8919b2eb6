#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nicomach {

// Arbitrary-precision signed integer. GMP's mpz_class already provides the
// canonical representation and exact arithmetic; everything here is the thin
// layer of exact predicates the rest of the library needs.
using Integer = mpz_class;

struct SqrtResult {
    Integer root;  // floor(sqrt(n))
    bool exact;    // root*root == n
};

// Floor square root with exactness flag. Throws std::domain_error for n < 0.
SqrtResult isqrt(const Integer& n);

// Floored quotient (rounds toward -infinity). Throws std::domain_error if b == 0.
Integer floor_div(const Integer& a, const Integer& b);

// Ceiling quotient. Throws std::domain_error if b == 0.
Integer ceil_div(const Integer& a, const Integer& b);

Integer pow_int(const Integer& base, unsigned long e);

// 10^e, the only power that shows up in command parameters.
Integer pow10(unsigned long e);

Integer binomial(unsigned long n, unsigned long k);

// Triangular number m(m+1)/2; exact for any integer m.
Integer triangular(const Integer& m);

// Strict decimal parse (optional leading '-'); rejects anything else.
Integer parse_integer(const std::string& s);

std::string str(const Integer& n);

// Prime factorization by trial division, exponents sorted by prime.
// Intended for the small report constants (< ~10^12); throws std::domain_error
// for n < 1.
std::vector<std::pair<Integer, int>> factor_integer(const Integer& n);

// "2^9 * 3 * 11" style rendering of factor_integer; "1" for n = 1.
std::string factor_string(const Integer& n);

}  // namespace nicomach
