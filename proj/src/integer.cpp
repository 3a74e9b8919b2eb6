#include "nicomach/integer.hpp"

#include <stdexcept>

namespace nicomach {

SqrtResult isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt: negative input");
    SqrtResult out;
    Integer rem;
    mpz_sqrtrem(out.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    out.exact = (rem == 0);
    return out;
}

Integer floor_div(const Integer& a, const Integer& b) {
    if (b == 0) throw std::domain_error("floor_div: division by zero");
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
    if (b == 0) throw std::domain_error("ceil_div: division by zero");
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer pow_int(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Integer pow10(unsigned long e) { return pow_int(10, e); }

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer triangular(const Integer& m) { return m * (m + 1) / 2; }

Integer parse_integer(const std::string& s) {
    std::size_t i = 0;
    if (!s.empty() && s[0] == '-') i = 1;
    if (i == s.size()) throw std::invalid_argument("parse_integer: empty number");
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9')
            throw std::invalid_argument("parse_integer: bad character in \"" + s + "\"");
    return Integer(s, 10);
}

std::string str(const Integer& n) { return n.get_str(); }

std::vector<std::pair<Integer, int>> factor_integer(const Integer& n) {
    if (n < 1) throw std::domain_error("factor_integer: input must be >= 1");
    std::vector<std::pair<Integer, int>> out;
    Integer m = n;
    auto strip = [&](const Integer& p) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    strip(2);
    for (Integer p = 3; p * p <= m; p += 2) strip(p);
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

std::string factor_string(const Integer& n) {
    auto fs = factor_integer(n);
    if (fs.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) out += " * ";
        out += str(fs[i].first);
        if (fs[i].second > 1) out += "^" + std::to_string(fs[i].second);
    }
    return out;
}

}  // namespace nicomach
