#include "nicomach/summation.hpp"

#include <mutex>

namespace nicomach {

std::vector<Rational> bernoulli_plus(unsigned upto) {
    // B_n via sum_{j=0}^{n} C(n+1, j) B_j = 0 (the B_1 = -1/2 convention),
    // then flip B_1; all other odd-index values are zero anyway.
    static std::vector<Rational> cache{Rational(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= upto) {
        unsigned n = unsigned(cache.size());
        Rational s(0);
        for (unsigned j = 0; j < n; ++j) s += Rational(binomial(n + 1, j)) * cache[j];
        cache.push_back(-s / Rational(long(n) + 1));
    }
    std::vector<Rational> out(cache.begin(), cache.begin() + upto + 1);
    if (upto >= 1) out[1] = Rational(1, 2);
    return out;
}

std::vector<Rational> faulhaber_coeffs(unsigned e) {
    // sum_{j=1}^{m} j^e = 1/(e+1) * sum_{i=0}^{e} C(e+1, i) B_i m^{e+1-i}.
    auto B = bernoulli_plus(e);
    std::vector<Rational> out(e + 2, Rational(0));
    Rational lead = Rational(1, Integer(long(e) + 1));
    for (unsigned i = 0; i <= e; ++i)
        out[e + 1 - i] = lead * Rational(binomial(e + 1, i)) * B[i];
    return out;
}

MPoly<Rational> faulhaber(unsigned e) {
    MPoly<Rational> out({"m"});
    auto coeffs = faulhaber_coeffs(e);
    for (unsigned i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) out.add_term(Mono{}.with_exp(0, i), coeffs[i]);
    return out;
}

}  // namespace nicomach
