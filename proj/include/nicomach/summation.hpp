#pragma once

#include "nicomach/mpoly.hpp"

#include <vector>

namespace nicomach {

// Bernoulli numbers B_0..B_upto with the B_1 = +1/2 convention, which makes
// the Faulhaber sum below run from j = 1 to m inclusive.
std::vector<Rational> bernoulli_plus(unsigned upto);

// Dense coefficients (ascending, length e+2) of the closed form of
// sum_{j=1}^{m} j^e as a polynomial in m.
std::vector<Rational> faulhaber_coeffs(unsigned e);

// The same closed form as a polynomial over the single variable "m".
MPoly<Rational> faulhaber(unsigned e);

// Exact summation of p over jvar = 1..mvar. The input must not mention mvar
// (its exponent there must be 0); each j^e is replaced by its Faulhaber
// polynomial in mvar, so the result is polynomial in mvar and jvar-free.
template <class C>
MPoly<C> sum_over_j(const MPoly<C>& p, const std::string& jvar, const std::string& mvar) {
    int ji = p.require_var(jvar);
    int mi = p.require_var(mvar);
    MPoly<C> out(p.vars());
    for (const auto& [mono, c] : p.terms()) {
        if (mono.exp(mi) != 0)
            throw std::domain_error("sum_over_j: summand already contains " + mvar);
        unsigned e = mono.exp(ji);
        Mono rest = mono.with_exp(ji, 0);
        auto coeffs = faulhaber_coeffs(e);
        for (unsigned i = 0; i < coeffs.size(); ++i)
            if (!coeffs[i].is_zero()) out.add_term(rest.with_exp(mi, i), c * C(coeffs[i]));
    }
    return out;
}

}  // namespace nicomach
