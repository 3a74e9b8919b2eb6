#pragma once

#include "nicomach/mpoly.hpp"
#include "nicomach/report.hpp"
#include "nicomach/summation.hpp"
#include "nicomach/terms.hpp"

#include <array>
#include <vector>

namespace nicomach {

// Parameters (a, b, c, d, e, f) of the general quadratic-times-quadratic sum.
template <class C>
struct CoeffVector {
    C a, b, c, d, e, f;
};

// Sum_{j=1}^{m} (a + bj + cj^2)(d + ej + fj^2) as a polynomial in m.
template <class C>
MPoly<C> closed_sum(const CoeffVector<C>& cv) {
    std::vector<std::string> jm{"j", "m"};
    MPoly<C> j = MPoly<C>::variable(jm, "j");
    auto k = [&](const C& v) { return MPoly<C>::constant(jm, v); };
    MPoly<C> s = (k(cv.a) + k(cv.b) * j + k(cv.c) * j * j) *
                 (k(cv.d) + k(cv.e) * j + k(cv.f) * j * j);
    return restrict_vars(sum_over_j(s, "j", "m"), {"m"});
}

// Same sum with polynomial entries (symbolic parameters allowed). All six
// entries must share one variable set that contains "m" and not "j"; the
// result lives over that same set.
QPoly closed_sum_poly(const std::array<QPoly, 6>& entries);

// Fully symbolic instance over {m, a, b, c, d, e, f}.
QPoly closed_sum_symbolic();

// F = 5a(6d + 3e + f) + 5b(3d + e) + c(5d - f).
template <class C>
C factor_F(const CoeffVector<C>& cv) {
    return C(5) * cv.a * (C(6) * cv.d + C(3) * cv.e + cv.f) +
           C(5) * cv.b * (C(3) * cv.d + cv.e) + cv.c * (C(5) * cv.d - cv.f);
}

// F as a polynomial over {m, a, b, c, d, e, f} (m absent), matching the
// variable set of closed_sum_symbolic().
QPoly factor_F_symbolic();

Report verify_theorem1(Parity parity);
Report matrix_checks(bool parallel = false);
Report xm_variant_checks();
Report double_equation_checks();

struct CubicPair {
    QPoly A3, B3;                                // over {"m"}, monic cubics
    std::vector<std::pair<QPoly, QPoly>> kernel; // homogeneous solution basis
    Report report;
};

// Monic cubics A3, B3 with 7m^3(1+m)^3 = (1+m)(1+2m)(1+3m)A3 + (1+m)(2+m)(3+m)B3,
// plus a basis of the homogeneous solution space.
CubicPair solve_cubic_pair();

Report discriminant_report();

}  // namespace nicomach
