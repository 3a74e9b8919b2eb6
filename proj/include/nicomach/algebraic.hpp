#pragma once

#include "nicomach/cfrac.hpp"
#include "nicomach/mpoly.hpp"
#include "nicomach/upoly.hpp"

#include <string>

namespace nicomach {

// A real algebraic number: the unique real root of `poly` inside the open
// interval (lo, hi), certified by a Sturm count of 1. A degenerate interval
// (lo == hi) encodes the exact rational value lo.
struct AlgebraicReal {
    IPoly poly;
    Rational lo, hi;

    bool degenerate() const { return lo == hi; }
};

// The root of p closest to target, searched within distance 1 (inclusive).
// Requires p squarefree and nonconstant. Throws std::domain_error when no
// real root lies within distance 1 of target, or when two roots are exactly
// equidistant from it.
AlgebraicReal isolate_root_near(const IPoly& p, const Rational& target);
AlgebraicReal isolate_root_near(const QPoly& p, const Rational& target,
                                const std::string& var = "x");

// First k partial quotients of r: exact floor extraction by integer bisection
// on polynomial signs, then the Mobius step x -> a + 1/y. No floating point.
// A value that turns out rational ends the expansion early with
// terminated = true.
CFExpansion cf_algebraic(const AlgebraicReal& r, std::size_t k);

}  // namespace nicomach
