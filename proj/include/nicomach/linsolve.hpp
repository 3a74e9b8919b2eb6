#pragma once

#include "nicomach/rational.hpp"

#include <vector>

namespace nicomach {

struct LinearSolution {
    bool feasible = false;
    std::vector<Rational> particular;             // one solution (free vars = 0)
    std::vector<std::vector<Rational>> kernel;    // basis of the homogeneous space
};

// Exact Gauss-Jordan over Q for A x = b. Never pivots on zero; infeasible
// systems are reported, not thrown (callers treat them as failed checks).
LinearSolution solve_linear(std::vector<std::vector<Rational>> A, std::vector<Rational> b);

}  // namespace nicomach
