#pragma once

#include "nicomach/rational.hpp"
#include "nicomach/surd.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nicomach {

// A (possibly truncated) simple continued fraction [a0; a1, a2, ...].
// Invariants: quotients after the first are >= 1; terminated implies the
// value is exactly the finite fraction (and excludes a period); a period
// (start, length) means the quotients repeat from `start` onward and the
// stored list holds the preperiod plus exactly one period.
struct CFExpansion {
    std::vector<Integer> quotients;
    std::optional<std::pair<std::size_t, std::size_t>> period;
    bool terminated = false;

    std::string str() const;
};

// Euclidean expansion of a rational; canonical form (final quotient >= 2
// unless the expansion is the single integer term). terminated = true when
// the algorithm finished within maxQuotients.
CFExpansion cf_rational(const Rational& q, std::size_t maxQuotients = 10000);

// Periodic expansion of a genuine quadratic irrational via the classical
// (P + sqrt(D))/Q reduction with state-repetition detection.
// Rational input is a domain error (use cf_rational).
CFExpansion cf_quadratic(const Surd& s, std::size_t maxQuotients = 100000);

struct Convergent {
    Integer p, q;
};

// p_k/q_k for each listed quotient, via the standard recurrence.
std::vector<Convergent> convergents(const std::vector<Integer>& quotients);

// p_k q_{k-1} - p_{k-1} q_k == (-1)^{k-1} for every computed k >= 1.
bool convergent_determinants_ok(const std::vector<Integer>& quotients);

}  // namespace nicomach
