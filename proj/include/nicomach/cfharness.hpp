#pragma once

#include "nicomach/algebraic.hpp"
#include "nicomach/report.hpp"
#include "nicomach/terms.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace nicomach {

// The three sides of the balanced identity, as continued-fraction subjects.
enum class Term { L, R, XP };

Term parse_term(const std::string& s);
std::string term_str(Term t);

// The chosen side evaluated at m = 10^{4n+2}, as a polynomial in x alone.
QPoly term_poly_at(Term t, Parity parity, long n);

// Negate the root near -4: substitute x -> -x, reduce to the squarefree
// part, certify that (3, 5) contains exactly one root (a failed count is a
// hard error, not a guess), and isolate the root nearest 4.
AlgebraicReal negated_near4_root(const QPoly& termPoly);

// The conjectured opening quotients of the negated root's expansion.
std::vector<Integer> conjectured_prefix(Term t, long n);

// Expansion of one term's negated near -4 root, with engine soundness checks.
Report cfrac_root_report(Term t, Parity parity, long n, std::size_t quotients);

// All three odd-parity terms at m = 10^{4n+2}: expansions, positionwise
// comparison against the conjectured prefixes (conjecture deltas are info,
// engine failures are fail), leading-quotient ratios, and the integrality of
// the conjectured sixth L-quotient for n <= 50.
Report conjecture_report(long n, std::size_t quotients, bool parallel = false);

// Raw even-parity expansions; no conjectured prefixes exist for these, so
// everything observational is info and only engine soundness can fail.
Report explore_even_report(long n, std::size_t quotients = 10, bool parallel = false);

}  // namespace nicomach
