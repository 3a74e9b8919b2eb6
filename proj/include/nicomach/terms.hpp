#pragma once

#include "nicomach/mpoly.hpp"
#include "nicomach/polymatrix.hpp"

namespace nicomach {

enum class Parity { odd, even };

Parity parse_parity(const std::string& s);
std::string parity_str(Parity p);

// The three sides of the balanced identity, as polynomials in {m, x}.
// XP is the fully corrected third term: x*P + x^3 - x^2.
struct TermTriple {
    QPoly L, R, XP;
    Parity parity;
};

// Closed forms obtained by exact summation (odd variant is re-indexed so that
// both parities are expressed at the same index m).
TermTriple build_terms(Parity parity);

// The inner sum P alone (before multiplying by x and applying the cubic
// correction), as a polynomial in {m, x}.
QPoly p_poly(Parity parity);

// 4x3 matrix over {m, x} (x absent) whose columns hold the coefficients of
// x^0..x^3 of (L, R, x*P).
PolyMatrix<Rational> coefficient_matrix(Parity parity);

// Expected closed form of coefficient_matrix(Parity::odd), entry by entry.
PolyMatrix<Rational> coefficient_matrix_expected_odd();

// Difference matrix: coefficient_matrix(even) - coefficient_matrix(odd).
PolyMatrix<Rational> correction_matrix();

// Transposed layout: 3x5 matrix whose rows are (L, R, x*P) and whose columns
// hold the coefficients of m^0..m^4, entries polynomials in x.
PolyMatrix<Rational> coefficient_matrix_xm(Parity parity);

}  // namespace nicomach
