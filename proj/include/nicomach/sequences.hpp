#pragma once

#include "nicomach/mpoly.hpp"
#include "nicomach/rational.hpp"
#include "nicomach/report.hpp"

#include <string>
#include <vector>

namespace nicomach {

// One step of the integer sequence u together with the certified square root
// s = sqrt((3+2u)(23+22u)); the radicand being a perfect square at every
// index is itself one of the verified claims.
struct SeqState {
    long k = 1;          // 1-based index
    Integer u{1};
    Integer s{15};
};

// Coefficients of x^0 .. x^{count-1} of the power series numer/denom, via the
// linear recurrence read off the denominator. Requires denom(0) != 0.
std::vector<Rational> series_coeffs(const QPoly& numer, const QPoly& denom, long count);

// u_1..u_count as series coefficients of (1+502x+x^2)/((1-x)(1-398x+x^2)),
// where u_k is the coefficient of x^{k-1}.
std::vector<Integer> u_series(long count);

// (5(10-3*sqrt(11))^{2k-1} + 5(10+3*sqrt(11))^{2k-1} - 56)/44 in exact Surd
// arithmetic; the surd part must cancel and 44 must divide, else this throws.
Integer u_closed(long k);

// Iterates u' = 252 + 199u + 30s from u_1 = 1, certifying at every index
// that (3+2u)(23+22u) is a perfect square.
SeqState u_recurrence(long k);

enum class AlphaMethod { convergent, recurrence, via_u };

AlphaMethod parse_alpha_method(const std::string& s);

struct AlphaValue {
    long k = 1;
    Rational value;
};

// convergent: value of [1; 6,3,...] with 2k-2 post-integer quotients;
// recurrence: iterate a' = (15+7a)/(13+6a) from a_1 = 1;
// via_u: (-1 + s_k/(3+2u_k))/2 using the certified integer square root.
AlphaValue alpha(long k, AlphaMethod method);

// The degree-4 balanced identity at index k: summand expansion, closed form
// as a zero polynomial in m, and a brute-force evaluation at m = 3.
Report verify_theorem4(long k);

// The limiting identity over Q(sqrt(11)): zero polynomial, closed-sum form
// (2m+3)T_{m-1}^2, factor F vanishing, m = 3 evaluation, and the structural
// limit facts (k-independent correction numerator, increasing denominator).
Report verify_sqrt11_limit();

// Power-series congruence scan: expands numer/denom to `count` coefficients
// and reports residues mod `modulus`; violations are listed individually,
// agreement is summarized. Requires denom(0) != 0 and count >= 1.
Report congruence_scan(const QPoly& numer, const QPoly& denom, const Integer& modulus,
                       long count);

// Named scan instances: "prop3" = (1+502x+x^2)/((1-x)(1-398x+x^2)) mod 900,
// "remark6" = (1+130x+x^2)/((1-x)(1-123x+x^2)) mod 253; both add the
// discriminant factorizations of their quadratics.
Report congruence_preset_report(const std::string& preset, long count);

struct CongruenceConstruction {
    QPoly numer, denom;
    Report report;
};

// Builds (1+(m-123)x+x^2)/((1-x)(1-123x+x^2)) and scans it mod m. m > 123.
CongruenceConstruction remark6_construct(const Integer& m, long count);

// CLI-facing reports for the sequence commands.
Report seq_u_report(long k, const std::string& method);
Report seq_alpha_report(long k, const std::string& method);

}  // namespace nicomach
