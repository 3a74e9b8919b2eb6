#include "nicomach/catalog.hpp"

#include "nicomach/identities.hpp"
#include "nicomach/summation.hpp"
#include "nicomach/surd.hpp"

#include <stdexcept>

namespace nicomach {

namespace {

const std::vector<std::string> kIds{
    "nicomachus",    "a-family", "liouville",     "genfp",
    "warnaar",       "cigler",   "pythagorean",   "b-multizero-1",
    "b-multizero-2", "sqrt11-limit", "remark2-x3"};

const std::vector<std::string> kQ{"q"};

QPoly qvar() { return QPoly::variable(kQ, "q"); }
QPoly qconst(long v) { return QPoly::constant(kQ, Rational(v)); }

// [N]_q = 1 + q + ... + q^{N-1}, with stride s: 1 + q^s + ... + q^{s(N-1)}.
QPoly qbracket(unsigned n, unsigned stride = 1) {
    QPoly out(kQ);
    for (unsigned i = 0; i < n; ++i) out.add_term(Mono{}.with_exp(0, i * stride), Rational(1));
    return out;
}

QPoly qpow(unsigned e) {
    QPoly out(kQ);
    out.add_term(Mono{}.with_exp(0, e), Rational(1));
    return out;
}

Report base_report(const std::string& id) {
    Report rep;
    rep.command = "verify catalog";
    rep.param("id", id);
    return rep;
}

Report do_nicomachus() {
    Report rep = base_report("nicomachus");
    QPoly f3 = faulhaber(3), f1 = faulhaber(1);
    QPoly d = f3 - f1 * f1;
    rep.add("cube-sum-square", d.is_zero(), "0", d.str(), "identity");
    QPoly viaSum = closed_sum(CoeffVector<Rational>{Rational(0), Rational(1), Rational(0),
                                                    Rational(0), Rational(0), Rational(1)});
    rep.add("gga-form", viaSum == f1 * f1, (f1 * f1).str(), viaSum.str(), "identity");
    return rep;
}

Report do_a_family() {
    Report rep = base_report("a-family");
    std::vector<std::string> jma{"j", "m", "a"};
    QPoly j = QPoly::variable(jma, "j"), a = QPoly::variable(jma, "a");
    QPoly one = QPoly::constant(jma, Rational(1)), two = QPoly::constant(jma, Rational(2));
    QPoly t = j - one;  // sum over j = 0..m-1 re-indexed to 1..m
    QPoly lin = one + a * t;
    QPoly lhs = sum_over_j(lin * (one + two * t + a * t * t), "j", "m");
    QPoly rhsRoot = sum_over_j(lin, "j", "m");
    QPoly d = lhs - rhsRoot * rhsRoot;
    rep.add("family-zero", d.is_zero(), "0", d.str(), "identity");

    // The a = 2 member contains the classical odd-number square.
    std::vector<std::string> jm{"j", "m"};
    QPoly jj = QPoly::variable(jm, "j"), mm = QPoly::variable(jm, "m");
    QPoly oddSum = sum_over_j(QPoly::constant(jm, Rational(2)) * jj -
                                  QPoly::constant(jm, Rational(1)),
                              "j", "m");
    QPoly od = oddSum - mm * mm;
    rep.add("odd-sum-square", od.is_zero(), "0", od.str(), "identity");
    return rep;
}

Report do_liouville(long bound) {
    Report rep = base_report("liouville");
    rep.param("bound", std::to_string(bound));
    if (bound < 1) throw std::domain_error("liouville: bound must be >= 1");
    // Divisor counts by the sieve-style double loop.
    std::vector<long> tau(std::size_t(bound) + 1, 0);
    for (long i = 1; i <= bound; ++i)
        for (long k = i; k <= bound; k += i) ++tau[std::size_t(k)];

    long firstBad = 0;
    Integer sum12;
    for (long n = 1; n <= bound && !firstBad; ++n) {
        Integer s1(0), s3(0);
        for (long d = 1; d * d <= n; ++d) {
            if (n % d) continue;
            long td = tau[std::size_t(d)];
            s1 += td;
            s3 += Integer(td) * td * td;
            long e = n / d;
            if (e != d) {
                long te = tau[std::size_t(e)];
                s1 += te;
                s3 += Integer(te) * te * te;
            }
        }
        if (s3 != s1 * s1) firstBad = n;
        if (n == 12) sum12 = s3;
    }
    rep.add("divisor-tau-cubes", firstBad == 0,
            "sum tau(d)^3 = (sum tau(d))^2 for n = 1.." + std::to_string(bound),
            firstBad ? "first failure at n = " + std::to_string(firstBad)
                     : "verified n = 1.." + std::to_string(bound),
            "computed");
    if (bound >= 12)
        rep.add("example-n12", sum12 == 324, "324", str(sum12), "computed");
    return rep;
}

Report do_genfp(long bound) {
    Report rep = base_report("genfp");
    rep.param("bound", std::to_string(bound));
    if (bound < 1) throw std::domain_error("genfp: bound must be >= 1");
    long pairs = 0, firstBadR = -1, firstBadN = -1;
    for (long r = 0; r <= 4 && firstBadR < 0; ++r) {
        Rational lhs(0);
        for (long n = 1; n <= bound; ++n) {
            Integer c = binomial(unsigned(n + r), unsigned(r + 1));
            lhs += Rational(Integer(2 * n + r) * c * c, Integer(r + 2));
            Integer cr = binomial(unsigned(n + 1 + r), unsigned(r + 1));
            Rational rhsRoot = Rational(Integer(n) * cr, Integer(r + 2));
            if (lhs != rhsRoot * rhsRoot) {
                firstBadR = r;
                firstBadN = n;
                break;
            }
            ++pairs;
        }
    }
    rep.add("square-of-binomial-sum", firstBadR < 0,
            "identity for r <= 4, n <= " + std::to_string(bound),
            firstBadR < 0 ? std::to_string(pairs) + " (r, n) pairs verified"
                          : "first failure at r = " + std::to_string(firstBadR) +
                                ", n = " + std::to_string(firstBadN),
            "computed");
    return rep;
}

Report do_warnaar(long bound) {
    Report rep = base_report("warnaar");
    rep.param("bound", std::to_string(bound));
    if (bound < 1) throw std::domain_error("warnaar: bound must be >= 1");
    if (bound > 40)
        throw std::domain_error("warnaar: bound above 40 exceeds the exponent capacity");
    long firstBad = 0;
    std::string firstDiff;
    for (long n = 1; n <= bound && !firstBad; ++n) {
        QPoly lhs(kQ);
        for (long j = 1; j <= n; ++j) {
            QPoly term = qpow(unsigned(2 * n - 2 * j)) * qbracket(unsigned(j), 2) *
                         qbracket(unsigned(j)) * qbracket(unsigned(j));
            lhs += term;
        }
        QPoly num = qbracket(unsigned(n)) * qbracket(unsigned(n + 1));
        QPoly sq = num * num;
        QPoly onePq = qconst(1) + qvar();
        auto half = QPoly::divide_exact(sq, onePq);
        auto rhs = half ? QPoly::divide_exact(*half, onePq) : std::nullopt;
        if (!rhs || !(lhs == *rhs)) {
            firstBad = n;
            firstDiff = rhs ? (lhs - *rhs).str() : "(1+q)^2 does not divide the square";
        }
    }
    rep.add("q-identity", firstBad == 0, "both sides equal for n = 1.." + std::to_string(bound),
            firstBad ? "n = " + std::to_string(firstBad) + ": " + firstDiff
                     : "verified n = 1.." + std::to_string(bound),
            "identity");
    return rep;
}

Report do_cigler(long bound) {
    Report rep = base_report("cigler");
    rep.param("bound", std::to_string(bound));
    if (bound < 1) throw std::domain_error("cigler: bound must be >= 1");
    if (bound > 15)
        throw std::domain_error("cigler: bound above 15 exceeds the exponent capacity");
    long firstBad = 0;
    std::string firstDiff;
    for (long m = 1; m <= bound && !firstBad; ++m) {
        long tm = m * (m + 1) / 2;
        QPoly lhs(kQ);
        for (long j = 1; j <= m; ++j) {
            long tj = j * (j + 1) / 2;
            lhs += qpow(unsigned(tm - tj)) * qbracket(unsigned(j)) *
                   qbracket(unsigned(j * j));
        }
        QPoly root = qbracket(unsigned(tm));
        QPoly rhs = root * root;
        if (!(lhs == rhs)) {
            firstBad = m;
            firstDiff = (lhs - rhs).str();
        }
    }
    rep.add("q-identity", firstBad == 0, "both sides equal for m = 1.." + std::to_string(bound),
            firstBad ? "m = " + std::to_string(firstBad) + ": " + firstDiff
                     : "verified m = 1.." + std::to_string(bound),
            "identity");
    return rep;
}

Report do_pythagorean() {
    Report rep = base_report("pythagorean");
    std::vector<std::string> vm{"m"};
    QPoly m = QPoly::variable(vm, "m"), one = QPoly::constant(vm, Rational(1));
    QPoly two = QPoly::constant(vm, Rational(2));
    QPoly a = two * m - one;
    QPoly b = two * m * (m - one);
    QPoly c = m * m + (m - one) * (m - one);
    QPoly d = a * a + b * b - c * c;
    rep.add("triplet-zero", d.is_zero(), "0", d.str(), "identity");
    Rational a2 = a.eval({Rational(2)}), b2 = b.eval({Rational(2)}), c2 = c.eval({Rational(2)});
    std::string got = a2.str() + "^2 + " + b2.str() + "^2 = " + c2.str() + "^2";
    rep.add("m2-triple", got == "3^2 + 4^2 = 5^2", "3^2 + 4^2 = 5^2", got, "computed");
    return rep;
}

Report do_b_multizero(int which) {
    Report rep = base_report(which == 1 ? "b-multizero-1" : "b-multizero-2");
    std::vector<std::string> jmb{"j", "m", "b"};
    QPoly j = QPoly::variable(jmb, "j"), b = QPoly::variable(jmb, "b");
    QPoly one = QPoly::constant(jmb, Rational(1)), two = QPoly::constant(jmb, Rational(2));
    std::vector<std::string> mb{"m", "b"};
    QPoly m = QPoly::variable(mb, "m"), B = QPoly::variable(mb, "b");
    QPoly oneMb = QPoly::constant(mb, Rational(1));
    QPoly quarter = QPoly::constant(mb, Rational(1, 4));

    QPoly sum(mb), rhs(mb);
    if (which == 1) {
        sum = restrict_vars(
            sum_over_j((one - b * j) * (one - two * j + b * j * j), "j", "m"), mb);
        QPoly w = B - QPoly::constant(mb, Rational(2)) + B * m;
        rhs = -(quarter * m * m * w * w);
    } else {
        QPoly bm2 = b - two;
        sum = restrict_vars(
            sum_over_j((one - b * j) * (one + bm2 * j) * (one + b * bm2 * j), "j", "m"),
            mb);
        QPoly s = (B - oneMb) * (B - oneMb);
        QPoly w = s + oneMb + m * (s - oneMb);
        rhs = -(quarter * m * m * w * w);
    }
    QPoly d = sum - rhs;
    rep.add("multiple-zero", d.is_zero(), "0", d.str(), "identity");
    return rep;
}

Report do_sqrt11_catalog() {
    Report rep = base_report("sqrt11-limit");
    Surd b(Rational(-1, 2), Rational(1, 2), Integer(11));
    Surd c = b.conj();
    std::vector<std::string> jm{"j", "m"};
    SPoly j = SPoly::variable(jm, "j");
    auto k = [&](const Surd& v) { return SPoly::constant(jm, v); };
    SPoly one = k(Surd(1));
    SPoly summand = (one + k(b) * j + k(c) * j * j) * (-one - k(c) * j - k(b) * j * j);
    SPoly S = restrict_vars(sum_over_j(summand, "j", "m"), {"m"});

    std::vector<std::string> vm{"m"};
    SPoly m = SPoly::variable(vm, "m");
    SPoly onem = SPoly::constant(vm, Surd(1)), twom = SPoly::constant(vm, Surd(2));
    SPoly tm1 = (m - onem) * m * SPoly::constant(vm, Surd(Rational(1, 2)));
    SPoly rhs = (twom * m + SPoly::constant(vm, Surd(3))) * tm1 * tm1;

    SPoly d = S - rhs;
    rep.add("limit-identity-zero", d.is_zero(), "0", d.str(), "identity");

    CoeffVector<Surd> cvv{Surd(1), b, c, Surd(-1), -c, -b};
    SPoly viaClosed = closed_sum(cvv);
    SPoly d2 = viaClosed - rhs;
    rep.add("closed-sum-form", d2.is_zero(), "0", d2.str(), "identity");

    Surd F = factor_F(cvv);
    rep.add("factor-F-zero", F.is_zero(), "0", str(F), "identity");

    Surd at3 = S.eval({Surd(3)});
    rep.add("m3-evaluation", at3 == Surd(81), "81", str(at3), "computed");
    return rep;
}

Report do_remark2(long bound) {
    Report rep = base_report("remark2-x3");
    rep.param("bound", std::to_string(bound));
    if (bound < 1) throw std::domain_error("remark2-x3: bound must be >= 1");
    std::vector<std::string> vx{"x"};
    QPoly x = QPoly::variable(vx, "x");
    QPoly tail = x * x * x - x * x;
    long positions = 0, badN = 0, badI = 0;
    for (long n = 1; n <= bound && !badN; ++n) {
        Integer tn = triangular(Integer(n));
        Integer cubes = tn * tn;
        for (long i = 1; i <= n; ++i) {
            QPoly lhs = QPoly::constant(vx, Rational(Integer(cubes - pow_int(Integer(i), 3)))) +
                        x * x * x;
            QPoly shift = QPoly::constant(vx, Rational(Integer(tn - i))) + x;
            QPoly d = lhs - shift * shift;
            QPoly stripped = d - d.coeff_of("x", 0) - d.coeff_of("x", 1) * x;
            if (!(stripped == tail)) {
                badN = n;
                badI = i;
                break;
            }
            ++positions;
        }
    }
    rep.add("tail-is-x3-minus-x2", badN == 0,
            "difference reduces to x^3 - x^2 at every position, n <= " + std::to_string(bound),
            badN ? "first failure at n = " + std::to_string(badN) + ", position " +
                       std::to_string(badI)
                 : std::to_string(positions) + " positions verified",
            "identity");
    return rep;
}

}  // namespace

const std::vector<std::string>& catalog_ids() { return kIds; }

Report catalog_verify(const std::string& id, std::optional<long> bound) {
    auto b = [&](long dflt) { return bound.value_or(dflt); };
    if (id == "nicomachus") return do_nicomachus();
    if (id == "a-family") return do_a_family();
    if (id == "liouville") return do_liouville(b(5000));
    if (id == "genfp") return do_genfp(b(30));
    if (id == "warnaar") return do_warnaar(b(12));
    if (id == "cigler") return do_cigler(b(12));
    if (id == "pythagorean") return do_pythagorean();
    if (id == "b-multizero-1") return do_b_multizero(1);
    if (id == "b-multizero-2") return do_b_multizero(2);
    if (id == "sqrt11-limit") return do_sqrt11_catalog();
    if (id == "remark2-x3") return do_remark2(b(20));
    throw std::invalid_argument("unknown catalog id: " + id);
}

}  // namespace nicomach
