#include "nicomach/identities.hpp"

#include "nicomach/linsolve.hpp"
#include "nicomach/polymatrix.hpp"

#include <future>
#include <sstream>

namespace nicomach {

namespace {

const std::vector<std::string> kM{"m"};
const std::vector<std::string> kMX{"m", "x"};
const std::vector<std::string> kSym{"m", "a", "b", "c", "d", "e", "f"};

QPoly mv(const std::vector<std::string>& vars, const std::string& name) {
    return QPoly::variable(vars, name);
}
QPoly cv(const std::vector<std::string>& vars, const Rational& v) {
    return QPoly::constant(vars, v);
}

std::string poly_vec_str(const std::vector<QPoly>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + "]";
}

// Entrywise difference rendered compactly: "0" when equal.
std::string matrix_diff_str(const PolyMatrix<Rational>& A, const PolyMatrix<Rational>& B) {
    std::string s;
    for (std::size_t r = 0; r < A.rows(); ++r)
        for (std::size_t c = 0; c < A.cols(); ++c) {
            QPoly d = A.at(r, c) - B.at(r, c);
            if (!d.is_zero()) {
                if (!s.empty()) s += "; ";
                s += "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "): " + d.str();
            }
        }
    return s.empty() ? "0" : s;
}

}  // namespace

QPoly closed_sum_poly(const std::array<QPoly, 6>& entries) {
    const auto& base = entries[0].vars();
    std::vector<std::string> vj{"j"};
    vj.insert(vj.end(), base.begin(), base.end());
    auto lift = [&](const QPoly& p) { return restrict_vars(p, vj); };
    QPoly j = mv(vj, "j");
    QPoly s = (lift(entries[0]) + lift(entries[1]) * j + lift(entries[2]) * j * j) *
              (lift(entries[3]) + lift(entries[4]) * j + lift(entries[5]) * j * j);
    return restrict_vars(sum_over_j(s, "j", "m"), base);
}

QPoly closed_sum_symbolic() {
    std::array<QPoly, 6> e{mv(kSym, "a"), mv(kSym, "b"), mv(kSym, "c"),
                           mv(kSym, "d"), mv(kSym, "e"), mv(kSym, "f")};
    return closed_sum_poly(e);
}

QPoly factor_F_symbolic() {
    QPoly a = mv(kSym, "a"), b = mv(kSym, "b"), c = mv(kSym, "c");
    QPoly d = mv(kSym, "d"), e = mv(kSym, "e"), f = mv(kSym, "f");
    auto k = [&](long v) { return cv(kSym, Rational(v)); };
    return k(5) * a * (k(6) * d + k(3) * e + f) + k(5) * b * (k(3) * d + e) +
           c * (k(5) * d - f);
}

namespace {

// The three defining sums evaluated directly at integer m, rational x.
struct BruteTerms {
    Rational L, R;
    bool hasP = false;
    Rational P;
};

BruteTerms brute_terms(Parity parity, long mval, const Rational& x) {
    BruteTerms out;
    Rational L(0);
    auto cube = [](const Rational& v) { return v * v * v; };
    if (parity == Parity::odd) {
        long mi = mval + 1;  // odd side compares at index m+1
        for (long j = 1; j <= mi; ++j) L += Rational(pow_int(Integer(2 * j - 1), 3));
        L += cube(x);
        for (long j = 2; j <= mi; ++j)
            L += cube(Rational(2 * j - 2) + Rational(j - 1) * x);
        Rational t2m1(triangular(Integer(2 * mi - 1)));
        Rational tm1(triangular(Integer(mi - 1)));
        Rational r = t2m1 + (Rational(1) + tm1) * x;
        out.R = r * r;
        out.hasP = true;
        Rational P(0);
        for (long j = 0; j <= mval; ++j)
            P += (Rational(4 * j + 1) + Rational(j) * x) *
                 (Rational((j + 1) * (j - 2)) + Rational(j * j) * x);
        out.P = P;
    } else {
        for (long j = 1; j <= mval; ++j) L += Rational(pow_int(Integer(2 * j - 1), 3));
        L += cube(x);
        for (long j = 1; j <= mval; ++j) L += cube(Rational(2 * j) + Rational(j) * x);
        Rational t2m(triangular(Integer(2 * mval)));
        Rational tm(triangular(Integer(mval)));
        Rational r = t2m + (Rational(1) + tm) * x;
        out.R = r * r;
    }
    out.L = L;
    return out;
}

}  // namespace

Report verify_theorem1(Parity parity) {
    Report rep;
    rep.command = "verify thm1";
    rep.param("parity", parity_str(parity));

    TermTriple t = build_terms(parity);
    QPoly diff = t.L - t.R - t.XP;
    rep.add("balanced-identity-zero", diff.is_zero(), "0", diff.str(), "identity");

    QPoly m = mv(kMX, "m"), x = mv(kMX, "x");
    QPoly one = cv(kMX, Rational(1)), four = cv(kMX, Rational(4));
    QPoly q = cv(kMX, Rational(1, 4));
    QPoly m4L = q * (x + four) * ((x + one) * (x + one) + cv(kMX, Rational(3)));
    QPoly m4R = q * (x + four) * (x + four);
    QPoly m4XP = q * x * (x + one) * (x + four);
    rep.add("m4-coefficient-L", t.L.coeff_of("m", 4) == m4L, m4L.str(),
            t.L.coeff_of("m", 4).str(), "identity");
    rep.add("m4-coefficient-R", t.R.coeff_of("m", 4) == m4R, m4R.str(),
            t.R.coeff_of("m", 4).str(), "identity");
    rep.add("m4-coefficient-XP", t.XP.coeff_of("m", 4) == m4XP, m4XP.str(),
            t.XP.coeff_of("m", 4).str(), "identity");

    QPoly tm = m * (m + one) * cv(kMX, Rational(1, 2));
    QPoly x3L = one + tm * tm;
    QPoly x3R(kMX);
    rep.add("x3-coefficient-L", t.L.coeff_of("x", 3) == x3L, x3L.str(),
            t.L.coeff_of("x", 3).str(), "identity");
    rep.add("x3-coefficient-R", t.R.coeff_of("x", 3) == x3R, "0",
            t.R.coeff_of("x", 3).str(), "identity");
    rep.add("x3-coefficient-XP", t.XP.coeff_of("x", 3) == x3L, x3L.str(),
            t.XP.coeff_of("x", 3).str(), "identity");

    // At x = 0 the mixed term drops out and L = R is Nicomachus' identity.
    QPoly zero(kMX);
    QPoly lr0 = t.L.substitute("x", zero) - t.R.substitute("x", zero);
    rep.add("x0-specialization", lr0.is_zero(), "0", lr0.str(), "identity");

    // Spot check against the defining sums, m = 5, x = 7.
    BruteTerms bt = brute_terms(parity, 5, Rational(7));
    std::vector<Rational> pt{Rational(5), Rational(7)};
    std::string expectedSums = "L=" + bt.L.str() + " R=" + bt.R.str();
    std::string actualSums =
        "L=" + t.L.eval(pt).str() + " R=" + t.R.eval(pt).str();
    if (bt.hasP) {
        expectedSums += " P=" + bt.P.str();
        actualSums += " P=" + p_poly(parity).eval(pt).str();
    }
    rep.add("defining-sums-match-m5-x7", expectedSums == actualSums, expectedSums,
            actualSums, "cross-method");
    Rational spot = t.L.eval(pt) - t.R.eval(pt) - t.XP.eval(pt);
    rep.add("spot-evaluation-m5-x7", spot.is_zero(), "0", spot.str(), "computed");
    return rep;
}

Report double_equation_checks() {
    Report rep;
    rep.command = "verify matrix";
    QPoly m = mv(kM, "m"), one = cv(kM, Rational(1)), two = cv(kM, Rational(2));
    QPoly tm = m * (m + one) * cv(kM, Rational(1, 2));
    QPoly lhs = cv(kM, Rational(12)) * tm * tm;
    QPoly k = two + m + m * m;
    QPoly da = lhs - (one + m) * (one + two * m) * k -
               (one + m) * (two + m) * (-one - two * m + m * m);
    rep.add("double-representation-a", da.is_zero(), "0", da.str(), "identity");
    QPoly db = lhs - m * (one + two * m) * k -
               (-one + m) * m * (two + cv(kM, Rational(4)) * m + m * m);
    rep.add("double-representation-b", db.is_zero(), "0", db.str(), "identity");

    Rational at3 = lhs.eval({Rational(3)});
    Rational p1 = ((one + m) * (one + two * m) * k).eval({Rational(3)});
    Rational p2 = ((one + m) * (two + m) * (-one - two * m + m * m)).eval({Rational(3)});
    std::string got = at3.str() + " = " + p1.str() + " + " + p2.str();
    rep.add("double-evaluation-m3", got == "432 = 392 + 40", "432 = 392 + 40", got,
            "computed");
    return rep;
}

CubicPair solve_cubic_pair() {
    QPoly m = mv(kM, "m"), one = cv(kM, Rational(1));
    QPoly U = (one + m) * (one + cv(kM, Rational(2)) * m) * (one + cv(kM, Rational(3)) * m);
    QPoly V = (one + m) * (cv(kM, Rational(2)) + m) * (cv(kM, Rational(3)) + m);
    QPoly m3 = m * m * m;
    QPoly W = cv(kM, Rational(7)) * m3 * (one + m) * (one + m) * (one + m);
    // Unknowns: low coefficients (a0, a1, a2, b0, b1, b2) of the monic cubics.
    QPoly base = U * m3 + V * m3 - W;
    std::vector<QPoly> cols;
    for (unsigned i = 0; i < 3; ++i) cols.push_back(U * m.pow(i));
    for (unsigned i = 0; i < 3; ++i) cols.push_back(V * m.pow(i));

    std::vector<std::vector<Rational>> A(7, std::vector<Rational>(6, Rational(0)));
    std::vector<Rational> rhs(7, Rational(0));
    for (unsigned r = 0; r < 7; ++r) {
        for (unsigned c = 0; c < 6; ++c) A[r][c] = cols[c].coeff_of("m", r).constant_term();
        rhs[r] = -base.coeff_of("m", r).constant_term();
    }
    LinearSolution sol = solve_linear(A, rhs);

    CubicPair out{QPoly(kM), QPoly(kM), {}, {}};
    out.report.command = "verify matrix";
    if (!sol.feasible) {
        out.report.add("cubic-pair-identity", false, "feasible linear system",
                       "no solution", "identity");
        return out;
    }
    auto cubic = [&](const Rational& c0, const Rational& c1, const Rational& c2) {
        return m3 + cv(kM, c2) * m * m + cv(kM, c1) * m + cv(kM, c0);
    };
    out.A3 = cubic(sol.particular[0], sol.particular[1], sol.particular[2]);
    out.B3 = cubic(sol.particular[3], sol.particular[4], sol.particular[5]);
    for (const auto& kvec : sol.kernel)
        out.kernel.emplace_back(
            cv(kM, kvec[2]) * m * m + cv(kM, kvec[1]) * m + cv(kM, kvec[0]),
            cv(kM, kvec[5]) * m * m + cv(kM, kvec[4]) * m + cv(kM, kvec[3]));

    QPoly resid = U * out.A3 + V * out.B3 - W;
    out.report.add("cubic-pair-identity", resid.is_zero(), "0", resid.str(), "identity");
    out.report.add("cubic-pair-kernel-dimension", !out.kernel.empty(), ">= 1",
                   std::to_string(out.kernel.size()), "identity");
    if (!out.kernel.empty()) {
        QPoly resid2 = U * (out.A3 + out.kernel[0].first) +
                       V * (out.B3 + out.kernel[0].second) - W;
        out.report.add("cubic-pair-perturbed", resid2.is_zero(), "0", resid2.str(),
                       "identity");
    }
    out.report.info("cubic-pair-solution", "monic cubics",
                    "A3 = " + out.A3.str() + "; B3 = " + out.B3.str(), "computed");
    return out;
}

Report matrix_checks(bool parallel) {
    Report rep;
    rep.command = "verify matrix";
    rep.param("variant", "mx");

    PolyMatrix<Rational> Modd = coefficient_matrix(Parity::odd);
    PolyMatrix<Rational> Meven = coefficient_matrix(Parity::even);
    PolyMatrix<Rational> Mexp = coefficient_matrix_expected_odd();
    PolyMatrix<Rational> corr = correction_matrix();

    std::string entryDiff = matrix_diff_str(Modd, Mexp);
    rep.add("odd-matrix-entries", entryDiff == "0", "0", entryDiff, "identity");

    QPoly one = cv(kMX, Rational(1));
    std::vector<QPoly> ident{one, -one, -one};
    auto prodOdd = Modd.apply(ident);
    rep.add("odd-identity-vector",
            prodOdd[0].is_zero() && prodOdd[1].is_zero() && prodOdd[2] == -one &&
                prodOdd[3] == one,
            "[0, 0, -1, 1]", poly_vec_str(prodOdd), "identity");
    auto prodCorr = corr.apply(ident);
    bool corrZero = true;
    for (const auto& p : prodCorr) corrZero = corrZero && p.is_zero();
    rep.add("correction-identity-vector", corrZero, "[0, 0, 0, 0]",
            poly_vec_str(prodCorr), "identity");
    std::string corrDiff = matrix_diff_str(Meven - Modd, corr);
    rep.add("even-minus-odd", corrDiff == "0", "0", corrDiff, "identity");
    auto prodEven = Meven.apply(ident);
    rep.add("even-identity-vector",
            prodEven[0].is_zero() && prodEven[1].is_zero() && prodEven[2] == -one &&
                prodEven[3] == one,
            "[0, 0, -1, 1]", poly_vec_str(prodEven), "identity");

    // Row-removed determinants: drop one row at a time, in row order.
    QPoly m = mv(kMX, "m");
    QPoly two = cv(kMX, Rational(2));
    auto c = [&](long v) { return cv(kMX, Rational(v)); };
    QPoly onePm = one + m, oneP2m = one + two * m;
    std::array<QPoly, 4> expected{
        cv(kMX, Rational(1, 4)) * onePm * (two + m + m * m) *
            (c(4) + c(8) * m + m * m + c(19) * m * m * m + c(29) * m.pow(4) +
             c(11) * m.pow(5)),
        cv(kMX, Rational(1, 2)) * m * onePm.pow(3) * oneP2m * oneP2m *
            (c(-2) + c(3) * m + c(3) * m * m),
        onePm.pow(3) * (two + m) * oneP2m * oneP2m * (-one - two * m + m * m),
        -(onePm.pow(3) * (two + m) * oneP2m * oneP2m * (-one - two * m + m * m))};

    std::array<QPoly, 4> dets{QPoly(kMX), QPoly(kMX), QPoly(kMX), QPoly(kMX)};
    if (parallel) {
        std::array<std::future<QPoly>, 4> fut;
        for (std::size_t r = 0; r < 4; ++r)
            fut[r] = std::async(std::launch::async,
                                [&Modd, r] { return det(Modd.remove_row(r)); });
        for (std::size_t r = 0; r < 4; ++r) dets[r] = fut[r].get();
    } else {
        for (std::size_t r = 0; r < 4; ++r) dets[r] = det(Modd.remove_row(r));
    }
    for (std::size_t r = 0; r < 4; ++r)
        rep.add("det-remove-row-" + std::to_string(r + 1), dets[r] == expected[r],
                expected[r].str(), dets[r].str(), "identity");
    QPoly detSum = dets[2] + dets[3];
    rep.add("det-rows-3-4-sum", detSum.is_zero(), "0", detSum.str(), "identity");

    rep.merge(double_equation_checks());
    rep.merge(solve_cubic_pair().report);
    return rep;
}

Report xm_variant_checks() {
    Report rep;
    rep.command = "verify matrix";
    rep.param("variant", "xm");

    PolyMatrix<Rational> Mx = coefficient_matrix_xm(Parity::odd);
    QPoly one = cv(kMX, Rational(1)), x = mv(kMX, "x");
    auto prod = Mx.apply_left({one, -one, -one});
    QPoly corrPoly = x * x * x - x * x;
    bool ok = prod[0] == corrPoly;
    for (std::size_t i = 1; i < prod.size(); ++i) ok = ok && prod[i].is_zero();
    rep.add("row-vector-product", ok, "[x^3 - x^2, 0, 0, 0, 0]", poly_vec_str(prod),
            "identity");

    QPoly repRhs = (one + x) * (one - x + x * x) - (one + x) * (one + x) -
                   (cv(kMX, Rational(-2)) * x);
    rep.add("correction-representation", repRhs == corrPoly, corrPoly.str(),
            repRhs.str(), "identity");

    QPoly d = det(Mx.keep_cols({0, 1, 4}));
    QPoly four = cv(kMX, Rational(4));
    QPoly dExp = cv(kMX, Rational(1, 4)) * x * x * x * (-one + x) * (four + x) *
                 (cv(kMX, Rational(34)) + cv(kMX, Rational(24)) * x +
                  cv(kMX, Rational(9)) * x * x + x * x * x);
    rep.add("column-removed-determinant", d == dExp, dExp.str(), d.str(), "identity");

    Rational at1 = corrPoly.eval({Rational(0), Rational(1)});
    rep.add("row-product-x1-zero", at1.is_zero(), "0", at1.str(), "computed");
    return rep;
}

Report discriminant_report() {
    Report rep;
    rep.command = "disc report";

    QPoly S = closed_sum_symbolic();
    QPoly F = factor_F_symbolic();

    QPoly D = discriminant(S, "m");
    QPoly res = resultant(S, S.derivative("m"), "m");
    QPoly m = mv(kSym, "m");
    auto Sdiv = QPoly::divide_exact(S, m);
    if (!Sdiv) throw std::runtime_error("discriminant_report: S has nonzero constant term");
    QPoly Dq = discriminant(*Sdiv, "m");

    std::size_t nD = D.term_count(), nRes = res.term_count(), nQ = Dq.term_count();
    rep.info("term-count-disc", "-", std::to_string(nD), "computed");
    rep.info("term-count-resultant", "-", std::to_string(nRes), "computed");
    rep.info("term-count-disc-quartic", "-", std::to_string(nQ), "computed");
    bool matches = nD == 1114 || nRes == 1114 || nQ == 1114;
    rep.add("term-count-1114", matches, "1114 under at least one convention",
            "disc=" + std::to_string(nD) + ", resultant=" + std::to_string(nRes) +
                ", quartic=" + std::to_string(nQ),
            "computed");

    auto quot = QPoly::divide_exact(D, F);
    rep.add("F-divides-D", quot.has_value(), "remainder 0",
            quot ? "remainder 0" : "not divisible", "identity");
    if (quot)
        rep.info("term-count-quotient", "-", std::to_string(quot->term_count()),
                 "computed");

    // Specializing to the Nicomachean case collapses the quintic to a square,
    // so the discriminant must vanish there.
    // Variable order: m, a, b, c, d, e, f.
    Rational dnico = D.eval({Rational(0), Rational(0), Rational(0), Rational(1),
                             Rational(0), Rational(1), Rational(0)});
    rep.add("nicomachean-specialization", dnico.is_zero(), "0", dnico.str(), "identity");
    return rep;
}

}  // namespace nicomach
