#include "nicomach/terms.hpp"

#include "nicomach/summation.hpp"

#include <stdexcept>

namespace nicomach {

Parity parse_parity(const std::string& s) {
    if (s == "odd") return Parity::odd;
    if (s == "even") return Parity::even;
    throw std::invalid_argument("parity must be odd or even, got " + s);
}

std::string parity_str(Parity p) { return p == Parity::odd ? "odd" : "even"; }

namespace {

const std::vector<std::string> kJMX{"j", "m", "x"};
const std::vector<std::string> kMX{"m", "x"};

QPoly jmx(const std::string& name) { return QPoly::variable(kJMX, name); }
QPoly cjmx(long v) { return QPoly::constant(kJMX, Rational(v)); }

// Sum f over j = 1..m and re-express the (now j-free) result over {m, x}.
QPoly summed(const QPoly& f) { return restrict_vars(sum_over_j(f, "j", "m"), kMX); }

QPoly mx(const std::string& name) { return QPoly::variable(kMX, name); }
QPoly cmx(const Rational& v) { return QPoly::constant(kMX, v); }

QPoly cube(const QPoly& p) { return p * p * p; }

// Sum of the first block of odd cubes plus the mixed block, shared by both
// parities; only the mixed summand differs.
QPoly odd_cube_block() {
    QPoly j = jmx("j");
    return summed(cube(cjmx(2) * j - cjmx(1)));
}

}  // namespace

QPoly p_poly(Parity parity) {
    QPoly j = jmx("j"), x = jmx("x");
    // (4j + 1 + jx)((j + 1)(j - 2) + j^2 x), summed over j = 0..m.
    QPoly h = (cjmx(4) * j + cjmx(1) + j * x) *
              ((j + cjmx(1)) * (j - cjmx(2)) + j * j * x);
    QPoly hAt0 = cmx(Rational(-2));  // h(0)
    QPoly podd = summed(h) + hAt0;
    if (parity == Parity::odd) return podd;
    // Even variant: reflect the index, m -> -m - 1.
    return podd.substitute("m", -(mx("m")) - cmx(Rational(1)));
}

TermTriple build_terms(Parity parity) {
    QPoly j = jmx("j"), x = jmx("x");
    QPoly m = mx("m"), X = mx("x");
    QPoly one = cmx(Rational(1));

    TermTriple t{QPoly(kMX), QPoly(kMX), QPoly(kMX), parity};

    if (parity == Parity::odd) {
        // Mixed block starts at j = 2; its j = 1 summand vanishes, so summing
        // from 1 and subtracting the (zero) first term keeps the bookkeeping
        // honest.
        QPoly g = cube((cjmx(2) * j - cjmx(2)) + (j - cjmx(1)) * x);
        QPoly gAt1 = restrict_vars(g.substitute("j", cjmx(1)), kMX);
        QPoly lAtM = odd_cube_block() + X * X * X + (summed(g) - gAt1);
        // Both parities are compared at a common index, which shifts the odd
        // side up by one.
        QPoly mp1 = m + one;
        t.L = lAtM.substitute("m", mp1);
        // (T_{2m-1} + (1 + T_{m-1}) x)^2 at index m+1.
        QPoly t2m1 = m * (cmx(Rational(2)) * m - one);          // T_{2m-1}
        QPoly tm1 = (m - one) * m * cmx(Rational(1, 2));        // T_{m-1}
        QPoly rAtM = (t2m1 + (one + tm1) * X) * (t2m1 + (one + tm1) * X);
        t.R = rAtM.substitute("m", mp1);
    } else {
        QPoly g = cube(cjmx(2) * j + j * x);
        t.L = odd_cube_block() + X * X * X + summed(g);
        QPoly t2m = m * (cmx(Rational(2)) * m + one);           // T_{2m}
        QPoly tm = m * (m + one) * cmx(Rational(1, 2));         // T_m
        t.R = (t2m + (one + tm) * X) * (t2m + (one + tm) * X);
    }
    t.XP = X * p_poly(parity) + X * X * X - X * X;
    return t;
}

PolyMatrix<Rational> coefficient_matrix(Parity parity) {
    TermTriple t = build_terms(parity);
    QPoly X = mx("x");
    // Third column is x*P without the cubic correction.
    QPoly xp = t.XP + X * X - X * X * X;
    PolyMatrix<Rational> M(4, 3, kMX);
    const QPoly* cols[3] = {&t.L, &t.R, &xp};
    for (std::size_t c = 0; c < 3; ++c)
        for (unsigned r = 0; r < 4; ++r) M.at(r, c) = cols[c]->coeff_of("x", r);
    return M;
}

PolyMatrix<Rational> coefficient_matrix_expected_odd() {
    QPoly m = mx("m");
    QPoly one = cmx(Rational(1)), two = cmx(Rational(2));
    QPoly q = cmx(Rational(1, 4));
    QPoly tm = m * (m + one) * cmx(Rational(1, 2));
    QPoly t2m1 = (two * m + one) * (m + one);  // T_{2m+1}
    QPoly k = two + m + m * m;

    PolyMatrix<Rational> M(4, 3, kMX);
    M.at(0, 0) = t2m1 * t2m1;
    M.at(0, 1) = (one + m) * (one + m) * (one + two * m) * (one + two * m);
    M.at(1, 0) = cmx(Rational(12)) * tm * tm;
    M.at(1, 1) = (one + m) * (one + two * m) * k;
    M.at(1, 2) = (one + m) * (two + m) * (-one - two * m + m * m);
    M.at(2, 0) = cmx(Rational(6)) * tm * tm;
    M.at(2, 1) = q * k * k;
    M.at(2, 2) = q * m * (one + m) * (cmx(Rational(-4)) + cmx(Rational(5)) * m + cmx(Rational(5)) * m * m);
    M.at(3, 0) = one + tm * tm;
    M.at(3, 2) = tm * tm;
    return M;
}

PolyMatrix<Rational> correction_matrix() {
    QPoly m = mx("m");
    QPoly one = cmx(Rational(1)), two = cmx(Rational(2));
    QPoly w = two * m + one;
    QPoly J = -(w * w * w);
    QPoly K = w * (two + m + m * m);
    PolyMatrix<Rational> M(4, 3, kMX);
    M.at(0, 0) = J;
    M.at(0, 1) = J;
    M.at(1, 1) = -K;
    M.at(1, 2) = K;
    return M;
}

PolyMatrix<Rational> coefficient_matrix_xm(Parity parity) {
    TermTriple t = build_terms(parity);
    QPoly X = mx("x");
    QPoly xp = t.XP + X * X - X * X * X;
    PolyMatrix<Rational> M(3, 5, kMX);
    const QPoly* rows[3] = {&t.L, &t.R, &xp};
    for (std::size_t r = 0; r < 3; ++r)
        for (unsigned c = 0; c < 5; ++c) M.at(r, c) = rows[r]->coeff_of("m", c);
    return M;
}

}  // namespace nicomach
