#include "nicomach/identities.hpp"
#include "nicomach/report.hpp"
#include "nicomach/terms.hpp"

#include <doctest.h>

using namespace nicomach;

namespace {

const Check* find(const Report& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("the balanced identity vanishes for both parities") {
    for (Parity p : {Parity::odd, Parity::even}) {
        Report r = verify_theorem1(p);
        CHECK(r.all_ok());
        const Check* z = find(r, "balanced-identity-zero");
        REQUIRE(z);
        CHECK(z->actual == "0");
    }
}

TEST_CASE("leading coefficients match their factored forms") {
    Report r = verify_theorem1(Parity::odd);
    const Check* l = find(r, "m4-coefficient-L");
    REQUIRE(l);
    CHECK(l->status == Status::pass);
    CHECK(l->expected == "1/4*x^3 + 3/2*x^2 + 3*x + 4");
    const Check* xr = find(r, "x3-coefficient-R");
    REQUIRE(xr);
    CHECK(xr->expected == "0");
    const Check* xl = find(r, "x3-coefficient-L");
    REQUIRE(xl);
    CHECK(xl->expected == "1/4*m^4 + 1/2*m^3 + 1/4*m^2 + 1");
    CHECK(find(r, "m4-coefficient-R"));
    CHECK(find(r, "m4-coefficient-XP"));
    CHECK(find(r, "x3-coefficient-XP"));
}

TEST_CASE("matrix proof passes and is deterministic under parallelism") {
    Report serial = matrix_checks(false);
    Report parallel = matrix_checks(true);
    CHECK(serial.all_ok());
    CHECK(to_json(serial) == to_json(parallel));
    CHECK(find(serial, "odd-identity-vector"));
    CHECK(find(serial, "even-minus-odd"));
    CHECK(find(serial, "det-rows-3-4-sum"));
}

TEST_CASE("transposed variant passes") {
    Report r = xm_variant_checks();
    CHECK(r.all_ok());
    CHECK(r.command == "verify matrix");
}

TEST_CASE("coefficient matrices have the expected shapes") {
    PolyMatrix<Rational> modd = coefficient_matrix(Parity::odd);
    CHECK(modd.rows() == 4);
    CHECK(modd.cols() == 3);
    PolyMatrix<Rational> xm = coefficient_matrix_xm(Parity::odd);
    CHECK(xm.rows() == 3);
    CHECK(xm.cols() == 5);
}

TEST_CASE("cubic pair solves the weighted decomposition with a nonzero kernel") {
    CubicPair cp = solve_cubic_pair();
    CHECK(cp.report.all_ok());
    REQUIRE_FALSE(cp.kernel.empty());

    std::vector<std::string> vm{"m"};
    QPoly m = QPoly::variable(vm, "m");
    QPoly one = QPoly::constant(vm, Rational(1));
    QPoly two = QPoly::constant(vm, Rational(2));
    QPoly three = QPoly::constant(vm, Rational(3));
    QPoly seven = QPoly::constant(vm, Rational(7));
    QPoly wA = (one + m) * (one + two * m) * (one + three * m);
    QPoly wB = (one + m) * (two + m) * (three + m);
    QPoly target = seven * m * m * m * (one + m) * (one + m) * (one + m);
    CHECK((wA * cp.A3 + wB * cp.B3 - target).is_zero());
    for (const auto& [hA, hB] : cp.kernel) {
        CHECK_FALSE((hA.is_zero() && hB.is_zero()));
        CHECK((wA * hA + wB * hB).is_zero());
    }
}
