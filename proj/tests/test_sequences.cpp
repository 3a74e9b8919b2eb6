#include "nicomach/report.hpp"
#include "nicomach/sequences.hpp"

#include <doctest.h>

using namespace nicomach;

namespace {

const Check* find(const Report& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

QPoly xpoly(long a0, long a1, long a2) {
    std::vector<std::string> vx{"x"};
    QPoly x = QPoly::variable(vx, "x");
    return QPoly::constant(vx, Rational(a0)) + QPoly::constant(vx, Rational(a1)) * x +
           QPoly::constant(vx, Rational(a2)) * x * x;
}

}  // namespace

TEST_CASE("u by series, closed form, and recurrence") {
    auto vs = u_series(5);
    REQUIRE(vs.size() == 5);
    CHECK(vs[0] == 1);
    CHECK(vs[1] == 901);
    CHECK(vs[2] == 359101);
    CHECK(vs[3] == 142921801);
    CHECK(vs[4] == Integer("56882518201"));

    CHECK(u_closed(1) == 1);
    CHECK(u_closed(2) == 901);
    CHECK(u_closed(3) == 359101);

    SeqState s1 = u_recurrence(1);
    CHECK(s1.u == 1);
    CHECK(s1.s == 15);
    SeqState s2 = u_recurrence(2);
    CHECK(s2.u == 901);
    CHECK(s2.s == 5985);
    CHECK(u_recurrence(4).u == 142921801);

    for (long k : {10L, 25L, 60L}) {
        Integer fromSeries = u_series(k).back();
        CHECK(fromSeries == u_closed(k));
        CHECK(fromSeries == u_recurrence(k).u);
    }

    CHECK_THROWS_AS(u_series(0), std::invalid_argument);
    CHECK_THROWS_AS(u_closed(0), std::invalid_argument);
    CHECK_THROWS_AS(u_recurrence(0), std::invalid_argument);
}

TEST_CASE("series expansion handles general rational functions") {
    // 1/(1-x) = 1 + x + x^2 + ...
    auto geo = series_coeffs(xpoly(1, 0, 0), xpoly(1, -1, 0), 5);
    for (const auto& c : geo) CHECK(c == Rational(1));
    // denominator with a zero constant term is rejected
    CHECK_THROWS_AS(series_coeffs(xpoly(1, 0, 0), xpoly(0, 1, 0), 3), std::domain_error);
}

TEST_CASE("alpha by all three methods") {
    for (auto m : {AlphaMethod::convergent, AlphaMethod::recurrence, AlphaMethod::via_u}) {
        CHECK(alpha(1, m).value == Rational(1));
        CHECK(alpha(2, m).value == Rational(22, 19));
        CHECK(alpha(3, m).value == Rational(439, 379));
    }
    for (long k : {5L, 20L, 40L}) {
        Rational c = alpha(k, AlphaMethod::convergent).value;
        CHECK(c == alpha(k, AlphaMethod::recurrence).value);
        CHECK(c == alpha(k, AlphaMethod::via_u).value);
    }
    CHECK(parse_alpha_method("via_u") == AlphaMethod::via_u);
    CHECK_THROWS_AS(parse_alpha_method("fast"), std::invalid_argument);
    CHECK_THROWS_AS(alpha(0, AlphaMethod::convergent), std::invalid_argument);
}

TEST_CASE("the index-k identity verifies symbolically and numerically") {
    Report one = verify_theorem4(1);
    CHECK(one.all_ok());
    const Check* m3 = find(one, "m3-evaluation");
    REQUIRE(m3);
    CHECK(m3->expected == "61");
    CHECK(m3->actual == "61");
    REQUIRE(find(one, "closed-form-zero"));
    CHECK(find(one, "closed-form-zero")->actual == "0");
    REQUIRE(find(one, "summand-expansion"));

    CHECK(verify_theorem4(5).all_ok());
    CHECK(verify_theorem4(10).all_ok());
    CHECK_THROWS_AS(verify_theorem4(0), std::invalid_argument);
}

TEST_CASE("the limiting identity verifies over the quadratic field") {
    Report r = verify_sqrt11_limit();
    CHECK(r.all_ok());
    const Check* m3 = find(r, "m3-evaluation");
    REQUIRE(m3);
    CHECK(m3->actual == "81");
    REQUIRE(find(r, "correction-numerator-k-independent"));
    REQUIRE(find(r, "denominator-monotone"));
    CHECK(find(r, "limit-identity-zero")->actual == "0");
    CHECK(find(r, "closed-sum-form")->actual == "0");
    CHECK(find(r, "factor-F-zero")->actual == "0");
}

TEST_CASE("congruence presets pass with the expected discriminants") {
    Report p3 = congruence_preset_report("prop3", 200);
    CHECK(p3.all_ok());
    CHECK(find(p3, "numerator-disc")->actual == "252000 = 900 * 2^3 * 5 * 7");
    CHECK(find(p3, "denominator-core-disc")->actual == "158400 = 900 * 2^4 * 11");
    CHECK(find(p3, "residues-all-one")->status == Status::pass);

    Report r6 = congruence_preset_report("remark6", 200);
    CHECK(r6.all_ok());
    CHECK(find(r6, "numerator-disc")->actual == "16896 = 2^9 * 3 * 11");
    CHECK(find(r6, "denominator-core-disc")->actual == "15125 = 5^3 * 11^2");

    CHECK_THROWS_AS(congruence_preset_report("prop4", 10), std::invalid_argument);
    CHECK_THROWS_AS(congruence_preset_report("prop3", 0), std::invalid_argument);
}

TEST_CASE("violations are listed individually") {
    Report bad = congruence_scan(xpoly(1, 502, 1), xpoly(1, -1, 0) * xpoly(1, -398, 1),
                                 Integer(7), 5);
    CHECK_FALSE(bad.all_ok());
    const Check* sum = find(bad, "residues-all-one");
    REQUIRE(sum);
    CHECK(sum->status == Status::fail);
    bool sawIndexed = false;
    for (const auto& c : bad.checks)
        if (c.name.rfind("residue-x^", 0) == 0) {
            sawIndexed = true;
            CHECK(c.status == Status::fail);
            CHECK(c.expected == "1");
        }
    CHECK(sawIndexed);
}

TEST_CASE("the modulus-m construction scans clean for any m > 123") {
    auto c253 = remark6_construct(Integer(253), 200);
    CHECK(c253.report.all_ok());
    CHECK(find(c253.report, "numerator-disc")->status == Status::pass);
    CHECK(find(c253.report, "numerator-disc")->actual == "16896 = 2^9 * 3 * 11");

    auto c124 = remark6_construct(Integer(124), 60);
    CHECK(c124.report.all_ok());
    CHECK(find(c124.report, "numerator")->actual == "x^2 + x + 1");
    CHECK(find(c124.report, "numerator-disc")->status == Status::info);

    auto big = remark6_construct(Integer(100000), 40);
    CHECK(big.report.all_ok());

    CHECK_THROWS_AS(remark6_construct(Integer(123), 10), std::domain_error);
    CHECK_THROWS_AS(remark6_construct(Integer(253), 0), std::invalid_argument);
}

TEST_CASE("sequence reports cover the documented properties") {
    Report u = seq_u_report(60, "all");
    CHECK(u.all_ok());
    REQUIRE(find(u, "three-method-agreement"));
    CHECK(find(u, "three-method-agreement")->status == Status::pass);

    Report u200 = seq_u_report(200, "series");
    CHECK(u200.all_ok());
    CHECK(find(u200, "somos-square")->status == Status::pass);
    CHECK(find(u200, "mod-900")->status == Status::pass);
    CHECK_FALSE(find(u200, "three-method-agreement"));

    Report a = seq_alpha_report(40, "all");
    CHECK(a.all_ok());
    CHECK(find(a, "cf-pattern")->status == Status::pass);
    CHECK(find(a, "upper-bound")->status == Status::pass);
    CHECK(find(a, "monotone")->status == Status::pass);
    CHECK(find(a, "limit-cf")->actual == "[1; (6, 3)*]");

    CHECK_THROWS_AS(seq_u_report(10, "magic"), std::invalid_argument);
    CHECK_THROWS_AS(seq_alpha_report(10, "magic"), std::invalid_argument);
    CHECK_THROWS_AS(seq_u_report(0, "all"), std::invalid_argument);
}
