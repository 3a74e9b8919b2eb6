#include "nicomach/algebraic.hpp"
#include "nicomach/cfharness.hpp"
#include "nicomach/cfrac.hpp"
#include "nicomach/report.hpp"

#include <doctest.h>

using namespace nicomach;

namespace {

std::vector<Integer> vi(std::initializer_list<long> xs) {
    std::vector<Integer> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

IPoly ip(std::initializer_list<long> ascending) {
    std::vector<Integer> c;
    for (long x : ascending) c.emplace_back(x);
    return IPoly(c);
}

const Check* find(const Report& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("euclidean expansions are canonical and terminate") {
    CFExpansion e = cf_rational(Rational(22, 19));
    CHECK(e.quotients == vi({1, 6, 3}));
    CHECK(e.terminated);
    CHECK_FALSE(e.period.has_value());
    CHECK(e.str() == "[1; 6, 3]");
    CHECK(cf_rational(Rational(439, 379)).quotients == vi({1, 6, 3, 6, 3}));
    CHECK(cf_rational(Rational(-7, 2)).quotients == vi({-4, 2}));
    CHECK(cf_rational(Rational(5)).quotients == vi({5}));
}

TEST_CASE("quadratic irrationals get periodic expansions") {
    CFExpansion s11 = cf_quadratic(Surd::sqrt(Integer(11)));
    CHECK(s11.quotients == vi({3, 3, 6}));
    REQUIRE(s11.period.has_value());
    CHECK(s11.period->first == 1);
    CHECK(s11.period->second == 2);
    CHECK(s11.str() == "[3; (3, 6)*]");

    CFExpansion limit = cf_quadratic(Surd(Rational(-1, 2), Rational(1, 2), Integer(11)));
    CHECK(limit.str() == "[1; (6, 3)*]");

    CFExpansion shifted = cf_quadratic(Surd(Rational(1), Rational(1), Integer(11)));
    CHECK(shifted.str() == "[4; (3, 6)*]");

    CFExpansion golden = cf_quadratic(Surd(Rational(1, 2), Rational(1, 2), Integer(5)));
    CHECK(golden.quotients == vi({1}));
    REQUIRE(golden.period.has_value());
    CHECK(golden.period->first == 0);
    CHECK(golden.str() == "[(1)*]");

    CHECK_THROWS_AS(cf_quadratic(Surd(Rational(3))), std::domain_error);
}

TEST_CASE("convergents satisfy the determinant identity") {
    auto cs = convergents(vi({1, 6, 3}));
    REQUIRE(cs.size() == 3);
    CHECK(cs[0].p == 1);
    CHECK(cs[0].q == 1);
    CHECK(cs[1].p == 7);
    CHECK(cs[1].q == 6);
    CHECK(cs[2].p == 22);
    CHECK(cs[2].q == 19);
    CHECK(convergent_determinants_ok(vi({1, 6, 3})));
    CHECK(convergent_determinants_ok(vi({3, 3, 6, 3, 6})));
}

TEST_CASE("root isolation finds the root nearest the target") {
    AlgebraicReal r = isolate_root_near(ip({-11, 0, 1}), Rational(3));
    CHECK_FALSE(r.degenerate());
    CHECK(cf_algebraic(r, 9).quotients == vi({3, 3, 6, 3, 6, 3, 6, 3, 6}));

    // rational root via a linear factor
    AlgebraicReal lin = isolate_root_near(ip({-22, 19}), Rational(1));
    CFExpansion e = cf_algebraic(lin, 10);
    CHECK(e.quotients == vi({1, 6, 3}));
    CHECK(e.terminated);

    // the target itself is a root: degenerate interval
    AlgebraicReal hit = isolate_root_near(ip({-28, -3, 1}), Rational(-4));
    CHECK(hit.degenerate());
    CHECK(cf_algebraic(hit, 5).quotients == vi({-4}));
}

TEST_CASE("root isolation rejects bad input loudly") {
    // no root within distance 1
    CHECK_THROWS_AS(isolate_root_near(ip({-28, -3, 1}), Rational(0)), std::domain_error);
    // squarefree precondition: (x-1)^2(x+2)
    CHECK_THROWS_AS(isolate_root_near(ip({2, -3, 0, 1}), Rational(1)), std::domain_error);
    // exact tie between two rational roots: (x-1)(x-2) around 3/2
    CHECK_THROWS_AS(isolate_root_near(ip({2, -3, 1}), Rational(3, 2)), std::domain_error);
    // exact tie between two irrational roots: 2x^2 - 4x + 1 around 1
    CHECK_THROWS_AS(isolate_root_near(ip({1, -4, 2}), Rational(1)), std::domain_error);
    // constant input
    CHECK_THROWS_AS(isolate_root_near(ip({3}), Rational(0)), std::domain_error);
}

TEST_CASE("the strictly nearest root wins") {
    // roots 1/2 and +-sqrt(3/2): the target 1/2 is itself a root
    std::vector<Integer> c{Integer(3), Integer(-6), Integer(-2), Integer(4)};  // (2x-1)(2x^2-3)
    AlgebraicReal r = isolate_root_near(IPoly(c), Rational(1, 2));
    CHECK(r.degenerate());
    CHECK(r.lo == Rational(1, 2));

    // two distinct rational roots, unequal distances: (x-1)(x-2) near 5/4
    // picks 1, which the expansion engine then recognizes as exactly rational
    AlgebraicReal s = isolate_root_near(ip({2, -3, 1}), Rational(5, 4));
    CFExpansion e = cf_algebraic(s, 5);
    CHECK(e.terminated);
    CHECK(e.quotients == vi({1}));
}

TEST_CASE("term polynomials, negated roots, and conjectured prefixes") {
    CHECK(conjectured_prefix(Term::L, 1) == vi({4, 750000, 3, 4, 1, 22277}));
    CHECK(conjectured_prefix(Term::R, 1) == vi({4, 500002, 142856}));
    CHECK(conjectured_prefix(Term::XP, 1) == vi({4, 750000, 3, 171432}));
    CHECK_THROWS_AS(conjectured_prefix(Term::L, 0), std::invalid_argument);
    CHECK_THROWS_AS(term_poly_at(Term::L, Parity::odd, 0), std::invalid_argument);

    CFExpansion L = cf_algebraic(negated_near4_root(term_poly_at(Term::L, Parity::odd, 1)), 10);
    CHECK(L.quotients == vi({4, 750000, 3, 4, 1, 22277, 1, 23, 1, 2}));
    CFExpansion R = cf_algebraic(negated_near4_root(term_poly_at(Term::R, Parity::odd, 1)), 10);
    CHECK(R.quotients == vi({4, 500002, 142856, 1, 2, 2}));
    CHECK(R.terminated);
    CFExpansion X = cf_algebraic(negated_near4_root(term_poly_at(Term::XP, Parity::odd, 1)), 10);
    CHECK(X.quotients == vi({4, 750000, 3, 171432, 3, 1, 11, 1, 1, 1}));

    CFExpansion Le = cf_algebraic(negated_near4_root(term_poly_at(Term::L, Parity::even, 1)), 10);
    CHECK(Le.quotients == vi({3, 1, 749999, 2, 3, 2, 22275, 3, 1, 2}));
    CFExpansion Re = cf_algebraic(negated_near4_root(term_poly_at(Term::R, Parity::even, 1)), 400);
    CHECK(Re.quotients == vi({3, 1, 499997, 1, 1, 35713, 1, 13}));
    CHECK(Re.terminated);
}

TEST_CASE("root reports carry soundness checks") {
    for (Term t : {Term::L, Term::R, Term::XP}) {
        Report r = cfrac_root_report(t, Parity::odd, 1, 10);
        CHECK(r.all_ok());
        const Check* fq = find(r, "first-quotient");
        REQUIRE(fq);
        CHECK(fq->status == Status::pass);
        CHECK(fq->actual == "4");
        REQUIRE(find(r, "convergent-determinants"));
        CHECK(find(r, "convergent-determinants")->status == Status::pass);
    }
    Report rr = cfrac_root_report(Term::R, Parity::odd, 2, 12);
    const Check* cm = find(rr, "cross-method");
    REQUIRE(cm);
    CHECK(cm->status == Status::pass);
}

TEST_CASE("the conjecture report records agreement and deltas as info") {
    Report one = conjecture_report(1, 10);
    CHECK(one.all_ok());
    const Check* pm = find(one, "L-prefix-match");
    REQUIRE(pm);
    CHECK(pm->actual == "6/6");

    Report two = conjecture_report(2, 10);
    CHECK(two.all_ok());  // conjecture misses are info, not fail
    const Check* rq2 = find(two, "R-q2");
    REQUIRE(rq2);
    CHECK(rq2->expected == "1428571427");
    CHECK(rq2->actual == "1428571428");
    const Check* xq3 = find(two, "XP-q3");
    REQUIRE(xq3);
    CHECK(xq3->expected == "1714285718");
    CHECK(xq3->actual == "1714285717");

    // deterministic across parallel modes
    CHECK(to_json(conjecture_report(1, 10, false)) == to_json(conjecture_report(1, 10, true)));
}

TEST_CASE("the even-parity exploration keeps observations informational") {
    Report r = explore_even_report(1, 10);
    CHECK(r.all_ok());
    const Check* fq = find(r, "L-first-quotient");
    REQUIRE(fq);
    CHECK(fq->status == Status::info);
    CHECK(fq->actual == "3");
    const Check* rt = find(r, "R-terminated");
    REQUIRE(rt);
    CHECK(rt->status == Status::pass);
    CHECK(to_json(explore_even_report(1, 10, false)) == to_json(explore_even_report(1, 10, true)));
}
