#include "nicomach/cfharness.hpp"

#include <json.hpp>

#include <array>
#include <future>
#include <optional>
#include <stdexcept>

namespace nicomach {

namespace {

using nlohmann::ordered_json;

std::string expansion_json(const CFExpansion& e) {
    ordered_json j;
    ordered_json arr = ordered_json::array();
    for (const Integer& a : e.quotients) arr.push_back(a.get_str());
    j["quotients"] = std::move(arr);
    if (e.period) j["period"] = {{"start", e.period->first}, {"length", e.period->second}};
    j["terminated"] = e.terminated;
    return j.dump();
}

// Exact rational value of an isolated root when it has one (degenerate
// interval, or a linear defining polynomial).
std::optional<Rational> rational_value(const AlgebraicReal& r) {
    if (r.degenerate()) return r.lo;
    if (r.poly.deg() == 1) return Rational(Integer(-r.poly.coeffs()[0]), r.poly.coeffs()[1]);
    return std::nullopt;
}

void add_determinant_check(Report& rep, const std::string& name, const CFExpansion& e) {
    rep.add(name, convergent_determinants_ok(e.quotients), "p_k q_{k-1} - p_{k-1} q_k = (-1)^(k-1)",
            convergent_determinants_ok(e.quotients) ? "holds for all computed k" : "violated",
            "identity");
}

void add_cross_method_check(Report& rep, const std::string& name, const AlgebraicReal& root,
                            const CFExpansion& e, std::size_t budget) {
    auto val = rational_value(root);
    if (!val) {
        rep.info(name, "-", "value is not rational; no second method applies", "computed");
        return;
    }
    CFExpansion viaEuclid = cf_rational(*val, budget);
    bool same = viaEuclid.quotients == e.quotients && viaEuclid.terminated == e.terminated;
    rep.add(name, same, "cf_algebraic positionwise equal to cf_rational",
            same ? "identical (" + std::to_string(e.quotients.size()) + " quotients" +
                       (e.terminated ? ", terminated)" : ")")
                 : "mismatch: euclid " + viaEuclid.str() + " vs engine " + e.str(),
            "cross-method");
}

void add_ratio_check(Report& rep, const std::string& name, const CFExpansion& e, std::size_t num,
                     std::size_t den, const Rational& target) {
    if (e.quotients.size() <= num || e.quotients.size() <= den || e.quotients[den] == 0) {
        rep.info(name, target.str(), "not computed (expansion too short)", "conjecture");
        return;
    }
    Rational ratio(e.quotients[num], e.quotients[den]);
    bool close = (ratio - target).abs() * Rational(100) <= target;
    rep.info(name, target.str(),
             ratio.str() + "; within 1% of " + target.str() + ": " + (close ? "yes" : "no"),
             "conjecture");
}

CFExpansion expand_root(Term t, Parity parity, long n, std::size_t quotients) {
    return cf_algebraic(negated_near4_root(term_poly_at(t, parity, n)), quotients);
}

constexpr std::array<Term, 3> kTerms{Term::L, Term::R, Term::XP};

}  // namespace

Term parse_term(const std::string& s) {
    if (s == "L") return Term::L;
    if (s == "R") return Term::R;
    if (s == "XP") return Term::XP;
    throw std::invalid_argument("unknown term: " + s + " (expected L, R, or XP)");
}

std::string term_str(Term t) {
    switch (t) {
        case Term::L: return "L";
        case Term::R: return "R";
        default: return "XP";
    }
}

QPoly term_poly_at(Term t, Parity parity, long n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    TermTriple tt = build_terms(parity);
    const QPoly& side = t == Term::L ? tt.L : t == Term::R ? tt.R : tt.XP;
    Rational m{pow10(4 * static_cast<unsigned long>(n) + 2)};
    return restrict_vars(side.substitute("m", m), {"x"});
}

AlgebraicReal negated_near4_root(const QPoly& termPoly) {
    QPoly neg = termPoly.substitute("x", -QPoly::variable(termPoly.vars(), "x"));
    IPoly sf = squarefree_part(IPoly::from_mpoly(neg, "x"));
    if (SturmChain(sf).count_open(Rational(3), Rational(5)) != 1)
        throw std::runtime_error(
            "near -4 certification: expected exactly one root in (3, 5) after negation");
    return isolate_root_near(sf, Rational(4));
}

std::vector<Integer> conjectured_prefix(Term t, long n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    auto un = static_cast<unsigned long>(n);
    Integer p4n = pow10(4 * un);
    Integer m = pow10(4 * un + 2);
    switch (t) {
        case Term::L: {
            Integer sq = Integer(pow_int(Integer(15) * pow10(2 * un), 2) - 23);
            if (sq % 101 != 0)
                throw std::runtime_error("conjectured L prefix: 101 does not divide the formula");
            return {Integer(4), Integer(75 * p4n), Integer(3), Integer(4), Integer(1),
                    Integer(sq / 101)};
        }
        case Term::R:
            return {Integer(4), Integer(50 * p4n + 2), Integer(floor_div(m, Integer(7)) - 1)};
        default:
            return {Integer(4), Integer(75 * p4n), Integer(3),
                    ceil_div(Integer(6 * m + 100), Integer(35))};
    }
}

Report cfrac_root_report(Term t, Parity parity, long n, std::size_t quotients) {
    Report rep;
    rep.command = "cfrac root";
    rep.param("term", term_str(t));
    rep.param("parity", parity_str(parity));
    rep.param("n", std::to_string(n));
    rep.param("quotients", std::to_string(quotients));

    AlgebraicReal root = negated_near4_root(term_poly_at(t, parity, n));
    CFExpansion e = cf_algebraic(root, quotients);

    rep.info("quotients", "-", expansion_json(e), "computed");
    rep.info("expansion", "-", e.str(), "computed");
    add_determinant_check(rep, "convergent-determinants", e);
    add_cross_method_check(rep, "cross-method", root, e, quotients);
    if (parity == Parity::odd)
        rep.add("first-quotient", !e.quotients.empty() && e.quotients[0] == 4, "4",
                e.quotients.empty() ? "(none)" : e.quotients[0].get_str(), "computed");
    else
        rep.info("first-quotient", "-",
                 e.quotients.empty() ? "(none)" : e.quotients[0].get_str(), "computed");
    return rep;
}

Report conjecture_report(long n, std::size_t quotients, bool parallel) {
    Report rep;
    rep.command = "cfrac conjecture";
    rep.param("n", std::to_string(n));
    rep.param("quotients", std::to_string(quotients));

    std::array<AlgebraicReal, 3> roots;
    std::array<CFExpansion, 3> exps;
    auto job = [&](std::size_t i) {
        AlgebraicReal r = negated_near4_root(term_poly_at(kTerms[i], Parity::odd, n));
        CFExpansion e = cf_algebraic(r, quotients);
        return std::make_pair(std::move(r), std::move(e));
    };
    if (parallel) {
        std::array<std::future<std::pair<AlgebraicReal, CFExpansion>>, 3> fut;
        for (std::size_t i = 0; i < 3; ++i)
            fut[i] = std::async(std::launch::async, [&job, i] { return job(i); });
        for (std::size_t i = 0; i < 3; ++i) {
            auto [r, e] = fut[i].get();
            roots[i] = std::move(r);
            exps[i] = std::move(e);
        }
    } else {
        for (std::size_t i = 0; i < 3; ++i) {
            auto [r, e] = job(i);
            roots[i] = std::move(r);
            exps[i] = std::move(e);
        }
    }

    const std::array<std::pair<std::size_t, Rational>, 3> ratioSpec{
        std::pair{std::size_t{5}, Rational(Integer(101), Integer(3))},
        std::pair{std::size_t{2}, Rational(Integer(7), Integer(2))},
        std::pair{std::size_t{3}, Rational(Integer(35), Integer(8))},
    };

    for (std::size_t i = 0; i < 3; ++i) {
        std::string tn = term_str(kTerms[i]);
        const CFExpansion& e = exps[i];
        std::vector<Integer> conj = conjectured_prefix(kTerms[i], n);

        rep.info(tn + "-quotients", "-", expansion_json(e), "computed");
        std::size_t matched = 0;
        std::size_t firstMiss = conj.size();
        for (std::size_t q = 0; q < conj.size(); ++q) {
            bool have = q < e.quotients.size();
            bool same = have && e.quotients[q] == conj[q];
            if (same) ++matched;
            else if (firstMiss == conj.size()) firstMiss = q;
            rep.info(tn + "-q" + std::to_string(q), conj[q].get_str(),
                     have ? e.quotients[q].get_str() : "(not computed)", "conjecture");
        }
        std::string total = std::to_string(conj.size());
        rep.info(tn + "-prefix-match", total + "/" + total,
                 std::to_string(matched) + "/" + total +
                     (matched == conj.size()
                          ? ""
                          : " (first mismatch at q" + std::to_string(firstMiss) + ")"),
                 "conjecture");
        rep.add(tn + "-first-quotient", !e.quotients.empty() && e.quotients[0] == 4, "4",
                e.quotients.empty() ? "(none)" : e.quotients[0].get_str(), "computed");
        add_determinant_check(rep, tn + "-convergent-determinants", e);
        if (kTerms[i] == Term::R)
            add_cross_method_check(rep, "R-cross-method", roots[i], e, quotients);
        add_ratio_check(rep, tn + "-ratio", e, 1, ratioSpec[i].first, ratioSpec[i].second);
    }

    bool integral = true;
    long firstBad = 0;
    for (long j = 1; j <= 50 && integral; ++j)
        if (Integer(pow_int(Integer(15) * pow10(2 * static_cast<unsigned long>(j)), 2) - 23) %
                101 !=
            0) {
            integral = false;
            firstBad = j;
        }
    rep.add("conjectured-L-q5-integrality", integral, "(15*10^(2n))^2 - 23 divisible by 101 for n <= 50",
            integral ? "divisible for all n <= 50" : "fails at n = " + std::to_string(firstBad),
            "identity");
    return rep;
}

Report explore_even_report(long n, std::size_t quotients, bool parallel) {
    Report rep;
    rep.command = "cfrac explore-even";
    rep.param("n", std::to_string(n));
    rep.param("quotients", std::to_string(quotients));

    std::array<AlgebraicReal, 3> roots;
    std::array<CFExpansion, 3> exps;
    auto budget = [&](std::size_t i) {
        // R is rational here (the even R term is a perfect square too), so
        // give it room to reach its final quotient.
        return kTerms[i] == Term::R ? std::max<std::size_t>(quotients, 400) : quotients;
    };
    auto job = [&](std::size_t i) {
        AlgebraicReal r = negated_near4_root(term_poly_at(kTerms[i], Parity::even, n));
        CFExpansion e = cf_algebraic(r, budget(i));
        return std::make_pair(std::move(r), std::move(e));
    };
    if (parallel) {
        std::array<std::future<std::pair<AlgebraicReal, CFExpansion>>, 3> fut;
        for (std::size_t i = 0; i < 3; ++i)
            fut[i] = std::async(std::launch::async, [&job, i] { return job(i); });
        for (std::size_t i = 0; i < 3; ++i) {
            auto [r, e] = fut[i].get();
            roots[i] = std::move(r);
            exps[i] = std::move(e);
        }
    } else {
        for (std::size_t i = 0; i < 3; ++i) {
            auto [r, e] = job(i);
            roots[i] = std::move(r);
            exps[i] = std::move(e);
        }
    }

    for (std::size_t i = 0; i < 3; ++i) {
        std::string tn = term_str(kTerms[i]);
        const CFExpansion& e = exps[i];
        rep.info(tn + "-quotients", "-", expansion_json(e), "computed");
        rep.info(tn + "-first-quotient", "-",
                 e.quotients.empty() ? "(none)" : e.quotients[0].get_str(), "computed");
        add_determinant_check(rep, tn + "-convergent-determinants", e);
        if (kTerms[i] == Term::R) {
            rep.add("R-terminated", e.terminated, "finite expansion (rational root)",
                    e.terminated ? "terminated after " + std::to_string(e.quotients.size()) +
                                       " quotients"
                                 : "not terminated within budget",
                    "computed");
            add_cross_method_check(rep, "R-cross-method", roots[i], e, budget(i));
        }
    }
    return rep;
}

}  // namespace nicomach
