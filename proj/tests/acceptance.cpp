// Acceptance suite: one line per criterion, nonzero exit if any line fails.
// Each criterion re-derives everything it needs so the lines are independent.

#include "nicomach/catalog.hpp"
#include "nicomach/cfharness.hpp"
#include "nicomach/cfrac.hpp"
#include "nicomach/identities.hpp"
#include "nicomach/sequences.hpp"
#include "nicomach/surd.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace nicomach;
using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

const Check* find(const Report& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string need_pass(const Report& r, const std::string& name) {
    const Check* c = find(r, name);
    if (!c) return "check '" + name + "' missing";
    if (c->status != Status::pass)
        return "check '" + name + "' is " + status_str(c->status) + " (actual: " + c->actual + ")";
    return "";
}

std::string over_budget(long long ms, long long limit) {
    if (ms < limit) return "";
    return "took " + std::to_string(ms) + " ms (limit " + std::to_string(limit) + ")";
}

// --- criteria ---------------------------------------------------------------

std::string c1_identity_zero() {
    auto t0 = Clock::now();
    Report odd = verify_theorem1(Parity::odd);
    Report even = verify_theorem1(Parity::even);
    long long ms = ms_since(t0);
    for (const Report* r : {&odd, &even}) {
        if (!r->all_ok()) return "report for parity " + r->params[0].second + " has failures";
        if (std::string e = need_pass(*r, "balanced-identity-zero"); !e.empty()) return e;
    }
    return over_budget(ms, 1000);
}

std::string c2_matrix_proof() {
    auto t0 = Clock::now();
    Report r = matrix_checks(false);
    long long ms = ms_since(t0);
    if (!r.all_ok()) return "matrix report has failures";
    for (const char* name :
         {"odd-matrix-entries", "odd-identity-vector", "correction-identity-vector",
          "even-minus-odd", "even-identity-vector", "det-remove-row-1", "det-remove-row-2",
          "det-remove-row-3", "det-remove-row-4", "det-rows-3-4-sum"})
        if (std::string e = need_pass(r, name); !e.empty()) return e;
    return over_budget(ms, 1000);
}

std::string c3_leading_coefficients() {
    Report odd = verify_theorem1(Parity::odd);
    Report even = verify_theorem1(Parity::even);
    for (const Report* r : {&odd, &even}) {
        for (const char* name : {"m4-coefficient-L", "m4-coefficient-R", "m4-coefficient-XP",
                                 "x3-coefficient-L", "x3-coefficient-R", "x3-coefficient-XP"})
            if (std::string e = need_pass(*r, name); !e.empty()) return e;
        const Check* x3r = find(*r, "x3-coefficient-R");
        if (x3r->expected != "0") return "x^3 coefficient of R should be 0";
        if (find(*r, "x3-coefficient-L")->expected != find(*r, "x3-coefficient-XP")->expected)
            return "x^3 coefficients of L and XP should coincide";
    }
    return "";
}

std::string c4_discriminant() {
    Report r = discriminant_report();
    if (std::string e = need_pass(r, "F-divides-D"); !e.empty()) return e;
    if (std::string e = need_pass(r, "term-count-1114"); !e.empty()) return e;
    return "";
}

std::string c5_u_sequence() {
    auto t0 = Clock::now();
    std::vector<Integer> first = u_series(4);
    std::vector<Integer> expected{Integer(1), Integer(901), Integer(359101),
                                  Integer(142921801)};
    if (first != expected) return "first four values differ";
    Report r = seq_u_report(200, "all");
    long long ms = ms_since(t0);
    if (!r.all_ok()) return "u report has failures";
    for (const char* name : {"three-method-agreement", "somos-square", "mod-900"})
        if (std::string e = need_pass(r, name); !e.empty()) return e;
    return over_budget(ms, 5000);
}

std::string c6_alpha_sequence() {
    Report r = seq_alpha_report(40, "all");
    if (!r.all_ok()) return "alpha report has failures";
    for (const char* name : {"three-method-agreement", "cf-pattern", "limit-cf"})
        if (std::string e = need_pass(r, name); !e.empty()) return e;
    CFExpansion lim = cf_quadratic(Surd(Rational(-1, 2), Rational(1, 2), Integer(11)));
    if (lim.str() != "[1; (6, 3)*]") return "limit expansion is " + lim.str();
    return "";
}

std::string c7_index_k_identity() {
    auto t0 = Clock::now();
    for (long k = 1; k <= 10; ++k) {
        Report r = verify_theorem4(k);
        if (!r.all_ok()) return "index k = " + std::to_string(k) + " has failures";
        if (k == 1) {
            const Check* m3 = find(r, "m3-evaluation");
            if (!m3 || m3->actual != "61")
                return "m = 3 oracle at k = 1 should give 61";
        }
    }
    Report lim = verify_sqrt11_limit();
    if (!lim.all_ok()) return "limit report has failures";
    const Check* m3 = find(lim, "m3-evaluation");
    if (!m3 || m3->actual != "81") return "limit m = 3 oracle should give 81";
    return over_budget(ms_since(t0), 5000);
}

std::string c8_engine_soundness() {
    for (long n = 1; n <= 3; ++n)
        for (Term t : {Term::L, Term::R, Term::XP}) {
            Report r = cfrac_root_report(t, Parity::odd, n, 10);
            std::string at = " (" + term_str(t) + ", n = " + std::to_string(n) + ")";
            if (std::string e = need_pass(r, "first-quotient"); !e.empty()) return e + at;
            if (std::string e = need_pass(r, "convergent-determinants"); !e.empty())
                return e + at;
            if (t == Term::R)
                if (std::string e = need_pass(r, "cross-method"); !e.empty()) return e + at;
        }
    return "";
}

std::string c9_conjecture_harness() {
    for (long n = 1; n <= 3; ++n) {
        auto t0 = Clock::now();
        Report r = conjecture_report(n, 10, false);
        long long ms = ms_since(t0);
        std::string at = " (n = " + std::to_string(n) + ")";
        if (!r.all_ok()) return "conjecture report has failures" + at;
        for (const char* term : {"L", "R", "XP"}) {
            const Check* q = find(r, std::string(term) + "-quotients");
            if (!q) return std::string("check '") + term + "-quotients' missing" + at;
            nlohmann::json j = nlohmann::json::parse(q->actual);
            if (j["quotients"].size() < 8 && !j["terminated"].get<bool>())
                return std::string(term) + " produced only " +
                       std::to_string(j["quotients"].size()) +
                       " quotients without terminating" + at;
            if (!find(r, std::string(term) + "-prefix-match"))
                return std::string("prefix comparison missing for ") + term + at;
            if (n == 3) {
                const Check* ratio = find(r, std::string(term) + "-ratio");
                if (!ratio || ratio->actual.find(": yes") == std::string::npos)
                    return std::string("quotient ratio of ") + term + " not within 1%" + at;
            }
        }
        if (n == 3)
            if (std::string e = over_budget(ms, 120000); !e.empty()) return e + at;
    }
    return "";
}

std::string c10_catalog() {
    auto t0 = Clock::now();
    for (const std::string& id : catalog_ids()) {
        Report r = catalog_verify(id);
        if (!r.all_ok()) return "catalog id '" + id + "' has failures";
    }
    return over_budget(ms_since(t0), 30000);
}

std::string c11_congruences() {
    Report p3 = congruence_preset_report("prop3", 200);
    Report r6 = congruence_preset_report("remark6", 200);
    if (!p3.all_ok()) return "prop3 scan has failures";
    if (!r6.all_ok()) return "remark6 scan has failures";
    const struct {
        const Report* rep;
        const char* name;
        const char* value;
    } discs[] = {
        {&p3, "numerator-disc", "252000 = 900 * 2^3 * 5 * 7"},
        {&p3, "denominator-core-disc", "158400 = 900 * 2^4 * 11"},
        {&r6, "numerator-disc", "16896 = 2^9 * 3 * 11"},
        {&r6, "denominator-core-disc", "15125 = 5^3 * 11^2"},
    };
    for (const auto& d : discs) {
        const Check* c = find(*d.rep, d.name);
        if (!c || c->actual != d.value)
            return std::string(d.name) + " should read '" + d.value + "'";
    }
    return "";
}

std::string c12_cubic_pair() {
    CubicPair cp = solve_cubic_pair();
    if (!cp.report.all_ok()) return "solution report has failures";
    if (cp.kernel.empty()) return "homogeneous solution space is empty";
    std::vector<std::string> vm{"m"};
    QPoly m = QPoly::variable(vm, "m");
    auto k = [&](long v) { return QPoly::constant(vm, Rational(v)); };
    QPoly wA = (k(1) + m) * (k(1) + k(2) * m) * (k(1) + k(3) * m);
    QPoly wB = (k(1) + m) * (k(2) + m) * (k(3) + m);
    QPoly target = k(7) * m * m * m * (k(1) + m) * (k(1) + m) * (k(1) + m);
    if (!(wA * cp.A3 + wB * cp.B3 - target).is_zero())
        return "reconstructed decomposition is not the target polynomial";
    for (const auto& [hA, hB] : cp.kernel) {
        if (hA.is_zero() && hB.is_zero()) return "kernel contains the zero pair";
        if (!(wA * hA + wB * hB).is_zero()) return "kernel pair does not annihilate";
    }
    return "";
}

struct Criterion {
    int id;
    const char* label;
    std::function<std::string()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "three-term balanced identity expands to the zero polynomial for both parities",
         c1_identity_zero},
        {2, "matrix proof: identity vectors, parity correction, row-removed determinants",
         c2_matrix_proof},
        {3, "m^4 coefficients match the factored cubics; x^3 coefficients are (1+T^2, 0, 1+T^2)",
         c3_leading_coefficients},
        {4, "discriminant: F divides D exactly and the full expansion has 1114 terms",
         c4_discriminant},
        {5, "u_k: methods agree, first values 1/901/359101/142921801, square and mod-900 to 200",
         c5_u_sequence},
        {6, "alpha_k: methods agree to k = 40, pattern [1; (6,3)^(k-1)], limit [1; (6, 3)*]",
         c6_alpha_sequence},
        {7, "index-k identity holds for k <= 10 (m = 3 gives 61); sqrt(11) limit identity holds",
         c7_index_k_identity},
        {8, "expansion engine: R cross-method identical, determinants hold, first quotient 4",
         c8_engine_soundness},
        {9, "harness: 8+ quotients or termination per term, prefixes compared, n = 3 ratios in 1%",
         c9_conjecture_harness},
        {10, "catalog: every identity id verifies at its default bound", c10_catalog},
        {11, "congruence presets hold for 200 coefficients with exact discriminant factorizations",
         c11_congruences},
        {12, "cubic pair decomposes 7m^3(1+m)^3 with a nonzero homogeneous kernel",
         c12_cubic_pair},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        std::string why;
        try {
            why = c.run();
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        if (why.empty()) {
            std::cout << "PASS " << (c.id < 10 ? " " : "") << c.id << ": " << c.label << "\n";
        } else {
            ++failed;
            std::cout << "FAIL " << (c.id < 10 ? " " : "") << c.id << ": " << c.label << " ["
                      << why << "]\n";
        }
    }
    if (failed) std::cout << failed << " criterion(s) failed\n";
    return failed == 0 ? 0 : 1;
}
