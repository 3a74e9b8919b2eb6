#include "nicomach/cli.hpp"

#include "nicomach/catalog.hpp"
#include "nicomach/cfharness.hpp"
#include "nicomach/identities.hpp"
#include "nicomach/report.hpp"
#include "nicomach/sequences.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

namespace nicomach {

namespace {

void write_atomic(const std::string& path, const std::string& payload) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp(path + ".tmp");
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        f << payload;
        f.flush();
        if (!f) throw std::runtime_error("cannot write " + tmp.string());
    }
    fs::rename(tmp, target);
}

}  // namespace

int execute(std::vector<std::string> args) {
    CLI::App app{"exact verification of a balanced three-term cubic-sum identity family"};
    app.require_subcommand(1);

    std::string format = "text", parallelOpt = "off", outFile;
    app.add_option("--format", format, "report serialization")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--parallel", parallelOpt, "run independent checks concurrently")
        ->check(CLI::IsMember({"on", "off"}));
    app.add_option("--out", outFile, "also write the report to FILE (atomic)");

    // Leaf state: every leaf stores its flags in its own slots and marks
    // itself as the chosen command.
    std::string leaf;
    auto pick = [&leaf](const char* name) {
        return [&leaf, name] { leaf = name; };
    };
    auto sub = [&](CLI::App* parent, const char* name, const char* desc) {
        CLI::App* s = parent->add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    CLI::App* verify = sub(&app, "verify", "identity and matrix verifications");
    verify->require_subcommand(1);

    std::string thm1Parity;
    CLI::App* thm1 = sub(verify, "thm1", "three-term identity as a zero polynomial");
    thm1->add_option("--parity", thm1Parity, "odd|even")->required();
    thm1->callback(pick("verify thm1"));

    std::string catalogId;
    long catalogBound = 0;
    bool catalogHasBound = false;
    CLI::App* catalog = sub(verify, "catalog", "one named identity from the catalog");
    catalog->add_option("--id", catalogId, "catalog identifier")->required();
    CLI::Option* boundOpt = catalog->add_option("--bound", catalogBound, "size cap override");
    catalog->callback([&] {
        leaf = "verify catalog";
        catalogHasBound = boundOpt->count() > 0;
    });

    std::string matrixVariant = "mx";
    CLI::App* matrix = sub(verify, "matrix", "coefficient-matrix proof");
    matrix->add_option("--variant", matrixVariant, "mx|xm")
        ->check(CLI::IsMember({"mx", "xm"}));
    matrix->callback(pick("verify matrix"));

    long thm4K = 0;
    CLI::App* thm4 = sub(verify, "thm4", "index-k identity with its closed form");
    thm4->add_option("--k", thm4K, "sequence index")->required();
    thm4->callback(pick("verify thm4"));

    CLI::App* sqrt11 = sub(verify, "sqrt11", "limiting identity over Q(sqrt(11))");
    sqrt11->callback(pick("verify sqrt11"));

    CLI::App* disc = sub(&app, "disc", "discriminant computations");
    disc->require_subcommand(1);
    CLI::App* discReport = sub(disc, "report", "discriminant of the closed sum, factor F");
    discReport->callback(pick("disc report"));

    CLI::App* seq = sub(&app, "seq", "integer and rational sequences");
    seq->require_subcommand(1);

    long seqUK = 0;
    std::string seqUMethod;
    CLI::App* sequ = sub(seq, "u", "the integer sequence u_k");
    sequ->add_option("--k", seqUK, "number of terms")->required();
    sequ->add_option("--method", seqUMethod, "series|closed|recurrence|all")->required();
    sequ->callback(pick("seq u"));

    long seqAK = 0;
    std::string seqAMethod;
    CLI::App* seqa = sub(seq, "alpha", "the rational sequence alpha_k");
    seqa->add_option("--k", seqAK, "number of terms")->required();
    seqa->add_option("--method", seqAMethod, "convergent|recurrence|via_u|all")->required();
    seqa->callback(pick("seq alpha"));

    CLI::App* cong = sub(&app, "cong", "power-series congruence scans");
    cong->require_subcommand(1);

    std::string congPreset;
    long congCount = 0;
    CLI::App* scan = sub(cong, "scan", "scan a named series preset");
    scan->add_option("--preset", congPreset, "prop3|remark6")->required();
    scan->add_option("--count", congCount, "coefficients to scan")->required();
    scan->callback(pick("cong scan"));

    std::string congM;
    long constructCount = 0;
    CLI::App* construct = sub(cong, "construct", "build the modulus-m series and scan it");
    construct->add_option("--m", congM, "modulus (> 123)")->required();
    construct->add_option("--count", constructCount, "coefficients to scan")->required();
    construct->callback(pick("cong construct"));

    CLI::App* cfrac = sub(&app, "cfrac", "continued-fraction expansions of the term roots");
    cfrac->require_subcommand(1);

    std::string rootTerm, rootParity;
    long rootN = 0, rootQuotients = 0;
    CLI::App* root = sub(cfrac, "root", "expand one term's negated near -4 root");
    root->add_option("--term", rootTerm, "L|R|XP")->required();
    root->add_option("--parity", rootParity, "odd|even")->required();
    root->add_option("--n", rootN, "magnitude index (m = 10^(4n+2))")->required();
    root->add_option("--quotients", rootQuotients, "how many quotients")->required();
    root->callback(pick("cfrac root"));

    long conjN = 0, conjQuotients = 0;
    CLI::App* conjecture = sub(cfrac, "conjecture", "compare all three odd terms to the conjectured prefixes");
    conjecture->add_option("--n", conjN, "magnitude index")->required();
    conjecture->add_option("--quotients", conjQuotients, "how many quotients")->required();
    conjecture->callback(pick("cfrac conjecture"));

    long exploreN = 0;
    CLI::App* explore = sub(cfrac, "explore-even", "raw even-parity expansions");
    explore->add_option("--n", exploreN, "magnitude index")->required();
    explore->callback(pick("cfrac explore-even"));

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        bool parallel = parallelOpt == "on";
        auto t0 = std::chrono::steady_clock::now();
        Report rep;
        if (leaf == "verify thm1") {
            rep = verify_theorem1(parse_parity(thm1Parity));
        } else if (leaf == "verify catalog") {
            rep = catalog_verify(catalogId, catalogHasBound ? std::optional<long>(catalogBound)
                                                            : std::nullopt);
        } else if (leaf == "verify matrix") {
            rep = matrixVariant == "xm" ? xm_variant_checks() : matrix_checks(parallel);
        } else if (leaf == "verify thm4") {
            rep = verify_theorem4(thm4K);
        } else if (leaf == "verify sqrt11") {
            rep = verify_sqrt11_limit();
        } else if (leaf == "disc report") {
            rep = discriminant_report();
        } else if (leaf == "seq u") {
            rep = seq_u_report(seqUK, seqUMethod);
        } else if (leaf == "seq alpha") {
            rep = seq_alpha_report(seqAK, seqAMethod);
        } else if (leaf == "cong scan") {
            rep = congruence_preset_report(congPreset, congCount);
        } else if (leaf == "cong construct") {
            rep = remark6_construct(parse_integer(congM), constructCount).report;
        } else if (leaf == "cfrac root") {
            if (rootQuotients < 1) throw std::invalid_argument("--quotients must be >= 1");
            rep = cfrac_root_report(parse_term(rootTerm), parse_parity(rootParity), rootN,
                                    std::size_t(rootQuotients));
        } else if (leaf == "cfrac conjecture") {
            if (conjQuotients < 1) throw std::invalid_argument("--quotients must be >= 1");
            rep = conjecture_report(conjN, std::size_t(conjQuotients), parallel);
        } else if (leaf == "cfrac explore-even") {
            rep = explore_even_report(exploreN, 10, parallel);
        } else {
            throw std::invalid_argument("no command selected");
        }
        auto t1 = std::chrono::steady_clock::now();
        rep.elapsedMillis =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

        std::string payload = format == "json" ? to_json(rep) : to_text(rep);
        if (payload.empty() || payload.back() != '\n') payload += '\n';
        std::cout << payload;
        if (!outFile.empty()) write_atomic(outFile, payload);
        return rep.all_ok() ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace nicomach
