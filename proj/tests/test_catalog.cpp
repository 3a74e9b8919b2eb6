#include "nicomach/catalog.hpp"
#include "nicomach/report.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace nicomach;

namespace {

const Check* find(const Report& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("every catalog id verifies under default bounds") {
    const auto& ids = catalog_ids();
    REQUIRE_FALSE(ids.empty());
    for (const auto& id : ids) {
        Report r = catalog_verify(id);
        INFO("id = ", id);
        CHECK(r.all_ok());
        CHECK(r.command == "verify catalog");
    }
}

TEST_CASE("unknown ids and bad bounds are usage errors") {
    CHECK_THROWS_AS(catalog_verify("nope"), std::invalid_argument);
    CHECK_THROWS_AS(catalog_verify("liouville", 0), std::domain_error);
    CHECK_THROWS_AS(catalog_verify("warnaar", 100), std::domain_error);
    CHECK_THROWS_AS(catalog_verify("cigler", 40), std::domain_error);
}

TEST_CASE("bounds can be lowered explicitly") {
    CHECK(catalog_verify("liouville", 100).all_ok());
    CHECK(catalog_verify("remark2-x3", 5).all_ok());
    CHECK(catalog_verify("warnaar", 12).all_ok());
    CHECK(catalog_verify("cigler", 12).all_ok());
    CHECK(catalog_verify("genfp", 10).all_ok());
}

TEST_CASE("the limiting identity evaluates to 81 at m = 3") {
    Report r = catalog_verify("sqrt11-limit");
    const Check* c = find(r, "m3-evaluation");
    REQUIRE(c);
    CHECK(c->status == Status::pass);
    CHECK(c->actual == "81");
}
