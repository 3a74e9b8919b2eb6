#pragma once

#include <string>
#include <utility>
#include <vector>

namespace nicomach {

enum class Status { pass, fail, info };

struct Check {
    std::string name;
    Status status = Status::pass;
    std::string expected;
    std::string actual;
    std::string provenance;  // "identity" | "computed" | "cross-method" | "conjecture"
};

// Structured verification result. Check order is fixed by the producing
// operation (parallel runners fill pre-assigned slots), so serialization is
// byte-stable; elapsedMillis is the only field that varies between runs.
struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<Check> checks;
    long long elapsedMillis = 0;

    void param(const std::string& key, const std::string& value) { params.emplace_back(key, value); }

    void add(std::string name, bool ok, std::string expected, std::string actual,
             std::string provenance) {
        checks.push_back({std::move(name), ok ? Status::pass : Status::fail,
                          std::move(expected), std::move(actual), std::move(provenance)});
    }

    void info(std::string name, std::string expected, std::string actual,
              std::string provenance) {
        checks.push_back({std::move(name), Status::info, std::move(expected), std::move(actual),
                          std::move(provenance)});
    }

    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    bool all_ok() const {
        for (const auto& c : checks)
            if (c.status == Status::fail) return false;
        return true;
    }
};

std::string status_str(Status s);
std::string to_json(const Report& r);
std::string to_text(const Report& r);

}  // namespace nicomach
