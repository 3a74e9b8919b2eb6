#include "nicomach/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace nicomach {

std::string status_str(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "info";
    }
}

std::string to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["status"] = status_str(c.status);
        cj["expected"] = c.expected;
        cj["actual"] = c.actual;
        cj["provenance"] = c.provenance;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    j["elapsedMillis"] = r.elapsedMillis;
    return j.dump(2);
}

std::string to_text(const Report& r) {
    std::ostringstream out;
    out << "command: " << r.command << "\n";
    if (!r.params.empty()) {
        out << "params:";
        for (const auto& [k, v] : r.params) out << " " << k << "=" << v;
        out << "\n";
    }
    std::size_t w = 0;
    for (const auto& c : r.checks) w = std::max(w, c.name.size());
    for (const auto& c : r.checks) {
        out << "  [" << status_str(c.status) << "] " << c.name
            << std::string(w - c.name.size() + 2, ' ');
        out << "expected: " << c.expected << " | actual: " << c.actual << " | "
            << c.provenance << "\n";
    }
    out << "elapsed: " << r.elapsedMillis << " ms\n";
    out << "result: " << (r.all_ok() ? "OK" : "FAIL") << "\n";
    return out.str();
}

}  // namespace nicomach
