#include "sympv/report.hpp"

#include <algorithm>

namespace sympv {

const char* status_name(Check::Status s) {
    switch (s) {
        case Check::Status::pass: return "pass";
        case Check::Status::fail: return "fail";
        case Check::Status::finding: return "finding";
    }
    return "?";
}

void Report::check_equal(const std::string& name, const std::string& lhs, const std::string& rhs,
                         const std::string& note) {
    checks.push_back({name, lhs == rhs ? Check::Status::pass : Check::Status::fail, lhs, rhs, note});
}

void Report::check_that(const std::string& name, bool ok, const std::string& lhs,
                        const std::string& rhs, const std::string& note) {
    checks.push_back({name, ok ? Check::Status::pass : Check::Status::fail, lhs, rhs, note});
}

void Report::finding(const std::string& name, const std::string& lhs, const std::string& rhs,
                     const std::string& note) {
    checks.push_back({name, Check::Status::finding, lhs, rhs, note});
}

bool Report::has_failure() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.status == Check::Status::fail; });
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    nlohmann::ordered_json jp = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) jp[k] = v;
    j["params"] = jp;
    j["rows"] = rows;

    std::vector<Check> sorted = checks;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Check& a, const Check& b) { return a.name < b.name; });
    nlohmann::ordered_json jc = nlohmann::ordered_json::array();
    for (const Check& c : sorted) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["status"] = status_name(c.status);
        e["lhs"] = c.lhs;
        e["rhs"] = c.rhs;
        e["note"] = c.note;
        jc.push_back(e);
    }
    j["checks"] = jc;
    j["version"] = version;
    return j;
}

nlohmann::ordered_json rational_json(const Rational& r) {
    nlohmann::ordered_json j;
    j["num"] = numerator(r).str();
    j["den"] = denominator(r).str();
    j["decimal"] = decimal_string(r);
    return j;
}

}  // namespace sympv
