#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "sympv/rational.hpp"

namespace sympv {

inline constexpr const char* kVersion = "0.1.0";

/// One verification check. `finding` marks an observation that is reported
/// but does not fail the run (e.g. a published expression disagreeing with
/// the oracle).
struct Check {
    enum class Status { pass, fail, finding };

    std::string name;
    Status status = Status::pass;
    std::string lhs;
    std::string rhs;
    std::string note;
};

const char* status_name(Check::Status);

/// Machine-readable result of one CLI invocation. Serialization is
/// deterministic: parameters are sorted, checks are sorted by name, rows keep
/// insertion order.
struct Report {
    std::string command;
    std::map<std::string, std::string> params;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    std::vector<Check> checks;
    std::string version = kVersion;

    void check_equal(const std::string& name, const std::string& lhs, const std::string& rhs,
                     const std::string& note = "");
    void check_that(const std::string& name, bool ok, const std::string& lhs,
                    const std::string& rhs, const std::string& note = "");
    void finding(const std::string& name, const std::string& lhs, const std::string& rhs,
                 const std::string& note = "");

    bool has_failure() const;
    nlohmann::ordered_json to_json() const;

    /// Exit code contract: 1 when any check failed, else 0.
    int exit_code() const { return has_failure() ? 1 : 0; }
};

/// {"num": "...", "den": "...", "decimal": "..."}
nlohmann::ordered_json rational_json(const Rational& r);

}  // namespace sympv
