#ifndef MACQ_REPORT_HPP
#define MACQ_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace macq {

/// Outcome of a verification sweep. Violations are collected, never thrown.
struct Report {
    std::string identity;
    bool pass = true;
    int checks = 0;
    std::vector<std::string> violations;
    nlohmann::json details = nlohmann::json::object();

    void record(bool ok, std::string what_failed)
    {
        ++checks;
        if (!ok) {
            pass = false;
            violations.push_back(std::move(what_failed));
        }
    }

    nlohmann::json to_json() const
    {
        nlohmann::json j = details;
        j["identity"] = identity;
        j["checks"] = checks;
        j["violations"] = violations;
        j["pass"] = pass;
        return j;
    }
};

} // namespace macq

#endif
