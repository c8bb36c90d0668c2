#pragma once

/* Uniform result container for the verification suites. */

#include <string>
#include <utility>
#include <vector>

namespace grs {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckReport {
    std::string suite;
    std::vector<CheckResult> checks;

    explicit CheckReport(std::string s = "") : suite(std::move(s)) {}

    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

} // namespace grs
