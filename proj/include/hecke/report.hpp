#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace hecke {

struct Check {
    std::string name;
    std::string paper_ref;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;

    void add(Check c) { checks.push_back(std::move(c)); }
    void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }
    std::size_t failures() const {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
    }
};

}  // namespace hecke
