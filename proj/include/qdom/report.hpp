#ifndef QDOM_REPORT_HPP
#define QDOM_REPORT_HPP

#include <string>
#include <vector>

namespace qdom {

struct Check {
    std::string id;
    bool pass = false;
    std::string witness;
};

// Result of a verification run: a list of named checks.
struct Report {
    std::string suite;
    std::vector<Check> checks;

    Report() = default;
    explicit Report(std::string s) : suite(std::move(s)) {}

    bool ok() const {
        if (checks.empty()) return false;
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    size_t failures() const {
        size_t n = 0;
        for (auto& c : checks) n += !c.pass;
        return n;
    }
    Report& add(std::string id, bool pass, std::string witness = "") {
        checks.push_back({std::move(id), pass, std::move(witness)});
        return *this;
    }
    Report& merge(const Report& o, const std::string& prefix = "") {
        for (auto& c : o.checks) checks.push_back({prefix + c.id, c.pass, c.witness});
        return *this;
    }
    // first failing check, or empty
    std::string first_failure() const {
        for (auto& c : checks)
            if (!c.pass) return c.id + (c.witness.empty() ? "" : ": " + c.witness);
        return "";
    }
};

}  // namespace qdom

#endif
