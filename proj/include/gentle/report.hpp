// Check reports: one entry per verified relation/instance, carrying the
// expected and computed values as strings plus a status. Budget exhaustion and
// undetermined resolutions are distinct from failure.
#pragma once

#include <string>
#include <vector>

namespace gentle {

enum class CheckStatus { Pass, Fail, BudgetExceeded, Undetermined };

inline std::string status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::BudgetExceeded: return "budget_exceeded";
        case CheckStatus::Undetermined: return "undetermined";
    }
    return "?";
}

struct CheckEntry {
    std::string check_id;
    std::string instance;
    std::string expected;
    std::string computed;
    CheckStatus status = CheckStatus::Pass;
};

struct CheckReport {
    std::vector<CheckEntry> entries;

    void add(std::string check_id, std::string instance, std::string expected, std::string computed,
             CheckStatus status) {
        entries.push_back({std::move(check_id), std::move(instance), std::move(expected), std::move(computed), status});
    }
    void expect_eq(std::string check_id, std::string instance, const std::string& expected,
                   const std::string& computed) {
        CheckStatus st = expected == computed ? CheckStatus::Pass : CheckStatus::Fail;
        add(std::move(check_id), std::move(instance), expected, computed, st);
    }
    void expect(std::string check_id, std::string instance, bool ok, std::string detail = "") {
        add(std::move(check_id), std::move(instance), "true", ok ? "true" : (detail.empty() ? "false" : detail),
            ok ? CheckStatus::Pass : CheckStatus::Fail);
    }
    void merge(const CheckReport& other) {
        entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    }

    bool all_pass() const {
        for (const auto& e : entries)
            if (e.status != CheckStatus::Pass) return false;
        return true;
    }
    bool any_fail() const {
        for (const auto& e : entries)
            if (e.status == CheckStatus::Fail) return true;
        return false;
    }
    int count(CheckStatus s) const {
        int c = 0;
        for (const auto& e : entries)
            if (e.status == s) ++c;
        return c;
    }
};

}  // namespace gentle
