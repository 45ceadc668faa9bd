#pragma once

#include <string>
#include <vector>

namespace qtgc {

// Outcome of one named check. A failing check carries the first
// counterexample found: the index tuple and both evaluated sides, so the
// failure can be re-derived by hand.
struct CheckResult {
    enum class Status { pass, fail, skipped };

    std::string id;
    Status status = Status::pass;
    long cases = 0;        // number of (index, basis) instances examined
    std::string indices;   // counterexample location, empty when passing
    std::string lhs;       // evaluated left side at the counterexample
    std::string rhs;       // evaluated right side at the counterexample
    std::string note;

    static CheckResult passed(std::string id, long cases) {
        return {std::move(id), Status::pass, cases, "", "", "", ""};
    }
    static CheckResult failed(std::string id, long cases, std::string indices, std::string lhs,
                              std::string rhs, std::string note = "") {
        return {std::move(id),  Status::fail, cases, std::move(indices), std::move(lhs),
                std::move(rhs), std::move(note)};
    }
    static CheckResult skip(std::string id, std::string note) {
        return {std::move(id), Status::skipped, 0, "", "", "", std::move(note)};
    }
};

struct Report {
    std::string tool;
    std::string digest;               // identifies the instance checked
    std::vector<std::string> notes;   // header notes (convention choices etc.)
    std::vector<CheckResult> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (c.status == CheckResult::Status::fail)
                return false;
        return true;
    }

    void add(CheckResult r) { checks.push_back(std::move(r)); }
    void append(Report other) {
        for (auto& n : other.notes)
            notes.push_back(std::move(n));
        for (auto& c : other.checks)
            checks.push_back(std::move(c));
    }

    const CheckResult* find(const std::string& id) const {
        for (const auto& c : checks)
            if (c.id == id)
                return &c;
        return nullptr;
    }
};

std::string to_text(const Report& report);
std::string to_json_string(const Report& report);

} // namespace qtgc
