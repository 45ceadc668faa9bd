#include "qtgc/report.hpp"

#include <json.hpp>

namespace qtgc {

namespace {

const char* status_str(CheckResult::Status s) {
    switch (s) {
    case CheckResult::Status::pass:
        return "pass";
    case CheckResult::Status::fail:
        return "fail";
    default:
        return "skipped";
    }
}

} // namespace

std::string to_text(const Report& report) {
    std::string out;
    if (!report.tool.empty())
        out += "tool: " + report.tool + "\n";
    if (!report.digest.empty())
        out += "instance: " + report.digest + "\n";
    for (const auto& n : report.notes)
        out += "note: " + n + "\n";
    for (const auto& c : report.checks) {
        out += std::string(status_str(c.status)) + "  " + c.id;
        if (c.cases > 0)
            out += "  (" + std::to_string(c.cases) + " cases)";
        out += "\n";
        if (c.status == CheckResult::Status::fail) {
            out += "      at " + c.indices + "\n";
            out += "      lhs = " + c.lhs + "\n";
            out += "      rhs = " + c.rhs + "\n";
        }
        if (!c.note.empty())
            out += "      note: " + c.note + "\n";
    }
    out += report.passed() ? "RESULT: pass\n" : "RESULT: fail\n";
    return out;
}

std::string to_json_string(const Report& report) {
    nlohmann::json j;
    j["tool"] = report.tool;
    j["instance"] = report.digest;
    j["notes"] = report.notes;
    j["result"] = report.passed() ? "pass" : "fail";
    auto checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json cj;
        cj["id"] = c.id;
        cj["status"] = status_str(c.status);
        cj["cases"] = c.cases;
        if (c.status == CheckResult::Status::fail) {
            cj["indices"] = c.indices;
            cj["lhs"] = c.lhs;
            cj["rhs"] = c.rhs;
        }
        if (!c.note.empty())
            cj["note"] = c.note;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    return j.dump(2) + "\n";
}

} // namespace qtgc
