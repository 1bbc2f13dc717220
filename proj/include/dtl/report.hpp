#pragma once

// Pass/fail reports for the verification suites. Failure witnesses carry
// enough text to replay the offending instance.

#include <string>
#include <vector>

namespace dtl {

struct CheckResult {
    std::string id;
    std::string params;
    bool pass = false;
    std::string witness;  // empty on success
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;
    std::string certified_range;  // e.g. "level <= 4", where applicable

    void add(const std::string& id, const std::string& params, bool pass,
             const std::string& witness = "") {
        checks.push_back({id, params, pass, pass ? "" : witness});
    }

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    size_t fail_count() const {
        size_t n = 0;
        for (const auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }

    std::string to_json() const {
        std::string s = "{\"suite\":\"" + suite + "\",";
        if (!certified_range.empty()) s += "\"certified\":\"" + certified_range + "\",";
        s += "\"pass\":" + std::string(all_pass() ? "true" : "false") + ",\"checks\":[";
        bool first = true;
        for (const auto& c : checks) {
            if (!first) s += ",";
            first = false;
            s += "{\"id\":\"" + c.id + "\",\"params\":\"" + c.params + "\",\"status\":\"" +
                 (c.pass ? "pass" : "fail") + "\"";
            if (!c.witness.empty()) s += ",\"witness\":\"" + c.witness + "\"";
            s += "}";
        }
        s += "]}";
        return s;
    }

    std::string to_text() const {
        std::string s = "suite " + suite + (all_pass() ? ": PASS" : ": FAIL") + "\n";
        for (const auto& c : checks) {
            s += std::string("  [") + (c.pass ? "pass" : "FAIL") + "] " + c.id;
            if (!c.params.empty()) s += " (" + c.params + ")";
            if (!c.witness.empty()) s += "  witness: " + c.witness;
            s += "\n";
        }
        if (!certified_range.empty()) s += "  certified: " + certified_range + "\n";
        return s;
    }
};

}  // namespace dtl
