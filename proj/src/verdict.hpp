#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cremona {

/// Structured pass/fail result: one line per checked claim, with a
/// witness (or counterexample) string.
struct Verdict {
    std::string case_id;
    bool passed = true;
    std::vector<std::pair<std::string, std::string>> details;

    void check(const std::string& claim, bool ok, const std::string& witness = "") {
        passed = passed && ok;
        details.emplace_back(claim, std::string(ok ? "ok" : "FAIL") +
                                        (witness.empty() ? "" : ": " + witness));
    }
    void note(const std::string& claim, const std::string& text) {
        details.emplace_back(claim, text);
    }
};

}  // namespace cremona
