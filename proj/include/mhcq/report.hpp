#pragma once

// Check results and suite reports.  Every failed law carries at least one
// witness with both sides rendered in the scalar literal grammar, so a
// reader can re-derive the failure by hand.

#include <optional>
#include <string>
#include <vector>

namespace mhcq {

struct Witness {
    std::string law;
    std::string input;      // the (a, covers) tuple the law was evaluated on
    std::string component;  // output component where the two sides differ
    std::string lhs;
    std::string rhs;
};

struct LawResult {
    std::string law;
    bool passed = true;
    long long checked = 0;  // number of (input, cover) tuples evaluated
    std::optional<Witness> witness;
};

enum class SuiteStatus { Pass, Fail, Skipped, Refused };

inline const char* to_string(SuiteStatus s) {
    switch (s) {
        case SuiteStatus::Pass: return "pass";
        case SuiteStatus::Fail: return "fail";
        case SuiteStatus::Skipped: return "skipped";
        case SuiteStatus::Refused: return "refused";
    }
    return "unknown";
}

struct SuiteReport {
    std::string name;
    SuiteStatus status = SuiteStatus::Pass;
    std::vector<LawResult> laws;
    std::vector<std::string> notes;  // warnings and informational lines
    double ms = 0.0;

    void add(LawResult r) {
        if (!r.passed) status = SuiteStatus::Fail;
        laws.push_back(std::move(r));
    }
    std::vector<Witness> witnesses() const {
        std::vector<Witness> w;
        for (auto& l : laws)
            if (l.witness) w.push_back(*l.witness);
        return w;
    }
};

}  // namespace mhcq
