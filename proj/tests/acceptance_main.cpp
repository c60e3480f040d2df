// Acceptance suite: runs the full reference verification and prints one
// pass/fail line per criterion, then a summary. Exit code 0 iff everything
// passed.

#include <cstdio>
#include <map>
#include <vector>

#include "verify.hpp"

using namespace mwplet;

namespace {

const char* criterion_titles[11] = {
    "",
    "doubling reproduction of the three half-height sections",
    "height pairing table",
    "fiber census (five I2 plus I1 places summing to 12)",
    "bisection family golden forms",
    "Abel-Jacobi image identity across the families",
    "conic reproduction (including the corrected third conic)",
    "exactly three certified conics among the height-2 classes",
    "diagram counts y(k,3): enumeration = recursion = closed form",
    "plet certification at k = 3 and k = 4",
    "randomized property suites (exact, fixed seed)",
};

} // namespace

int main() {
    std::vector<Check> checks;
    try {
        checks = run_reference_verification();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "verification aborted: %s\n", e.what());
        return 2;
    }
    std::map<int, std::pair<int, int>> per_criterion; // criterion -> (pass, total)
    for (const auto& c : checks) {
        auto& slot = per_criterion[c.criterion];
        slot.second += 1;
        if (c.pass) slot.first += 1;
    }
    bool all_ok = true;
    for (const auto& [criterion, counts] : per_criterion) {
        bool ok = counts.first == counts.second;
        all_ok = all_ok && ok;
        std::printf("criterion %2d: %s  (%d/%d checks)  %s\n", criterion,
                    ok ? "PASS" : "FAIL", counts.first, counts.second,
                    criterion >= 1 && criterion <= 10 ? criterion_titles[criterion] : "");
    }
    for (const auto& c : checks) {
        if (c.pass) continue;
        std::printf("  failed: %s\n    expected: %s\n    actual:   %s\n", c.name.c_str(),
                    c.expected.c_str(), c.actual.c_str());
        if (!c.note.empty()) std::printf("    note:     %s\n", c.note.c_str());
    }
    std::printf("%s\n", all_ok ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL");
    return all_ok ? 0 : 1;
}
