// One line per acceptance criterion; exit status 0 only if all pass.
// Optional arguments restrict the run to the listed criterion numbers.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>

#include "qgl/suites.hpp"

using namespace qgl;

namespace {

const char* kTitles[] = {
    "",
    "vector module relations",
    "tensor products and pole guard",
    "W^N relations with antisymmetry",
    "Fock module relations, factorized psi, truncation stability",
    "Macdonald cross-check",
    "mode recursion on V(u) and F(u)",
    "resonance modules",
    "wheel condition",
    "c_lambda cocycle",
    "delta-function residues",
};

}  // namespace

int main(int argc, char** argv) {
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

    bool all_ok = true;
    for (int c = 1; c <= 10; ++c) {
        if (!only.empty() && !only.count(c)) continue;
        auto t0 = std::chrono::steady_clock::now();
        std::ostringstream detail;
        bool ok = true;
        int cases = 0;
        try {
            for (const auto& r : acceptance_reports(c)) {
                ok = ok && r.passed() && !r.cases.empty();
                cases += static_cast<int>(r.cases.size());
                if (!r.passed()) {
                    int shown = 0;
                    for (const auto& x : r.cases)
                        if (x.status != CaseStatus::pass && shown++ < 5)
                            detail << "    " << r.suite << ": " << x.id << ": " << x.detail << "\n";
                }
            }
        } catch (const std::exception& e) {
            ok = false;
            detail << "    exception: " << e.what() << "\n";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "criterion " << c << " " << (ok ? "PASS" : "FAIL") << "  " << kTitles[c] << " (" << cases
                  << " cases, " << static_cast<int>(secs + 0.5) << "s)\n"
                  << detail.str() << std::flush;
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
