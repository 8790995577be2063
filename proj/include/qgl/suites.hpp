#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qgl/partition.hpp"
#include "qgl/relations.hpp"

namespace qgl {

/// Configuration of one module verification run. Unset windows (-1) take
/// the per-family defaults, which are the acceptance windows.
struct VerifyOptions {
    std::string module = "fock";  // vector | tensor | wn | fock | resonance
    int n = -1;                   // tensor factors or W^N size
    int mode_window = -1;
    int max_weight = -1;          // fock, resonance
    std::pair<int, int> entry_window{0, -1};  // vector, tensor, wn; lo > hi means unset
    int series_order = -1;        // default mode_window + 3
    bool numeric = false;
    std::uint64_t seed = 1;
    TailSpec tail;
    unsigned workers = 0;

    /// Fills defaults; throws InvalidInput on an inconsistent configuration.
    void resolve();
};

/// Relation suite on the module plus the family-specific checks
/// (factorized psi and induction stability for Fock; closure, boundary
/// vanishing and truncation stability for resonance).
Report verify_module(VerifyOptions opts);

/// Macdonald identification, mode recursion and cocycle checks.
Report verify_daha(int max_n, int max_weight);

/// Wheel vanishing for every admissible nonnegative shape with N = k + 1.
Report verify_wheel(int k, int r, int max_weight);

/// Delta identity on seeded random four-factor functions.
Report verify_delta(int count, int order, std::uint64_t seed);

/// Reports for one numbered acceptance criterion (1..10).
std::vector<Report> acceptance_reports(int criterion, bool numeric = false, std::uint64_t seed = 1);

/// Canonical renderings: "gamma" (i), "fock-row" (shape, modes), "tail" (k, r, c, entries).
struct PrintParams {
    int i = 0;
    std::vector<int> shape;
    std::pair<int, int> modes{-1, 1};
    TailSpec tail;
    int entries = 6;
};
std::string print_object(const std::string& kind, const PrintParams& params);

}  // namespace qgl
