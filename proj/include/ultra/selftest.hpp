#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ultra {

struct ClaimResult {
    std::string name;
    bool passed = false;
    std::string detail;  // empty on success, first failure otherwise
};

struct SelftestOptions {
    std::uint64_t seed = 0;
    int trials = 200;
};

// Seeded property-test sweep over the library's invariants. Reports one
// result per claim; deterministic for a fixed seed and trial count.
std::vector<ClaimResult> run_selftest(const SelftestOptions& opts);

}  // namespace ultra
