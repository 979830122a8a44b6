#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ultra/space.hpp"

namespace ultra {

// Exhaustive verification kernels. Each comes in a serial reference
// version and an OpenMP version; both return the lexicographically
// first violation, so results are identical and deterministic.

std::optional<TripleWitness> strong_triangle_violation_serial(
    const std::vector<std::vector<Rational>>& dist);
std::optional<TripleWitness> strong_triangle_violation(
    const std::vector<std::vector<Rational>>& dist);

// Scans all ordered triples (A, B, C) of nonempty subsets for a failure
// of d_H(A,C) <= max(d_H(A,B), d_H(B,C)). Requires |X| <= 20.
std::optional<std::array<std::uint64_t, 3>> hausdorff_ultra_violation_serial(
    const RationalUltraSpace& S);
std::optional<std::array<std::uint64_t, 3>> hausdorff_ultra_violation(
    const RationalUltraSpace& S);

}  // namespace ultra
