#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ultra/perm.hpp"
#include "ultra/rational.hpp"
#include "ultra/stone.hpp"

namespace ultra {

// Finite point set with an exact-rational distance matrix, optionally
// pointed by a basepoint. Symmetry, nonnegativity and the zero diagonal
// are enforced on construction; the strong triangle inequality is what
// verify_ultrametric checks.
struct RationalUltraSpace {
    std::vector<std::string> points;
    std::vector<std::vector<Rational>> dist;
    std::optional<int> basepoint;

    RationalUltraSpace() = default;
    RationalUltraSpace(std::vector<std::string> labels, std::vector<std::vector<Rational>> d,
                       std::optional<int> base = std::nullopt);

    int size() const { return static_cast<int>(points.size()); }
    const Rational& d(int i, int j) const { return dist[i][j]; }
    int index_of(const std::string& label) const;  // throws if absent

    // Every pairwise distance is zero exactly when the points coincide.
    bool is_metric() const;

    static RationalUltraSpace from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

struct TripleWitness {
    int x = 0, y = 0, z = 0;
    friend bool operator==(const TripleWitness&, const TripleWitness&) = default;
};

// Returns the lexicographically first ordered triple violating
// d(x,z) <= max(d(x,y), d(y,z)), or nullopt when S is an ultra-semimetric.
std::optional<TripleWitness> verify_ultrametric(const RationalUltraSpace& S);

// Distinct open (or closed) eps-balls; always a partition for a
// verified ultra-semimetric.
ClopenPartition ball_partition(const RationalUltraSpace& S, const Rational& eps,
                               bool closed_balls = false);

// Pointwise maximum of ultra-semimetrics over a common point set.
RationalUltraSpace max_combine(const std::vector<RationalUltraSpace>& spaces);

// d_H over nonempty subsets given as bitsets; an ultra-metric whenever d is.
Rational hausdorff_distance(std::uint64_t A, std::uint64_t B, const RationalUltraSpace& S);

// Truncates distances at 1, then appends a basepoint at distance 1 from
// every point.
RationalUltraSpace adjoin_basepoint(const RationalUltraSpace& S,
                                    const std::string& label = "theta");

struct OrbitBasepointResult {
    // Singleton orbit: x0 is already a G-fixed point, use it directly.
    bool degenerate = false;
    RationalUltraSpace space;
};

// Represents the orbit G x0 as a new point theta with
// d(x, theta) = d_H({x}, G x0).
OrbitBasepointResult orbit_basepoint(const PermGroup& G, int x0, const RationalUltraSpace& S);

bool is_isometry(const Permutation& g, const RationalUltraSpace& S);

// All d-preserving permutations; filters S_n, so |X| <= 8.
PermGroup isometry_group(const RationalUltraSpace& S);

// The left-invariant ultra-semimetric rho_z(s, t) = d(s z, t z) on G,
// returned as a matrix indexed by G's element order.
std::vector<std::vector<Rational>> invariant_ultrasemimetric(const PermGroup& G, int z,
                                                             const RationalUltraSpace& S);

// Fixtures.
RationalUltraSpace two_adic_space(int n = 4);    // d(i,j) = 2^{-v_2(i-j)}
RationalUltraSpace two_valued_space(int n);      // d = 1 off the diagonal
// The 0/1 semimetric of a partition: distance 1 across blocks.
RationalUltraSpace partition_semimetric(const ClopenPartition& P,
                                        const std::vector<std::string>& labels);

}  // namespace ultra
