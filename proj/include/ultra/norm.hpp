#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ultra/perm.hpp"
#include "ultra/rational.hpp"
#include "ultra/space.hpp"

namespace ultra {

// Element of the free Boolean group over the points of a space: a finite
// point subset under symmetric difference. Every chain is its own inverse.
struct Chain {
    std::uint64_t support = 0;

    Chain() = default;
    explicit Chain(std::uint64_t s) : support(s) {}
    static Chain of(std::initializer_list<int> pts) {
        Chain c;
        for (int p : pts) c.support ^= std::uint64_t{1} << p;
        return c;
    }

    int cardinality() const { return std::popcount(support); }
    bool even() const { return (cardinality() & 1) == 0; }
    bool contains(int p) const { return (support >> p) & 1u; }
    bool is_zero() const { return support == 0; }

    friend Chain operator+(Chain u, Chain v) { return Chain(u.support ^ v.support); }
    friend bool operator==(const Chain&, const Chain&) = default;
};

inline int sgn(Chain u) { return u.cardinality() & 1; }

// Finite list of unordered point pairs; represents the chain equal to
// the XOR of all its entries. Normal = all 2n entries pairwise distinct,
// i.e. a perfect pairing of the represented chain's support.
struct Configuration {
    std::vector<std::pair<int, int>> pairs;  // stored with first <= second

    Configuration() = default;
    explicit Configuration(std::vector<std::pair<int, int>> ps) : pairs(std::move(ps)) {
        for (auto& [a, b] : pairs)
            if (a > b) std::swap(a, b);
        std::sort(pairs.begin(), pairs.end());
    }

    Chain chain() const {
        Chain c;
        for (auto [a, b] : pairs) c.support ^= (std::uint64_t{1} << a) ^ (std::uint64_t{1} << b);
        return c;
    }

    bool is_normal() const {
        std::uint64_t seen = 0;
        for (auto [a, b] : pairs) {
            std::uint64_t mask = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
            if (a == b || (seen & mask)) return false;
            seen |= mask;
        }
        return true;
    }

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

// Length of a configuration: the maximum pair distance (0 when empty).
Rational phi_length(const Configuration& omega, const RationalUltraSpace& d);

// Elementary reductions to a normal configuration of the same chain:
// delete trivial pairs (t, t); replace two pairs sharing an entry
// {x, y}, {y, z} by {x, z}. Never increases phi under any
// ultra-semimetric.
Configuration reduce(Configuration omega);

// ||u|| = min over perfect pairings of supp(u) of the max pair distance.
// Enumerates all (m-1)!! pairings; |supp| <= 12.
Rational norm_bruteforce(Chain u, const RationalUltraSpace& d);

struct NormResult {
    Rational value;
    Configuration witness;  // lexicographically least optimal pairing
};

// Same value as norm_bruteforce, computed by binary search over the
// distance values with a subset-DP perfect-matching feasibility test;
// |supp| <= 26.
NormResult norm_bottleneck(Chain u, const RationalUltraSpace& d);

// alpha(x) = {x, theta}; the empty chain for x = theta. Requires a
// pointed space.
Chain embed_alpha(int x, const RationalUltraSpace& S);

struct ClosednessReport {
    Rational distance;             // min over x of ||u + alpha(x)||
    int argmin_point = -1;
    bool in_image = false;         // distance attained at 0
    std::optional<Rational> eps0;  // lower bound when u has >= 2 non-theta support points
};

ClosednessReport distance_to_image(Chain u, const RationalUltraSpace& S);

// Induced action on chains; g must fix theta.
Chain act_on_chain(const Permutation& g, Chain u, int theta);

// Family of ultra-semimetrics over one pointed point set, closed under
// finite max (the closure is completed on construction).
struct UltraSeminormFamily {
    std::vector<RationalUltraSpace> metrics;

    explicit UltraSeminormFamily(std::vector<RationalUltraSpace> ms);
};

std::vector<Rational> seminorm_vector(Chain u, const UltraSeminormFamily& F);

}  // namespace ultra
