#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ultra/norm.hpp"
#include "ultra/space.hpp"
#include "ultra/stone.hpp"

namespace ultra {

// Seeded generators for property tests and the selftest runner. All
// randomness in the project flows through these.

// Random ultra-(semi)metric built top-down: split the point set, assign
// the current level value across groups, recurse with a strictly
// smaller level. With allow_zero, a block may stop splitting early and
// stay at pairwise distance zero.
inline RationalUltraSpace random_ultrametric(std::mt19937_64& rng, int n,
                                             bool allow_zero = false) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, Rational(0)));

    const Rational fracs[] = {Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(3, 4)};
    auto build = [&](auto&& self, std::vector<int> idx, Rational level) -> void {
        if (idx.size() <= 1) return;
        if (allow_zero && std::uniform_int_distribution<int>(0, 4)(rng) == 0) return;
        // split into 2..size nonempty groups
        const int k = std::uniform_int_distribution<int>(2, static_cast<int>(idx.size()))(rng);
        std::shuffle(idx.begin(), idx.end(), rng);
        std::vector<std::vector<int>> groups(k);
        for (std::size_t i = 0; i < idx.size(); ++i)
            groups[i < static_cast<std::size_t>(k) ? i
                                                   : std::uniform_int_distribution<std::size_t>(
                                                         0, k - 1)(rng)]
                .push_back(idx[i]);
        for (std::size_t a = 0; a < groups.size(); ++a)
            for (std::size_t b = a + 1; b < groups.size(); ++b)
                for (int i : groups[a])
                    for (int j : groups[b]) d[i][j] = d[j][i] = level;
        for (auto& g : groups)
            self(self, g, level * fracs[std::uniform_int_distribution<int>(0, 3)(rng)]);
    };
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    build(build, all, Rational(1));
    return RationalUltraSpace(std::move(labels), std::move(d));
}

inline ClopenPartition random_partition(std::mt19937_64& rng, int n) {
    const int k = std::uniform_int_distribution<int>(1, n)(rng);
    std::vector<std::uint64_t> blocks(k, 0);
    for (int i = 0; i < n; ++i)
        blocks[i < k ? i : std::uniform_int_distribution<int>(0, k - 1)(rng)] |=
            std::uint64_t{1} << i;
    std::erase(blocks, std::uint64_t{0});
    return ClopenPartition(n, std::move(blocks));
}

inline Chain random_even_chain(std::mt19937_64& rng, int n, int max_support = 8) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    int half = std::uniform_int_distribution<int>(0, std::min(n, max_support) / 2)(rng);
    Chain c;
    for (int i = 0; i < 2 * half; ++i) c.support |= std::uint64_t{1} << idx[i];
    return c;
}

inline Configuration random_configuration(std::mt19937_64& rng, int n, int max_pairs = 6) {
    const int k = std::uniform_int_distribution<int>(0, max_pairs)(rng);
    std::uniform_int_distribution<int> pt(0, n - 1);
    std::vector<std::pair<int, int>> ps;
    for (int i = 0; i < k; ++i) ps.emplace_back(pt(rng), pt(rng));
    return Configuration(std::move(ps));
}

}  // namespace ultra
