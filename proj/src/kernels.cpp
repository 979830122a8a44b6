#include "ultra/kernels.hpp"

#include <climits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ultra {

namespace {

// Checks all y for a fixed (x, z); returns the smallest violating y.
inline int first_bad_middle(const std::vector<std::vector<Rational>>& d, int x, int z) {
    const int n = static_cast<int>(d.size());
    for (int y = 0; y < n; ++y)
        if (d[x][z] > std::max(d[x][y], d[y][z])) return y;
    return -1;
}

// Pairwise d_H table over all nonempty subsets.
std::vector<Rational> hausdorff_table(const RationalUltraSpace& S, bool parallel) {
    const std::uint64_t top = std::uint64_t{1} << S.size();
    const std::size_t m = top - 1;
    std::vector<Rational> table(m * m);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
#endif
    for (long long a = 1; a < static_cast<long long>(top); ++a)
        for (std::uint64_t b = 1; b < top; ++b)
            table[(a - 1) * m + (b - 1)] = hausdorff_distance(static_cast<std::uint64_t>(a), b, S);
    return table;
}

}  // namespace

std::optional<TripleWitness> strong_triangle_violation_serial(
    const std::vector<std::vector<Rational>>& dist) {
    const int n = static_cast<int>(dist.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (dist[x][z] > std::max(dist[x][y], dist[y][z]))
                    return TripleWitness{x, y, z};
    return std::nullopt;
}

std::optional<TripleWitness> strong_triangle_violation(
    const std::vector<std::vector<Rational>>& dist) {
    const int n = static_cast<int>(dist.size());
    // Flattened (x, z) index space; each pair scans its middles serially
    // so the lexicographically first witness is recoverable.
    long long best = LLONG_MAX;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) reduction(min : best)
#endif
    for (long long xz = 0; xz < static_cast<long long>(n) * n; ++xz) {
        const int x = static_cast<int>(xz / n);
        const int z = static_cast<int>(xz % n);
        const int y = first_bad_middle(dist, x, z);
        if (y >= 0) {
            long long key = (static_cast<long long>(x) * n + y) * n + z;
            if (key < best) best = key;
        }
    }
    if (best == LLONG_MAX) return std::nullopt;
    const int z = static_cast<int>(best % n);
    const int y = static_cast<int>((best / n) % n);
    const int x = static_cast<int>(best / n / n);
    return TripleWitness{x, y, z};
}

std::optional<std::array<std::uint64_t, 3>> hausdorff_ultra_violation_serial(
    const RationalUltraSpace& S) {
    const int n = S.size();
    if (n > 10) throw std::invalid_argument("subset triple scan capped at 10 points");
    const std::uint64_t top = std::uint64_t{1} << n;
    const std::size_t m = top - 1;
    auto table = hausdorff_table(S, false);
    auto dh = [&](std::uint64_t a, std::uint64_t b) -> const Rational& {
        return table[(a - 1) * m + (b - 1)];
    };
    for (std::uint64_t a = 1; a < top; ++a)
        for (std::uint64_t b = 1; b < top; ++b)
            for (std::uint64_t c = 1; c < top; ++c)
                if (dh(a, c) > std::max(dh(a, b), dh(b, c)))
                    return std::array<std::uint64_t, 3>{a, b, c};
    return std::nullopt;
}

std::optional<std::array<std::uint64_t, 3>> hausdorff_ultra_violation(
    const RationalUltraSpace& S) {
    const int n = S.size();
    if (n > 10) throw std::invalid_argument("subset triple scan capped at 10 points");
    const std::uint64_t top = std::uint64_t{1} << n;
    const std::size_t m = top - 1;
    auto table = hausdorff_table(S, true);
    auto dh = [&](std::uint64_t a, std::uint64_t b) -> const Rational& {
        return table[(a - 1) * m + (b - 1)];
    };
    long long best = LLONG_MAX;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
#endif
    for (long long a = 1; a < static_cast<long long>(top); ++a) {
        bool found = false;
        for (std::uint64_t b = 1; b < top && !found; ++b)
            for (std::uint64_t c = 1; c < top; ++c)
                if (dh(static_cast<std::uint64_t>(a), c) >
                    std::max(dh(static_cast<std::uint64_t>(a), b), dh(b, c))) {
                    long long key = ((a - 1) * static_cast<long long>(m) + (b - 1)) *
                                        static_cast<long long>(m) +
                                    static_cast<long long>(c - 1);
                    if (key < best) best = key;
                    found = true;
                    break;
                }
    }
    if (best == LLONG_MAX) return std::nullopt;
    const std::uint64_t c = static_cast<std::uint64_t>(best % m) + 1;
    const std::uint64_t b = static_cast<std::uint64_t>((best / m) % m) + 1;
    const std::uint64_t a = static_cast<std::uint64_t>(best / m / m) + 1;
    return std::array<std::uint64_t, 3>{a, b, c};
}

}  // namespace ultra
