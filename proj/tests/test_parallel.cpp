#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ultra/kernels.hpp"
#include "ultra/random_gen.hpp"

using namespace ultra;

TEST_CASE("strong triangle kernel: OpenMP agrees with the serial reference") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        auto S = random_ultrametric(rng, 3 + t % 20, t % 2 == 0);
        CHECK(strong_triangle_violation(S.dist) == strong_triangle_violation_serial(S.dist));
    }

    // injected violations: witnesses must match including tie-breaking
    for (int t = 0; t < 30; ++t) {
        auto S = random_ultrametric(rng, 4 + t % 10);
        std::uniform_int_distribution<int> pt(0, S.size() - 1);
        for (int k = 0; k < 3; ++k) {
            int i = pt(rng), j = pt(rng);
            if (i == j) continue;
            S.dist[i][j] = S.dist[j][i] = S.dist[i][j] * 7;
        }
        auto serial = strong_triangle_violation_serial(S.dist);
        auto parallel = strong_triangle_violation(S.dist);
        REQUIRE(serial.has_value() == parallel.has_value());
        if (serial) CHECK(*serial == *parallel);
    }
}

TEST_CASE("hausdorff triple kernel: OpenMP agrees with the serial reference") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 8; ++t) {
        auto S = random_ultrametric(rng, 2 + t % 4, t % 2 == 0);
        CHECK(hausdorff_ultra_violation(S) == hausdorff_ultra_violation_serial(S));
    }

    // a non-ultra input must yield the same first violating subset triple
    RationalUltraSpace bad({"a", "b", "c"}, {{Rational(0), Rational(1), Rational(19, 10)},
                                             {Rational(1), Rational(0), Rational(1)},
                                             {Rational(19, 10), Rational(1), Rational(0)}});
    auto serial = hausdorff_ultra_violation_serial(bad);
    auto parallel = hausdorff_ultra_violation(bad);
    REQUIRE(serial.has_value());
    REQUIRE(parallel.has_value());
    CHECK(*serial == *parallel);
}
