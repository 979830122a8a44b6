#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ultra/kernels.hpp"
#include "ultra/random_gen.hpp"
#include "ultra/space.hpp"

using namespace ultra;

namespace {

RationalUltraSpace bad_triangle() {
    return RationalUltraSpace({"a", "b", "c"},
                              {{Rational(0), Rational(1), Rational(19, 10)},
                               {Rational(1), Rational(0), Rational(1)},
                               {Rational(19, 10), Rational(1), Rational(0)}});
}

}  // namespace

TEST_CASE("verify_ultrametric") {
    CHECK_FALSE(verify_ultrametric(two_valued_space(5)).has_value());
    CHECK_FALSE(verify_ultrametric(two_adic_space(4)).has_value());

    auto witness = verify_ultrametric(bad_triangle());
    REQUIRE(witness.has_value());
    // lexicographically first violating ordered triple: d(a,c) > max(d(a,b), d(b,c))
    CHECK(*witness == TripleWitness{0, 1, 2});

    CHECK_THROWS_AS(RationalUltraSpace({"a", "b"}, {{Rational(0), Rational(1)},
                                                    {Rational(2), Rational(0)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(RationalUltraSpace({"a", "b"}, {{Rational(0), Rational(-1)},
                                                    {Rational(-1), Rational(0)}}),
                    std::invalid_argument);
}

TEST_CASE("2-adic fixture distances") {
    auto S = two_adic_space(4);
    CHECK(S.d(0, 1) == 1);
    CHECK(S.d(0, 2) == Rational(1, 2));
    CHECK(S.d(1, 3) == Rational(1, 2));
    CHECK(S.d(0, 3) == 1);
}

TEST_CASE("ball partitions") {
    auto S = two_adic_space(4);
    CHECK(ball_partition(S, Rational(2)).blocks == std::vector<std::uint64_t>{0b1111});
    CHECK(ball_partition(S, Rational(1, 2)).blocks ==
          std::vector<std::uint64_t>{0b0001, 0b0010, 0b0100, 0b1000});
    CHECK(ball_partition(S, Rational(1)).blocks == std::vector<std::uint64_t>{0b0101, 0b1010});
    // closed balls of radius 1/2 give the same partition as open radius 1
    CHECK(ball_partition(S, Rational(1, 2), true).blocks ==
          std::vector<std::uint64_t>{0b0101, 0b1010});
    CHECK_THROWS_AS(ball_partition(S, Rational(0)), std::invalid_argument);
}

TEST_CASE("ball dichotomy on random spaces") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        auto S = random_ultrametric(rng, 2 + t % 7, t % 2 == 0);
        for (int i = 0; i < S.size(); ++i)
            for (int j = 0; j < S.size(); ++j) {
                if (S.d(i, j) == 0) continue;
                const Rational eps = S.d(i, j);
                auto ball = [&](int x) {
                    std::uint64_t b = 0;
                    for (int y = 0; y < S.size(); ++y)
                        if (S.d(x, y) < eps) b |= std::uint64_t{1} << y;
                    return b;
                };
                for (int x = 0; x < S.size(); ++x)
                    for (int y = 0; y < S.size(); ++y) {
                        auto bx = ball(x), by = ball(y);
                        CHECK((bx == by || (bx & by) == 0));
                    }
            }
    }
}

TEST_CASE("max_combine") {
    auto S = two_adic_space(4);
    CHECK(max_combine({S, S}).dist == S.dist);

    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) {
        const int n = 2 + t % 5;
        auto A = random_ultrametric(rng, n, true);
        auto B = random_ultrametric(rng, n, true);
        B.points = A.points;
        auto M = max_combine({A, B});
        CHECK_FALSE(verify_ultrametric(M).has_value());
    }

    // max of two partition semimetrics is the semimetric of the refinement
    std::vector<std::string> labels{"p0", "p1", "p2", "p3"};
    ClopenPartition P(4, {0b0011, 0b1100});
    ClopenPartition Q(4, {0b0101, 0b1010});
    auto combined = max_combine({partition_semimetric(P, labels), partition_semimetric(Q, labels)});
    CHECK(combined.dist == partition_semimetric(common_refinement(P, Q), labels).dist);
}

TEST_CASE("hausdorff distance") {
    auto S = two_adic_space(4);
    for (std::uint64_t a = 1; a < 16; ++a) CHECK(hausdorff_distance(a, a, S) == 0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(hausdorff_distance(std::uint64_t{1} << i, std::uint64_t{1} << j, S) == S.d(i, j));
    // A = {0,1}, B = {2}: directed sups are 1 and 1/2
    CHECK(hausdorff_distance(0b0011, 0b0100, S) == 1);
    CHECK_THROWS_AS(hausdorff_distance(0, 0b1, S), std::invalid_argument);
}

TEST_CASE("hausdorff strong triangle inequality over all subset triples") {
    CHECK_FALSE(hausdorff_ultra_violation(two_adic_space(4)).has_value());
    CHECK_FALSE(hausdorff_ultra_violation(two_valued_space(5)).has_value());
    std::mt19937_64 rng(23);
    for (int t = 0; t < 10; ++t)
        CHECK_FALSE(hausdorff_ultra_violation(random_ultrametric(rng, 2 + t % 4)).has_value());
}

TEST_CASE("adjoin_basepoint") {
    auto P = adjoin_basepoint(two_adic_space(4));
    REQUIRE(P.size() == 5);
    REQUIRE(P.basepoint.has_value());
    CHECK(P.points[4] == "theta");
    for (int i = 0; i < 4; ++i) {
        CHECK(P.d(i, 4) == 1);
        for (int j = 0; j < 4; ++j) CHECK(P.d(i, j) == two_adic_space(4).d(i, j));
    }
    CHECK_FALSE(verify_ultrametric(P).has_value());

    // distances above 1 are truncated
    RationalUltraSpace far({"a", "b", "c"}, {{Rational(0), Rational(2), Rational(2)},
                                             {Rational(2), Rational(0), Rational(2)},
                                             {Rational(2), Rational(2), Rational(0)}});
    auto Pf = adjoin_basepoint(far);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) CHECK(Pf.d(i, j) == 1);

    // truncation preserves the strong triangle inequality
    std::mt19937_64 rng(31);
    for (int t = 0; t < 50; ++t)
        CHECK_FALSE(verify_ultrametric(adjoin_basepoint(random_ultrametric(rng, 2 + t % 6)))
                        .has_value());

    // every isometry extends to one fixing theta
    auto S = two_adic_space(4);
    for (const auto& g : isometry_group(S).elements) {
        std::vector<int> im = g.img;
        im.push_back(4);
        CHECK(is_isometry(Permutation(im), P));
    }

    // label collision gets disambiguated
    RationalUltraSpace named({"theta"}, {{Rational(0)}});
    CHECK(adjoin_basepoint(named).points == std::vector<std::string>{"theta", "theta*"});
}

TEST_CASE("orbit basepoint") {
    auto S = two_adic_space(4);
    auto G = isometry_group(S);

    auto res = orbit_basepoint(G, 0, S);
    if (!res.degenerate) {
        auto& X = res.space;
        REQUIRE(X.size() == 5);
        CHECK_FALSE(verify_ultrametric(X).has_value());
        // theta distances follow the Hausdorff formula against the orbit
        std::uint64_t orbit = 0;
        for (const auto& g : G.elements) orbit |= std::uint64_t{1} << g(0);
        for (int i = 0; i < 4; ++i)
            CHECK(X.d(i, 4) == hausdorff_distance(std::uint64_t{1} << i, orbit, S));
        // extended action fixes theta
        for (const auto& g : G.elements) {
            std::vector<int> im = g.img;
            im.push_back(4);
            CHECK(is_isometry(Permutation(im), X));
        }
    }

    // fixed point: degenerate, no duplicate adjoined
    auto fixed = orbit_basepoint(PermGroup::trivial(4), 2, S);
    CHECK(fixed.degenerate);
    CHECK(fixed.space.size() == 4);

    CHECK_THROWS_AS(orbit_basepoint(PermGroup::symmetric(4), 0, S), std::invalid_argument);
}

TEST_CASE("isometry groups") {
    CHECK(isometry_group(two_valued_space(4)) == PermGroup::symmetric(4));

    RationalUltraSpace distinct({"a", "b", "c"}, {{Rational(0), Rational(1), Rational(1, 2)},
                                                  {Rational(1), Rational(0), Rational(1)},
                                                  {Rational(1, 2), Rational(1), Rational(0)}});
    REQUIRE_FALSE(verify_ultrametric(distinct).has_value());
    CHECK(isometry_group(distinct).order() == 2);  // only a <-> c can swap

    auto G = isometry_group(two_adic_space(4));
    CHECK(G.order() == 8);  // computed subgroup of S_4
    for (const auto& g : G.elements) CHECK(is_isometry(g, two_adic_space(4)));
}

TEST_CASE("space JSON round trip") {
    auto S = adjoin_basepoint(two_adic_space(4));
    auto T = RationalUltraSpace::from_json(S.to_json());
    CHECK(T.points == S.points);
    CHECK(T.dist == S.dist);
    CHECK(T.basepoint == S.basepoint);

    CHECK_THROWS_AS(RationalUltraSpace::from_json(nlohmann::json{{"points", {"a"}}}),
                    std::invalid_argument);
}
