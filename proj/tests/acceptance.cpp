// Acceptance suite: one exact (zero-tolerance) check per criterion,
// printed as a pass/fail line. Exit status 0 iff every criterion holds.

#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ultra/heisenberg.hpp"
#include "ultra/kernels.hpp"
#include "ultra/norm.hpp"
#include "ultra/random_gen.hpp"
#include "ultra/space.hpp"
#include "ultra/wreath.hpp"

using namespace ultra;

namespace {

int g_failures = 0;

void report(int number, const char* title, bool ok) {
    std::printf("criterion %2d [%s]: %s\n", number, ok ? "PASS" : "FAIL", title);
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::vector<RationalUltraSpace> fixture_spaces() {
    std::vector<RationalUltraSpace> out;
    out.push_back(adjoin_basepoint(two_adic_space(4)));
    out.push_back(adjoin_basepoint(two_valued_space(3)));
    out.push_back(adjoin_basepoint(two_valued_space(5)));
    std::mt19937_64 rng(99);
    out.push_back(adjoin_basepoint(random_ultrametric(rng, 4)));
    out.push_back(adjoin_basepoint(random_ultrametric(rng, 5)));
    return out;
}

std::vector<Chain> even_chains(int n, int max_support = 64) {
    std::vector<Chain> out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
        if ((std::popcount(s) & 1) == 0 && std::popcount(s) <= max_support) out.push_back(Chain(s));
    return out;
}

// 1. norm_bottleneck == norm_bruteforce, every even chain with |supp| <= 8,
//    100 seeded random spaces with n <= 10.
bool crit_oracle_equivalence() {
    std::mt19937_64 rng(0);
    for (int t = 0; t < 100; ++t) {
        auto S = adjoin_basepoint(random_ultrametric(rng, 2 + t % 9, t % 4 == 0));
        for (Chain u : even_chains(S.size(), 8)) {
            auto res = norm_bottleneck(u, S);
            if (res.value != norm_bruteforce(u, S)) return false;
            if (!res.witness.is_normal() || res.witness.chain() != u) return false;
        }
    }
    return true;
}

// 2. ultra-seminorm axioms on 10^4 seeded random pairs.
bool crit_seminorm_axioms() {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 10000; ++t) {
        auto S = adjoin_basepoint(random_ultrametric(rng, 2 + t % 7, t % 2 == 0));
        if (norm_bottleneck(Chain{}, S).value != 0) return false;
        Chain u = random_even_chain(rng, S.size(), 6);
        Chain v = random_even_chain(rng, S.size(), 6);
        if (norm_bottleneck(u + v, S).value >
            std::max(norm_bottleneck(u, S).value, norm_bottleneck(v, S).value))
            return false;
    }
    return true;
}

// 3. ||alpha(x) + alpha(y)|| = d(x, y) on all fixture spaces.
bool crit_isometric_embedding() {
    for (const auto& S : fixture_spaces())
        for (int x = 0; x < S.size(); ++x)
            for (int y = 0; y < S.size(); ++y)
                if (norm_bottleneck(embed_alpha(x, S) + embed_alpha(y, S), S).value != S.d(x, y))
                    return false;
    return true;
}

// 4. lower bound and positivity for every even chain on every fixture.
bool crit_lower_bound_positivity() {
    for (const auto& S : fixture_spaces())
        for (Chain u : even_chains(S.size())) {
            if (u.is_zero()) continue;
            std::optional<Rational> minpair;
            for (int i = 0; i < S.size(); ++i)
                for (int j = i + 1; j < S.size(); ++j)
                    if (u.contains(i) && u.contains(j) && (!minpair || S.d(i, j) < *minpair))
                        minpair = S.d(i, j);
            auto value = norm_bottleneck(u, S).value;
            if (minpair && value < *minpair) return false;
            if (S.is_metric() && value <= 0) return false;
        }
    return true;
}

// 5. closedness: distance_to_image(u) >= eps0(u) for u outside alpha(X).
bool crit_closedness() {
    for (const auto& S : fixture_spaces()) {
        if (S.size() > 7) continue;  // fixtures with n <= 6 plus theta
        for (Chain u : even_chains(S.size())) {
            bool in_image = false;
            for (int x = 0; x < S.size(); ++x)
                if (u == embed_alpha(x, S)) in_image = true;
            auto rep = distance_to_image(u, S);
            if (rep.in_image != in_image) return false;
            if (!in_image) {
                if (!rep.eps0) return false;
                if (rep.distance < *rep.eps0) return false;
            }
        }
    }
    return true;
}

// 6. reduction soundness on 10^3 random configurations.
bool crit_reduction() {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 1000; ++t) {
        auto S = adjoin_basepoint(random_ultrametric(rng, 2 + t % 5, t % 3 == 0));
        UltraSeminormFamily family(
            {S, partition_semimetric(random_partition(rng, S.size()), S.points)});
        auto omega = random_configuration(rng, S.size());
        auto nu = reduce(omega);
        if (!nu.is_normal() || nu.chain() != omega.chain()) return false;
        for (const auto& d : family.metrics)
            if (phi_length(nu, d) > phi_length(omega, d)) return false;
    }
    return true;
}

// 7. Hausdorff strong triangle inequality over all subset triples, n <= 5.
bool crit_hausdorff() {
    for (const auto& S : fixture_spaces())
        if (S.size() <= 5 && hausdorff_ultra_violation(S)) return false;
    if (hausdorff_ultra_violation(two_adic_space(4))) return false;
    if (hausdorff_ultra_violation(two_valued_space(5))) return false;
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t)
        if (hausdorff_ultra_violation(random_ultrametric(rng, 2 + t % 4, t % 2 == 0)))
            return false;
    return true;
}

// 8. Heisenberg structure: group axioms n <= 2, inverses through n = 4
//    (512 elements), commutators central and |center| = 2 for n <= 3.
bool crit_heisenberg() {
    for (int n = 0; n <= 2; ++n) {
        auto all = enumerate_heisenberg(n);
        for (const auto& u : all) {
            if (!(h_mul(u, HeisenbergElement::identity(n)) == u)) return false;
            for (const auto& v : all)
                for (const auto& w : all)
                    if (h_mul(h_mul(u, v), w) != h_mul(u, h_mul(v, w))) return false;
        }
    }
    for (int n = 0; n <= 4; ++n)
        for (const auto& u : enumerate_heisenberg(n))
            if (!h_mul(u, h_inv(u)).is_identity() || !h_mul(h_inv(u), u).is_identity())
                return false;
    for (int n = 1; n <= 3; ++n) {
        auto all = enumerate_heisenberg(n);
        for (const auto& u : all)
            for (const auto& v : all) {
                auto c = h_commutator(u, v);
                if (!c.x.is_zero() || !c.f.is_zero()) return false;
            }
        auto z = center(n);
        if (z.size() != 2) return false;
    }
    return true;
}

// 9. w-invariance for all g in S_4, A, f (6144 triples).
bool crit_invariance() {
    const int n = 4;
    for (const auto& g : PermGroup::symmetric(n).elements)
        for (std::uint64_t a = 0; a < 16; ++a)
            for (std::uint64_t f = 0; f < 16; ++f) {
                ClopenVector A(a, n), F(f, n);
                if (pairing_w(act_clopen(g, A), act_character(g, F)) != pairing_w(A, F))
                    return false;
            }
    return true;
}

// 10. semidirect retraction, exhaustive for n = 2, G = S_2.
bool crit_retraction() {
    if (enumerate_semidirect(2, PermGroup::symmetric(2)).size() != 64) return false;
    return retraction_check(2, PermGroup::symmetric(2)).ok();
}

// 11. wreath example H = Z_3: |M| = 24 with verified retraction.
bool crit_wreath() {
    auto [M, rep] = wreath_retract(MultTable::cyclic(3));
    return rep.order == 24 && rep.ok();
}

// 12. Stone duality round trip.
bool crit_duality() {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::uint64_t> members;
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) members.insert(a);
        BooleanSubalgebra P(n, std::move(members));
        auto as = atoms(P);
        if (static_cast<int>(as.size()) != n) return false;
        for (const auto& a : as)
            if (a.popcount() != 1) return false;
        if (!(generate_algebra(n, as) == P)) return false;
    }
    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; ++t) {
        const int n = 1 + t % 5;
        auto part = random_partition(rng, n);
        std::vector<ClopenVector> blocks;
        for (auto b : part.blocks) blocks.emplace_back(b, n);
        auto B = generate_algebra(n, blocks);
        if (!(generate_algebra(n, atoms(B)) == B)) return false;
    }
    return true;
}

// 13. M(P) is a subgroup and M(P v Q) = M(P) cap M(Q), 50 random pairs.
bool crit_subgroup_base() {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        const int n = 2 + t % 5;
        auto G = PermGroup::symmetric(n);
        auto P = random_partition(rng, n);
        auto Q = random_partition(rng, n);
        auto MP = stabilizer_MP(G, P);
        if (!MP.is_group()) return false;
        auto MQ = stabilizer_MP(G, Q);
        std::vector<Permutation> meet;
        for (const auto& g : MP.elements)
            if (MQ.contains(g)) meet.push_back(g);
        if (!(stabilizer_MP(G, common_refinement(P, Q)) == PermGroup(n, std::move(meet))))
            return false;
    }
    return true;
}

// 14. rho_z is a left-invariant ultra-semimetric with subgroup sublevels.
bool crit_invariant_semimetric() {
    int checked = 0;
    for (const auto& S : fixture_spaces()) {
        auto G = isometry_group(S);
        // the two-valued fixtures have the full symmetric group; the cubic
        // invariance sweep below is only feasible for small groups
        if (G.order() > 24) continue;
        ++checked;
        for (int z = 0; z < S.size(); ++z) {
            auto rho = invariant_ultrasemimetric(G, z, S);
            if (strong_triangle_violation(rho)) return false;
            const std::size_t m = G.order();
            auto index_of = [&](const Permutation& p) {
                return static_cast<std::size_t>(
                    std::lower_bound(G.elements.begin(), G.elements.end(), p) -
                    G.elements.begin());
            };
            for (const auto& u : G.elements)
                for (std::size_t s = 0; s < m; ++s)
                    for (std::size_t t = 0; t < m; ++t)
                        if (rho[index_of(u * G.elements[s])][index_of(u * G.elements[t])] !=
                            rho[s][t])
                            return false;
            const std::size_t e = index_of(Permutation::identity(S.size()));
            for (int denom = 1; denom <= 6; ++denom) {
                std::set<Permutation> H;
                for (std::size_t s = 0; s < m; ++s)
                    if (rho[s][e] < Rational(1, denom)) H.insert(G.elements[s]);
                for (const auto& a : H) {
                    if (!H.count(a.inverse())) return false;
                    for (const auto& b : H)
                        if (!H.count(a * b)) return false;
                }
            }
        }
    }
    return checked >= 3;
}

// 15. eps-balls partition X with the equal-or-disjoint dichotomy,
//     100 seeded random spaces, all realized eps.
bool crit_ball_partitions() {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 100; ++t) {
        auto S = random_ultrametric(rng, 2 + t % 7, t % 2 == 0);
        std::set<Rational> values;
        for (int i = 0; i < S.size(); ++i)
            for (int j = i + 1; j < S.size(); ++j)
                if (S.d(i, j) > 0) values.insert(S.d(i, j));
        for (const Rational& eps : values) {
            ClopenPartition P = ball_partition(S, eps);  // ctor validates cover/disjoint
            auto ball = [&](int x) {
                std::uint64_t b = 0;
                for (int y = 0; y < S.size(); ++y)
                    if (S.d(x, y) < eps) b |= std::uint64_t{1} << y;
                return b;
            };
            for (int x = 0; x < S.size(); ++x)
                for (int y = 0; y < S.size(); ++y) {
                    auto bx = ball(x), by = ball(y);
                    if (bx != by && (bx & by) != 0) return false;
                }
        }
    }
    return true;
}

bool guard(const std::function<bool()>& f) {
    try {
        return f();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "  exception: %s\n", e.what());
        return false;
    }
}

}  // namespace

int main() {
    report(1, "oracle equivalence: bottleneck norm vs brute-force pairing minimum",
           guard(crit_oracle_equivalence));
    report(2, "ultra-seminorm axioms on 10^4 random pairs", guard(crit_seminorm_axioms));
    report(3, "alpha is an isometric embedding on all fixtures", guard(crit_isometric_embedding));
    report(4, "norm lower bound and positivity", guard(crit_lower_bound_positivity));
    report(5, "closedness of the embedded space with the eps0 bound", guard(crit_closedness));
    report(6, "configuration reduction soundness", guard(crit_reduction));
    report(7, "Hausdorff distance satisfies the strong triangle inequality",
           guard(crit_hausdorff));
    report(8, "Heisenberg group axioms, nilpotency and center", guard(crit_heisenberg));
    report(9, "pairing invariance under the birepresentation", guard(crit_invariance));
    report(10, "semidirect retraction r, s, r after s", guard(crit_retraction));
    report(11, "wreath example over Z_3", guard(crit_wreath));
    report(12, "Stone duality round trip", guard(crit_duality));
    report(13, "subgroup base M(P) and the refinement law", guard(crit_subgroup_base));
    report(14, "invariant ultra-semimetric rho_z with subgroup sublevels",
           guard(crit_invariant_semimetric));
    report(15, "open-ball partitions with the equal-or-disjoint dichotomy",
           guard(crit_ball_partitions));
    return g_failures == 0 ? 0 : 1;
}
