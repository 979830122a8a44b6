#include "ultra/selftest.hpp"

#include <random>
#include <sstream>

#include "ultra/heisenberg.hpp"
#include "ultra/kernels.hpp"
#include "ultra/norm.hpp"
#include "ultra/random_gen.hpp"

namespace ultra {

namespace {

struct Check {
    ClaimResult result;
    explicit Check(std::string name) { result.name = std::move(name); result.passed = true; }
    void fail(const std::string& detail) {
        if (result.passed) {
            result.passed = false;
            result.detail = detail;
        }
    }
};

RationalUltraSpace pointed_random_space(std::mt19937_64& rng, int n) {
    return adjoin_basepoint(random_ultrametric(rng, n));
}

ClaimResult check_reduction(std::mt19937_64& rng, int trials) {
    Check c("claim1-2-reduction");
    for (int t = 0; t < trials; ++t) {
        auto S = pointed_random_space(rng, 2 + t % 5);
        UltraSeminormFamily family({S, partition_semimetric(random_partition(rng, S.size()), S.points)});
        auto omega = random_configuration(rng, S.size());
        auto nu = reduce(omega);
        if (!nu.is_normal()) c.fail("reduce produced a non-normal configuration");
        if (nu.chain() != omega.chain()) c.fail("reduce changed the represented chain");
        for (const auto& d : family.metrics)
            if (phi_length(nu, d) > phi_length(omega, d)) c.fail("reduce increased the length");
    }
    return c.result;
}

ClaimResult check_oracle(std::mt19937_64& rng, int trials) {
    Check c("claim3-min-over-normal");
    for (int t = 0; t < trials; ++t) {
        auto S = pointed_random_space(rng, 2 + t % 5);
        Chain u = random_even_chain(rng, S.size(), 6);
        auto fast = norm_bottleneck(u, S);
        if (fast.value != norm_bruteforce(u, S)) c.fail("bottleneck disagrees with brute force");
        if (!fast.witness.is_normal() || fast.witness.chain() != u ||
            phi_length(fast.witness, S) != fast.value)
            c.fail("invalid optimal witness configuration");
    }
    return c.result;
}

ClaimResult check_seminorm_axioms(std::mt19937_64& rng, int trials) {
    Check c("claim4-ultra-seminorm");
    for (int t = 0; t < trials; ++t) {
        auto S = pointed_random_space(rng, 2 + t % 5);
        if (norm_bottleneck(Chain{}, S).value != 0) c.fail("||0|| != 0");
        Chain u = random_even_chain(rng, S.size(), 6);
        Chain v = random_even_chain(rng, S.size(), 6);
        auto nu = norm_bottleneck(u, S).value;
        auto nv = norm_bottleneck(v, S).value;
        if (norm_bottleneck(u + v, S).value > std::max(nu, nv))
            c.fail("||u+v|| > max(||u||, ||v||)");
    }
    return c.result;
}

ClaimResult check_isometric_embedding(std::mt19937_64& rng, int trials) {
    Check c("claim5-isometric-embedding");
    for (int t = 0; t < trials; ++t) {
        auto S = pointed_random_space(rng, 2 + t % 5);
        for (int x = 0; x < S.size(); ++x)
            for (int y = 0; y < S.size(); ++y)
                if (norm_bottleneck(embed_alpha(x, S) + embed_alpha(y, S), S).value != S.d(x, y))
                    c.fail("||alpha(x) + alpha(y)|| != d(x, y)");
    }
    return c.result;
}

ClaimResult check_lower_bound(std::mt19937_64& rng, int trials) {
    Check c("claim6-lower-bound");
    for (int t = 0; t < trials; ++t) {
        auto S = pointed_random_space(rng, 2 + t % 5);
        Chain u = random_even_chain(rng, S.size(), 6);
        if (u.is_zero()) continue;
        std::optional<Rational> minpair;
        for (int i = 0; i < S.size(); ++i)
            for (int j = i + 1; j < S.size(); ++j)
                if (u.contains(i) && u.contains(j) && (!minpair || S.d(i, j) < *minpair))
                    minpair = S.d(i, j);
        if (minpair && norm_bottleneck(u, S).value < *minpair)
            c.fail("norm below the minimal support distance");
    }
    return c.result;
}

ClaimResult check_positivity(std::mt19937_64& rng, int trials) {
    Check c("claim7-positivity");
    for (int t = 0; t < trials; ++t) {
        auto S = pointed_random_space(rng, 2 + t % 5);  // a metric: separating
        Chain u = random_even_chain(rng, S.size(), 6);
        if (!u.is_zero() && norm_bottleneck(u, S).value <= 0)
            c.fail("vanishing norm of a nonzero chain under a separating metric");
    }
    return c.result;
}

ClaimResult check_hausdorff(std::mt19937_64& rng, int trials) {
    Check c("lem-sti-hausdorff");
    if (hausdorff_ultra_violation(two_adic_space(4)))
        c.fail("violation on the 2-adic fixture");
    for (int t = 0; t < trials / 20 + 1; ++t)
        if (hausdorff_ultra_violation(random_ultrametric(rng, 2 + t % 4)))
            c.fail("violation on a random space");
    return c.result;
}

ClaimResult check_invariance(std::mt19937_64&, int) {
    Check c("pairing-invariance");
    const int n = 3;
    for (const auto& g : PermGroup::symmetric(n).elements)
        for (std::uint64_t a = 0; a < (1u << n); ++a)
            for (std::uint64_t f = 0; f < (1u << n); ++f) {
                ClopenVector A(a, n), F(f, n);
                if (pairing_w(act_clopen(g, A), act_character(g, F)) != pairing_w(A, F))
                    c.fail("w(gA, gf) != w(A, f)");
            }
    return c.result;
}

ClaimResult check_nilpotency(std::mt19937_64&, int) {
    Check c("heisenberg-nilpotency");
    auto all = enumerate_heisenberg(2);
    for (const auto& u : all)
        for (const auto& v : all) {
            auto comm = h_commutator(u, v);
            if (!comm.x.is_zero() || !comm.f.is_zero()) c.fail("non-central commutator");
            for (const auto& w : all)
                if (h_mul(comm, w) != h_mul(w, comm)) c.fail("commutator fails to commute");
        }
    return c.result;
}

ClaimResult check_retraction(std::mt19937_64&, int) {
    Check c("semidirect-retraction");
    auto rep = retraction_check(2, PermGroup::symmetric(2));
    if (!rep.r_homomorphism) c.fail("r is not a homomorphism");
    if (!rep.s_homomorphism) c.fail("s is not a homomorphism");
    if (!rep.r_after_s_identity) c.fail("r after s is not the identity");
    return c.result;
}

}  // namespace

std::vector<ClaimResult> run_selftest(const SelftestOptions& opts) {
    std::mt19937_64 rng(opts.seed);
    const int trials = opts.trials;
    return {
        check_reduction(rng, trials),
        check_oracle(rng, trials),
        check_seminorm_axioms(rng, trials),
        check_isometric_embedding(rng, trials),
        check_lower_bound(rng, trials),
        check_positivity(rng, trials),
        check_hausdorff(rng, trials),
        check_invariance(rng, trials),
        check_nilpotency(rng, trials),
        check_retraction(rng, trials),
    };
}

}  // namespace ultra
