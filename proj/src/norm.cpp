#include "ultra/norm.hpp"

#include <algorithm>
#include <stdexcept>

namespace ultra {

namespace {

std::vector<int> support_points(Chain u) {
    std::vector<int> pts;
    for (int i = 0; i < 64; ++i)
        if (u.contains(i)) pts.push_back(i);
    return pts;
}

void require_even(Chain u) {
    if (!u.even()) throw std::invalid_argument("norm is defined on even chains only");
}

void require_in_space(Chain u, const RationalUltraSpace& S) {
    if (S.size() < 64 && (u.support >> S.size()) != 0)
        throw std::invalid_argument("chain support exceeds the point set");
}

// Minimum over all perfect pairings of pts[remaining] of the max pair
// distance, floored by `acc`.
Rational pairing_min_max(const std::vector<int>& pts, std::uint32_t remaining,
                         const Rational& acc, const RationalUltraSpace& d) {
    if (remaining == 0) return acc;
    const int i = std::countr_zero(remaining);
    std::optional<Rational> best;
    for (int j = i + 1; j < static_cast<int>(pts.size()); ++j) {
        if (!((remaining >> j) & 1u)) continue;
        std::uint32_t rest = remaining & ~(1u << i) & ~(1u << j);
        Rational sub = pairing_min_max(pts, rest, std::max(acc, d.d(pts[i], pts[j])), d);
        if (!best || sub < *best) best = sub;
    }
    return *best;
}

// dp[mask] = 1 iff the points selected by mask admit a perfect matching
// with edges d <= threshold (adjacency precomputed in adj).
std::vector<char> matchability_table(const std::vector<std::uint32_t>& adj) {
    const int m = static_cast<int>(adj.size());
    std::vector<char> dp(std::size_t{1} << m, 0);
    dp[0] = 1;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
        if (std::popcount(mask) & 1) continue;
        const int i = std::countr_zero(mask);
        const std::uint32_t rest = mask & ~(1u << i);
        std::uint32_t cand = rest & adj[i];
        while (cand) {
            const int j = std::countr_zero(cand);
            cand &= cand - 1;
            if (dp[rest & ~(1u << j)]) {
                dp[mask] = 1;
                break;
            }
        }
    }
    return dp;
}

}  // namespace

Rational phi_length(const Configuration& omega, const RationalUltraSpace& d) {
    Rational len = 0;
    for (auto [a, b] : omega.pairs) {
        if (a >= d.size() || b >= d.size())
            throw std::invalid_argument("configuration entry outside the point set");
        len = std::max(len, d.d(a, b));
    }
    return len;
}

Configuration reduce(Configuration omega) {
    auto& ps = omega.pairs;
    bool changed = true;
    while (changed) {
        changed = false;
        // trivial pairs
        auto it = std::find_if(ps.begin(), ps.end(), [](auto p) { return p.first == p.second; });
        if (it != ps.end()) {
            ps.erase(it);
            changed = true;
            continue;
        }
        // chain rule on two pairs sharing an entry
        for (std::size_t i = 0; i < ps.size() && !changed; ++i)
            for (std::size_t k = i + 1; k < ps.size() && !changed; ++k) {
                int shared = -1;
                for (int a : {ps[i].first, ps[i].second})
                    for (int b : {ps[k].first, ps[k].second})
                        if (a == b) shared = a;
                if (shared < 0) continue;
                int x = ps[i].first == shared ? ps[i].second : ps[i].first;
                int z = ps[k].first == shared ? ps[k].second : ps[k].first;
                ps.erase(ps.begin() + k);
                ps.erase(ps.begin() + i);
                ps.emplace_back(std::min(x, z), std::max(x, z));
                changed = true;
            }
    }
    return Configuration(std::move(ps));
}

Rational norm_bruteforce(Chain u, const RationalUltraSpace& d) {
    require_even(u);
    require_in_space(u, d);
    auto pts = support_points(u);
    if (pts.size() > 12)
        throw std::invalid_argument("brute-force pairing enumeration capped at 12 support points");
    if (pts.empty()) return 0;
    return pairing_min_max(pts, (1u << pts.size()) - 1, Rational(0), d);
}

NormResult norm_bottleneck(Chain u, const RationalUltraSpace& d) {
    require_even(u);
    require_in_space(u, d);
    auto pts = support_points(u);
    const int m = static_cast<int>(pts.size());
    if (m > 26) throw std::invalid_argument("bottleneck matching capped at 26 support points");
    if (m == 0) return {Rational(0), Configuration{}};

    std::vector<Rational> values;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) values.push_back(d.d(pts[i], pts[j]));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    auto adjacency = [&](const Rational& t) {
        std::vector<std::uint32_t> adj(m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j && d.d(pts[i], pts[j]) <= t) adj[i] |= 1u << j;
        return adj;
    };

    // smallest threshold admitting a perfect matching
    std::size_t lo = 0, hi = values.size() - 1;
    const std::uint32_t all = m == 32 ? ~0u : (1u << m) - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (matchability_table(adjacency(values[mid]))[all])
            hi = mid;
        else
            lo = mid + 1;
    }
    const Rational opt = values[lo];

    // lexicographically least optimal pairing in the point order of S
    auto adj = adjacency(opt);
    auto dp = matchability_table(adj);
    std::vector<std::pair<int, int>> witness;
    std::uint32_t remaining = all;
    while (remaining) {
        const int i = std::countr_zero(remaining);
        const std::uint32_t rest = remaining & ~(1u << i);
        for (int j = i + 1; j < m; ++j) {
            if (!((rest >> j) & 1u) || !((adj[i] >> j) & 1u)) continue;
            if (dp[rest & ~(1u << j)]) {
                witness.emplace_back(pts[i], pts[j]);
                remaining = rest & ~(1u << j);
                break;
            }
        }
    }
    return {opt, Configuration(std::move(witness))};
}

Chain embed_alpha(int x, const RationalUltraSpace& S) {
    if (!S.basepoint) throw std::invalid_argument("space has no basepoint");
    if (x < 0 || x >= S.size()) throw std::out_of_range("point index out of range");
    return Chain((std::uint64_t{1} << x) ^ (std::uint64_t{1} << *S.basepoint));
}

ClosednessReport distance_to_image(Chain u, const RationalUltraSpace& S) {
    require_even(u);
    require_in_space(u, S);
    if (!S.basepoint) throw std::invalid_argument("space has no basepoint");
    ClosednessReport rep;
    for (int x = 0; x < S.size(); ++x) {
        Rational v = norm_bottleneck(u + embed_alpha(x, S), S).value;
        if (rep.argmin_point < 0 || v < rep.distance) {
            rep.distance = v;
            rep.argmin_point = x;
        }
    }
    rep.in_image = rep.distance == 0;

    const int theta = *S.basepoint;
    auto pts = support_points(u);
    std::vector<int> non_theta;
    for (int p : pts)
        if (p != theta) non_theta.push_back(p);
    if (non_theta.size() >= 2) {
        std::optional<Rational> eps1, eps2;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                const Rational& v = S.d(pts[i], pts[j]);
                if (v > 0 && (!eps1 || v < *eps1)) eps1 = v;
            }
        for (int p : non_theta) {
            const Rational& v = S.d(p, theta);
            if (v > 0 && (!eps2 || v < *eps2)) eps2 = v;
        }
        if (eps1 && eps2) rep.eps0 = std::min(*eps1, *eps2);
    }
    return rep;
}

Chain act_on_chain(const Permutation& g, Chain u, int theta) {
    if (g(theta) != theta) throw std::invalid_argument("permutation moves the basepoint");
    Chain out;
    for (int i = 0; i < g.degree(); ++i)
        if (u.contains(i)) out.support |= std::uint64_t{1} << g(i);
    if (g.degree() < 64 && (u.support >> g.degree()) != 0)
        throw std::invalid_argument("chain support exceeds the permutation degree");
    return out;
}

UltraSeminormFamily::UltraSeminormFamily(std::vector<RationalUltraSpace> ms)
    : metrics(std::move(ms)) {
    if (metrics.empty()) throw std::invalid_argument("empty seminorm family");
    for (const auto& S : metrics) {
        if (S.points != metrics.front().points)
            throw std::invalid_argument("family members must share the point set");
        if (verify_ultrametric(S))
            throw std::invalid_argument("family member violates the strong triangle inequality");
    }
    // close under pairwise max; terminates since there are finitely many
    // pointwise maxima of the initial members
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t sz = metrics.size();
        if (sz > 64) throw std::invalid_argument("seminorm family closure exceeds 64 members");
        for (std::size_t i = 0; i < sz && !grew; ++i)
            for (std::size_t j = i + 1; j < sz && !grew; ++j) {
                RationalUltraSpace combined = max_combine({metrics[i], metrics[j]});
                bool known = std::any_of(metrics.begin(), metrics.end(), [&](const auto& S) {
                    return S.dist == combined.dist;
                });
                if (!known) {
                    metrics.push_back(std::move(combined));
                    grew = true;
                }
            }
    }
}

std::vector<Rational> seminorm_vector(Chain u, const UltraSeminormFamily& F) {
    require_even(u);
    std::vector<Rational> out;
    out.reserve(F.metrics.size());
    for (const auto& S : F.metrics) out.push_back(norm_bottleneck(u, S).value);
    return out;
}

}  // namespace ultra
