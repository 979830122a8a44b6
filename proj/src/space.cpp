#include "ultra/space.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ultra/kernels.hpp"

namespace ultra {

RationalUltraSpace::RationalUltraSpace(std::vector<std::string> labels,
                                       std::vector<std::vector<Rational>> d,
                                       std::optional<int> base)
    : points(std::move(labels)), dist(std::move(d)), basepoint(base) {
    const int n = size();
    std::set<std::string> uniq(points.begin(), points.end());
    if (static_cast<int>(uniq.size()) != n)
        throw std::invalid_argument("duplicate point labels");
    if (static_cast<int>(dist.size()) != n)
        throw std::invalid_argument("distance matrix size does not match point count");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(dist[i].size()) != n)
            throw std::invalid_argument("distance matrix is not square");
        if (dist[i][i] != 0) throw std::invalid_argument("nonzero diagonal entry");
        for (int j = 0; j < n; ++j) {
            if (dist[i][j] < 0) throw std::invalid_argument("negative distance");
            if (dist[i][j] != dist[j][i]) throw std::invalid_argument("asymmetric distance matrix");
        }
    }
    if (basepoint && (*basepoint < 0 || *basepoint >= n))
        throw std::invalid_argument("basepoint index out of range");
}

int RationalUltraSpace::index_of(const std::string& label) const {
    auto it = std::find(points.begin(), points.end(), label);
    if (it == points.end()) throw std::invalid_argument("unknown point label: " + label);
    return static_cast<int>(it - points.begin());
}

bool RationalUltraSpace::is_metric() const {
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (dist[i][j] == 0) return false;
    return true;
}

RationalUltraSpace RationalUltraSpace::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("points") || !j.contains("dist"))
        throw std::invalid_argument("space JSON needs \"points\" and \"dist\"");
    std::vector<std::string> labels = j.at("points").get<std::vector<std::string>>();
    std::vector<std::vector<Rational>> d;
    for (const auto& row : j.at("dist")) {
        std::vector<Rational> r;
        for (const auto& cell : row) r.push_back(rational_from_json(cell));
        d.push_back(std::move(r));
    }
    std::optional<int> base;
    if (j.contains("basepoint") && !j.at("basepoint").is_null()) {
        const std::string b = j.at("basepoint").get<std::string>();
        auto it = std::find(labels.begin(), labels.end(), b);
        if (it == labels.end()) throw std::invalid_argument("basepoint label not among points");
        base = static_cast<int>(it - labels.begin());
    }
    return RationalUltraSpace(std::move(labels), std::move(d), base);
}

nlohmann::json RationalUltraSpace::to_json() const {
    nlohmann::json j;
    j["points"] = points;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : dist) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& cell : row) r.push_back(rational_to_json(cell));
        rows.push_back(std::move(r));
    }
    j["dist"] = std::move(rows);
    if (basepoint) j["basepoint"] = points[*basepoint];
    return j;
}

std::optional<TripleWitness> verify_ultrametric(const RationalUltraSpace& S) {
    return strong_triangle_violation(S.dist);
}

ClopenPartition ball_partition(const RationalUltraSpace& S, const Rational& eps,
                               bool closed_balls) {
    if (eps <= 0) throw std::invalid_argument("ball radius must be positive");
    const int n = S.size();
    if (n == 0 || n > 63) throw std::invalid_argument("ball partition needs 1..63 points");
    std::vector<std::uint64_t> balls;
    for (int x = 0; x < n; ++x) {
        std::uint64_t b = 0;
        for (int y = 0; y < n; ++y) {
            bool in = closed_balls ? (S.d(x, y) <= eps) : (S.d(x, y) < eps);
            if (in) b |= std::uint64_t{1} << y;
        }
        balls.push_back(b);
    }
    std::sort(balls.begin(), balls.end());
    balls.erase(std::unique(balls.begin(), balls.end()), balls.end());
    return ClopenPartition(n, std::move(balls));
}

RationalUltraSpace max_combine(const std::vector<RationalUltraSpace>& spaces) {
    if (spaces.empty()) throw std::invalid_argument("max_combine of an empty list");
    const auto& first = spaces.front();
    std::vector<std::vector<Rational>> d = first.dist;
    for (const auto& S : spaces) {
        if (S.points != first.points)
            throw std::invalid_argument("max_combine over mismatched point sets");
        for (int i = 0; i < S.size(); ++i)
            for (int j = 0; j < S.size(); ++j) d[i][j] = std::max(d[i][j], S.d(i, j));
    }
    return RationalUltraSpace(first.points, std::move(d), first.basepoint);
}

Rational hausdorff_distance(std::uint64_t A, std::uint64_t B, const RationalUltraSpace& S) {
    if (A == 0 || B == 0) throw std::invalid_argument("Hausdorff distance needs nonempty subsets");
    const int n = S.size();
    auto directed = [&](std::uint64_t from, std::uint64_t to) {
        Rational sup = 0;
        for (int a = 0; a < n; ++a) {
            if (!((from >> a) & 1u)) continue;
            std::optional<Rational> inf;
            for (int b = 0; b < n; ++b) {
                if (!((to >> b) & 1u)) continue;
                if (!inf || S.d(a, b) < *inf) inf = S.d(a, b);
            }
            sup = std::max(sup, *inf);
        }
        return sup;
    };
    return std::max(directed(A, B), directed(B, A));
}

RationalUltraSpace adjoin_basepoint(const RationalUltraSpace& S, const std::string& label) {
    std::string theta = label;
    while (std::find(S.points.begin(), S.points.end(), theta) != S.points.end()) theta += "*";
    const int n = S.size();
    std::vector<std::string> labels = S.points;
    labels.push_back(theta);
    std::vector<std::vector<Rational>> d(n + 1, std::vector<Rational>(n + 1, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[i][j] = std::min(S.d(i, j), Rational(1));
    for (int i = 0; i < n; ++i) d[i][n] = d[n][i] = 1;
    return RationalUltraSpace(std::move(labels), std::move(d), n);
}

bool is_isometry(const Permutation& g, const RationalUltraSpace& S) {
    if (g.degree() != S.size()) return false;
    for (int i = 0; i < S.size(); ++i)
        for (int j = i + 1; j < S.size(); ++j)
            if (S.d(g(i), g(j)) != S.d(i, j)) return false;
    return true;
}

OrbitBasepointResult orbit_basepoint(const PermGroup& G, int x0, const RationalUltraSpace& S) {
    if (x0 < 0 || x0 >= S.size()) throw std::invalid_argument("orbit point out of range");
    for (const auto& g : G.elements)
        if (!is_isometry(g, S)) throw std::invalid_argument("group contains a non-isometry");
    std::uint64_t orbit = 0;
    for (const auto& g : G.elements) orbit |= std::uint64_t{1} << g(x0);
    OrbitBasepointResult res;
    if (orbit == (std::uint64_t{1} << x0)) {
        res.degenerate = true;
        res.space = S;
        return res;
    }
    const int n = S.size();
    std::string theta = "theta";
    while (std::find(S.points.begin(), S.points.end(), theta) != S.points.end()) theta += "*";
    std::vector<std::string> labels = S.points;
    labels.push_back(theta);
    std::vector<std::vector<Rational>> d(n + 1, std::vector<Rational>(n + 1, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[i][j] = S.d(i, j);
    for (int i = 0; i < n; ++i)
        d[i][n] = d[n][i] = hausdorff_distance(std::uint64_t{1} << i, orbit, S);
    res.space = RationalUltraSpace(std::move(labels), std::move(d), n);
    return res;
}

PermGroup isometry_group(const RationalUltraSpace& S) {
    const int n = S.size();
    if (n > 8) throw std::invalid_argument("isometry group enumeration capped at 8 points");
    std::vector<Permutation> elems;
    for (const auto& g : PermGroup::symmetric(n).elements)
        if (is_isometry(g, S)) elems.push_back(g);
    return PermGroup(n, std::move(elems));
}

std::vector<std::vector<Rational>> invariant_ultrasemimetric(const PermGroup& G, int z,
                                                             const RationalUltraSpace& S) {
    if (z < 0 || z >= S.size()) throw std::invalid_argument("base point out of range");
    for (const auto& g : G.elements)
        if (!is_isometry(g, S)) throw std::invalid_argument("group contains a non-isometry");
    const std::size_t m = G.order();
    std::vector<std::vector<Rational>> rho(m, std::vector<Rational>(m, Rational(0)));
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t)
            rho[s][t] = S.d(G.elements[s](z), G.elements[t](z));
    return rho;
}

RationalUltraSpace two_adic_space(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            int diff = i > j ? i - j : j - i;
            Rational v(1);
            while (diff % 2 == 0) {
                v /= 2;
                diff /= 2;
            }
            d[i][j] = v;
        }
    return RationalUltraSpace(std::move(labels), std::move(d));
}

RationalUltraSpace two_valued_space(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, Rational(1)));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    return RationalUltraSpace(std::move(labels), std::move(d));
}

RationalUltraSpace partition_semimetric(const ClopenPartition& P,
                                        const std::vector<std::string>& labels) {
    if (static_cast<int>(labels.size()) != P.n)
        throw std::invalid_argument("label count does not match partition");
    std::vector<int> block_of(P.n);
    for (std::size_t b = 0; b < P.blocks.size(); ++b)
        for (int i = 0; i < P.n; ++i)
            if ((P.blocks[b] >> i) & 1u) block_of[i] = static_cast<int>(b);
    std::vector<std::vector<Rational>> d(P.n, std::vector<Rational>(P.n, Rational(0)));
    for (int i = 0; i < P.n; ++i)
        for (int j = 0; j < P.n; ++j)
            if (block_of[i] != block_of[j]) d[i][j] = 1;
    return RationalUltraSpace(labels, std::move(d));
}

}  // namespace ultra
