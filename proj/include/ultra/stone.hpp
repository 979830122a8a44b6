#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "ultra/clopen.hpp"
#include "ultra/perm.hpp"

namespace ultra {

// alpha(g, A) = g(A): bit i of A lands on bit g(i).
inline ClopenVector act_clopen(const Permutation& g, const ClopenVector& A) {
    if (g.degree() != A.dim) throw std::invalid_argument("dimension mismatch");
    std::uint64_t out = 0;
    for (int i = 0; i < A.dim; ++i)
        if (A.test(i)) out |= std::uint64_t{1} << g(i);
    return ClopenVector(out, A.dim);
}

// beta(g, f) = gf with (gf)(A) = f(g^{-1}(A)). In the dot-product
// encoding this is again a bit permutation by g.
inline ClopenVector act_character(const Permutation& g, const ClopenVector& f) {
    return act_clopen(g, f);
}

// Finite Boolean subalgebra of the power set of n points. Validity
// (0, 1, complements, meets) is checked eagerly so atoms() is always
// applied to a genuine algebra.
struct BooleanSubalgebra {
    int n = 0;
    std::set<std::uint64_t> members;

    BooleanSubalgebra(int points, std::set<std::uint64_t> elems)
        : n(points), members(std::move(elems)) {
        const std::uint64_t top = ClopenVector::full(n).bits;
        if (!members.count(0) || !members.count(top))
            throw std::invalid_argument("subalgebra must contain 0 and the full set");
        for (std::uint64_t a : members) {
            if (n < 64 && (a >> n) != 0) throw std::invalid_argument("member exceeds point set");
            if (!members.count(top & ~a))
                throw std::invalid_argument("subalgebra not closed under complement");
            for (std::uint64_t b : members)
                if (!members.count(a & b))
                    throw std::invalid_argument("subalgebra not closed under intersection");
        }
    }

    friend bool operator==(const BooleanSubalgebra&, const BooleanSubalgebra&) = default;
};

// Atoms = inclusion-minimal nonzero members; the dual points of the
// finite Stone space.
inline std::vector<ClopenVector> atoms(const BooleanSubalgebra& B) {
    std::vector<ClopenVector> out;
    for (std::uint64_t a : B.members) {
        if (a == 0) continue;
        bool minimal = true;
        for (std::uint64_t b : B.members)
            if (b != 0 && b != a && (b & a) == b) {
                minimal = false;
                break;
            }
        if (minimal) out.emplace_back(a, B.n);
    }
    return out;
}

// Subalgebra generated by a family of disjoint covering sets: all unions.
inline BooleanSubalgebra generate_algebra(int n, const std::vector<ClopenVector>& blocks) {
    std::set<std::uint64_t> members{0};
    for (const auto& b : blocks) {
        std::set<std::uint64_t> next = members;
        for (std::uint64_t m : members) next.insert(m | b.bits);
        members = std::move(next);
    }
    return BooleanSubalgebra(n, std::move(members));
}

// Clopen partition of {0, ..., n-1}: disjoint nonempty blocks covering
// every point, stored sorted by least element.
struct ClopenPartition {
    int n = 0;
    std::vector<std::uint64_t> blocks;

    ClopenPartition(int points, std::vector<std::uint64_t> bs) : n(points), blocks(std::move(bs)) {
        std::uint64_t seen = 0;
        for (std::uint64_t b : blocks) {
            if (b == 0) throw std::invalid_argument("empty partition block");
            if (b & seen) throw std::invalid_argument("overlapping partition blocks");
            seen |= b;
        }
        if (seen != ClopenVector::full(n).bits)
            throw std::invalid_argument("partition does not cover the point set");
        std::sort(blocks.begin(), blocks.end(),
                  [](std::uint64_t a, std::uint64_t b) { return (a & -a) < (b & -b); });
    }

    friend bool operator==(const ClopenPartition&, const ClopenPartition&) = default;
};

// Common refinement P v Q: pairwise block intersections, empties dropped.
inline ClopenPartition common_refinement(const ClopenPartition& P, const ClopenPartition& Q) {
    if (P.n != Q.n) throw std::invalid_argument("partition point sets differ");
    std::vector<std::uint64_t> blocks;
    for (std::uint64_t a : P.blocks)
        for (std::uint64_t b : Q.blocks)
            if (a & b) blocks.push_back(a & b);
    return ClopenPartition(P.n, std::move(blocks));
}

// M(P) = {g in G : g A_k = A_k for every block}.
inline PermGroup stabilizer_MP(const PermGroup& G, const ClopenPartition& P) {
    if (G.degree != P.n) throw std::invalid_argument("group degree does not match partition");
    std::vector<Permutation> elems;
    for (const auto& g : G.elements) {
        bool fixes_all = true;
        for (std::uint64_t b : P.blocks)
            if (act_clopen(g, ClopenVector(b, P.n)).bits != b) {
                fixes_all = false;
                break;
            }
        if (fixes_all) elems.push_back(g);
    }
    return PermGroup(G.degree, std::move(elems));
}

// Kernel of a point action: the elements acting trivially. Trivial
// kernel = algebraically exact action.
inline PermGroup action_kernel(const PermGroup& G, int npoints,
                               const std::function<int(const Permutation&, int)>& action) {
    std::vector<Permutation> elems;
    for (const auto& g : G.elements) {
        bool trivial = true;
        for (int x = 0; x < npoints && trivial; ++x)
            if (action(g, x) != x) trivial = false;
        if (trivial) elems.push_back(g);
    }
    return PermGroup(G.degree, std::move(elems));
}

inline PermGroup action_kernel(const PermGroup& G) {
    return action_kernel(G, G.degree, [](const Permutation& g, int x) { return g(x); });
}

// GF(2)-linear map on Z_2^n given by the images of the basis vectors.
struct GF2Automorphism {
    std::vector<std::uint64_t> columns;  // columns[i] = image of e_i
    int dim = 0;

    ClopenVector operator()(const ClopenVector& v) const {
        if (v.dim != dim) throw std::invalid_argument("dimension mismatch");
        std::uint64_t out = 0;
        for (int i = 0; i < dim; ++i)
            if (v.test(i)) out ^= columns[i];
        return ClopenVector(out, dim);
    }

    friend bool operator==(const GF2Automorphism&, const GF2Automorphism&) = default;
    friend auto operator<=>(const GF2Automorphism&, const GF2Automorphism&) = default;
};

// The coordinate-permutation automorphism of Z_2^n induced by g; agrees
// with act_clopen(g, .) and g -> automorphism is an injective homomorphism.
inline GF2Automorphism coordinate_embedding(const Permutation& g, int n) {
    if (g.degree() != n) throw std::invalid_argument("degree mismatch");
    GF2Automorphism a;
    a.dim = n;
    a.columns.resize(n);
    for (int i = 0; i < n; ++i) a.columns[i] = std::uint64_t{1} << g(i);
    return a;
}

}  // namespace ultra
