#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ultra/clopen.hpp"
#include "ultra/perm.hpp"
#include "ultra/stone.hpp"

namespace ultra {

// Element (a, x, f) of the Heisenberg-type group (Z_2 + V) x| V* over an
// n-point Stone space.
struct HeisenbergElement {
    int a = 0;
    ClopenVector x;
    ClopenVector f;

    HeisenbergElement() = default;
    HeisenbergElement(int a_, ClopenVector x_, ClopenVector f_) : a(a_ & 1), x(x_), f(f_) {
        require_same_dim(x, f);
    }

    int dim() const { return x.dim; }
    static HeisenbergElement identity(int n) {
        return {0, ClopenVector::zero(n), ClopenVector::zero(n)};
    }
    bool is_identity() const { return a == 0 && x.is_zero() && f.is_zero(); }

    friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;
    friend auto operator<=>(const HeisenbergElement&, const HeisenbergElement&) = default;
};

// u1 u2 = (a1 + a2 + f1(x2), x1 + x2, f1 + f2) with f1(x2) = w(x2, f1).
inline HeisenbergElement h_mul(const HeisenbergElement& u1, const HeisenbergElement& u2) {
    if (u1.dim() != u2.dim()) throw std::invalid_argument("dimension mismatch");
    return {(u1.a + u2.a + pairing_w(u2.x, u1.f)) & 1, xor_add(u1.x, u2.x), xor_add(u1.f, u2.f)};
}

inline HeisenbergElement h_inv(const HeisenbergElement& u) {
    return {(u.a + pairing_w(u.x, u.f)) & 1, u.x, u.f};
}

// [u, v] = u v u^{-1} v^{-1}; always central of the form (c, 0, 0).
inline HeisenbergElement h_commutator(const HeisenbergElement& u, const HeisenbergElement& v) {
    return h_mul(h_mul(u, v), h_mul(h_inv(u), h_inv(v)));
}

inline std::vector<HeisenbergElement> enumerate_heisenberg(int n) {
    if (n < 0 || n > 4) throw std::invalid_argument("Heisenberg enumeration capped at n <= 4");
    std::vector<HeisenbergElement> out;
    out.reserve(std::size_t{1} << (2 * n + 1));
    for (int a = 0; a < 2; ++a)
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
            for (std::uint64_t f = 0; f < (std::uint64_t{1} << n); ++f)
                out.emplace_back(a, ClopenVector(x, n), ClopenVector(f, n));
    return out;
}

// Center computed by exhaustive commutation; equals {(a, 0, 0)} for n >= 1.
inline std::vector<HeisenbergElement> center(int n) {
    auto all = enumerate_heisenberg(n);
    std::vector<HeisenbergElement> out;
    for (const auto& u : all) {
        bool central = true;
        for (const auto& v : all)
            if (h_mul(u, v) != h_mul(v, u)) {
                central = false;
                break;
            }
        if (central) out.push_back(u);
    }
    return out;
}

// pi(g)(a, x, f) = (a, gx, gf); an automorphism of H(w) since w is
// invariant under the birepresentation.
inline HeisenbergElement pi_act(const Permutation& g, const HeisenbergElement& h) {
    return {h.a, act_clopen(g, h.x), act_character(g, h.f)};
}

// Element of the induced group M(psi) = H(w) x|_pi G.
struct SemidirectElement {
    HeisenbergElement h;
    Permutation g;

    SemidirectElement() = default;
    SemidirectElement(HeisenbergElement h_, Permutation g_) : h(h_), g(std::move(g_)) {
        if (g.degree() != h.dim()) throw std::invalid_argument("dimension mismatch");
    }

    friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
    friend auto operator<=>(const SemidirectElement&, const SemidirectElement&) = default;
};

inline SemidirectElement m_mul(const SemidirectElement& m1, const SemidirectElement& m2) {
    return {h_mul(m1.h, pi_act(m1.g, m2.h)), m1.g * m2.g};
}

inline SemidirectElement m_inv(const SemidirectElement& m) {
    Permutation gi = m.g.inverse();
    return {pi_act(gi, h_inv(m.h)), gi};
}

inline std::vector<SemidirectElement> enumerate_semidirect(int n, const PermGroup& G) {
    if (G.degree != n) throw std::invalid_argument("group degree mismatch");
    std::vector<SemidirectElement> out;
    for (const auto& g : G.elements)
        for (const auto& h : enumerate_heisenberg(n)) out.emplace_back(h, g);
    return out;
}

struct RetractionReport {
    bool r_homomorphism = false;
    bool s_homomorphism = false;
    bool r_after_s_identity = false;
    bool ok() const { return r_homomorphism && s_homomorphism && r_after_s_identity; }
};

// r(h, g) = g and s(g) = (e_H, g); checks the full retraction diagram
// over M(psi) = H(w) x|_pi G exhaustively.
inline RetractionReport retraction_check(int n, const PermGroup& G) {
    RetractionReport rep;
    rep.r_homomorphism = rep.s_homomorphism = rep.r_after_s_identity = true;
    auto elems = enumerate_semidirect(n, G);
    for (const auto& m1 : elems)
        for (const auto& m2 : elems)
            if (m_mul(m1, m2).g != m1.g * m2.g) rep.r_homomorphism = false;
    auto section = [&](const Permutation& g) {
        return SemidirectElement(HeisenbergElement::identity(n), g);
    };
    for (const auto& g1 : G.elements) {
        if (section(g1).g != g1) rep.r_after_s_identity = false;
        for (const auto& g2 : G.elements)
            if (m_mul(section(g1), section(g2)) != section(g1 * g2)) rep.s_homomorphism = false;
    }
    return rep;
}

}  // namespace ultra
