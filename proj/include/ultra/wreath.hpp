#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ultra {

// Finite group given by its multiplication table; element 0 is required
// to be the identity. Group axioms are checked on construction.
struct MultTable {
    std::vector<std::vector<int>> tab;

    explicit MultTable(std::vector<std::vector<int>> table) : tab(std::move(table)) {
        const int n = order();
        if (n == 0) throw std::invalid_argument("empty multiplication table");
        for (const auto& row : tab) {
            if (static_cast<int>(row.size()) != n)
                throw std::invalid_argument("multiplication table is not square");
            for (int v : row)
                if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
        }
        for (int i = 0; i < n; ++i)
            if (tab[0][i] != i || tab[i][0] != i)
                throw std::invalid_argument("element 0 is not the identity");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (tab[tab[i][j]][k] != tab[i][tab[j][k]])
                        throw std::invalid_argument("multiplication table is not associative");
        for (int i = 0; i < n; ++i) {
            bool has_inverse = false;
            for (int j = 0; j < n; ++j)
                if (tab[i][j] == 0 && tab[j][i] == 0) has_inverse = true;
            if (!has_inverse) throw std::invalid_argument("element without inverse");
        }
    }

    static MultTable cyclic(int n) {
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
        return MultTable(std::move(t));
    }

    int order() const { return static_cast<int>(tab.size()); }
    int mul(int i, int j) const { return tab[i][j]; }

    int inverse(int i) const {
        for (int j = 0; j < order(); ++j)
            if (tab[i][j] == 0) return j;
        throw std::logic_error("unreachable: validated group");
    }
};

// The wreath-type product M = Z_2^H x| H with the shift action
// (sigma(k) x)_h = x_{hk}; H is a group retract of M via r(x, k) = k.
struct WreathProduct {
    MultTable h;

    using Element = std::pair<std::uint64_t, int>;  // (bit vector over H, k)

    explicit WreathProduct(MultTable table) : h(std::move(table)) {
        if (h.order() > 8) throw std::invalid_argument("wreath construction capped at |H| <= 8");
    }

    std::uint64_t group_order() const {
        return (std::uint64_t{1} << h.order()) * static_cast<std::uint64_t>(h.order());
    }

    std::uint64_t shift(int k, std::uint64_t x) const {
        std::uint64_t out = 0;
        for (int i = 0; i < h.order(); ++i)
            if ((x >> h.mul(i, k)) & 1u) out |= std::uint64_t{1} << i;
        return out;
    }

    Element identity() const { return {0, 0}; }

    Element mul(const Element& a, const Element& b) const {
        return {a.first ^ shift(a.second, b.first), h.mul(a.second, b.second)};
    }

    Element inverse(const Element& a) const {
        int k_inv = h.inverse(a.second);
        return {shift(k_inv, a.first), k_inv};
    }

    std::vector<Element> elements() const {
        std::vector<Element> out;
        out.reserve(group_order());
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << h.order()); ++x)
            for (int k = 0; k < h.order(); ++k) out.push_back({x, k});
        return out;
    }

    int retract(const Element& a) const { return a.second; }
    Element section(int k) const { return {0, k}; }
};

struct WreathReport {
    std::uint64_t order = 0;
    bool retraction_hom = false;
    bool section_hom = false;
    bool retract_section_id = false;
    bool ok() const { return retraction_hom && section_hom && retract_section_id; }
};

// Builds M = Z_2^H x| H and verifies the retraction diagram exhaustively.
inline std::pair<WreathProduct, WreathReport> wreath_retract(const MultTable& H) {
    WreathProduct M(H);
    WreathReport rep;
    rep.order = M.group_order();
    rep.retraction_hom = true;
    rep.section_hom = true;
    rep.retract_section_id = true;
    auto elems = M.elements();
    for (const auto& a : elems)
        for (const auto& b : elems)
            if (M.retract(M.mul(a, b)) != H.mul(M.retract(a), M.retract(b)))
                rep.retraction_hom = false;
    for (int k = 0; k < H.order(); ++k) {
        if (M.retract(M.section(k)) != k) rep.retract_section_id = false;
        for (int l = 0; l < H.order(); ++l)
            if (M.mul(M.section(k), M.section(l)) != M.section(H.mul(k, l)))
                rep.section_hom = false;
    }
    return {M, rep};
}

}  // namespace ultra
