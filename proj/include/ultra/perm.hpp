#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ultra {

// Bijection on {0, ..., n-1}, stored as the image array.
struct Permutation {
    std::vector<int> img;

    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img(std::move(images)) {
        std::vector<char> seen(img.size(), 0);
        for (int v : img) {
            if (v < 0 || v >= static_cast<int>(img.size()) || seen[v])
                throw std::invalid_argument("image array is not a bijection");
            seen[v] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 0);
        return Permutation(std::move(im));
    }

    int degree() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img.at(i); }

    // (a * b)(i) = a(b(i))
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
        std::vector<int> im(a.img.size());
        for (std::size_t i = 0; i < im.size(); ++i) im[i] = a.img[b.img[i]];
        Permutation p;
        p.img = std::move(im);
        return p;
    }

    Permutation inverse() const {
        std::vector<int> im(img.size());
        for (std::size_t i = 0; i < img.size(); ++i) im[img[i]] = static_cast<int>(i);
        Permutation p;
        p.img = std::move(im);
        return p;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < img.size(); ++i)
            if (img[i] != static_cast<int>(i)) return false;
        return true;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

// Explicit finite permutation group: a sorted element list closed under
// composition and inverse. All group-level checks here are exhaustive, so no
// generator machinery is needed.
struct PermGroup {
    int degree = 0;
    std::vector<Permutation> elements;

    PermGroup() = default;
    PermGroup(int n, std::vector<Permutation> elems) : degree(n), elements(std::move(elems)) {
        std::sort(elements.begin(), elements.end());
        elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
        for (const auto& g : elements)
            if (g.degree() != degree) throw std::invalid_argument("mixed degrees in group");
        if (!is_group()) throw std::invalid_argument("element set is not a group");
    }

    static PermGroup trivial(int n) { return PermGroup(n, {Permutation::identity(n)}); }

    static PermGroup symmetric(int n) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 0);
        std::vector<Permutation> elems;
        do {
            elems.emplace_back(im);
        } while (std::next_permutation(im.begin(), im.end()));
        return PermGroup(n, std::move(elems));
    }

    static PermGroup closure(int n, const std::vector<Permutation>& gens) {
        std::vector<Permutation> elems{Permutation::identity(n)};
        std::vector<Permutation> frontier = elems;
        auto known = [&](const Permutation& p) {
            return std::binary_search(elems.begin(), elems.end(), p);
        };
        std::sort(elems.begin(), elems.end());
        while (!frontier.empty()) {
            std::vector<Permutation> next;
            for (const auto& a : frontier)
                for (const auto& g : gens) {
                    if (g.degree() != n) throw std::invalid_argument("generator degree mismatch");
                    for (const auto& p : {a * g, a * g.inverse()})
                        if (!known(p)) {
                            elems.insert(std::lower_bound(elems.begin(), elems.end(), p), p);
                            next.push_back(p);
                        }
                }
            frontier = std::move(next);
        }
        return PermGroup(n, std::move(elems));
    }

    std::size_t order() const { return elements.size(); }

    bool contains(const Permutation& p) const {
        return std::binary_search(elements.begin(), elements.end(), p);
    }

    bool is_group() const {
        if (!contains(Permutation::identity(degree))) return false;
        for (const auto& a : elements) {
            if (!contains(a.inverse())) return false;
            for (const auto& b : elements)
                if (!contains(a * b)) return false;
        }
        return true;
    }

    friend bool operator==(const PermGroup&, const PermGroup&) = default;
};

}  // namespace ultra
