#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ultra {

// Element of Z_2^n. Doubles as a clopen subset of an n-point Stone space
// (bit i = point i) and, through pairing_w, as a character of Z_2^n.
struct ClopenVector {
    std::uint64_t bits = 0;
    int dim = 0;

    ClopenVector() = default;
    ClopenVector(std::uint64_t b, int n) : bits(b), dim(n) {
        if (n < 0 || n > 63) throw std::invalid_argument("dimension must be in [0, 63]");
        if (n < 64 && (b >> n) != 0) throw std::invalid_argument("bits exceed dimension");
    }

    static ClopenVector zero(int n) { return ClopenVector(0, n); }
    static ClopenVector full(int n) { return ClopenVector(n == 0 ? 0 : ((std::uint64_t{1} << n) - 1), n); }

    bool test(int i) const { return (bits >> i) & 1u; }
    int popcount() const { return std::popcount(bits); }
    bool is_zero() const { return bits == 0; }

    friend bool operator==(const ClopenVector&, const ClopenVector&) = default;
    friend auto operator<=>(const ClopenVector&, const ClopenVector&) = default;
};

inline void require_same_dim(const ClopenVector& u, const ClopenVector& v) {
    if (u.dim != v.dim) throw std::invalid_argument("dimension mismatch");
}

// Symmetric difference of clopen sets; the Boolean group operation.
inline ClopenVector xor_add(const ClopenVector& u, const ClopenVector& v) {
    require_same_dim(u, v);
    return ClopenVector(u.bits ^ v.bits, u.dim);
}

// Evaluation pairing w(x, f) = f(x): parity of the common bits.
inline int pairing_w(const ClopenVector& x, const ClopenVector& f) {
    require_same_dim(x, f);
    return std::popcount(x.bits & f.bits) & 1;
}

// All 2^n characters of Z_2^n (each one a dot-product functional).
inline std::vector<ClopenVector> enumerate_characters(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("character enumeration needs n in [0, 20]");
    std::vector<ClopenVector> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b)
        out.emplace_back(b, n);
    return out;
}

// The point character delta_i: pairing_w(A, delta_i) = [i in A].
inline ClopenVector delta(int i, int n) {
    if (i < 0 || i >= n) throw std::out_of_range("point index out of range");
    return ClopenVector(std::uint64_t{1} << i, n);
}

using PairingFn = std::function<int(const ClopenVector&, const ClopenVector&)>;

struct SeparationResult {
    bool separated = false;
    // Nonzero pair (x0, f0) with no witness, present iff not separated.
    std::optional<std::pair<ClopenVector, ClopenVector>> counterexample;
};

// A pairing is separated when every nonzero (x0, f0) admits (x, f) with
// w(x0, f) != 0 and w(x, f0) != 0. Brute force over all pairs.
inline SeparationResult is_separated(int n, const PairingFn& w = {}) {
    if (n < 0 || n > 12) throw std::invalid_argument("separation check needs n in [0, 12]");
    auto eval = w ? w : PairingFn(static_cast<int (*)(const ClopenVector&, const ClopenVector&)>(&pairing_w));
    const std::uint64_t size = std::uint64_t{1} << n;
    for (std::uint64_t x0 = 1; x0 < size; ++x0) {
        for (std::uint64_t f0 = 1; f0 < size; ++f0) {
            ClopenVector cx0(x0, n), cf0(f0, n);
            bool x0_hit = false, f0_hit = false;
            for (std::uint64_t b = 0; b < size && !(x0_hit && f0_hit); ++b) {
                if (!x0_hit && eval(cx0, ClopenVector(b, n)) != 0) x0_hit = true;
                if (!f0_hit && eval(ClopenVector(b, n), cf0) != 0) f0_hit = true;
            }
            if (!x0_hit || !f0_hit) return {false, std::make_pair(cx0, cf0)};
        }
    }
    return {true, std::nullopt};
}

// Binary-numeral serialization: "101" = {points 0, 2}, leftmost char is
// the highest point.
inline std::string to_bit_string(const ClopenVector& v) {
    std::string s;
    for (int i = v.dim - 1; i >= 0; --i) s += v.test(i) ? '1' : '0';
    return s;
}

inline ClopenVector clopen_from_string(const std::string& s) {
    if (s.size() > 63) throw std::invalid_argument("bit string too long");
    std::uint64_t bits = 0;
    for (char c : s) {
        if (c != '0' && c != '1') throw std::invalid_argument("bit string must be over {0,1}");
        bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return ClopenVector(bits, static_cast<int>(s.size()));
}

}  // namespace ultra
