#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sr {

/// A face is a set of vertex indices packed into one 64-bit word, so the
/// subset/superset tests in the 2^n Hochster sweep are single instructions.
/// The empty face (dimension -1) is the zero word.
struct face {
    std::uint64_t bits = 0;

    constexpr face() = default;
    constexpr explicit face(std::uint64_t b) : bits(b) {}

    face(std::initializer_list<int> vertices) {
        for (int v : vertices) bits |= std::uint64_t(1) << v;
    }

    static face singleton(int v) { return face(std::uint64_t(1) << v); }

    static face full(int n) {
        return face(n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1);
    }

    int cardinality() const { return std::popcount(bits); }
    int dimension() const { return cardinality() - 1; }
    bool empty() const { return bits == 0; }

    bool contains(int v) const { return (bits >> v) & 1; }
    bool subset_of(face g) const { return (bits & ~g.bits) == 0; }

    face with(int v) const { return face(bits | (std::uint64_t(1) << v)); }
    face without(int v) const { return face(bits & ~(std::uint64_t(1) << v)); }

    friend face operator|(face a, face b) { return face(a.bits | b.bits); }
    friend face operator&(face a, face b) { return face(a.bits & b.bits); }
    friend face operator-(face a, face b) { return face(a.bits & ~b.bits); }

    auto operator<=>(const face&) const = default;

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(cardinality());
        for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    /// "{0,2,5}" — used in error messages and counterexample dumps.
    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (int v : vertices()) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }
};

/// Advance a bitmask to the next subset of the same cardinality (Gosper's
/// hack).  Returns false when the enumeration over `full(n)` is exhausted.
inline bool next_same_size_subset(std::uint64_t& m, int n) {
    if (m == 0) return false;
    std::uint64_t c = m & (~m + 1);
    std::uint64_t r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
    return m < (n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n));
}

} // namespace sr
