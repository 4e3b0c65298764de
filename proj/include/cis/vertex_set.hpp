#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#ifndef CIS_MAX_VERTICES
#define CIS_MAX_VERTICES 128
#endif

namespace cis {

inline constexpr int max_vertices = CIS_MAX_VERTICES;

/// Fixed-width subset of vertex indices 0..max_vertices-1.
/// The currency of all enumeration: cliques, stable sets, orbits,
/// equivalence classes are all VertexSets.
class VertexSet {
    static constexpr int nwords = (max_vertices + 63) / 64;
    std::array<std::uint64_t, nwords> w_{};

public:
    constexpr VertexSet() = default;

    static VertexSet full(int n) {
        VertexSet s;
        for (int i = 0; i < n / 64; ++i) s.w_[i] = ~std::uint64_t{0};
        if (n % 64) s.w_[n / 64] = (std::uint64_t{1} << (n % 64)) - 1;
        return s;
    }

    static VertexSet single(int v) {
        VertexSet s;
        s.add(v);
        return s;
    }

    void add(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void remove(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool contains(int v) const { return (w_[v >> 6] >> (v & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }

    bool empty() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }

    /// Lowest member, or -1 when empty.
    int first() const {
        for (int i = 0; i < nwords; ++i)
            if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
        return -1;
    }

    /// Lowest member strictly greater than v, or -1.
    int next(int v) const {
        int i = (v + 1) >> 6;
        if (i >= nwords) return -1;
        std::uint64_t x = w_[i] & (~std::uint64_t{0} << ((v + 1) & 63));
        while (true) {
            if (x) return i * 64 + std::countr_zero(x);
            if (++i == nwords) return -1;
            x = w_[i];
        }
    }

    VertexSet operator&(const VertexSet& o) const {
        VertexSet r;
        for (int i = 0; i < nwords; ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }
    VertexSet operator|(const VertexSet& o) const {
        VertexSet r;
        for (int i = 0; i < nwords; ++i) r.w_[i] = w_[i] | o.w_[i];
        return r;
    }
    /// Set difference: members of this not in o.
    VertexSet operator-(const VertexSet& o) const {
        VertexSet r;
        for (int i = 0; i < nwords; ++i) r.w_[i] = w_[i] & ~o.w_[i];
        return r;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < nwords; ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < nwords; ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (int i = 0; i < nwords; ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    /// Complement within {0..n-1}; bits at positions >= n stay clear.
    VertexSet complement_within(int n) const {
        VertexSet r = full(n);
        for (int i = 0; i < nwords; ++i) r.w_[i] &= ~w_[i];
        return r;
    }

    bool intersects(const VertexSet& o) const {
        for (int i = 0; i < nwords; ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (int i = 0; i < nwords; ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet& o) const = default;

    /// Orders sets by their bit pattern read as one wide unsigned integer.
    /// This is the deterministic output order of all enumeration results.
    std::strong_ordering operator<=>(const VertexSet& o) const {
        for (int i = nwords - 1; i >= 0; --i)
            if (w_[i] != o.w_[i]) return w_[i] <=> o.w_[i];
        return std::strong_ordering::equal;
    }

    std::vector<int> members() const {
        std::vector<int> m;
        m.reserve(count());
        for (int v = first(); v >= 0; v = next(v)) m.push_back(v);
        return m;
    }

    /// "0,2,5" — ascending, comma separated; empty set -> "-".
    std::string to_string() const {
        if (empty()) return "-";
        std::string s;
        for (int v = first(); v >= 0; v = next(v)) {
            if (!s.empty()) s += ',';
            s += std::to_string(v);
        }
        return s;
    }

    std::size_t hash() const {
        std::size_t h = 0;
        for (auto x : w_) h = h * 0x9e3779b97f4a7c15ULL + x;
        return h;
    }
};

} // namespace cis
