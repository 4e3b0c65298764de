#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <mutex>
#include <numeric>
#include <thread>
#include <vector>

#include "cis/error.hpp"
#include "cis/graph.hpp"

namespace cis {

/// Exhaustive enumeration of graphs on n <= 8 vertices, one representative
/// per isomorphism class. A labeled graph is a bit code with bit
/// j(j-1)/2 + i for the edge {i,j}, i < j (graph6 column-major order); the
/// class representative is the labeled graph whose code is minimal over all
/// vertex permutations. Iterating all 2^(n(n-1)/2) codes and keeping the
/// minimal ones visits every class exactly once.

inline constexpr int small_graph_max_order = 8;

namespace detail {

inline int edge_bit(int i, int j) { return j * (j - 1) / 2 + i; } // requires i < j

inline std::vector<std::vector<std::uint8_t>> permutation_bit_maps(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int bits = n * (n - 1) / 2;
    std::vector<std::vector<std::uint8_t>> maps;
    do {
        std::vector<std::uint8_t> map(bits);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                int pi = perm[i], pj = perm[j];
                if (pi > pj) std::swap(pi, pj);
                map[edge_bit(i, j)] = static_cast<std::uint8_t>(edge_bit(pi, pj));
            }
        maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return maps;
}

inline bool code_is_minimal(std::uint32_t code, const std::vector<std::vector<std::uint8_t>>& maps) {
    for (const auto& map : maps) {
        std::uint32_t permuted = 0;
        std::uint32_t bits = code;
        while (bits) {
            int b = std::countr_zero(bits);
            bits &= bits - 1;
            permuted |= std::uint32_t{1} << map[b];
        }
        if (permuted < code) return false;
    }
    return true;
}

} // namespace detail

inline Graph graph_from_code(int n, std::uint32_t code) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((code >> detail::edge_bit(i, j)) & 1) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

inline std::uint32_t code_of_graph(const Graph& g) {
    std::uint32_t code = 0;
    for (auto [u, v] : g.edges()) code |= std::uint32_t{1} << detail::edge_bit(u, v);
    return code;
}

namespace detail {
inline std::vector<std::uint32_t> minimal_codes_scan(int n, int jobs);
} // namespace detail

/// Codes of all isomorphism-class representatives on exactly n vertices,
/// ascending. `jobs` shards the scan; the result does not depend on it.
/// Results are memoized per order (the n=7 and n=8 scans feed several
/// verification suites).
inline const std::vector<std::uint32_t>& minimal_codes(int n, int jobs = 1) {
    if (n < 1 || n > small_graph_max_order)
        throw error(errc::order_too_large,
                    "exhaustive enumeration supports 1.." + std::to_string(small_graph_max_order) +
                        " vertices, got " + std::to_string(n));
    static std::mutex mu;
    static std::vector<std::uint32_t> cache[small_graph_max_order + 1];
    static bool have[small_graph_max_order + 1] = {};
    std::scoped_lock lock(mu);
    if (!have[n]) {
        cache[n] = detail::minimal_codes_scan(n, jobs);
        have[n] = true;
    }
    return cache[n];
}

namespace detail {

inline std::vector<std::uint32_t> minimal_codes_scan(int n, int jobs) {
    auto maps = detail::permutation_bit_maps(n);
    // Identity map never rejects; drop it.
    std::vector<std::vector<std::uint8_t>> nontrivial(maps.begin() + 1, maps.end());
    std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);

    if (jobs < 2 || total < 1024) {
        std::vector<std::uint32_t> out;
        for (std::uint64_t code = 0; code < total; ++code)
            if (detail::code_is_minimal(static_cast<std::uint32_t>(code), nontrivial))
                out.push_back(static_cast<std::uint32_t>(code));
        return out;
    }

    std::vector<std::vector<std::uint32_t>> shard(jobs);
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t)
        workers.emplace_back([&, t] {
            std::uint64_t lo = total * t / jobs, hi = total * (t + 1) / jobs;
            for (std::uint64_t code = lo; code < hi; ++code)
                if (detail::code_is_minimal(static_cast<std::uint32_t>(code), nontrivial))
                    shard[t].push_back(static_cast<std::uint32_t>(code));
        });
    for (auto& w : workers) w.join();
    std::vector<std::uint32_t> out;
    for (auto& s : shard) out.insert(out.end(), s.begin(), s.end());
    return out;
}

} // namespace detail

/// Calls fn once per isomorphism class on exactly n vertices, in ascending
/// code order.
inline void for_each_graph_class(int n, const std::function<void(const Graph&)>& fn, int jobs = 1) {
    for (std::uint32_t code : minimal_codes(n, jobs)) fn(graph_from_code(n, code));
}

} // namespace cis
