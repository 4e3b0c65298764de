#pragma once

#include <sstream>
#include <string>

#include "cis/graph.hpp"

namespace cis {

/// graph6 codec. Bit layout: upper-triangle cells in column-major order
/// x(0,1), x(0,2), x(1,2), x(0,3), ... packed 6 bits per byte, most
/// significant first, each byte offset by 63. Orders 1..62 use the one-byte
/// header n+63; orders 63..128 use '~' followed by three 6-bit bytes.
inline std::string graph6_encode(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

/// Strict decoder: rejects malformed headers, short bodies, nonzero padding
/// bits, and trailing bytes. Round-trips graph6_encode labeled-identically.
inline Graph graph6_decode(const std::string& s) {
    std::size_t pos = 0;
    auto sixbits = [&](const char* what) {
        if (pos >= s.size()) throw error(errc::malformed_header, std::string("missing ") + what);
        unsigned char c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw error(errc::malformed_header, std::string("bad byte in ") + what);
        return static_cast<int>(c - 63);
    };
    if (s.empty()) throw error(errc::malformed_header, "empty input");
    int n;
    if (static_cast<unsigned char>(s[0]) == 126) {
        ++pos;
        if (pos < s.size() && static_cast<unsigned char>(s[pos]) == 126)
            throw error(errc::malformed_header, "8-byte order form not supported");
        int a = sixbits("order"), b = sixbits("order"), c = sixbits("order");
        n = (a << 12) | (b << 6) | c;
        if (n <= 62) throw error(errc::malformed_header, "extended form used for small order");
    } else {
        n = sixbits("order");
    }
    if (n < 1) throw error(errc::malformed_header, "order 0");
    if (n > max_vertices) throw error(errc::order_too_large, "order " + std::to_string(n));
    long nbits = static_cast<long>(n) * (n - 1) / 2;
    long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(s.size()) - static_cast<long>(pos) < nbytes)
        throw error(errc::truncated_body, "body shorter than " + std::to_string(nbytes) + " bytes");
    if (static_cast<long>(s.size()) - static_cast<long>(pos) > nbytes)
        throw error(errc::trailing_data, "bytes after graph body");

    std::vector<VertexSet> adj(n);
    long bit = 0;
    int acc = 0, have = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            if (have == 0) {
                unsigned char c = static_cast<unsigned char>(s[pos++]);
                if (c < 63 || c > 126) throw error(errc::truncated_body, "bad byte in body");
                acc = c - 63;
                have = 6;
            }
            if ((acc >> (have - 1)) & 1) {
                adj[i].add(j);
                adj[j].add(i);
            }
            --have;
        }
    if (have > 0 && (acc & ((1 << have) - 1)) != 0)
        throw error(errc::nonzero_padding, "padding bits must be zero");
    return Graph::from_adjacency(std::move(adj));
}

/// Edge-list text format: first line "n m", then m lines "u v", 0-indexed.
inline std::string edge_list_encode(const Graph& g) {
    std::ostringstream out;
    auto e = g.edges();
    out << g.order() << ' ' << e.size() << '\n';
    for (auto [u, v] : e) out << u << ' ' << v << '\n';
    return out.str();
}

inline Graph edge_list_decode(const std::string& text) {
    std::istringstream in(text);
    long n, m;
    if (!(in >> n >> m)) throw error(errc::bad_input, "edge list header must be \"n m\"");
    if (n < 1) throw error(errc::empty_order, "order must be at least 1");
    if (n > max_vertices) throw error(errc::order_too_large, "order " + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw error(errc::bad_input, "edge list shorter than declared");
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

} // namespace cis
