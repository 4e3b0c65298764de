#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "cis/error.hpp"
#include "cis/vertex_set.hpp"

namespace cis {

/// Immutable simple undirected graph, adjacency stored as one VertexSet
/// per vertex. Order is capped at max_vertices. All structural operators
/// are pure functions returning new graphs.
class Graph {
    int n_;
    std::vector<VertexSet> adj_;

    Graph(int n, std::vector<VertexSet> adj) : n_(n), adj_(std::move(adj)) {}

public:
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        if (n <= 0) throw error(errc::empty_order, "graph order must be at least 1");
        if (n > max_vertices)
            throw error(errc::order_too_large,
                        "order " + std::to_string(n) + " exceeds cap " + std::to_string(max_vertices));
        std::vector<VertexSet> adj(n);
        for (auto [u, v] : edges) {
            if (u == v) throw error(errc::loop_edge, "loop at vertex " + std::to_string(u));
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw error(errc::vertex_out_of_range,
                            "edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
            adj[u].add(v);
            adj[v].add(u);
        }
        return Graph(n, std::move(adj));
    }

    /// Adjacency rows must already be symmetric and loop-free; verified.
    static Graph from_adjacency(std::vector<VertexSet> adj) {
        int n = static_cast<int>(adj.size());
        if (n == 0) throw error(errc::empty_order, "graph order must be at least 1");
        if (n > max_vertices) throw error(errc::order_too_large, "order exceeds cap");
        for (int v = 0; v < n; ++v) {
            if (adj[v].contains(v)) throw error(errc::loop_edge, "loop at vertex " + std::to_string(v));
            if (!adj[v].is_subset_of(VertexSet::full(n)))
                throw error(errc::vertex_out_of_range, "adjacency row exceeds order");
            for (int u = adj[v].next(v); u >= 0; u = adj[v].next(u))
                if (!adj[u].contains(v))
                    throw error(errc::vertex_out_of_range, "asymmetric adjacency");
        }
        return Graph(n, std::move(adj));
    }

    int order() const { return n_; }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    int degree(int v) const { return adj_[v].count(); }

    VertexSet closed_neighborhood(int v) const {
        VertexSet s = adj_[v];
        s.add(v);
        return s;
    }

    VertexSet vertices() const { return VertexSet::full(n_); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += adj_[v].count();
        return twice / 2;
    }

    /// Edges as ordered pairs u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
                e.emplace_back(u, v);
        return e;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
};

inline Graph complement(const Graph& g) {
    int n = g.order();
    std::vector<VertexSet> adj(n);
    for (int v = 0; v < n; ++v) {
        adj[v] = g.neighbors(v).complement_within(n);
        adj[v].remove(v);
    }
    return Graph::from_adjacency(std::move(adj));
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    int n = a.order() + b.order();
    if (n > max_vertices) throw error(errc::order_too_large, "union order exceeds cap");
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
    return Graph::from_edges(n, edges);
}

/// A[B]: vertex (u,x) gets index u*|B|+x; (u,x)~(v,y) iff u~v in A,
/// or u=v and x~y in B.
inline Graph lexicographic_product(const Graph& a, const Graph& b) {
    int na = a.order(), nb = b.order();
    if (na * nb > max_vertices) throw error(errc::order_too_large, "product order exceeds cap");
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : a.edges())
        for (int x = 0; x < nb; ++x)
            for (int y = 0; y < nb; ++y) edges.emplace_back(u * nb + x, v * nb + y);
    for (int u = 0; u < na; ++u)
        for (auto [x, y] : b.edges()) edges.emplace_back(u * nb + x, u * nb + y);
    return Graph::from_edges(na * nb, edges);
}

/// Vertices of L(G) are the edges of G in lexicographic order; two edges
/// are adjacent iff they share an endpoint.
inline Graph line_graph(const Graph& g) {
    auto e = g.edges();
    int m = static_cast<int>(e.size());
    if (m == 0) throw error(errc::no_edges, "line graph of an edgeless graph");
    if (m > max_vertices) throw error(errc::order_too_large, "line graph order exceeds cap");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = e[i];
            auto [c, d] = e[j];
            if (a == c || a == d || b == c || b == d) edges.emplace_back(i, j);
        }
    return Graph::from_edges(m, edges);
}

/// Subgraph induced on `set`, vertices renumbered in ascending order.
inline Graph induced_subgraph(const Graph& g, const VertexSet& set) {
    if (set.empty()) throw error(errc::empty_set, "induced subgraph of the empty set");
    if (!set.is_subset_of(g.vertices()))
        throw error(errc::vertex_out_of_range, "induced set exceeds the vertex range");
    auto verts = set.members();
    int k = static_cast<int>(verts.size());
    std::vector<VertexSet> adj(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(verts[i], verts[j])) {
                adj[i].add(j);
                adj[j].add(i);
            }
    return Graph::from_adjacency(std::move(adj));
}

inline Graph local_graph(const Graph& g, int v) {
    if (g.neighbors(v).empty())
        throw error(errc::isolated_vertex, "vertex " + std::to_string(v) + " is isolated");
    return induced_subgraph(g, g.neighbors(v));
}

struct Profile {
    std::vector<int> degrees;
    bool is_regular = false;
    int valency = -1; // meaningful only when is_regular
    std::vector<VertexSet> components; // partition, sorted by minimum vertex
    bool is_connected = false;
};

inline std::vector<VertexSet> connected_components(const Graph& g) {
    int n = g.order();
    VertexSet seen;
    std::vector<VertexSet> comps;
    for (int s = 0; s < n; ++s) {
        if (seen.contains(s)) continue;
        VertexSet comp = VertexSet::single(s);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v = frontier.first(); v >= 0; v = frontier.next(v)) next |= g.neighbors(v);
            frontier = next - comp;
            comp |= frontier;
        }
        seen |= comp;
        comps.push_back(comp);
    }
    return comps;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

inline Profile profile(const Graph& g) {
    Profile p;
    p.degrees.resize(g.order());
    for (int v = 0; v < g.order(); ++v) p.degrees[v] = g.degree(v);
    p.is_regular = std::all_of(p.degrees.begin(), p.degrees.end(),
                               [&](int d) { return d == p.degrees[0]; });
    if (p.is_regular) p.valency = p.degrees[0];
    p.components = connected_components(g);
    p.is_connected = p.components.size() == 1;
    return p;
}

} // namespace cis
