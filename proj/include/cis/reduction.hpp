#pragma once

#include <optional>

#include "cis/graph.hpp"

namespace cis {

enum class NeighborhoodMode { open, closed };

/// Partition of the vertices into classes of equal open (resp. closed)
/// neighborhoods, plus the quotient graph on class representatives.
/// Open classes are stable sets, closed classes are cliques; the class
/// representative is its minimum vertex and quotient vertices are ordered
/// by representative.
struct QuotientResult {
    Graph quotient;
    std::vector<VertexSet> classes;
    NeighborhoodMode kind = NeighborhoodMode::open;
};

inline QuotientResult neighborhood_partition(const Graph& g, NeighborhoodMode mode) {
    int n = g.order();
    std::vector<VertexSet> classes;
    std::vector<int> reps;
    std::vector<int> class_of(n, -1);
    for (int v = 0; v < n; ++v) {
        if (class_of[v] >= 0) continue;
        VertexSet key = mode == NeighborhoodMode::open ? g.neighbors(v) : g.closed_neighborhood(v);
        VertexSet cls = VertexSet::single(v);
        class_of[v] = static_cast<int>(classes.size());
        for (int u = v + 1; u < n; ++u) {
            if (class_of[u] >= 0) continue;
            VertexSet ukey = mode == NeighborhoodMode::open ? g.neighbors(u) : g.closed_neighborhood(u);
            if (ukey == key) {
                cls.add(u);
                class_of[u] = class_of[v];
            }
        }
        classes.push_back(cls);
        reps.push_back(v);
    }
    int q = static_cast<int>(classes.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            if (g.adjacent(reps[i], reps[j])) edges.emplace_back(i, j);
    return {Graph::from_edges(q, edges), std::move(classes), mode};
}

inline QuotientResult irreducible_quotient(const Graph& g) {
    return neighborhood_partition(g, NeighborhoodMode::open);
}

inline bool is_irreducible(const Graph& g) {
    return static_cast<int>(irreducible_quotient(g).classes.size()) == g.order();
}

/// No two vertices with the same closed neighborhood (the complement's
/// irreducibility).
inline bool is_co_irreducible(const Graph& g) {
    return static_cast<int>(neighborhood_partition(g, NeighborhoodMode::closed).classes.size()) ==
           g.order();
}

/// Recognizes Γ = Z[K_m]: present exactly when all closed-neighborhood
/// classes share one size m >= 2. Equal closed neighborhoods make every
/// class a complete module, so the common-size condition is the whole test.
inline std::optional<std::pair<Graph, int>> factor_lex_complete(const Graph& g) {
    auto part = neighborhood_partition(g, NeighborhoodMode::closed);
    int m = part.classes[0].count();
    if (m < 2) return std::nullopt;
    for (const auto& c : part.classes)
        if (c.count() != m) return std::nullopt;
    return std::make_pair(part.quotient, m);
}

/// Recognizes Γ = X[empty_n] with X the irreducible quotient: present
/// exactly when all open-neighborhood classes share one size. Irreducible
/// inputs report (Γ, 1).
inline std::optional<std::pair<Graph, int>> factor_lex_empty(const Graph& g) {
    auto part = irreducible_quotient(g);
    int m = part.classes[0].count();
    for (const auto& c : part.classes)
        if (c.count() != m) return std::nullopt;
    return std::make_pair(part.quotient, m);
}

} // namespace cis
