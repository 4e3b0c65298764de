#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cis/graph.hpp"

namespace cis {

inline constexpr long default_enumeration_limit = 5'000'000;

enum class SetKind { clique, stable };

/// All inclusion-maximal cliques (or stable sets) of a graph, sorted by
/// bit pattern. `truncated` is set instead of throwing when the limit is
/// hit; predicates built on top surface that as EnumerationLimitExceeded.
struct MaximalFamily {
    std::vector<VertexSet> members;
    SetKind kind = SetKind::clique;
    bool truncated = false;

    int max_size() const {
        int m = 0;
        for (const auto& s : members) m = std::max(m, s.count());
        return m;
    }
    int min_size() const {
        int m = max_vertices + 1;
        for (const auto& s : members) m = std::min(m, s.count());
        return m;
    }
};

namespace detail {

struct BkState {
    const Graph& g;
    std::vector<VertexSet>& out;
    long limit;
    bool truncated = false;
};

// Pivoted Bron-Kerbosch. Pivot maximizes |P ∩ N(u)| over u ∈ P ∪ X,
// ties to the smaller index; candidates expand in ascending order.
inline void bron_kerbosch(BkState& st, VertexSet r, VertexSet p, VertexSet x) {
    if (st.truncated) return;
    if (p.empty() && x.empty()) {
        if (static_cast<long>(st.out.size()) >= st.limit) {
            st.truncated = true;
            return;
        }
        st.out.push_back(r);
        return;
    }
    int pivot = -1, best = -1;
    VertexSet px = p | x;
    for (int u = px.first(); u >= 0; u = px.next(u)) {
        int c = (p & st.g.neighbors(u)).count();
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    VertexSet cand = p - st.g.neighbors(pivot);
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
        VertexSet r2 = r;
        r2.add(v);
        bron_kerbosch(st, r2, p & st.g.neighbors(v), x & st.g.neighbors(v));
        if (st.truncated) return;
        p.remove(v);
        x.add(v);
    }
}

} // namespace detail

inline MaximalFamily maximal_cliques(const Graph& g, long limit = default_enumeration_limit) {
    MaximalFamily fam;
    fam.kind = SetKind::clique;
    detail::BkState st{g, fam.members, limit};
    detail::bron_kerbosch(st, {}, g.vertices(), {});
    fam.truncated = st.truncated;
    std::sort(fam.members.begin(), fam.members.end());
    return fam;
}

inline MaximalFamily maximal_stable_sets(const Graph& g, long limit = default_enumeration_limit) {
    MaximalFamily fam = maximal_cliques(complement(g), limit);
    fam.kind = SetKind::stable;
    return fam;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
    for (int u = s.first(); u >= 0; u = s.next(u)) {
        VertexSet rest = s;
        rest.remove(u);
        if (!rest.is_subset_of(g.neighbors(u))) return false;
    }
    return true;
}

inline bool is_stable_set(const Graph& g, const VertexSet& s) {
    for (int u = s.first(); u >= 0; u = s.next(u))
        if (g.neighbors(u).intersects(s)) return false;
    return true;
}

inline bool is_maximal_clique(const Graph& g, const VertexSet& s) {
    if (s.empty() || !is_clique(g, s)) return false;
    VertexSet common = g.vertices();
    for (int u = s.first(); u >= 0; u = s.next(u)) common &= g.neighbors(u);
    return (common - s).empty();
}

inline bool is_maximal_stable_set(const Graph& g, const VertexSet& s) {
    if (s.empty() || !is_stable_set(g, s)) return false;
    VertexSet outside = s.complement_within(g.order());
    for (int w = outside.first(); w >= 0; w = outside.next(w))
        if (!g.neighbors(w).intersects(s)) return false;
    return true;
}

namespace detail {
inline void require_complete(const MaximalFamily& fam, const char* what) {
    if (fam.truncated) throw error(errc::enumeration_limit, what);
}
} // namespace detail

inline std::pair<int, int> alpha_omega(const Graph& g, long limit = default_enumeration_limit) {
    auto cliques = maximal_cliques(g, limit);
    detail::require_complete(cliques, "clique family truncated");
    auto stables = maximal_stable_sets(g, limit);
    detail::require_complete(stables, "stable-set family truncated");
    return {stables.max_size(), cliques.max_size()};
}

/// verdict=true: all members of the family share one size. Otherwise the
/// witness is the first pair of members with different cardinalities in
/// bit-pattern order.
struct CoverWitness {
    bool verdict = false;
    std::optional<std::pair<VertexSet, VertexSet>> witness;
};

namespace detail {
inline CoverWitness equal_sizes(const MaximalFamily& fam) {
    CoverWitness w;
    w.verdict = true;
    if (fam.members.empty()) return w;
    int size0 = fam.members[0].count();
    for (const auto& s : fam.members)
        if (s.count() != size0) {
            w.verdict = false;
            w.witness = {fam.members[0], s};
            return w;
        }
    return w;
}
} // namespace detail

inline CoverWitness is_well_covered(const Graph& g, long limit = default_enumeration_limit) {
    auto stables = maximal_stable_sets(g, limit);
    detail::require_complete(stables, "stable-set family truncated");
    return detail::equal_sizes(stables);
}

inline CoverWitness is_co_well_covered(const Graph& g, long limit = default_enumeration_limit) {
    auto cliques = maximal_cliques(g, limit);
    detail::require_complete(cliques, "clique family truncated");
    return detail::equal_sizes(cliques);
}

/// Machine-checkable CIS answer: on not-CIS the witness is a disjoint
/// (maximal clique, maximal stable set) pair.
struct CisCertificate {
    bool is_cis = false;
    std::optional<std::pair<VertexSet, VertexSet>> witness;
};

inline bool verify_cis_witness(const Graph& g, const VertexSet& c, const VertexSet& s) {
    return is_maximal_clique(g, c) && is_maximal_stable_set(g, s) && !c.intersects(s);
}

inline CisCertificate is_cis(const Graph& g, long limit = default_enumeration_limit) {
    auto cliques = maximal_cliques(g, limit);
    detail::require_complete(cliques, "clique family truncated");
    auto stables = maximal_stable_sets(g, limit);
    detail::require_complete(stables, "stable-set family truncated");
    for (const auto& c : cliques.members)
        for (const auto& s : stables.members)
            if (!c.intersects(s)) return {false, {{c, s}}};
    return {true, std::nullopt};
}

/// Minimum of |S ∩ N(v)| over maximal stable sets S avoiding v.
inline int rho(const Graph& g, int v, long limit = default_enumeration_limit) {
    if (g.neighbors(v).empty())
        throw error(errc::isolated_vertex, "rho is undefined at isolated vertex " + std::to_string(v));
    auto stables = maximal_stable_sets(g, limit);
    detail::require_complete(stables, "stable-set family truncated");
    int best = max_vertices + 1;
    for (const auto& s : stables.members)
        if (!s.contains(v)) best = std::min(best, (s & g.neighbors(v)).count());
    return best;
}

inline int rho(const Graph& g, long limit = default_enumeration_limit) {
    auto stables = maximal_stable_sets(g, limit);
    detail::require_complete(stables, "stable-set family truncated");
    int best = max_vertices + 1;
    bool any = false;
    for (int v = 0; v < g.order(); ++v) {
        if (g.neighbors(v).empty()) continue;
        any = true;
        for (const auto& s : stables.members)
            if (!s.contains(v)) best = std::min(best, (s & g.neighbors(v)).count());
    }
    if (!any) throw error(errc::all_vertices_isolated, "rho needs a non-isolated vertex");
    return best;
}

/// Maximum clique size by plain branch and bound; used to seed coloring.
inline int max_clique_size(const Graph& g) {
    int best = 0;
    auto rec = [&](auto&& self, VertexSet p, int rsize) -> void {
        if (rsize + p.count() <= best) return;
        if (p.empty()) {
            best = std::max(best, rsize);
            return;
        }
        for (int v = p.first(); v >= 0; v = p.next(v)) {
            if (rsize + p.count() <= best) return;
            self(self, p & g.neighbors(v), rsize + 1);
            p.remove(v);
        }
    };
    rec(rec, g.vertices(), 0);
    return best;
}

/// Exact chromatic number. Branch and bound over vertices in descending
/// degree order, colors tried in ascending index, pruned against the best
/// coloring found so far; seeded with a greedy upper bound and a maximum
/// clique lower bound.
inline int chromatic_number(const Graph& g, int max_order = 64) {
    int n = g.order();
    if (n > max_order)
        throw error(errc::order_too_large_for_coloring,
                    "order " + std::to_string(n) + " exceeds coloring cap " + std::to_string(max_order));

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });

    std::vector<int> color(n, -1);
    int greedy = 0;
    for (int v : order) {
        std::uint64_t used = 0;
        for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
            if (color[u] >= 0) used |= std::uint64_t{1} << color[u];
        int c = 0;
        while ((used >> c) & 1) ++c;
        color[v] = c;
        greedy = std::max(greedy, c + 1);
    }

    int lower = max_clique_size(g);
    if (lower == greedy) return lower;

    int best = greedy;
    std::fill(color.begin(), color.end(), -1);
    auto rec = [&](auto&& self, int idx, int used) -> void {
        if (used >= best || best == lower) return;
        if (idx == n) {
            best = used;
            return;
        }
        int v = order[idx];
        std::uint64_t blocked = 0;
        for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
            if (color[u] >= 0) blocked |= std::uint64_t{1} << color[u];
        int top = std::min(used + 1, best - 1);
        for (int c = 0; c < top; ++c) {
            if ((blocked >> c) & 1) continue;
            color[v] = c;
            self(self, idx + 1, std::max(used, c + 1));
            color[v] = -1;
            if (best == lower) return;
        }
    };
    rec(rec, 0, 0);
    return best;
}

inline bool is_triangle_free(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.neighbors(u).intersects(g.neighbors(v))) return false;
    return true;
}

/// Connected complete bipartite (K_1 counts, as the one-sided degenerate
/// case). Used by the triangle-free classification checks.
inline bool is_complete_bipartite(const Graph& g) {
    if (!is_connected(g)) return false;
    int n = g.order();
    if (n == 1) return true;
    // 2-color by BFS from vertex 0, then check both parts are stable and
    // fully joined.
    std::vector<int> side(n, -1);
    side[0] = 0;
    VertexSet frontier = VertexSet::single(0);
    while (!frontier.empty()) {
        VertexSet next;
        for (int v = frontier.first(); v >= 0; v = frontier.next(v))
            for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
                if (side[u] < 0) {
                    side[u] = 1 - side[v];
                    next.add(u);
                }
        frontier = next;
    }
    VertexSet a, b;
    for (int v = 0; v < n; ++v) (side[v] == 0 ? a : b).add(v);
    if (a.empty() || b.empty()) return false;
    for (int v = a.first(); v >= 0; v = a.next(v))
        if (g.neighbors(v) != b) return false;
    for (int v = b.first(); v >= 0; v = b.next(v))
        if (g.neighbors(v) != a) return false;
    return true;
}

/// A CIS graph has, for every induced path (a,b,c,d), some vertex adjacent
/// to both midpoints and to neither endpoint. Returns the first failing
/// path otherwise (necessary-condition pre-filter for CIS).
struct P4Verdict {
    bool holds = true;
    std::optional<std::array<int, 4>> failing_path;
};

inline P4Verdict p4_property(const Graph& g) {
    int n = g.order();
    for (int b = 0; b < n; ++b)
        for (int c = g.neighbors(b).next(b); c >= 0; c = g.neighbors(b).next(c)) {
            VertexSet as = g.neighbors(b) - g.closed_neighborhood(c);
            VertexSet ds = g.neighbors(c) - g.closed_neighborhood(b);
            if (as.empty() || ds.empty()) continue;
            for (int a = as.first(); a >= 0; a = as.next(a))
                for (int d = ds.first(); d >= 0; d = ds.next(d)) {
                    if (a == d || g.adjacent(a, d)) continue;
                    VertexSet fix = (g.neighbors(b) & g.neighbors(c)) - g.neighbors(a) - g.neighbors(d);
                    if (fix.empty()) return {false, {{a, b, c, d}}};
                }
        }
    return {true, std::nullopt};
}

/// Edges contained in at least two distinct maximum cliques.
inline std::vector<std::pair<int, int>> red_edges(const Graph& g,
                                                  long limit = default_enumeration_limit) {
    auto cliques = maximal_cliques(g, limit);
    detail::require_complete(cliques, "clique family truncated");
    int w = cliques.max_size();
    std::vector<std::uint8_t> count(static_cast<std::size_t>(g.order()) * g.order(), 0);
    for (const auto& c : cliques.members) {
        if (c.count() != w) continue;
        auto m = c.members();
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j) {
                auto& cell = count[static_cast<std::size_t>(m[i]) * g.order() + m[j]];
                if (cell < 2) ++cell;
            }
    }
    std::vector<std::pair<int, int>> red;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (count[static_cast<std::size_t>(u) * g.order() + v] >= 2) red.emplace_back(u, v);
    return red;
}

/// No two maximum cliques intersect in exactly omega-1 vertices; the
/// clique-intersection property every irreducible CIS graph satisfies.
inline bool max_cliques_separated(const Graph& g, long limit = default_enumeration_limit) {
    auto cliques = maximal_cliques(g, limit);
    detail::require_complete(cliques, "clique family truncated");
    int w = cliques.max_size();
    std::vector<const VertexSet*> maxc;
    for (const auto& c : cliques.members)
        if (c.count() == w) maxc.push_back(&c);
    for (std::size_t i = 0; i < maxc.size(); ++i)
        for (std::size_t j = i + 1; j < maxc.size(); ++j)
            if ((*maxc[i] & *maxc[j]).count() == w - 1) return false;
    return true;
}

} // namespace cis
