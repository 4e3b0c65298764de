#pragma once

#include <map>
#include <string>

#include "cis/enumerate.hpp"
#include "cis/graph.hpp"
#include "cis/groups.hpp"
#include "cis/small_graphs.hpp"
#include "cis/symmetry.hpp"

namespace cis {

inline Graph complete_graph(int n) {
    if (n < 1) throw error(errc::bad_parameter, "K_n needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

inline Graph empty_graph(int n) {
    if (n < 1) throw error(errc::bad_parameter, "empty graph needs n >= 1");
    return Graph::from_edges(n, {});
}

inline Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw error(errc::bad_parameter, "K_{m,n} needs m,n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
    return Graph::from_edges(m + n, edges);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw error(errc::bad_parameter, "C_n needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

/// L(K_{n,n}) built directly as the rook's graph: vertices are pairs (i,j)
/// indexed i*n+j, adjacent iff exactly one coordinate agrees.
inline Graph rook_graph(int n) {
    if (n < 1) throw error(errc::bad_parameter, "L(K_{n,n}) needs n >= 1");
    if (n * n > max_vertices) throw error(errc::order_too_large, "rook graph order exceeds cap");
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n * n; ++a)
        for (int b = a + 1; b < n * n; ++b) {
            bool rows = a / n == b / n, cols = a % n == b % n;
            if (rows != cols) edges.emplace_back(a, b);
        }
    return Graph::from_edges(n * n, edges);
}

/// PX(n): vertex (i,x,y) on Z_n x Z_2 x Z_2 indexed 4i+2x+y, edges
/// {(i,x,y),(i+1,y,z)}. 4-regular.
inline Graph px_graph(int n) {
    if (n < 3) throw error(errc::bad_parameter, "PX(n) needs n >= 3");
    if (4 * n > max_vertices) throw error(errc::order_too_large, "PX order exceeds cap");
    auto idx = [n](int i, int x, int y) { return 4 * ((i % n + n) % n) + 2 * x + y; };
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int z = 0; z < 2; ++z) {
                    int u = idx(i, x, y), v = idx(i + 1, y, z);
                    edges.emplace_back(std::min(u, v), std::max(u, v));
                }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph::from_edges(4 * n, edges);
}

/// Q_n = PX(n) plus a complete graph on every block {(i,*,*)}. 7-regular.
inline Graph q_graph(int n) {
    Graph px = px_graph(n);
    std::vector<std::pair<int, int>> edges = px.edges();
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) edges.emplace_back(4 * i + a, 4 * i + b);
    return Graph::from_edges(4 * n, edges);
}

/// R_n: Cayley graph on Z_{2n} x Z_4 with connection set
/// {(0,1),(0,3),(n,0),(n,2),(2i,2),(2i+1,0) | 0 <= i <= n-1}.
/// The parity-dependent duplicate in the listed generators collapses,
/// leaving 2n+3 elements.
inline Graph r_graph(int n) {
    if (n < 2) throw error(errc::bad_parameter, "R_n needs n >= 2");
    if (8 * n > max_vertices) throw error(errc::order_too_large, "R_n order exceeds cap");
    AbelianGroup grp({2 * n, 4});
    std::vector<int> elems{grp.rank_of({0, 1}), grp.rank_of({0, 3}), grp.rank_of({n, 0}),
                           grp.rank_of({n, 2})};
    for (int i = 0; i < n; ++i) {
        elems.push_back(grp.rank_of({2 * i, 2}));
        elems.push_back(grp.rank_of({2 * i + 1, 0}));
    }
    return cayley_graph(grp, ConnectionSet<AbelianGroup>(grp, elems));
}

/// S_n: Cayley graph on Z_{2n} x Z_4 with connection set
/// {(0,1),(0,3),(2i+1,0),(2i+1,1),(2i+1,3) | 0 <= i <= n-1}. (3n+2)-regular.
inline Graph s_graph(int n) {
    if (n < 2) throw error(errc::bad_parameter, "S_n needs n >= 2");
    if (8 * n > max_vertices) throw error(errc::order_too_large, "S_n order exceeds cap");
    AbelianGroup grp({2 * n, 4});
    std::vector<int> elems{grp.rank_of({0, 1}), grp.rank_of({0, 3})};
    for (int i = 0; i < n; ++i) {
        elems.push_back(grp.rank_of({2 * i + 1, 0}));
        elems.push_back(grp.rank_of({2 * i + 1, 1}));
        elems.push_back(grp.rank_of({2 * i + 1, 3}));
    }
    return cayley_graph(grp, ConnectionSet<AbelianGroup>(grp, elems));
}

// ---------------------------------------------------------------------------
// FamilySpec: the CLI-facing constructor descriptor.
// ---------------------------------------------------------------------------

enum class FamilyKind { K, Kmn, C, LKnn, PX, Q, R, S, Cayley };

struct FamilySpec {
    FamilyKind kind = FamilyKind::K;
    std::vector<int> params;                   // numeric parameters for the non-Cayley kinds
    std::vector<int> moduli;                   // Cayley: Z_{m1} x ... x Z_{mk}
    std::vector<std::vector<int>> connection;  // Cayley: connection set tuples

    /// "K:4", "Kmn:3,4", "C:5", "LKnn:3", "PX:5", "Q:7", "R:3", "S:3",
    /// "Cayley:Z8xZ4:0,1;0,3;4,0" (elements ';'-separated, coordinates ','-separated).
    static FamilySpec parse(const std::string& text);

    Graph build() const;
    std::string to_string() const;
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t p = s.find(sep, start);
        if (p == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, p - start));
        start = p + 1;
    }
}

inline int parse_int(const std::string& s) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw error(errc::bad_parameter, "bad integer '" + s + "'");
        return v;
    } catch (const error&) {
        throw;
    } catch (...) {
        throw error(errc::bad_parameter, "bad integer '" + s + "'");
    }
}

} // namespace detail

inline FamilySpec FamilySpec::parse(const std::string& text) {
    auto parts = detail::split(text, ':');
    if (parts.empty() || parts[0].empty()) throw error(errc::bad_parameter, "empty family spec");
    FamilySpec spec;
    const std::string& kind = parts[0];
    auto ints = [&](std::size_t arity) {
        if (parts.size() != 2) throw error(errc::bad_parameter, kind + " needs parameters");
        std::vector<int> vals;
        for (const auto& tok : detail::split(parts[1], ',')) vals.push_back(detail::parse_int(tok));
        if (vals.size() != arity)
            throw error(errc::bad_parameter,
                        kind + " takes " + std::to_string(arity) + " parameter(s)");
        return vals;
    };
    if (kind == "K") {
        spec.kind = FamilyKind::K;
        spec.params = ints(1);
    } else if (kind == "Kmn") {
        spec.kind = FamilyKind::Kmn;
        spec.params = ints(2);
    } else if (kind == "C") {
        spec.kind = FamilyKind::C;
        spec.params = ints(1);
    } else if (kind == "LKnn") {
        spec.kind = FamilyKind::LKnn;
        spec.params = ints(1);
    } else if (kind == "PX") {
        spec.kind = FamilyKind::PX;
        spec.params = ints(1);
    } else if (kind == "Q") {
        spec.kind = FamilyKind::Q;
        spec.params = ints(1);
    } else if (kind == "R") {
        spec.kind = FamilyKind::R;
        spec.params = ints(1);
    } else if (kind == "S") {
        spec.kind = FamilyKind::S;
        spec.params = ints(1);
    } else if (kind == "Cayley") {
        spec.kind = FamilyKind::Cayley;
        if (parts.size() != 3) throw error(errc::bad_parameter, "Cayley spec is Cayley:<group>:<set>");
        for (const auto& tok : detail::split(parts[1], 'x')) {
            if (tok.empty() || tok[0] != 'Z')
                throw error(errc::bad_parameter, "group factors look like Z8xZ4");
            spec.moduli.push_back(detail::parse_int(tok.substr(1)));
        }
        for (const auto& elem : detail::split(parts[2], ';')) {
            std::vector<int> tuple;
            for (const auto& tok : detail::split(elem, ',')) tuple.push_back(detail::parse_int(tok));
            spec.connection.push_back(std::move(tuple));
        }
    } else {
        throw error(errc::bad_parameter, "unknown family kind '" + kind + "'");
    }
    return spec;
}

inline Graph FamilySpec::build() const {
    auto need = [&](std::size_t k) {
        if (params.size() != k) throw error(errc::bad_parameter, "wrong parameter count");
    };
    switch (kind) {
    case FamilyKind::K:
        need(1);
        return complete_graph(params[0]);
    case FamilyKind::Kmn:
        need(2);
        return complete_bipartite(params[0], params[1]);
    case FamilyKind::C:
        need(1);
        return cycle_graph(params[0]);
    case FamilyKind::LKnn:
        need(1);
        return rook_graph(params[0]);
    case FamilyKind::PX:
        need(1);
        return px_graph(params[0]);
    case FamilyKind::Q:
        need(1);
        return q_graph(params[0]);
    case FamilyKind::R:
        need(1);
        return r_graph(params[0]);
    case FamilyKind::S:
        need(1);
        return s_graph(params[0]);
    case FamilyKind::Cayley: {
        AbelianGroup grp(moduli);
        std::vector<int> elems;
        for (const auto& t : connection) elems.push_back(grp.rank_of(t));
        return cayley_graph(grp, ConnectionSet<AbelianGroup>(grp, elems));
    }
    }
    throw error(errc::bad_parameter, "unreachable family kind");
}

inline std::string FamilySpec::to_string() const {
    auto join = [](const std::vector<int>& v, char sep) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += sep;
            s += std::to_string(v[i]);
        }
        return s;
    };
    switch (kind) {
    case FamilyKind::K: return "K:" + join(params, ',');
    case FamilyKind::Kmn: return "Kmn:" + join(params, ',');
    case FamilyKind::C: return "C:" + join(params, ',');
    case FamilyKind::LKnn: return "LKnn:" + join(params, ',');
    case FamilyKind::PX: return "PX:" + join(params, ',');
    case FamilyKind::Q: return "Q:" + join(params, ',');
    case FamilyKind::R: return "R:" + join(params, ',');
    case FamilyKind::S: return "S:" + join(params, ',');
    case FamilyKind::Cayley: {
        std::string s = "Cayley:";
        for (std::size_t i = 0; i < moduli.size(); ++i) {
            if (i) s += 'x';
            s += 'Z' + std::to_string(moduli[i]);
        }
        s += ':';
        for (std::size_t i = 0; i < connection.size(); ++i) {
            if (i) s += ';';
            s += join(connection[i], ',');
        }
        return s;
    }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// The family F = {K_n, L(K_{n,n}) n>=3, Q_n n>=4, R_n n>=3, S_n n>=3} and
// its closure under complement and lexicographic product.
// ---------------------------------------------------------------------------

/// All isomorphism classes of the given order in the closure of F,
/// generated by seeding F-members of dividing orders and closing under
/// complement and product. Orders multiply under the product, so the
/// divisor filtration makes the (infinite) closure finite.
inline std::vector<Graph> closure_members(int order, int depth_cap = 8,
                                          const SymmetryOptions& opt = {}) {
    if (order < 1) throw error(errc::bad_parameter, "order must be positive");
    if (order > 64) throw error(errc::order_too_large, "closure enumeration capped at order 64");

    std::vector<int> divisors;
    for (int d = 1; d <= order; ++d)
        if (order % d == 0) divisors.push_back(d);

    std::map<int, std::map<std::string, Graph>> classes;
    auto insert = [&](int d, const Graph& g) {
        auto key = canonical_form(g, opt);
        auto [it, fresh] = classes[d].emplace(key, g);
        return fresh;
    };

    for (int d : divisors) {
        insert(d, complete_graph(d));
        for (int s = 3; s * s <= d; ++s)
            if (s * s == d) insert(d, rook_graph(s));
        if (d % 4 == 0 && d / 4 >= 4) insert(d, q_graph(d / 4));
        if (d % 8 == 0 && d / 8 >= 3) insert(d, r_graph(d / 8));
        if (d % 8 == 0 && d / 8 >= 3) insert(d, s_graph(d / 8));
    }

    for (int round = 0; round < depth_cap; ++round) {
        bool changed = false;
        for (int d : divisors) {
            std::vector<Graph> snapshot;
            for (const auto& [key, g] : classes[d]) snapshot.push_back(g);
            for (const auto& g : snapshot)
                if (insert(d, complement(g))) changed = true;
        }
        for (int d1 : divisors)
            for (int d2 : divisors) {
                if (static_cast<long>(d1) * d2 > order || order % (d1 * d2) != 0) continue;
                if (d1 == 1 || d2 == 1) continue; // A[K_1] and K_1[B] change nothing
                std::vector<Graph> left, right;
                for (const auto& [key, g] : classes[d1]) left.push_back(g);
                for (const auto& [key, g] : classes[d2]) right.push_back(g);
                for (const auto& a : left)
                    for (const auto& b : right)
                        if (insert(d1 * d2, lexicographic_product(a, b))) changed = true;
            }
        if (!changed) break;
    }

    std::vector<Graph> out;
    for (const auto& [key, g] : classes[order]) out.push_back(g);
    return out;
}

/// Exhaustively derives the graphs of order k with clique number t that are
/// co-well-covered and in which no two t-cliques intersect in a (t-1)-clique,
/// one representative per isomorphism class. This is the working definition
/// of the extremal local graphs T_2, T_3, T_3', U_2.
inline std::vector<Graph> derive_extremal_locals(int k, int t, int jobs = 1) {
    if (k < 1 || k > 7) throw error(errc::order_too_large, "extremal locals derived for k <= 7 only");
    std::vector<Graph> out;
    for_each_graph_class(
        k,
        [&](const Graph& g) {
            auto cliques = maximal_cliques(g);
            if (cliques.max_size() != t || cliques.min_size() != t) return;
            std::vector<const VertexSet*> tc;
            for (const auto& c : cliques.members) tc.push_back(&c);
            for (std::size_t i = 0; i < tc.size(); ++i)
                for (std::size_t j = i + 1; j < tc.size(); ++j)
                    if ((*tc[i] & *tc[j]).count() == t - 1) return;
            out.push_back(g);
        },
        jobs);
    return out;
}

inline bool has_universal_vertex(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) return true;
    return false;
}

inline int universal_vertex_count(const Graph& g) {
    int c = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) ++c;
    return c;
}

} // namespace cis
