#pragma once

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cis/enumerate.hpp"
#include "cis/graph.hpp"
#include "cis/graph6.hpp"

namespace cis {

/// Bijection on {0..n-1}. apply(p) is the image of point p; composition
/// is left-to-right (apply this, then the other).
struct Perm {
    std::vector<std::uint8_t> img;

    static Perm identity(int n) {
        Perm p;
        p.img.resize(n);
        for (int i = 0; i < n; ++i) p.img[i] = static_cast<std::uint8_t>(i);
        return p;
    }

    int degree() const { return static_cast<int>(img.size()); }
    int apply(int p) const { return img[p]; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img[i] != i) return false;
        return true;
    }

    Perm then(const Perm& h) const {
        Perm r;
        r.img.resize(img.size());
        for (std::size_t i = 0; i < img.size(); ++i) r.img[i] = h.img[img[i]];
        return r;
    }

    Perm inverse() const {
        Perm r;
        r.img.resize(img.size());
        for (std::size_t i = 0; i < img.size(); ++i) r.img[img[i]] = static_cast<std::uint8_t>(i);
        return r;
    }

    bool operator==(const Perm&) const = default;
    bool operator<(const Perm& o) const { return img < o.img; }

    /// One-line image list "p(0) p(1) ... p(n-1)".
    std::string to_string() const {
        std::string s;
        for (int i = 0; i < degree(); ++i) {
            if (i) s += ' ';
            s += std::to_string(img[i]);
        }
        return s;
    }
};

inline bool is_automorphism(const Graph& g, const Perm& p) {
    if (p.degree() != g.order()) return false;
    for (auto [u, v] : g.edges())
        if (!g.adjacent(p.apply(u), p.apply(v))) return false;
    return true;
}

inline Graph apply_permutation(const Graph& g, const Perm& p) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(p.apply(u), p.apply(v));
    return Graph::from_edges(g.order(), edges);
}

struct PermutationGroup {
    int degree = 0;
    std::vector<Perm> generators;
    std::vector<VertexSet> orbits; // partition, sorted by minimum element
};

struct SymmetryOptions {
    long node_budget = 5'000'000;
};

// ---------------------------------------------------------------------------
// Individualization-refinement search. One engine serves automorphism
// generators, orbit partition, and the canonical form (minimum adjacency
// code over the leaves that survive automorphism pruning).
// ---------------------------------------------------------------------------

namespace detail {

using Partition = std::vector<std::vector<int>>;

inline VertexSet cell_set(const std::vector<int>& cell) {
    VertexSet s;
    for (int v : cell) s.add(v);
    return s;
}

// Equitable refinement: repeatedly split cells by the count of neighbors
// in a splitter cell, fragments ordered by ascending count. Every fragment
// re-enters the splitter queue, so the result is equitable; the procedure
// depends only on counts, never on labels.
inline void refine(const Graph& g, Partition& part) {
    std::deque<VertexSet> splitters;
    for (const auto& c : part) splitters.push_back(cell_set(c));
    while (!splitters.empty()) {
        VertexSet sp = splitters.front();
        splitters.pop_front();
        Partition next;
        next.reserve(part.size());
        for (auto& cell : part) {
            if (cell.size() == 1) {
                next.push_back(std::move(cell));
                continue;
            }
            std::map<int, std::vector<int>> buckets;
            for (int v : cell) buckets[(g.neighbors(v) & sp).count()].push_back(v);
            if (buckets.size() == 1) {
                next.push_back(std::move(cell));
                continue;
            }
            for (auto& [cnt, frag] : buckets) {
                splitters.push_back(cell_set(frag));
                next.push_back(std::move(frag));
            }
        }
        part = std::move(next);
    }
}

struct SearchResult {
    Perm canon_label; // position -> vertex of the minimum-code leaf
    std::vector<std::uint8_t> canon_code;
    std::vector<Perm> generators;
    long nodes = 0;
};

class RefinementSearch {
public:
    RefinementSearch(const Graph& g, long budget) : g_(g), budget_(budget) {}

    SearchResult run() {
        Partition root{{}};
        root[0].resize(g_.order());
        for (int v = 0; v < g_.order(); ++v) root[0][v] = v;
        std::vector<int> prefix;
        descend(std::move(root), prefix);
        SearchResult r;
        r.canon_label = label_of(best_leaf_);
        r.canon_code = best_code_;
        r.generators = generators_;
        r.nodes = nodes_;
        return r;
    }

private:
    const Graph& g_;
    long budget_;
    long nodes_ = 0;
    std::vector<Perm> generators_;
    std::vector<std::vector<int>> first_leaf_, best_leaf_; // cells, all singleton
    std::vector<std::uint8_t> first_code_, best_code_;

    static Perm label_of(const Partition& leaf) {
        Perm p;
        p.img.resize(leaf.size());
        for (std::size_t i = 0; i < leaf.size(); ++i) p.img[i] = static_cast<std::uint8_t>(leaf[i][0]);
        return p;
    }

    // Upper-triangle bits in graph6 column-major order, packed 8 per byte
    // MSB first; lexicographic byte order equals bit order.
    std::vector<std::uint8_t> code_of(const Partition& leaf) const {
        int n = g_.order();
        std::vector<std::uint8_t> code((static_cast<std::size_t>(n) * (n - 1) / 2 + 7) / 8, 0);
        std::size_t bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if (g_.adjacent(leaf[i][0], leaf[j][0]))
                    code[bit >> 3] |= static_cast<std::uint8_t>(0x80u >> (bit & 7));
        return code;
    }

    void record_automorphism(const Partition& leaf, const Partition& ref) {
        // Equal codes mean position i holds equivalent vertices; the map
        // ref-vertex-at-position(leaf-position-of(v)) is an automorphism.
        int n = g_.order();
        Perm gamma;
        gamma.img.resize(n);
        for (int pos = 0; pos < n; ++pos) gamma.img[leaf[pos][0]] = static_cast<std::uint8_t>(ref[pos][0]);
        if (!gamma.is_identity()) generators_.push_back(gamma);
    }

    void handle_leaf(const Partition& leaf) {
        auto code = code_of(leaf);
        if (first_leaf_.empty()) {
            first_leaf_ = leaf;
            first_code_ = code;
            best_leaf_ = leaf;
            best_code_ = std::move(code);
            return;
        }
        if (code == first_code_) record_automorphism(leaf, first_leaf_);
        if (code == best_code_) {
            if (best_leaf_ != first_leaf_) record_automorphism(leaf, best_leaf_);
        } else if (code < best_code_) {
            best_leaf_ = leaf;
            best_code_ = std::move(code);
        }
    }

    // Orbit partition of {0..n-1} under the discovered generators that fix
    // every prefix vertex; used to skip branches equivalent to an explored
    // sibling.
    std::vector<int> prefix_orbits(const std::vector<int>& prefix) const {
        int n = g_.order();
        std::vector<int> parent(n);
        for (int i = 0; i < n; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gen : generators_) {
            bool fixes = true;
            for (int p : prefix)
                if (gen.apply(p) != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < n; ++v) {
                int a = find(v), b = find(gen.apply(v));
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        std::vector<int> root(n);
        for (int v = 0; v < n; ++v) root[v] = find(v);
        return root;
    }

    void descend(Partition part, std::vector<int>& prefix) {
        if (++nodes_ > budget_)
            throw error(errc::search_budget_exceeded,
                        "refinement search exceeded " + std::to_string(budget_) + " nodes");
        refine(g_, part);
        int target = -1;
        std::size_t target_size = static_cast<std::size_t>(g_.order()) + 1;
        for (std::size_t i = 0; i < part.size(); ++i)
            if (part[i].size() > 1 && part[i].size() < target_size) {
                target = static_cast<int>(i);
                target_size = part[i].size();
            }
        if (target < 0) {
            handle_leaf(part);
            return;
        }
        std::vector<int> cell = part[target];
        std::vector<int> explored;
        for (int v : cell) {
            if (!explored.empty()) {
                auto root = prefix_orbits(prefix);
                bool skip = false;
                for (int u : explored)
                    if (root[u] == root[v]) {
                        skip = true;
                        break;
                    }
                if (skip) continue;
            }
            Partition child;
            child.reserve(part.size() + 1);
            for (std::size_t i = 0; i < part.size(); ++i) {
                if (static_cast<int>(i) != target) {
                    child.push_back(part[i]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int u : part[i])
                    if (u != v) rest.push_back(u);
                child.push_back(std::move(rest));
            }
            prefix.push_back(v);
            descend(std::move(child), prefix);
            prefix.pop_back();
            explored.push_back(v);
        }
    }
};

inline std::vector<VertexSet> orbit_partition(int n, const std::vector<Perm>& gens) {
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& g : gens)
        for (int v = 0; v < n; ++v) {
            int a = find(v), b = find(g.apply(v));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<int, VertexSet> cells;
    for (int v = 0; v < n; ++v) cells[find(v)].add(v);
    std::vector<VertexSet> orbits;
    for (auto& [root, s] : cells) orbits.push_back(s);
    return orbits;
}

} // namespace detail

inline PermutationGroup automorphism_group(const Graph& g, const SymmetryOptions& opt = {}) {
    detail::RefinementSearch search(g, opt.node_budget);
    auto res = search.run();
    PermutationGroup grp;
    grp.degree = g.order();
    grp.generators = std::move(res.generators);
    grp.orbits = detail::orbit_partition(g.order(), grp.generators);
    return grp;
}

/// graph6 string of the canonically relabeled graph; equal strings iff
/// the graphs are isomorphic.
inline std::string canonical_form(const Graph& g, const SymmetryOptions& opt = {}) {
    detail::RefinementSearch search(g, opt.node_budget);
    auto res = search.run();
    // canon_label maps position -> vertex, so its inverse sends vertex v to
    // its canonical position.
    return graph6_encode(apply_permutation(g, res.canon_label.inverse()));
}

inline bool are_isomorphic(const Graph& a, const Graph& b, const SymmetryOptions& opt = {}) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da(a.order()), db(b.order());
    for (int v = 0; v < a.order(); ++v) da[v] = a.degree(v);
    for (int v = 0; v < b.order(); ++v) db[v] = b.degree(v);
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a, opt) == canonical_form(b, opt);
}

struct Transitivity {
    bool is_vertex_transitive = false;
    std::vector<VertexSet> orbits;
};

inline Transitivity transitivity(const Graph& g, const SymmetryOptions& opt = {}) {
    auto grp = automorphism_group(g, opt);
    return {grp.orbits.size() == 1, std::move(grp.orbits)};
}

/// For a vertex-transitive graph, CIS is equivalent to: well-covered,
/// co-well-covered, and alpha*omega = n. The positive verdict needs no
/// pairwise family intersection; a negative one still carries a concrete
/// disjoint witness pair.
inline CisCertificate vt_cis_check(const Graph& g, long limit = default_enumeration_limit,
                                   const SymmetryOptions& opt = {}) {
    auto t = transitivity(g, opt);
    if (!t.is_vertex_transitive)
        throw error(errc::not_vertex_transitive, "vt_cis_check requires a vertex-transitive input");
    auto cliques = maximal_cliques(g, limit);
    detail::require_complete(cliques, "clique family truncated");
    auto stables = maximal_stable_sets(g, limit);
    detail::require_complete(stables, "stable-set family truncated");
    bool cowc = cliques.min_size() == cliques.max_size();
    bool wc = stables.min_size() == stables.max_size();
    long prod = static_cast<long>(cliques.max_size()) * stables.max_size();
    if (wc && cowc && prod == g.order()) return {true, std::nullopt};
    for (const auto& c : cliques.members)
        for (const auto& s : stables.members)
            if (!c.intersects(s)) return {false, {{c, s}}};
    throw std::logic_error("size criterion failed yet all pairs intersect on a vertex-transitive graph");
}

// ---------------------------------------------------------------------------
// Group order via a Schreier-Sims stabilizer chain, exact as a decimal
// string with a 64-bit value when it fits.
// ---------------------------------------------------------------------------

struct GroupOrder {
    std::optional<std::uint64_t> value; // absent when the order overflows 64 bits
    std::string decimal;
};

namespace detail {

class StabChain {
public:
    StabChain(int degree, const std::vector<Perm>& gens) : degree_(degree) {
        for (const auto& g : gens) {
            if (g.is_identity()) continue;
            auto [res, lvl] = strip(g, 0);
            if (res.is_identity()) continue;
            ensure_base(res, lvl);
            insert(res, 0, lvl);
        }
        // Verify bottom-up: every Schreier generator must sift to identity
        // through the deeper levels.
        int i = static_cast<int>(base_.size()) - 1;
        while (i >= 0) {
            bool violated = false;
            for (std::size_t oi = 0; oi < orbit_[i].size() && !violated; ++oi) {
                int p = orbit_[i][oi];
                for (const auto& s : strong_[i]) {
                    Perm sg = trans_[i][p]->then(s).then(trans_[i][s.apply(p)]->inverse());
                    if (sg.is_identity()) continue;
                    auto [res, lvl] = strip(sg, i + 1);
                    if (res.is_identity()) continue;
                    ensure_base(res, lvl);
                    insert(res, i + 1, lvl);
                    i = lvl;
                    violated = true;
                    break;
                }
            }
            if (!violated) --i;
        }
    }

    GroupOrder order() const {
        GroupOrder ord;
        ord.decimal = "1";
        unsigned long long v = 1;
        bool fits = true;
        for (std::size_t i = 0; i < base_.size(); ++i) {
            unsigned long long k = orbit_[i].size();
            if (fits && v > ~0ULL / k) fits = false;
            if (fits) v *= k;
            mul_decimal(ord.decimal, k);
        }
        if (fits) ord.value = v;
        return ord;
    }

    bool contains(const Perm& g) const {
        auto [res, lvl] = strip(g, 0);
        return res.is_identity();
    }

private:
    int degree_;
    std::vector<int> base_;
    std::vector<std::vector<Perm>> strong_;                 // strong_[i] generates the stabilizer of base[0..i-1]
    std::vector<std::vector<int>> orbit_;                   // BFS order
    std::vector<std::vector<std::optional<Perm>>> trans_;   // trans_[i][p]: base[i] -> p

    static void mul_decimal(std::string& dec, unsigned long long k) {
        // dec stored most-significant first
        std::string out;
        unsigned long long carry = 0;
        for (int i = static_cast<int>(dec.size()) - 1; i >= 0; --i) {
            unsigned long long t = static_cast<unsigned long long>(dec[i] - '0') * k + carry;
            out.push_back(static_cast<char>('0' + t % 10));
            carry = t / 10;
        }
        while (carry) {
            out.push_back(static_cast<char>('0' + carry % 10));
            carry /= 10;
        }
        std::reverse(out.begin(), out.end());
        dec = out.empty() ? "0" : out;
    }

    void ensure_base(const Perm& res, int lvl) {
        if (lvl < static_cast<int>(base_.size())) return;
        int moved = -1;
        for (int p = 0; p < degree_; ++p)
            if (res.apply(p) != p) {
                moved = p;
                break;
            }
        base_.push_back(moved);
        strong_.emplace_back();
        orbit_.emplace_back();
        trans_.emplace_back(degree_);
    }

    // res fixes base[0..lvl-1]; add it to levels from..lvl and rebuild
    // their orbits.
    void insert(const Perm& res, int from, int lvl) {
        for (int j = from; j <= lvl && j < static_cast<int>(base_.size()); ++j) {
            strong_[j].push_back(res);
            rebuild(j);
        }
    }

    void rebuild(int i) {
        orbit_[i].clear();
        trans_[i].assign(degree_, std::nullopt);
        orbit_[i].push_back(base_[i]);
        trans_[i][base_[i]] = Perm::identity(degree_);
        for (std::size_t head = 0; head < orbit_[i].size(); ++head) {
            int p = orbit_[i][head];
            for (const auto& s : strong_[i]) {
                int q = s.apply(p);
                if (!trans_[i][q]) {
                    trans_[i][q] = trans_[i][p]->then(s);
                    orbit_[i].push_back(q);
                }
            }
        }
    }

    std::pair<Perm, int> strip(Perm g, int from) const {
        for (int k = from; k < static_cast<int>(base_.size()); ++k) {
            if (g.is_identity()) return {g, k};
            int p = g.apply(base_[k]);
            if (!trans_[k][p]) return {g, k};
            g = g.then(trans_[k][p]->inverse());
        }
        return {g, static_cast<int>(base_.size())};
    }
};

} // namespace detail

inline GroupOrder group_order(const PermutationGroup& grp) {
    detail::StabChain chain(grp.degree, grp.generators);
    return chain.order();
}

/// Full element list in BFS order from the identity; refuses (rather than
/// thrashing) when the group order exceeds the cap.
inline std::vector<Perm> materialize_elements(const PermutationGroup& grp, long cap = 1'000'000) {
    auto ord = group_order(grp);
    if (!ord.value || *ord.value > static_cast<std::uint64_t>(cap))
        throw error(errc::group_too_large, "group order " + ord.decimal + " exceeds cap " +
                                               std::to_string(cap));
    std::vector<Perm> elems{Perm::identity(grp.degree)};
    std::set<std::vector<std::uint8_t>> seen{elems[0].img};
    for (std::size_t head = 0; head < elems.size(); ++head)
        for (const auto& gen : grp.generators) {
            Perm next = elems[head].then(gen);
            if (seen.insert(next.img).second) elems.push_back(next);
        }
    return elems;
}

/// Searches the materialized group for a subgroup of order n acting
/// regularly (transitive with trivial point stabilizers); its existence
/// certifies that the graph is Cayley. Returns the chosen generators.
inline std::optional<std::vector<Perm>> find_regular_subgroup(const PermutationGroup& grp,
                                                              long cap = 1'000'000) {
    int n = grp.degree;
    auto elems = materialize_elements(grp, cap);
    if (elems.size() % static_cast<std::size_t>(n) != 0) return std::nullopt;

    // A regular subgroup consists of the identity plus fixed-point-free
    // elements, one mapping 0 to each point.
    auto fixed_point_free = [n](const Perm& p) {
        for (int v = 0; v < n; ++v)
            if (p.apply(v) == v) return false;
        return true;
    };
    std::vector<std::vector<const Perm*>> bucket(n);
    for (const auto& e : elems)
        if (!e.is_identity() && fixed_point_free(e)) bucket[e.apply(0)].push_back(&e);

    using Key = std::vector<std::uint8_t>;
    auto close = [&](const std::vector<const Perm*>& gens) -> std::optional<std::vector<Perm>> {
        std::vector<Perm> sub{Perm::identity(n)};
        std::set<Key> seen{sub[0].img};
        for (std::size_t head = 0; head < sub.size(); ++head)
            for (const Perm* gp : gens) {
                Perm next = sub[head].then(*gp);
                if (seen.insert(next.img).second) {
                    if (!fixed_point_free(next)) return std::nullopt; // not semiregular
                    sub.push_back(next);
                    if (static_cast<int>(sub.size()) > n) return std::nullopt;
                }
            }
        if (n % static_cast<int>(sub.size()) != 0) return std::nullopt;
        return sub;
    };

    std::vector<const Perm*> chosen;
    auto search = [&](auto&& self, const std::vector<Perm>& sub) -> bool {
        if (static_cast<int>(sub.size()) == n) return true;
        VertexSet covered;
        for (const auto& h : sub) covered.add(h.apply(0));
        int p = covered.complement_within(n).first();
        for (const Perm* e : bucket[p]) {
            chosen.push_back(e);
            auto bigger = close(chosen);
            if (bigger && self(self, *bigger)) return true;
            chosen.pop_back();
        }
        return false;
    };

    std::vector<Perm> trivial{Perm::identity(n)};
    if (!search(search, trivial)) return std::nullopt;
    std::vector<Perm> result;
    for (const Perm* e : chosen) result.push_back(*e);
    return result;
}

} // namespace cis
