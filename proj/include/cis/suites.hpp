#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cis/enumerate.hpp"
#include "cis/families.hpp"
#include "cis/graph6.hpp"
#include "cis/reduction.hpp"
#include "cis/small_graphs.hpp"
#include "cis/symmetry.hpp"

namespace cis {

struct SuiteOptions {
    unsigned seed = 0;
    bool long_run = false;
    int jobs = 1;
    long clique_limit = default_enumeration_limit;
    SymmetryOptions sym{};
};

/// Outcome of one verification suite. A failing case lands in
/// `counterexamples` as (graph6, note); the list is empty exactly when
/// every case passed.
struct SuiteResult {
    std::string suite;
    long cases_run = 0;
    long cases_passed = 0;
    std::vector<std::pair<std::string, std::string>> counterexamples;
    std::vector<std::string> notes;

    bool passed() const { return cases_run == cases_passed; }

    void record(bool ok, const std::string& g6, const std::string& note) {
        ++cases_run;
        if (ok)
            ++cases_passed;
        else
            counterexamples.emplace_back(g6, note);
    }
    void record(bool ok, const Graph& g, const std::string& note) {
        record(ok, graph6_encode(g), note);
    }
};

inline std::string suite_result_to_text(const SuiteResult& r) {
    std::string out = "suite=" + r.suite + "\ncases_run=" + std::to_string(r.cases_run) +
                      "\ncases_passed=" + std::to_string(r.cases_passed) + "\n";
    for (const auto& [g6, note] : r.counterexamples)
        out += "counterexample=" + g6 + " " + note + "\n";
    for (const auto& n : r.notes) out += "note=" + n + "\n";
    out += std::string("result=") + (r.passed() ? "pass" : "fail") + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Suite corpora
// ---------------------------------------------------------------------------

/// The positive side of the valency <= 7 classification: every graph listed
/// there, with a printable name.
inline std::vector<std::pair<std::string, Graph>> valency7_list() {
    std::vector<std::pair<std::string, Graph>> out;
    for (int n = 1; n <= 8; ++n) out.emplace_back("K_" + std::to_string(n), complete_graph(n));
    for (int n = 2; n <= 7; ++n)
        out.emplace_back("K_{" + std::to_string(n) + "," + std::to_string(n) + "}",
                         complete_bipartite(n, n));
    out.emplace_back("L(K_{3,3})", rook_graph(3));
    out.emplace_back("L(K_{4,4})", rook_graph(4));
    out.emplace_back("C_4[K_2]", lexicographic_product(cycle_graph(4), complete_graph(2)));
    out.emplace_back("K_3[empty_2]", lexicographic_product(complete_graph(3), empty_graph(2)));
    out.emplace_back("K_3[empty_3]", lexicographic_product(complete_graph(3), empty_graph(3)));
    out.emplace_back("K_4[empty_2]", lexicographic_product(complete_graph(4), empty_graph(2)));
    out.emplace_back("K_{3,3}[K_2]",
                     lexicographic_product(complete_bipartite(3, 3), complete_graph(2)));
    for (int n = 4; n <= 10; ++n) out.emplace_back("Q_" + std::to_string(n), q_graph(n));
    return out;
}

inline Graph random_circulant(std::mt19937& rng, int max_order) {
    int n = 3 + static_cast<int>(rng() % (max_order - 2));
    std::vector<int> elems;
    for (int d = 1; 2 * d <= n; ++d)
        if (rng() & 1) {
            elems.push_back(d);
            elems.push_back((n - d) % n == 0 ? d : n - d);
        }
    AbelianGroup zn({n});
    return cayley_graph(zn, ConnectionSet<AbelianGroup>(zn, elems));
}

// ---------------------------------------------------------------------------
// Named suites
// ---------------------------------------------------------------------------

/// Per-family property checks: orders, valencies, alpha/omega, CIS,
/// irreducibility and vertex-transitivity of Q_n, plus Q_3 failing CIS.
inline SuiteResult suite_families(const SuiteOptions& opt = {}) {
    SuiteResult r;
    r.suite = "families";
    for (int n = 1; n <= 8; ++n) {
        Graph g = rook_graph(n);
        auto prof = profile(g);
        auto [a, w] = alpha_omega(g, opt.clique_limit);
        bool ok = g.order() == n * n && prof.is_regular && prof.valency == 2 * (n - 1) && a == n &&
                  w == n && is_cis(g, opt.clique_limit).is_cis;
        r.record(ok, g, "L(K_{n,n}) properties, n=" + std::to_string(n));
    }
    for (int n = 4; n <= 16; ++n) {
        Graph g = q_graph(n);
        auto prof = profile(g);
        auto [a, w] = alpha_omega(g, opt.clique_limit);
        bool ok = prof.is_regular && prof.valency == 7 && a == n && w == 4 && is_irreducible(g) &&
                  is_cis(g, opt.clique_limit).is_cis &&
                  transitivity(g, opt.sym).is_vertex_transitive;
        r.record(ok, g, "Q_n properties, n=" + std::to_string(n));
    }
    r.record(!is_cis(q_graph(3), opt.clique_limit).is_cis, q_graph(3), "Q_3 is not CIS");
    for (int n = 2; n <= 6; ++n) {
        Graph g = r_graph(n);
        auto prof = profile(g);
        auto [a, w] = alpha_omega(g, opt.clique_limit);
        bool ok = prof.is_regular && prof.valency == 2 * n + 3 && a == 2 * n && w == 4 &&
                  is_cis(g, opt.clique_limit).is_cis;
        r.record(ok, g, "R_n properties, n=" + std::to_string(n));
    }
    for (int n = 2; n <= 5; ++n) {
        Graph g = s_graph(n);
        auto prof = profile(g);
        bool ok = prof.is_regular && prof.valency == 3 * n + 2 && is_cis(g, opt.clique_limit).is_cis;
        r.record(ok, g, "S_n properties, n=" + std::to_string(n));
    }
    return r;
}

/// The size criterion versus the pairwise definition, over the valency-7
/// list, its complements, products of small vertex-transitive factors, and
/// seeded random circulants. Positive verdicts also re-check regularity and
/// both covering properties.
inline SuiteResult suite_vt_cis_equivalence(const SuiteOptions& opt = {}) {
    SuiteResult r;
    r.suite = "vt-cis-equivalence";
    std::vector<std::pair<std::string, Graph>> corpus = valency7_list();
    {
        auto base = valency7_list();
        for (auto& [name, g] : base) corpus.emplace_back("complement(" + name + ")", complement(g));
    }
    std::vector<std::pair<std::string, Graph>> factors{{"K_2", complete_graph(2)},
                                                       {"K_3", complete_graph(3)},
                                                       {"C_4", cycle_graph(4)},
                                                       {"C_5", cycle_graph(5)},
                                                       {"K_{3,3}", complete_bipartite(3, 3)}};
    for (const auto& [na, a] : factors)
        for (const auto& [nb, b] : factors)
            corpus.emplace_back(na + "[" + nb + "]", lexicographic_product(a, b));
    std::mt19937 rng(opt.seed);
    for (int i = 0; i < 50; ++i)
        corpus.emplace_back("circulant#" + std::to_string(i), random_circulant(rng, 24));

    for (const auto& [name, g] : corpus) {
        bool fast = vt_cis_check(g, opt.clique_limit, opt.sym).is_cis;
        bool slow = is_cis(g, opt.clique_limit).is_cis;
        r.record(fast == slow, g, "vt_cis_check vs is_cis on " + name);
        if (fast && slow) {
            bool reg = profile(g).is_regular;
            bool wc = is_well_covered(g, opt.clique_limit).verdict;
            bool cowc = is_co_well_covered(g, opt.clique_limit).verdict;
            r.record(reg && wc && cowc, g,
                     "vertex-transitive CIS graph must be regular, well-covered, co-well-covered (" +
                         name + ")");
        }
    }
    return r;
}

/// Closure laws: complement, disjoint union, lexicographic product.
inline SuiteResult suite_lex_product(const SuiteOptions& opt = {}) {
    SuiteResult r;
    r.suite = "lex-product";
    std::mt19937 rng(opt.seed);
    auto rand_graph = [&](int max_n) {
        int n = 1 + static_cast<int>(rng() % max_n);
        double p = 0.15 + 0.1 * static_cast<double>(rng() % 8);
        std::bernoulli_distribution edge(p);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (edge(rng)) edges.emplace_back(i, j);
        return Graph::from_edges(n, edges);
    };
    for (int i = 0; i < 500; ++i) {
        Graph g = rand_graph(9);
        r.record(is_cis(g, opt.clique_limit).is_cis == is_cis(complement(g), opt.clique_limit).is_cis,
                 g, "CIS(G) iff CIS(complement G)");
    }
    for (int i = 0; i < 500; ++i) {
        Graph a = rand_graph(6), b = rand_graph(6);
        bool whole = is_cis(disjoint_union(a, b), opt.clique_limit).is_cis;
        bool parts = is_cis(a, opt.clique_limit).is_cis && is_cis(b, opt.clique_limit).is_cis;
        r.record(whole == parts, disjoint_union(a, b), "CIS(G+H) iff CIS(G) and CIS(H)");
    }
    for (int i = 0; i < 500; ++i) {
        Graph a = rand_graph(5), b = rand_graph(5);
        bool whole = is_cis(lexicographic_product(a, b), opt.clique_limit).is_cis;
        bool parts = is_cis(a, opt.clique_limit).is_cis && is_cis(b, opt.clique_limit).is_cis;
        r.record(whole == parts, lexicographic_product(a, b), "CIS(A[B]) iff CIS(A) and CIS(B)");
    }
    return r;
}

/// CIS transfers to the irreducible quotient; the quotient is idempotent.
inline SuiteResult suite_quotient(const SuiteOptions& opt = {}) {
    SuiteResult r;
    r.suite = "quotient";
    std::mt19937 rng(opt.seed);
    for (int i = 0; i < 500; ++i) {
        int n = 1 + static_cast<int>(rng() % 8);
        std::bernoulli_distribution edge(0.15 + 0.1 * static_cast<double>(rng() % 8));
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (edge(rng)) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        auto q = irreducible_quotient(g);
        bool law = is_cis(g, opt.clique_limit).is_cis == is_cis(q.quotient, opt.clique_limit).is_cis;
        bool idem = irreducible_quotient(q.quotient).quotient == q.quotient;
        r.record(law && idem, g, "CIS(G) iff CIS(irreducible quotient), quotient idempotent");
    }
    return r;
}

/// Exhaustive n <= 7 scan: every irreducible CIS graph has no two maximum
/// cliques meeting in omega-1 vertices, and every CIS graph satisfies the
/// induced-P_4 midpoint condition.
inline SuiteResult suite_coollemma(const SuiteOptions& opt = {}) {
    SuiteResult r;
    r.suite = "coollemma";
    for (int n = 1; n <= 7; ++n)
        for_each_graph_class(
            n,
            [&](const Graph& g) {
                if (!is_cis(g, opt.clique_limit).is_cis) return;
                r.record(p4_property(g).holds, g, "CIS graph must satisfy the P_4 property");
                if (is_irreducible(g))
                    r.record(max_cliques_separated(g, opt.clique_limit), g,
                             "irreducible CIS graph with two max cliques sharing omega-1 vertices");
            },
            opt.jobs);
    return r;
}

/// Exhaustive scan: connected triangle-free CIS graphs are complete
/// bipartite (n <= 7, or 8 with long_run).
inline SuiteResult suite_triangle_free(const SuiteOptions& opt = {}) {
    SuiteResult r;
    r.suite = "triangle-free";
    int top = opt.long_run ? 8 : 7;
    for (int n = 1; n <= top; ++n)
        for_each_graph_class(
            n,
            [&](const Graph& g) {
                if (!is_connected(g) || !is_triangle_free(g)) return;
                if (!is_cis(g, opt.clique_limit).is_cis) return;
                r.record(is_complete_bipartite(g), g,
                         "connected triangle-free CIS graph must be complete bipartite");
            },
            opt.jobs);
    return r;
}

/// Extremal local graphs: class counts 1,1,2,1 for (5,3),(6,3),(7,3),(7,4),
/// the (6,3) class is 2K_3, exactly one (7,3) class has a universal vertex,
/// the (7,4) class has exactly one, and every local graph of Q_5 is the
/// (7,3) class without one.
inline SuiteResult suite_locals(const SuiteOptions& opt = {}) {
    SuiteResult r;
    r.suite = "locals";
    auto t2 = derive_extremal_locals(5, 3, opt.jobs);
    r.record(t2.size() == 1, t2.empty() ? "?" : graph6_encode(t2[0]),
             "(5,3) extremal count, got " + std::to_string(t2.size()));
    auto k33loc = derive_extremal_locals(6, 3, opt.jobs);
    r.record(k33loc.size() == 1, k33loc.empty() ? "?" : graph6_encode(k33loc[0]),
             "(6,3) extremal count, got " + std::to_string(k33loc.size()));
    if (k33loc.size() == 1)
        r.record(
            are_isomorphic(k33loc[0], disjoint_union(complete_graph(3), complete_graph(3)), opt.sym),
            k33loc[0], "(6,3) class must be 2K_3");
    auto t3s = derive_extremal_locals(7, 3, opt.jobs);
    r.record(t3s.size() == 2, "?", "(7,3) extremal count, got " + std::to_string(t3s.size()));
    auto u2 = derive_extremal_locals(7, 4, opt.jobs);
    r.record(u2.size() == 1, u2.empty() ? "?" : graph6_encode(u2[0]),
             "(7,4) extremal count, got " + std::to_string(u2.size()));
    if (t3s.size() == 2) {
        int with_universal = 0;
        const Graph* t3 = nullptr; // the class without a universal vertex
        for (const auto& g : t3s) {
            if (has_universal_vertex(g))
                ++with_universal;
            else
                t3 = &g;
        }
        r.record(with_universal == 1, "?", "exactly one (7,3) class has a universal vertex");
        if (t3) {
            Graph q5 = q_graph(5);
            bool all_match = true;
            for (int v = 0; v < q5.order() && all_match; ++v)
                all_match = are_isomorphic(local_graph(q5, v), *t3, opt.sym);
            r.record(all_match, q5, "every local graph of Q_5 matches the (7,3) class without a universal vertex");
        }
    }
    if (u2.size() == 1)
        r.record(universal_vertex_count(u2[0]) == 1, u2[0],
                 "the (7,4) class has a unique universal vertex");
    return r;
}

/// Exhaustive n <= 7 scan of connected irreducible well-covered CIS graphs
/// with omega <= 3: only K_1, K_2, K_3 occur. (L(K_{3,3}) is the one further
/// member of the classification and lives at n = 9, out of scan range.)
inline SuiteResult suite_omega3_small(const SuiteOptions& opt = {}) {
    SuiteResult r;
    r.suite = "omega3-small";
    r.notes.push_back("L(K_{3,3}) (order 9) is outside the n <= 7 scan range");
    for (int n = 1; n <= 7; ++n)
        for_each_graph_class(
            n,
            [&](const Graph& g) {
                if (!is_connected(g) || !is_irreducible(g)) return;
                auto cliques = maximal_cliques(g, opt.clique_limit);
                if (cliques.max_size() > 3) return;
                if (!is_well_covered(g, opt.clique_limit).verdict) return;
                if (!is_cis(g, opt.clique_limit).is_cis) return;
                bool ok = are_isomorphic(g, complete_graph(1), opt.sym) ||
                          are_isomorphic(g, complete_graph(2), opt.sym) ||
                          are_isomorphic(g, complete_graph(3), opt.sym);
                r.record(ok, g, "connected irreducible well-covered CIS with omega<=3 must be K_1/K_2/K_3");
            },
            opt.jobs);
    return r;
}

/// Every graph in the positive valency-7 classification list is connected,
/// vertex-transitive, of valency at most 7, and CIS.
inline SuiteResult suite_valency7_positive(const SuiteOptions& opt = {}) {
    SuiteResult r;
    r.suite = "valency7-positive";
    for (const auto& [name, g] : valency7_list()) {
        auto prof = profile(g);
        bool ok = prof.is_connected && prof.is_regular && prof.valency <= 7 &&
                  transitivity(g, opt.sym).is_vertex_transitive &&
                  is_cis(g, opt.clique_limit).is_cis;
        r.record(ok, g, name + " must be connected, vertex-transitive, valency <= 7, CIS");
    }
    return r;
}

/// Aut(Q_5) has no regular subgroup (so Q_5 is vertex-transitive but not
/// Cayley); the rotation subgroup of C_5 and a regular subgroup of Aut(K_4)
/// are found and re-verified. long_run extends the negative check to Q_7.
inline SuiteResult suite_q_noncayley(const SuiteOptions& opt = {}) {
    SuiteResult r;
    r.suite = "q-noncayley";
    auto verify_regular = [&](const Graph& g, const std::vector<Perm>& gens) {
        PermutationGroup sub;
        sub.degree = g.order();
        sub.generators = gens;
        for (const auto& p : gens)
            if (!is_automorphism(g, p)) return false;
        auto elems = materialize_elements(sub);
        if (elems.size() != static_cast<std::size_t>(g.order())) return false;
        VertexSet orbit0;
        for (const auto& e : elems) {
            orbit0.add(e.apply(0));
            if (e.is_identity()) continue;
            for (int v = 0; v < g.order(); ++v)
                if (e.apply(v) == v) return false; // nontrivial stabilizer
        }
        return orbit0.count() == g.order();
    };

    {
        Graph q5 = q_graph(5);
        auto grp = automorphism_group(q5, opt.sym);
        auto ord = group_order(grp);
        r.record(ord.value.has_value() && *ord.value <= 1'000'000, q5,
                 "Aut(Q_5) materializes within the cap (order " + ord.decimal + ")");
        r.record(!find_regular_subgroup(grp).has_value(), q5,
                 "Aut(Q_5) must have no regular subgroup");
    }
    {
        Graph c5 = cycle_graph(5);
        auto sub = find_regular_subgroup(automorphism_group(c5, opt.sym));
        r.record(sub.has_value() && verify_regular(c5, *sub), c5,
                 "regular subgroup of Aut(C_5) found and re-verified");
        if (sub)
            for (const auto& p : *sub) r.notes.push_back("C_5 regular subgroup gen: " + p.to_string());
    }
    {
        Graph k4 = complete_graph(4);
        auto sub = find_regular_subgroup(automorphism_group(k4, opt.sym));
        r.record(sub.has_value() && verify_regular(k4, *sub), k4,
                 "regular subgroup of Aut(K_4) found and re-verified");
        if (sub)
            for (const auto& p : *sub) r.notes.push_back("K_4 regular subgroup gen: " + p.to_string());
    }
    if (opt.long_run) {
        Graph q7 = q_graph(7);
        auto grp = automorphism_group(q7, opt.sym);
        r.record(!find_regular_subgroup(grp).has_value(), q7,
                 "Aut(Q_7) must have no regular subgroup");
    }
    return r;
}

// ---------------------------------------------------------------------------
// Open-question explorations. These report scan results; an empty finding
// list is consistency evidence, not a proof.
// ---------------------------------------------------------------------------

/// Question 1: does alpha*omega >= n hold for every CIS graph? Scans all
/// classes up to max_order.
inline SuiteResult explore_q1(int max_order = 7, const SuiteOptions& opt = {}) {
    SuiteResult r;
    r.suite = "explore-q1";
    if (max_order > small_graph_max_order)
        throw error(errc::order_too_large, "q1 scan capped at order 8");
    for (int n = 1; n <= max_order; ++n)
        for_each_graph_class(
            n,
            [&](const Graph& g) {
                if (!is_cis(g, opt.clique_limit).is_cis) return;
                auto [a, w] = alpha_omega(g, opt.clique_limit);
                r.record(static_cast<long>(a) * w >= g.order(), g,
                         "CIS graph with alpha*omega < n found");
            },
            opt.jobs);
    r.notes.push_back("absence of findings is not a proof");
    return r;
}

/// Question 2: chromatic number versus clique number over Q_qmin..Q_qmax.
inline SuiteResult explore_q2(int qmin = 4, int qmax = 8, const SuiteOptions& opt = {}) {
    SuiteResult r;
    r.suite = "explore-q2";
    for (int n = qmin; n <= qmax; ++n) {
        Graph g = q_graph(n);
        int chi = chromatic_number(g);
        auto [a, w] = alpha_omega(g, opt.clique_limit);
        r.record(chi == w && w == 4, g,
                 "Q_" + std::to_string(n) + ": chi=" + std::to_string(chi) +
                     " omega=" + std::to_string(w));
    }
    r.notes.push_back("chi computed exactly; equality with omega is the expected pattern");
    return r;
}

/// Question 3: scan for a regular CIS graph, connected and co-connected,
/// well-covered and co-well-covered, irreducible and co-irreducible, that
/// is not vertex-transitive.
inline SuiteResult explore_q3(int max_order = 7, const SuiteOptions& opt = {}) {
    SuiteResult r;
    r.suite = "explore-q3";
    if (max_order > small_graph_max_order)
        throw error(errc::order_too_large, "q3 scan capped at order 8");
    for (int n = 1; n <= max_order; ++n)
        for_each_graph_class(
            n,
            [&](const Graph& g) {
                if (!profile(g).is_regular) return;
                if (!is_connected(g) || !is_connected(complement(g))) return;
                if (!is_irreducible(g) || !is_co_irreducible(g)) return;
                if (!is_well_covered(g, opt.clique_limit).verdict) return;
                if (!is_co_well_covered(g, opt.clique_limit).verdict) return;
                if (!is_cis(g, opt.clique_limit).is_cis) return;
                r.record(transitivity(g, opt.sym).is_vertex_transitive, g,
                         "non-vertex-transitive candidate found");
            },
            opt.jobs);
    r.notes.push_back("absence of findings is not a proof");
    return r;
}

inline SuiteResult suite_open_questions(const SuiteOptions& opt = {}) {
    SuiteResult r;
    r.suite = "open-questions";
    for (const auto& part : {explore_q1(7, opt), explore_q2(4, 8, opt), explore_q3(7, opt)}) {
        r.cases_run += part.cases_run;
        r.cases_passed += part.cases_passed;
        for (const auto& c : part.counterexamples) r.counterexamples.push_back(c);
        for (const auto& n : part.notes) r.notes.push_back(part.suite + ": " + n);
    }
    return r;
}

// ---------------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "families",   "vt-cis-equivalence", "lex-product",       "quotient",
        "coollemma",  "triangle-free",      "locals",            "omega3-small",
        "valency7-positive", "q-noncayley",        "open-questions"};
    return names;
}

inline SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {}) {
    if (name == "families") return suite_families(opt);
    if (name == "vt-cis-equivalence") return suite_vt_cis_equivalence(opt);
    if (name == "lex-product") return suite_lex_product(opt);
    if (name == "quotient") return suite_quotient(opt);
    if (name == "coollemma") return suite_coollemma(opt);
    if (name == "triangle-free") return suite_triangle_free(opt);
    if (name == "locals") return suite_locals(opt);
    if (name == "omega3-small") return suite_omega3_small(opt);
    if (name == "valency7-positive") return suite_valency7_positive(opt);
    if (name == "q-noncayley") return suite_q_noncayley(opt);
    if (name == "open-questions") return suite_open_questions(opt);
    throw error(errc::bad_input, "unknown suite '" + name + "'");
}

} // namespace cis
