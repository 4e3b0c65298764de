#include <catch2/catch.hpp>

#include "cis/predicate_expr.hpp"
#include "cis/report.hpp"
#include "cis/small_graphs.hpp"
#include "cis/suites.hpp"

using namespace cis;

TEST_CASE("predicate expressions") {
    auto pred = PredicateExpr::parse("connected&omega<=2&cis");
    REQUIRE(pred.eval(complete_bipartite(2, 3)));
    REQUIRE_FALSE(pred.eval(cycle_graph(5)));          // C_5 is not CIS
    REQUIRE_FALSE(pred.eval(complete_graph(3)));       // omega = 3
    REQUIRE(PredicateExpr::parse("!connected").eval(empty_graph(2)));
    REQUIRE(PredicateExpr::parse("true").eval(empty_graph(1)));
    REQUIRE(PredicateExpr::parse("valency=2").eval(cycle_graph(6)));
    REQUIRE(PredicateExpr::parse("alpha>=3").eval(cycle_graph(6)));
    REQUIRE(PredicateExpr::parse("max-clique-separated").eval(complete_graph(4)));
    REQUIRE_FALSE(PredicateExpr::parse("max-clique-separated")
                      .eval(Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}})));
    REQUIRE_THROWS_AS(PredicateExpr::parse("bogus"), error);
    REQUIRE_THROWS_AS(PredicateExpr::parse("omega=x"), error);
    REQUIRE_THROWS_AS(PredicateExpr::parse(""), error);
}

TEST_CASE("graph reports are deterministic and witnesses re-verify") {
    ReportOptions opt;
    opt.with_vt = true;
    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    auto rep1 = analyze_graph(p4, "p4", opt);
    auto rep2 = analyze_graph(p4, "p4", opt);
    REQUIRE(report_to_text(rep1, p4) == report_to_text(rep2, p4));
    REQUIRE(rep1.cis.has_value());
    REQUIRE_FALSE(*rep1.cis);
    REQUIRE(rep1.cis_witness.has_value());
    std::string text = report_to_text(rep1, p4);
    REQUIRE(text.find("cis=false") != std::string::npos);
    REQUIRE(text.find("cis_witness_clique=1,2") != std::string::npos);
    REQUIRE(text.find("cis_witness_stable=0,3") != std::string::npos);
    REQUIRE(text.find("vertex_transitive=false") != std::string::npos);

    auto repq = analyze_graph(q_graph(5), "Q:5", opt);
    std::string tq = report_to_text(repq, q_graph(5));
    REQUIRE(tq.find("alpha=5") != std::string::npos);
    REQUIRE(tq.find("omega=4") != std::string::npos);
    REQUIRE(tq.find("cis=true") != std::string::npos);
    REQUIRE(tq.find("vertex_transitive=true") != std::string::npos);
    REQUIRE(tq.find("irreducible=true") != std::string::npos);
}

TEST_CASE("enumeration limit surfaces per field in reports") {
    ReportOptions opt;
    opt.clique_limit = 2;
    auto rep = analyze_graph(cycle_graph(6), "C:6", opt);
    REQUIRE(rep.enumeration_error.has_value());
    REQUIRE_FALSE(rep.alpha.has_value());
    std::string text = report_to_text(rep, cycle_graph(6));
    REQUIRE(text.find("error=EnumerationLimitExceeded") != std::string::npos);
}

TEST_CASE("closure-law suites pass with seed 0") {
    SuiteOptions opt;
    auto lex = suite_lex_product(opt);
    REQUIRE(lex.passed());
    REQUIRE(lex.cases_run == 1500);
    auto quo = suite_quotient(opt);
    REQUIRE(quo.passed());
    REQUIRE(quo.cases_run == 500);
}

TEST_CASE("triangle-free classification suite") {
    auto res = suite_triangle_free();
    REQUIRE(res.passed());
    REQUIRE(res.cases_run > 0);
}

TEST_CASE("omega<=3 classification suite") {
    auto res = suite_omega3_small();
    REQUIRE(res.passed());
}

TEST_CASE("coollemma suite") {
    auto res = suite_coollemma();
    REQUIRE(res.passed());
}

TEST_CASE("connected irreducible CIS graphs with omega 2 are K_2") {
    // scan n <= 7
    for (int n = 1; n <= 7; ++n)
        for_each_graph_class(n, [&](const Graph& g) {
            if (!is_connected(g) || !is_irreducible(g)) return;
            if (maximal_cliques(g).max_size() != 2) return;
            if (!is_cis(g).is_cis) return;
            REQUIRE(g == complete_graph(2));
        });
}

TEST_CASE("stable-set replacement property over well-covered graphs") {
    // For well-covered G without isolated vertices, swapping the
    // rho-attaining neighborhood out of a maximal stable set moves exactly
    // rho vertices, and the fresh ones dominate S cap N(v).
    for (int n = 2; n <= 7; ++n)
        for_each_graph_class(n, [&](const Graph& g) {
            for (int v = 0; v < g.order(); ++v)
                if (g.neighbors(v).empty()) return;
            auto stables = maximal_stable_sets(g);
            bool wc = true;
            for (const auto& s : stables.members)
                if (s.count() != stables.members[0].count()) wc = false;
            if (!wc) return;
            int rho_g = g.order() + 1;
            for (const auto& s : stables.members)
                for (int v = 0; v < g.order(); ++v)
                    if (!s.contains(v)) rho_g = std::min(rho_g, (s & g.neighbors(v)).count());
            for (const auto& s : stables.members)
                for (int v = 0; v < g.order(); ++v) {
                    if (s.contains(v) || (s & g.neighbors(v)).count() != rho_g) continue;
                    VertexSet x = s - g.neighbors(v);
                    x.add(v);
                    for (const auto& s2 : stables.members) {
                        if (!x.is_subset_of(s2)) continue;
                        VertexSet w = (s2 - s);
                        w.remove(v);
                        REQUIRE((s2 - s).count() == rho_g);
                        REQUIRE(w.count() == rho_g - 1);
                        REQUIRE_FALSE(w.intersects(g.closed_neighborhood(v)));
                        VertexSet hit = s & g.neighbors(v);
                        for (int y = w.first(); y >= 0; y = w.next(y))
                            REQUIRE(hit.is_subset_of(g.neighbors(y)));
                    }
                }
        });
}

TEST_CASE("regular well-covered co-well-covered graphs obey the clique bound") {
    // connected k-regular well-covered co-well-covered and not complete
    // implies 3*omega <= 2(k+1)
    for (int n = 2; n <= 7; ++n)
        for_each_graph_class(n, [&](const Graph& g) {
            auto prof = profile(g);
            if (!prof.is_connected || !prof.is_regular) return;
            if (g == complete_graph(g.order())) return;
            auto cliques = maximal_cliques(g);
            if (cliques.min_size() != cliques.max_size()) return;
            auto stables = maximal_stable_sets(g);
            if (stables.min_size() != stables.max_size()) return;
            REQUIRE(3 * cliques.max_size() <= 2 * (prof.valency + 1));
        });
}

TEST_CASE("connected CIS graphs with twin-clique local graphs are rook graphs") {
    auto local_is_two_cliques = [](const Graph& g) {
        for (int v = 0; v < g.order(); ++v) {
            if (g.neighbors(v).empty()) return g.order() == 1;
            Graph loc = local_graph(g, v);
            auto comps = connected_components(loc);
            if (comps.size() != 2) return false;
            for (const auto& c : comps)
                if (!is_clique(loc, c)) return false;
        }
        return true;
    };
    for (int n = 1; n <= 7; ++n)
        for_each_graph_class(n, [&](const Graph& g) {
            if (!is_connected(g) || !is_cis(g).is_cis) return;
            if (!local_is_two_cliques(g)) return;
            bool is_rook = false;
            for (int k = 1; k * k <= g.order(); ++k)
                if (k * k == g.order() && are_isomorphic(g, rook_graph(k))) is_rook = true;
            REQUIRE(is_rook);
        });
}

TEST_CASE("valency7 list and q-noncayley suites") {
    REQUIRE(suite_valency7_positive().passed());
    REQUIRE(suite_q_noncayley().passed());
}

TEST_CASE("suite dispatch") {
    REQUIRE(run_suite("quotient").passed());
    REQUIRE_THROWS_AS(run_suite("nope"), error);
    REQUIRE(suite_names().size() == 11);
}
