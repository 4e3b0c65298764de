#include <catch2/catch.hpp>

#include "cis/families.hpp"
#include "cis/symmetry.hpp"
#include "test_helpers.hpp"

using namespace cis;

TEST_CASE("permutation algebra") {
    Perm id = Perm::identity(4);
    REQUIRE(id.is_identity());
    Perm p;
    p.img = {1, 2, 0, 3};
    REQUIRE(p.then(p.inverse()) == id);
    REQUIRE(p.inverse().then(p) == id);
    REQUIRE(p.to_string() == "1 2 0 3");
}

TEST_CASE("automorphism group orders of named graphs") {
    auto order_of = [](const Graph& g) {
        auto grp = automorphism_group(g);
        for (const auto& gen : grp.generators) REQUIRE(is_automorphism(g, gen));
        return group_order(grp);
    };
    REQUIRE(order_of(complete_graph(6)).value == 720ULL);
    REQUIRE(order_of(Graph::from_edges(3, {{0, 1}, {1, 2}})).value == 2ULL); // P_3
    REQUIRE(order_of(cycle_graph(5)).value == 10ULL);
    REQUIRE(order_of(cycle_graph(8)).value == 16ULL);
    REQUIRE(order_of(complete_bipartite(3, 3)).value == 72ULL); // 3!*3!*2
    REQUIRE(order_of(complete_bipartite(2, 3)).value == 12ULL);
    REQUIRE(order_of(q_graph(5)).value == 320ULL); // 2^5 * 10
}

TEST_CASE("exact decimal order for a large group") {
    auto ord = group_order(automorphism_group(complete_graph(24)));
    REQUIRE_FALSE(ord.value.has_value()); // 24! overflows 64 bits
    REQUIRE(ord.decimal == "620448401733239439360000");
}

TEST_CASE("orbit partition") {
    auto p3 = automorphism_group(Graph::from_edges(3, {{0, 1}, {1, 2}}));
    REQUIRE(p3.orbits.size() == 2);
    VertexSet ends, mid;
    ends.add(0);
    ends.add(2);
    mid.add(1);
    REQUIRE(p3.orbits[0] == ends);
    REQUIRE(p3.orbits[1] == mid);
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(2024);
    std::vector<Graph> corpus{cycle_graph(7), q_graph(5), complete_bipartite(3, 4),
                              testing::random_graph(rng, 12), testing::random_graph(rng, 9, 0.3)};
    for (const auto& g : corpus) {
        std::string canon = canonical_form(g);
        std::vector<int> relab(g.order());
        for (int i = 0; i < g.order(); ++i) relab[i] = i;
        for (int trial = 0; trial < 100; ++trial) {
            std::shuffle(relab.begin(), relab.end(), rng);
            Perm p;
            p.img.assign(relab.begin(), relab.end());
            REQUIRE(canonical_form(apply_permutation(g, p)) == canon);
        }
    }
}

TEST_CASE("canonical forms separate non-isomorphic graphs") {
    REQUIRE(canonical_form(cycle_graph(4)) != canonical_form(complete_bipartite(1, 3)));
    REQUIRE_FALSE(are_isomorphic(disjoint_union(complete_graph(3), complete_graph(3)),
                                 complete_bipartite(3, 3)));
    REQUIRE(are_isomorphic(cycle_graph(5), complement(cycle_graph(5))));
}

TEST_CASE("transitivity") {
    for (int n : {3, 4, 7}) REQUIRE(transitivity(cycle_graph(n)).is_vertex_transitive);
    auto p3 = transitivity(Graph::from_edges(3, {{0, 1}, {1, 2}}));
    REQUIRE_FALSE(p3.is_vertex_transitive);
    REQUIRE(p3.orbits.size() == 2);
    REQUIRE(transitivity(q_graph(7)).is_vertex_transitive);
    REQUIRE_FALSE(transitivity(complete_bipartite(2, 3)).is_vertex_transitive);
}

TEST_CASE("vt_cis_check agrees with the certificate on the fast path") {
    REQUIRE(vt_cis_check(line_graph(complete_bipartite(5, 5))).is_cis);
    auto c5 = vt_cis_check(cycle_graph(5));
    REQUIRE_FALSE(c5.is_cis);
    REQUIRE(c5.witness.has_value());
    REQUIRE(verify_cis_witness(cycle_graph(5), c5.witness->first, c5.witness->second));
    REQUIRE(vt_cis_check(lexicographic_product(cycle_graph(4), complete_graph(2))).is_cis);
    REQUIRE_THROWS_MATCHES(vt_cis_check(complete_bipartite(2, 3)), error,
                           Catch::Matchers::Predicate<error>([](const error& e) {
                               return e.code() == errc::not_vertex_transitive;
                           }));
}

TEST_CASE("search budget is enforced") {
    SymmetryOptions opt;
    opt.node_budget = 2;
    REQUIRE_THROWS_MATCHES(automorphism_group(complete_graph(12), opt), error,
                           Catch::Matchers::Predicate<error>([](const error& e) {
                               return e.code() == errc::search_budget_exceeded;
                           }));
}

TEST_CASE("materialization respects the cap") {
    auto big = automorphism_group(complete_graph(12));
    REQUIRE_THROWS_MATCHES(materialize_elements(big, 1000), error,
                           Catch::Matchers::Predicate<error>(
                               [](const error& e) { return e.code() == errc::group_too_large; }));
    auto small = automorphism_group(cycle_graph(6));
    REQUIRE(materialize_elements(small).size() == 12);
}

TEST_CASE("regular subgroups witness Cayley graphs") {
    auto check_regular = [](const Graph& g, const std::vector<Perm>& gens) {
        PermutationGroup sub;
        sub.degree = g.order();
        sub.generators = gens;
        for (const auto& p : gens) REQUIRE(is_automorphism(g, p));
        auto elems = materialize_elements(sub);
        REQUIRE(elems.size() == static_cast<std::size_t>(g.order()));
        for (const auto& e : elems) {
            if (e.is_identity()) continue;
            for (int v = 0; v < g.order(); ++v) REQUIRE(e.apply(v) != v);
        }
        VertexSet orb;
        for (const auto& e : elems) orb.add(e.apply(0));
        REQUIRE(orb.count() == g.order()); // transitive
    };

    auto c5 = find_regular_subgroup(automorphism_group(cycle_graph(5)));
    REQUIRE(c5.has_value());
    check_regular(cycle_graph(5), *c5);

    auto k4 = find_regular_subgroup(automorphism_group(complete_graph(4)));
    REQUIRE(k4.has_value());
    check_regular(complete_graph(4), *k4);

    // R_3 is a Cayley graph by construction
    auto r3 = find_regular_subgroup(automorphism_group(r_graph(3)));
    REQUIRE(r3.has_value());
    check_regular(r_graph(3), *r3);
}

TEST_CASE("Q_5 has no regular subgroup") {
    auto grp = automorphism_group(q_graph(5));
    auto ord = group_order(grp);
    REQUIRE(ord.value.has_value());
    REQUIRE(*ord.value <= 1'000'000);
    REQUIRE_FALSE(find_regular_subgroup(grp).has_value());
}
