#include <catch2/catch.hpp>

#include "cis/enumerate.hpp"
#include "cis/families.hpp"
#include "test_helpers.hpp"

using namespace cis;

namespace {

// Independent oracle: test all 2^n subsets against the definitions,
// using only the adjacency predicate.
std::vector<VertexSet> oracle_maximal_cliques(const Graph& g) {
    int n = g.order();
    std::vector<VertexSet> out;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) s.add(v);
        bool clique = true;
        auto m = s.members();
        for (std::size_t i = 0; i < m.size() && clique; ++i)
            for (std::size_t j = i + 1; j < m.size() && clique; ++j)
                if (!g.adjacent(m[i], m[j])) clique = false;
        if (!clique) continue;
        bool maximal = true;
        for (int w = 0; w < n && maximal; ++w) {
            if (s.contains(w)) continue;
            bool extends = true;
            for (int u : m)
                if (!g.adjacent(u, w)) {
                    extends = false;
                    break;
                }
            if (extends) maximal = false;
        }
        if (maximal) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("maximal cliques of small named graphs") {
    auto fam = maximal_cliques(cycle_graph(5));
    REQUIRE(fam.members.size() == 5);
    for (const auto& c : fam.members) REQUIRE(c.count() == 2);
    REQUIRE_FALSE(fam.truncated);

    auto k4 = maximal_cliques(complete_graph(4));
    REQUIRE(k4.members.size() == 1);
    REQUIRE(k4.members[0] == VertexSet::full(4));

    auto q4 = maximal_cliques(q_graph(4));
    for (const auto& c : q4.members) REQUIRE(c.count() == 4);
}

TEST_CASE("maximal stable sets of small named graphs") {
    auto kn = maximal_stable_sets(complete_graph(6));
    REQUIRE(kn.members.size() == 6);
    for (const auto& s : kn.members) REQUIRE(s.count() == 1);

    auto q5 = maximal_stable_sets(q_graph(5));
    for (const auto& s : q5.members) REQUIRE(s.count() == 5);

    auto k23 = maximal_stable_sets(complete_bipartite(2, 3));
    REQUIRE(k23.members.size() == 2);
    VertexSet a, b;
    a.add(0);
    a.add(1);
    for (int v : {2, 3, 4}) b.add(v);
    REQUIRE(k23.members[0] == a);
    REQUIRE(k23.members[1] == b);
}

TEST_CASE("pivoted enumeration agrees with the subset oracle") {
    std::mt19937 rng(42);
    for (int n = 1; n <= 10; ++n)
        for (int trial = 0; trial < 12; ++trial) {
            Graph g = testing::random_graph(rng, n, 0.3 + 0.05 * trial);
            auto fast = maximal_cliques(g);
            REQUIRE_FALSE(fast.truncated);
            REQUIRE(fast.members == oracle_maximal_cliques(g));
        }
}

TEST_CASE("stable sets are cliques of the complement, member for member") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = testing::random_graph(rng, 2 + static_cast<int>(rng() % 10));
        REQUIRE(maximal_stable_sets(g).members == maximal_cliques(complement(g)).members);
    }
}

TEST_CASE("enumeration limit surfaces as truncation") {
    auto fam = maximal_cliques(cycle_graph(5), 3);
    REQUIRE(fam.truncated);
    REQUIRE(fam.members.size() == 3);
    REQUIRE_THROWS_MATCHES(alpha_omega(cycle_graph(5), 3), error,
                           Catch::Matchers::Predicate<error>(
                               [](const error& e) { return e.code() == errc::enumeration_limit; }));
}

TEST_CASE("alpha and omega") {
    auto [a1, w1] = alpha_omega(line_graph(complete_bipartite(4, 4)));
    REQUIRE(a1 == 4);
    REQUIRE(w1 == 4);
    auto [a2, w2] = alpha_omega(r_graph(3));
    REQUIRE(a2 == 6);
    REQUIRE(w2 == 4);
    auto [a3, w3] = alpha_omega(cycle_graph(5));
    REQUIRE(a3 == 2);
    REQUIRE(w3 == 2);
}

TEST_CASE("well-covered verdicts and witnesses") {
    REQUIRE(is_well_covered(cycle_graph(7)).verdict);
    for (const auto& s : maximal_stable_sets(cycle_graph(7)).members) REQUIRE(s.count() == 3);

    auto c6 = is_well_covered(cycle_graph(6));
    REQUIRE_FALSE(c6.verdict);
    REQUIRE(c6.witness.has_value());
    VertexSet w1, w2;
    w1.add(0);
    w1.add(3);
    for (int v : {0, 2, 4}) w2.add(v);
    REQUIRE(c6.witness->first == w1);
    REQUIRE(c6.witness->second == w2);

    auto k23 = is_well_covered(complete_bipartite(2, 3));
    REQUIRE_FALSE(k23.verdict);
    REQUIRE(k23.witness->first.count() == 2);
    REQUIRE(k23.witness->second.count() == 3);

    REQUIRE(is_co_well_covered(q_graph(4)).verdict);
    REQUIRE(is_co_well_covered(complete_graph(5)).verdict);
}

TEST_CASE("CIS certificates") {
    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    auto cert = is_cis(p4);
    REQUIRE_FALSE(cert.is_cis);
    REQUIRE(cert.witness.has_value());
    VertexSet mid, ends;
    mid.add(1);
    mid.add(2);
    ends.add(0);
    ends.add(3);
    REQUIRE(cert.witness->first == mid);
    REQUIRE(cert.witness->second == ends);
    REQUIRE(verify_cis_witness(p4, cert.witness->first, cert.witness->second));

    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) REQUIRE(is_cis(complete_bipartite(m, n)).is_cis);

    REQUIRE(is_cis(s_graph(4)).is_cis);
    REQUIRE_FALSE(is_cis(q_graph(3)).is_cis);
}

TEST_CASE("CIS is preserved by complement and components") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = testing::random_graph(rng, 2 + static_cast<int>(rng() % 7));
        REQUIRE(is_cis(g).is_cis == is_cis(complement(g)).is_cis);
    }
    for (int trial = 0; trial < 30; ++trial) {
        Graph a = testing::random_graph(rng, 1 + static_cast<int>(rng() % 5));
        Graph b = testing::random_graph(rng, 1 + static_cast<int>(rng() % 5));
        REQUIRE(is_cis(disjoint_union(a, b)).is_cis == (is_cis(a).is_cis && is_cis(b).is_cis));
    }
}

TEST_CASE("rho") {
    for (int n : {2, 4, 7}) REQUIRE(rho(complete_graph(n), 0) == 1);
    REQUIRE(rho(cycle_graph(5), 0) == 1);
    for (int n : {2, 3, 4}) REQUIRE(rho(complete_bipartite(n, n)) == n);
    REQUIRE_THROWS_MATCHES(rho(empty_graph(3), 1), error,
                           Catch::Matchers::Predicate<error>(
                               [](const error& e) { return e.code() == errc::isolated_vertex; }));
    REQUIRE_THROWS_MATCHES(rho(empty_graph(3)), error,
                           Catch::Matchers::Predicate<error>([](const error& e) {
                               return e.code() == errc::all_vertices_isolated;
                           }));
}

TEST_CASE("chromatic number") {
    REQUIRE(chromatic_number(complete_graph(5)) == 5);
    REQUIRE(chromatic_number(cycle_graph(5)) == 3);
    REQUIRE(chromatic_number(cycle_graph(6)) == 2);
    REQUIRE(chromatic_number(line_graph(complete_bipartite(3, 3))) == 3);
    REQUIRE(chromatic_number(empty_graph(4)) == 1);
    REQUIRE_THROWS_MATCHES(chromatic_number(complete_bipartite(40, 40)), error,
                           Catch::Matchers::Predicate<error>([](const error& e) {
                               return e.code() == errc::order_too_large_for_coloring;
                           }));
}

TEST_CASE("P_4 property") {
    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    auto v = p4_property(p4);
    REQUIRE_FALSE(v.holds);
    REQUIRE(v.failing_path.has_value());
    auto [a, b, c, d] = *v.failing_path;
    REQUIRE(p4.adjacent(a, b));
    REQUIRE(p4.adjacent(b, c));
    REQUIRE(p4.adjacent(c, d));
    REQUIRE_FALSE(p4.adjacent(a, c));
    REQUIRE_FALSE(p4.adjacent(a, d));
    REQUIRE_FALSE(p4.adjacent(b, d));

    REQUIRE(p4_property(cycle_graph(4)).holds);
    REQUIRE_FALSE(p4_property(cycle_graph(6)).holds);
}

TEST_CASE("CIS implies the P_4 property") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 80; ++trial) {
        Graph g = testing::random_graph(rng, 2 + static_cast<int>(rng() % 7));
        if (is_cis(g).is_cis) REQUIRE(p4_property(g).holds);
    }
}

TEST_CASE("red edges") {
    REQUIRE(red_edges(complete_graph(4)).empty());

    Graph octa = lexicographic_product(complete_graph(3), empty_graph(2));
    REQUIRE(red_edges(octa).size() == 12);

    Graph q5 = q_graph(5);
    auto red = red_edges(q5);
    std::vector<int> incident(q5.order(), 0);
    for (auto [u, v] : red) {
        ++incident[u];
        ++incident[v];
    }
    for (int v = 0; v < q5.order(); ++v) REQUIRE(incident[v] == 2);
}
