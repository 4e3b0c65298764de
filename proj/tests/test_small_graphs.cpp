#include <catch2/catch.hpp>

#include "cis/small_graphs.hpp"
#include "cis/symmetry.hpp"

using namespace cis;

TEST_CASE("isomorphism class counts match the known sequence") {
    // 1, 2, 4, 11, 34, 156, 1044 graphs on 1..7 vertices
    const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n) REQUIRE(minimal_codes(n).size() == expected[n - 1]);
}

TEST_CASE("sharded scan is deterministic") {
    REQUIRE(minimal_codes(6, 4) == minimal_codes(6, 1));
}

TEST_CASE("code round trip") {
    for (std::uint32_t code : minimal_codes(5)) REQUIRE(code_of_graph(graph_from_code(5, code)) == code);
}

TEST_CASE("representatives are pairwise non-isomorphic at n=5") {
    auto codes = minimal_codes(5);
    std::vector<std::string> canon;
    for (auto c : codes) canon.push_back(canonical_form(graph_from_code(5, c)));
    std::sort(canon.begin(), canon.end());
    REQUIRE(std::adjacent_find(canon.begin(), canon.end()) == canon.end());
}

TEST_CASE("order cap") {
    REQUIRE_THROWS_MATCHES(minimal_codes(9), error,
                           Catch::Matchers::Predicate<error>(
                               [](const error& e) { return e.code() == errc::order_too_large; }));
}
