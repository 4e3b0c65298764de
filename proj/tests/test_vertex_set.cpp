#include <catch2/catch.hpp>

#include "cis/vertex_set.hpp"

using cis::VertexSet;

TEST_CASE("membership and counting") {
    VertexSet s;
    REQUIRE(s.empty());
    s.add(0);
    s.add(63);
    s.add(64);
    s.add(127);
    REQUIRE(s.count() == 4);
    REQUIRE(s.contains(63));
    REQUIRE(s.contains(64));
    REQUIRE_FALSE(s.contains(62));
    s.remove(63);
    REQUIRE_FALSE(s.contains(63));
    REQUIRE(s.count() == 3);
}

TEST_CASE("iteration crosses the word boundary") {
    VertexSet s;
    s.add(5);
    s.add(63);
    s.add(64);
    s.add(100);
    REQUIRE(s.first() == 5);
    REQUIRE(s.next(5) == 63);
    REQUIRE(s.next(63) == 64);
    REQUIRE(s.next(64) == 100);
    REQUIRE(s.next(100) == -1);
    REQUIRE(s.members() == std::vector<int>{5, 63, 64, 100});
}

TEST_CASE("set algebra is exact") {
    VertexSet a, b;
    for (int v : {0, 2, 4, 70}) a.add(v);
    for (int v : {2, 3, 70}) b.add(v);
    REQUIRE((a & b).members() == std::vector<int>{2, 70});
    REQUIRE((a | b).members() == std::vector<int>{0, 2, 3, 4, 70});
    REQUIRE((a - b).members() == std::vector<int>{0, 4});
    REQUIRE(a.intersects(b));
    REQUIRE((a - a).empty());
}

TEST_CASE("complement stays within the order") {
    VertexSet a;
    a.add(1);
    a.add(3);
    auto c = a.complement_within(5);
    REQUIRE(c.members() == std::vector<int>{0, 2, 4});
    REQUIRE(c.complement_within(5) == a);
    // no bits at or beyond position 5
    REQUIRE(VertexSet::full(5).count() == 5);
    REQUIRE(VertexSet::full(128).count() == 128);
}

TEST_CASE("bit-pattern ordering") {
    VertexSet a = VertexSet::single(0); // value 1
    VertexSet b = VertexSet::single(1); // value 2
    VertexSet ab = a | b;               // value 3
    REQUIRE(a < b);
    REQUIRE(b < ab);
    VertexSet hi = VertexSet::single(127);
    REQUIRE(ab < hi);
}
