// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "regraph/graph.hpp"
#include "regraph/graph_io.hpp"
#include "regraph/rng.hpp"
#include "regraph/generate.hpp"
#include "testutil.hpp"

using namespace regraph;

TEST_CASE("graph construction enforces invariants") {
    Graph g(3, {{0, 1}, {1, 2}});
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));  // symmetry
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_FALSE(g.has_edge(1, 1));

    CHECK_THROWS_AS(Graph(3, {{0, 0}}), ContractViolation);          // self-loop
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), ContractViolation);  // duplicate
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), ContractViolation);          // out of range
}

TEST_CASE("edge list is sorted and symmetric after construction") {
    Graph g(4, {{2, 3}, {0, 1}, {1, 3}});
    auto edges = g.edges();
    REQUIRE(edges.size() == 3);
    CHECK(edges == std::vector<Edge>{{0, 1}, {1, 3}, {2, 3}});
    for (const auto& [i, j] : edges) {
        CHECK(g.has_edge(i, j));
        CHECK(g.has_edge(j, i));
    }
}

TEST_CASE("node permutation validates bijections") {
    CHECK_THROWS_AS(NodePermutation({0, 0, 1}), ContractViolation);
    CHECK_THROWS_AS(NodePermutation({0, 2}), ContractViolation);
    NodePermutation p({2, 0, 1});
    CHECK(p(0) == 2);
    CHECK(p.inverse()(2) == 0);
}

TEST_CASE("apply_permutation: identity on a triangle") {
    Graph tri = testutil::complete_graph(3);
    CHECK(apply_permutation(tri, NodePermutation::identity(3)) == tri);
}

TEST_CASE("apply_permutation: reversing a path keeps the edge set") {
    Graph path = testutil::path_graph(3);
    Graph mapped = apply_permutation(path, NodePermutation({2, 1, 0}));
    CHECK(mapped == path);
}

TEST_CASE("apply_permutation: rotating a 4-cycle keeps the edge set") {
    Graph c4 = testutil::cycle_graph(4);
    Graph rotated = apply_permutation(c4, NodePermutation({1, 2, 3, 0}));
    CHECK(rotated.edges() == c4.edges());  // brute-force edge-set comparison
}

TEST_CASE("apply_permutation rejects length mismatch") {
    Graph tri = testutil::complete_graph(3);
    CHECK_THROWS_AS(apply_permutation(tri, NodePermutation::identity(4)), ContractViolation);
}

TEST_CASE("apply_permutation preserves edge count and degree multiset") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_gnp(9, 0.4, rng);
        NodePermutation p = random_permutation(9, rng);
        Graph h = apply_permutation(g, p);
        CHECK(h.edge_count() == g.edge_count());
        CHECK(h.degree_sequence_sorted() == g.degree_sequence_sorted());
    }
}

TEST_CASE("padding adds isolated nodes only on request") {
    Graph path = testutil::path_graph(3);
    Graph padded = path.padded(5);
    CHECK(padded.node_count() == 5);
    CHECK(padded.edge_count() == path.edge_count());
    CHECK(padded.degree(4) == 0);
    CHECK_THROWS_AS(path.padded(2), ContractViolation);
}

TEST_CASE("edge list round trip through a stream") {
    std::istringstream in("3\n0 1\n1 2\n");
    Graph g = read_graph_stream(in);
    CHECK(g == testutil::path_graph(3));

    std::ostringstream out;
    write_graph_stream(g, out);
    CHECK(out.str() == "3\n0 1\n1 2\n");
}

TEST_CASE("parse errors carry line numbers") {
    auto expect_error_at = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            read_graph_stream(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_error_at("2\n0 0\n", 2);        // self-loop
    expect_error_at("3\n0 1\n0 1\n", 3);   // duplicate edge
    expect_error_at("2\n0 5\n", 2);        // out of range
    expect_error_at("2\n1 0\n", 2);        // not i < j
    expect_error_at("2\nx y\n", 2);        // malformed
    expect_error_at("2\n0\n", 2);          // missing endpoint
    expect_error_at("", 0);                // empty file
}

TEST_CASE("blank lines are tolerated") {
    std::istringstream in("3\n\n0 1\n\n1 2\n");
    CHECK(read_graph_stream(in) == testutil::path_graph(3));
}

TEST_CASE("write then read a random 3-regular graph") {
    Graph g = random_regular(10, 3, 99);
    std::string path = "test_graph_roundtrip.edges";
    write_graph(g, path);
    Graph back = read_graph(path);
    CHECK(back == g);
    std::remove(path.c_str());
}
