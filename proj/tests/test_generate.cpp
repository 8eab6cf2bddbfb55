// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include "regraph/generate.hpp"
#include "testutil.hpp"

using namespace regraph;

TEST_CASE("random_regular rejects infeasible parameters") {
    CHECK_THROWS_AS(random_regular(5, 3, 1), ContractViolation);  // n*r odd
    CHECK_THROWS_AS(random_regular(4, 4, 1), ContractViolation);  // r >= n
    CHECK_THROWS_AS(random_regular(4, 1, 1), ContractViolation);  // r < 2
}

TEST_CASE("n=4 r=3 forces the complete graph") {
    Graph g = random_regular(4, 3, 123);
    CHECK(g == testutil::complete_graph(4));
}

TEST_CASE("every node has degree exactly r") {
    for (auto [n, r] : {std::pair{6, 3}, {20, 3}, {15, 4}, {12, 5}}) {
        Graph g = random_regular(n, r, 1000 + static_cast<std::uint64_t>(n * r));
        for (int v = 0; v < n; ++v) CHECK(g.degree(v) == r);
        CHECK(g.edge_count() == static_cast<long long>(n) * r / 2);
    }
}

TEST_CASE("generation is deterministic for a fixed seed") {
    Graph a = random_regular(30, 3, 777);
    Graph b = random_regular(30, 3, 777);
    CHECK(a == b);
    Graph c = random_regular(30, 3, 778);
    CHECK_FALSE(a == c);  // overwhelmingly likely for distinct seeds
}

TEST_CASE("random permutations are deterministic and valid") {
    Rng r1(5), r2(5);
    NodePermutation p1 = random_permutation(50, r1);
    NodePermutation p2 = random_permutation(50, r2);
    CHECK(p1.sigma() == p2.sigma());
    NodePermutation inv = p1.inverse();
    for (int i = 0; i < 50; ++i) CHECK(inv(p1(i)) == i);
}

TEST_CASE("gnp respects the node count and simplicity") {
    Rng rng(11);
    Graph g = random_gnp(12, 0.5, rng);
    CHECK(g.node_count() == 12);
    for (int v = 0; v < 12; ++v) CHECK_FALSE(g.has_edge(v, v));
}
