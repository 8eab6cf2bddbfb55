// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include "regraph/pattern.hpp"
#include "testutil.hpp"

using namespace regraph;

TEST_CASE("family constructors match frozen automorphism counts") {
    CHECK(make_cycle(4).aut_order == 8);     // brute force over 24 permutations
    CHECK(make_path(3).aut_order == 2);      // brute force over 6 permutations
    CHECK(make_complete(3).aut_order == 6);  // all permutations
    CHECK(make_path(4).aut_order == 2);
    CHECK(make_star(5).aut_order == 24);     // center + 4 leaves
    CHECK(make_cycle(6).aut_order == 12);
}

TEST_CASE("family constructors validate minimum sizes") {
    CHECK_THROWS_AS(make_cycle(2), ContractViolation);
    CHECK_THROWS_AS(make_star(2), ContractViolation);
    CHECK_THROWS_AS(make_complete(2), ContractViolation);
    CHECK_THROWS_AS(make_path(1), ContractViolation);
}

TEST_CASE("cycle-star shapes") {
    Pattern tailed = make_cycle_star(3, {1, 0, 0});
    CHECK(tailed.k() == 4);
    CHECK(tailed.aut_order == 2);  // brute force over 24 permutations

    Pattern full = make_cycle_star(4, {1, 1, 1, 1});
    CHECK(full.k() == 8);
    CHECK(full.aut_order == 8);  // brute force over 8! permutations

    CHECK_THROWS_AS(make_cycle_star(3, {0, 0, 0}), ContractViolation);  // no pendant
    CHECK_THROWS_AS(make_cycle_star(2, {1, 1}), ContractViolation);
    CHECK_THROWS_AS(make_cycle_star(3, {1, 0}), ContractViolation);  // bad spec length
}

TEST_CASE("custom patterns") {
    // The 6-node graph from the roster rigid slot is asymmetric.
    Pattern rigid = make_custom(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 2}, {0, 3}}, "rig");
    CHECK(rigid.aut_order == 1);

    Pattern edge = make_custom(2, {{0, 1}}, "edge");
    CHECK(edge.aut_order == 2);

    Pattern tri = make_custom(3, {{0, 1}, {1, 2}, {0, 2}}, "tri");
    CHECK(tri.graph == make_complete(3).graph);

    CHECK_THROWS_AS(make_custom(4, {{0, 1}, {2, 3}}, "disconnected"), ContractViolation);
    CHECK_THROWS_AS(make_custom(3, {}, "empty"), ContractViolation);
}

TEST_CASE("compute_aut_order guards the factorial blowup") {
    Graph big(13, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9},
                   {9, 10}, {10, 11}, {11, 12}});
    CHECK_THROWS_AS(compute_aut_order(big), CapabilityError);
}

TEST_CASE("normalization constant identities") {
    Pattern tri = make_complete(3);
    NormalizationConstant c = normalization(tri, 6);
    CHECK(c.value == 120);   // 6*5*4
    CHECK(c.n_count == 20);  // C(6,3) * 3!/6

    Pattern c4 = make_cycle(4);
    NormalizationConstant c2 = normalization(c4, 4);
    CHECK(c2.value == 24);
    CHECK(c2.n_count == 3);  // 3 distinct 4-cycles on 4 labeled nodes

    // k == N collapses to N!.
    Pattern p5 = make_path(5);
    CHECK(normalization(p5, 5).value == 120);

    CHECK_THROWS_AS(normalization(tri, 2), ContractViolation);
}

TEST_CASE("default roster shape and order") {
    auto roster = default_roster();
    int cycles = 0, stars = 0, completes = 0, paths = 0, rigids = 0, cycle_stars = 0;
    for (const auto& p : roster) {
        switch (p.family) {
            case PatternFamily::cycle: ++cycles; break;
            case PatternFamily::star: ++stars; break;
            case PatternFamily::complete: ++completes; break;
            case PatternFamily::path: ++paths; break;
            case PatternFamily::rigid: ++rigids; break;
            case PatternFamily::cycle_star: ++cycle_stars; break;
            default: break;
        }
    }
    CHECK(cycles == 8);
    CHECK(paths == 7);
    CHECK(stars == 4);
    CHECK(completes == 6);
    CHECK(rigids == 2);
    CHECK(cycle_stars == 8);

    // Stable order: first entry C3, cycles then stars then completes then paths.
    CHECK(roster[0].label == "C3");
    CHECK(roster[8].label == "S4");
    CHECK(roster[12].label == "K4");
    CHECK(roster[18].label == "P3");
    CHECK(roster[25].label == "R1");
}

TEST_CASE("every roster pattern matches its brute-force automorphism count") {
    for (const auto& p : default_roster()) {
        INFO(p.label);
        CHECK(p.aut_order == testutil::brute_force_aut(p.graph));
        CHECK(p.graph.connected());
        CHECK(p.graph.edge_count() >= 1);
        // aut divides k!
        BigInt kfact = falling_factorial(p.k(), p.k());
        CHECK(kfact % BigInt(p.aut_order) == 0);
    }
}

TEST_CASE("family formulas hold against brute force") {
    for (int k = 3; k <= 8; ++k) CHECK(make_cycle(k).aut_order == 2ull * static_cast<unsigned>(k));
    for (int k = 2; k <= 8; ++k) CHECK(make_path(k).aut_order == 2);
    unsigned long long fact = 2;
    for (int k = 3; k <= 7; ++k) {
        fact *= static_cast<unsigned>(k);
        CHECK(make_complete(k).aut_order == fact);
    }
    for (int k = 3; k <= 7; ++k) {
        unsigned long long leaves_fact = 1;
        for (int i = 2; i < k; ++i) leaves_fact *= static_cast<unsigned>(i);
        CHECK(make_star(k).aut_order == leaves_fact);
    }
}

TEST_CASE("normalization identity value = n_count * aut over a grid") {
    for (const auto& p : default_roster()) {
        for (int n = p.k(); n <= p.k() + 6; ++n) {
            NormalizationConstant c = normalization(p, n);
            CHECK(c.value == c.n_count * BigInt(p.aut_order));
            BigInt nk = 1;
            for (int i = 0; i < p.k(); ++i) nk *= n;
            CHECK(c.value <= nk);
        }
    }
}

TEST_CASE("roster JSON round trip recomputes aut orders") {
    auto roster = default_roster();
    nlohmann::json doc = roster_to_json(roster);
    auto back = roster_from_json(doc);
    REQUIRE(back.size() == roster.size());
    for (std::size_t i = 0; i < roster.size(); ++i) {
        CHECK(back[i].label == roster[i].label);
        CHECK(back[i].graph == roster[i].graph);
        CHECK(back[i].aut_order == roster[i].aut_order);
    }
}

TEST_CASE("roster file loading rejects malformed documents") {
    CHECK_THROWS_AS(roster_from_json(nlohmann::json::object()), ParseError);
    CHECK_THROWS_AS(roster_from_json(nlohmann::json::parse(R"([{"label":"x"}])")), ParseError);
    std::string path = "test_pattern_missing.json";
    CHECK_THROWS_AS(load_roster(path), ParseError);
}
