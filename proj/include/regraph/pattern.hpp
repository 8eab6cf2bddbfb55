// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "regraph/bigint.hpp"
#include "regraph/errors.hpp"
#include "regraph/graph.hpp"

namespace regraph {

enum class PatternFamily { cycle, star, complete, path, rigid, cycle_star, custom };

inline const char* family_name(PatternFamily f) {
    switch (f) {
        case PatternFamily::cycle: return "cycle";
        case PatternFamily::star: return "star";
        case PatternFamily::complete: return "complete";
        case PatternFamily::path: return "path";
        case PatternFamily::rigid: return "rigid";
        case PatternFamily::cycle_star: return "cycle_star";
        case PatternFamily::custom: return "custom";
    }
    return "custom";
}

// Exact number of node permutations preserving the edge set, by exhaustive
// enumeration. Guarded at k <= 12; larger templates must supply the order.
inline std::uint64_t compute_aut_order(const Graph& g) {
    int k = g.node_count();
    if (k > 12)
        throw CapabilityError("automorphism brute force is limited to k <= 12; "
                              "supply the order explicitly for larger templates");
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            for (int j = i + 1; j < k; ++j)
                if (g.has_edge(i, j) !=
                    g.has_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])) {
                    ok = false;
                    break;
                }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// Template graph Lambda searched for inside hosts. Connected, simple, at
// least one edge; the automorphism group order is always the brute-force
// count over its own nodes.
struct Pattern {
    Graph graph;
    std::uint64_t aut_order = 0;
    PatternFamily family = PatternFamily::custom;
    std::string label;

    int k() const { return graph.node_count(); }
};

namespace detail {

inline Pattern finish_pattern(int k, const std::vector<Edge>& edges, PatternFamily family,
                              std::string label) {
    if (k < 2) throw ContractViolation("pattern needs at least 2 nodes: " + label);
    if (edges.empty()) throw ContractViolation("pattern needs at least one edge: " + label);
    Graph g(k, edges);
    if (!g.connected()) throw ContractViolation("pattern must be connected: " + label);
    Pattern p{std::move(g), 0, family, std::move(label)};
    p.aut_order = compute_aut_order(p.graph);
    return p;
}

}  // namespace detail

inline Pattern make_cycle(int k) {
    if (k < 3) throw ContractViolation("cycle needs k >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(std::min(i, (i + 1) % k), std::max(i, (i + 1) % k));
    return detail::finish_pattern(k, edges, PatternFamily::cycle, "C" + std::to_string(k));
}

// Star on k nodes: center 0 plus k-1 leaves.
inline Pattern make_star(int k) {
    if (k < 3) throw ContractViolation("star needs k >= 3 (center plus at least two leaves)");
    std::vector<Edge> edges;
    for (int i = 1; i < k; ++i) edges.emplace_back(0, i);
    return detail::finish_pattern(k, edges, PatternFamily::star, "S" + std::to_string(k));
}

inline Pattern make_path(int k) {
    if (k < 2) throw ContractViolation("path needs k >= 2");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    return detail::finish_pattern(k, edges, PatternFamily::path, "P" + std::to_string(k));
}

inline Pattern make_complete(int k) {
    if (k < 3) throw ContractViolation("complete graph needs k >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
    return detail::finish_pattern(k, edges, PatternFamily::complete, "K" + std::to_string(k));
}

// Cycle on m nodes with pendant_spec[i] degree-1 leaves attached to cycle
// node i. Leaves are numbered m, m+1, ... in cycle-node order.
inline Pattern make_cycle_star(int m, const std::vector<int>& pendant_spec) {
    if (m < 3) throw ContractViolation("cycle-star needs cycle length >= 3");
    if (static_cast<int>(pendant_spec.size()) != m)
        throw ContractViolation("pendant spec length must equal cycle length");
    int total_pendants = 0;
    for (int c : pendant_spec) {
        if (c < 0) throw ContractViolation("pendant counts must be non-negative");
        total_pendants += c;
    }
    if (total_pendants == 0) throw ContractViolation("cycle-star needs at least one pendant leaf");
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) edges.emplace_back(std::min(i, (i + 1) % m), std::max(i, (i + 1) % m));
    std::string digits;
    int next = m;
    for (int i = 0; i < m; ++i) {
        digits += std::to_string(pendant_spec[static_cast<std::size_t>(i)]);
        for (int c = 0; c < pendant_spec[static_cast<std::size_t>(i)]; ++c) edges.emplace_back(i, next++);
    }
    return detail::finish_pattern(m + total_pendants, edges, PatternFamily::cycle_star,
                                  "CS" + std::to_string(m) + "-" + digits);
}

inline Pattern make_custom(int k, const std::vector<Edge>& edges, const std::string& label) {
    return detail::finish_pattern(k, edges, PatternFamily::custom, label);
}

// Falling factorial N!/(N-k)! and the occurrence count n_Lambda it splits
// into. For counting occurrences inside a complete host the bound is met
// with equality, so value == n_count * aut_order exactly.
struct NormalizationConstant {
    BigInt value;    // N!/(N-k)!
    BigInt n_count;  // value / |Aut|
};

inline NormalizationConstant normalization(const Pattern& p, int host_n) {
    if (host_n < p.k())
        throw ContractViolation("host smaller than pattern: N=" + std::to_string(host_n) +
                                " k=" + std::to_string(p.k()));
    NormalizationConstant c;
    c.value = falling_factorial(host_n, p.k());
    c.n_count = c.value / p.aut_order;
    if (c.n_count * p.aut_order != c.value)
        throw std::logic_error("aut order does not divide the injective-map count");
    return c;
}

// Built-in template roster. Order is stable and documented: cycles C3..C10,
// stars S4..S7, complete K4..K9, paths P3..P9, two rigid graphs R1 R2, then
// eight cycle-with-pendant-star shapes.
inline std::vector<Pattern> default_roster() {
    std::vector<Pattern> roster;
    for (int k = 3; k <= 10; ++k) roster.push_back(make_cycle(k));
    for (int k = 4; k <= 7; ++k) roster.push_back(make_star(k));
    for (int k = 4; k <= 9; ++k) roster.push_back(make_complete(k));
    for (int k = 3; k <= 9; ++k) roster.push_back(make_path(k));
    // Asymmetric 6-cycle with two chords from one node.
    {
        Pattern r = detail::finish_pattern(
            6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 2}, {0, 3}},
            PatternFamily::rigid, "R1");
        roster.push_back(std::move(r));
    }
    // Smallest asymmetric tree: a 6-path with one branch leaf.
    {
        Pattern r = detail::finish_pattern(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}},
                                           PatternFamily::rigid, "R2");
        roster.push_back(std::move(r));
    }
    roster.push_back(make_cycle_star(3, {1, 0, 0}));
    roster.push_back(make_cycle_star(3, {1, 1, 0}));
    roster.push_back(make_cycle_star(3, {1, 1, 1}));
    roster.push_back(make_cycle_star(4, {1, 0, 0, 0}));
    roster.push_back(make_cycle_star(4, {1, 1, 0, 0}));
    roster.push_back(make_cycle_star(4, {1, 0, 1, 0}));
    roster.push_back(make_cycle_star(4, {1, 1, 1, 1}));
    roster.push_back(make_cycle_star(5, {1, 0, 0, 0, 0}));
    return roster;
}

// Roster file: JSON list of {label, k, edges: [[i, j], ...]}. Automorphism
// orders are always recomputed on load.
inline std::vector<Pattern> roster_from_json(const nlohmann::json& doc) {
    if (!doc.is_array()) throw ParseError("roster must be a JSON array");
    std::vector<Pattern> roster;
    for (const auto& item : doc) {
        if (!item.contains("label") || !item.contains("k") || !item.contains("edges"))
            throw ParseError("roster entry needs label, k, edges");
        std::vector<Edge> edges;
        for (const auto& e : item.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair [i, j]");
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        }
        roster.push_back(make_custom(item.at("k").get<int>(), edges,
                                     item.at("label").get<std::string>()));
    }
    return roster;
}

inline nlohmann::json roster_to_json(const std::vector<Pattern>& roster) {
    nlohmann::json doc = nlohmann::json::array();
    for (const Pattern& p : roster) {
        nlohmann::json edges = nlohmann::json::array();
        for (const auto& [i, j] : p.graph.edges()) edges.push_back({i, j});
        doc.push_back({{"label", p.label}, {"k", p.k()}, {"edges", edges}});
    }
    return doc;
}

inline std::vector<Pattern> load_roster(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open roster '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid roster JSON in '" + path + "': " + e.what());
    }
    return roster_from_json(doc);
}

}  // namespace regraph
