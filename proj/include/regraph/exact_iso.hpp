// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "regraph/filters.hpp"
#include "regraph/graph.hpp"
#include "regraph/timeout.hpp"
#include "regraph/wl.hpp"

namespace regraph {

enum class IsoOutcome { isomorphic, non_isomorphic, timed_out };

inline const char* iso_outcome_name(IsoOutcome o) {
    switch (o) {
        case IsoOutcome::isomorphic: return "isomorphic";
        case IsoOutcome::non_isomorphic: return "non-isomorphic";
        case IsoOutcome::timed_out: return "timed-out";
    }
    return "?";
}

struct IsoResult {
    IsoOutcome outcome = IsoOutcome::non_isomorphic;
    // Witness with apply_permutation(a, mapping) == b when isomorphic.
    std::optional<NodePermutation> mapping;
};

namespace detail {

// Sorted BFS distance multiset from v; unreachable nodes count as n.
inline std::vector<int> distance_profile(const Graph& g, int v) {
    int n = g.node_count();
    std::vector<int> dist(static_cast<std::size_t>(n), n);
    std::vector<int> queue{v};
    dist[static_cast<std::size_t>(v)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : g.neighbors(u))
            if (dist[static_cast<std::size_t>(w)] == n) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
    }
    std::sort(dist.begin(), dist.end());
    return dist;
}

// Sound per-node invariant seed: degree, triangle count, distance profile.
inline std::vector<std::uint64_t> invariant_seed(const Graph& g) {
    auto tri = per_node_triangles(g);
    std::vector<std::uint64_t> seed(static_cast<std::size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v) {
        std::uint64_t h = hash_u64(0x5eed, static_cast<std::uint64_t>(g.degree(v)));
        h = hash_u64(h, static_cast<std::uint64_t>(tri[static_cast<std::size_t>(v)]));
        for (int d : distance_profile(g, v)) h = hash_u64(h, static_cast<std::uint64_t>(d));
        seed[static_cast<std::size_t>(v)] = h;
    }
    return seed;
}

// Joint color refinement from invariant seeds. Returns stable colors as
// dense ids shared by the two graphs.
struct RefineOutcome {
    std::vector<std::uint64_t> ca, cb;
    std::size_t classes = 0;
    bool histograms_equal = false;
};

inline RefineOutcome refine_pair(const Graph& a, const Graph& b, const Deadline& deadline) {
    RefineOutcome out;
    out.ca = invariant_seed(a);
    out.cb = invariant_seed(b);
    out.classes = canonicalize(out.ca, out.cb);
    for (;;) {
        if (deadline.expired()) throw TimedOut{};
        auto refine = [&](const Graph& g, const std::vector<std::uint64_t>& colors) {
            std::vector<std::uint64_t> next(colors.size());
            std::vector<std::uint64_t> nbr;
            for (int v = 0; v < g.node_count(); ++v) {
                nbr.clear();
                for (int u : g.neighbors(v)) nbr.push_back(colors[static_cast<std::size_t>(u)]);
                std::sort(nbr.begin(), nbr.end());
                std::uint64_t h = hash_u64(0x777, colors[static_cast<std::size_t>(v)]);
                for (std::uint64_t c : nbr) h = hash_u64(h, c);
                next[static_cast<std::size_t>(v)] = h;
            }
            return next;
        };
        auto na = refine(a, out.ca);
        auto nb = refine(b, out.cb);
        std::size_t new_classes = canonicalize(na, nb);
        if (new_classes == out.classes) break;
        out.ca = std::move(na);
        out.cb = std::move(nb);
        out.classes = new_classes;
    }
    out.histograms_equal = color_histogram(out.ca) == color_histogram(out.cb);
    return out;
}

struct IsoSearch {
    const Graph* a;
    const Graph* b;
    const std::vector<std::uint64_t>* ca;
    const std::vector<std::uint64_t>* cb;
    std::vector<std::vector<int>> b_by_color;
    std::vector<int> map_ab;
    std::vector<char> used_b;
    const Deadline* deadline;
    std::uint32_t steps = 0;

    bool extend(int depth) {
        int n = a->node_count();
        if (depth == n) return true;
        if ((++steps & 0x3ffu) == 0 && deadline->expired()) throw TimedOut{};

        // Most-constrained unmapped vertex: by mapped-neighbor count, then
        // candidate class size, then degree.
        int pick = -1;
        long long best_key = std::numeric_limits<long long>::min();
        for (int v = 0; v < n; ++v) {
            if (map_ab[static_cast<std::size_t>(v)] >= 0) continue;
            long long mapped_nbrs = 0;
            for (int u : a->neighbors(v))
                if (map_ab[static_cast<std::size_t>(u)] >= 0) ++mapped_nbrs;
            std::size_t cls = (*ca)[static_cast<std::size_t>(v)];
            long long key = mapped_nbrs * 1000000LL -
                            static_cast<long long>(b_by_color[cls].size()) * 1000 + a->degree(v);
            if (key > best_key) {
                best_key = key;
                pick = v;
            }
        }

        std::size_t cls = (*ca)[static_cast<std::size_t>(pick)];
        for (int w : b_by_color[cls]) {
            if (used_b[static_cast<std::size_t>(w)]) continue;
            bool ok = true;
            for (int u = 0; u < n && ok; ++u) {
                int mu = map_ab[static_cast<std::size_t>(u)];
                if (mu < 0) continue;
                if (a->has_edge(pick, u) != b->has_edge(w, mu)) ok = false;
            }
            if (!ok) continue;
            map_ab[static_cast<std::size_t>(pick)] = w;
            used_b[static_cast<std::size_t>(w)] = 1;
            if (extend(depth + 1)) return true;
            map_ab[static_cast<std::size_t>(pick)] = -1;
            used_b[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    }
};

}  // namespace detail

// Complete backtracking isomorphism test with refinement-based pruning. Every
// pruning step (degree sequence, triangle counts, distance profiles, color
// refinement) is a sound invariant, so a negative answer is exact; a found
// mapping is verified before being returned. Never silently wrong: on
// deadline expiry the outcome is timed_out.
inline IsoResult exact_isomorphic(const Graph& a, const Graph& b,
                                  const Deadline& deadline = Deadline::never()) {
    if (a.node_count() != b.node_count()) return {IsoOutcome::non_isomorphic, std::nullopt};
    if (a.edge_count() != b.edge_count()) return {IsoOutcome::non_isomorphic, std::nullopt};
    if (a.degree_sequence_sorted() != b.degree_sequence_sorted())
        return {IsoOutcome::non_isomorphic, std::nullopt};
    int n = a.node_count();
    if (n == 0) return {IsoOutcome::isomorphic, NodePermutation(std::vector<int>{})};

    try {
        detail::RefineOutcome ref = detail::refine_pair(a, b, deadline);
        if (!ref.histograms_equal) return {IsoOutcome::non_isomorphic, std::nullopt};

        detail::IsoSearch search;
        search.a = &a;
        search.b = &b;
        search.ca = &ref.ca;
        search.cb = &ref.cb;
        search.b_by_color.assign(ref.classes, {});
        for (int w = 0; w < n; ++w)
            search.b_by_color[static_cast<std::size_t>(ref.cb[static_cast<std::size_t>(w)])].push_back(w);
        search.map_ab.assign(static_cast<std::size_t>(n), -1);
        search.used_b.assign(static_cast<std::size_t>(n), 0);
        search.deadline = &deadline;

        if (!search.extend(0)) return {IsoOutcome::non_isomorphic, std::nullopt};
        NodePermutation mapping(search.map_ab);
        if (!(apply_permutation(a, mapping) == b))
            throw std::logic_error("isomorphism witness failed verification");
        return {IsoOutcome::isomorphic, std::move(mapping)};
    } catch (const TimedOut&) {
        return {IsoOutcome::timed_out, std::nullopt};
    }
}

}  // namespace regraph
