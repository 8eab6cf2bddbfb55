// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "regraph/graph.hpp"
#include "regraph/timeout.hpp"
#include "regraph/wl.hpp"

namespace regraph {

enum class FilterLevel { faster, fast, could };

inline const char* filter_level_name(FilterLevel l) {
    switch (l) {
        case FilterLevel::faster: return "faster";
        case FilterLevel::fast: return "fast";
        case FilterLevel::could: return "could";
    }
    return "?";
}

// Number of triangles through each node.
inline std::vector<long long> per_node_triangles(const Graph& g) {
    std::vector<long long> tri(static_cast<std::size_t>(g.node_count()), 0);
    for (int v = 0; v < g.node_count(); ++v) {
        const auto& nbrs = g.neighbors(v);
        long long t = 0;
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                if (g.has_edge(nbrs[i], nbrs[j])) ++t;
        tri[static_cast<std::size_t>(v)] = t;
    }
    return tri;
}

namespace detail {

// Exact maximum clique: branch and bound with a greedy-coloring upper bound.
// Hosts here are sparse (degree-bounded), so the search tree stays tiny.
struct CliqueSearch {
    const Graph* g;
    int best = 0;
    const Deadline* deadline;

    void expand(std::vector<int>& candidates, int size) {
        if (deadline->expired()) throw TimedOut{};
        if (candidates.empty()) {
            best = std::max(best, size);
            return;
        }
        // Greedy coloring of the candidate set; color count bounds the
        // largest clique extension.
        std::vector<int> color(candidates.size(), 0);
        int colors_used = 0;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            std::vector<char> taken(static_cast<std::size_t>(colors_used) + 2, 0);
            for (std::size_t j = 0; j < i; ++j)
                if (g->has_edge(candidates[i], candidates[j])) taken[static_cast<std::size_t>(color[j])] = 1;
            int c = 1;
            while (taken[static_cast<std::size_t>(c)]) ++c;
            color[i] = c;
            colors_used = std::max(colors_used, c);
        }
        // Expand in decreasing color order.
        std::vector<std::size_t> idx(candidates.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return color[x] < color[y]; });
        for (std::size_t pos = idx.size(); pos-- > 0;) {
            std::size_t i = idx[pos];
            if (size + color[i] <= best) return;
            int v = candidates[static_cast<std::size_t>(i)];
            std::vector<int> next;
            for (int u : candidates)
                if (u != v && g->has_edge(u, v)) next.push_back(u);
            expand(next, size + 1);
        }
    }
};

}  // namespace detail

inline int max_clique_size(const Graph& g, const Deadline& deadline = Deadline::never()) {
    if (g.node_count() == 0) return 0;
    detail::CliqueSearch search{&g, 1, &deadline};
    std::vector<int> all(static_cast<std::size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v) all[static_cast<std::size_t>(v)] = v;
    search.expand(all, 0);
    return search.best;
}

// Cheap isomorphism-invariant signature at three strengths:
//   faster: sorted degree sequence
//   fast:   + sorted per-node triangle counts
//   could:  + maximum clique size
struct FilterSignature {
    std::vector<int> degree_sorted;
    std::optional<std::vector<long long>> triangle_sorted;
    std::optional<int> max_clique;

    bool operator==(const FilterSignature&) const = default;
};

inline FilterSignature filter_signature(const Graph& g, FilterLevel level,
                                        const Deadline& deadline = Deadline::never()) {
    FilterSignature sig;
    sig.degree_sorted = g.degree_sequence_sorted();
    if (level == FilterLevel::fast || level == FilterLevel::could) {
        auto tri = per_node_triangles(g);
        std::sort(tri.begin(), tri.end());
        sig.triangle_sorted = std::move(tri);
    }
    if (level == FilterLevel::could) sig.max_clique = max_clique_size(g, deadline);
    return sig;
}

// Distinguished iff any compared signature component differs. One-sided: a
// match never certifies isomorphism.
inline TestOutcome filter_test(const Graph& a, const Graph& b, FilterLevel level,
                               const Deadline& deadline = Deadline::never()) {
    try {
        return filter_signature(a, level, deadline) == filter_signature(b, level, deadline)
                   ? TestOutcome::not_distinguished
                   : TestOutcome::distinguished;
    } catch (const TimedOut&) {
        return TestOutcome::timed_out;
    }
}

}  // namespace regraph
