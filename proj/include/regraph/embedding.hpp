// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "regraph/bigint.hpp"
#include "regraph/errors.hpp"
#include "regraph/graph.hpp"
#include "regraph/pattern.hpp"
#include "regraph/timeout.hpp"

namespace regraph {

// Cardinality of the set of strict embeddings of a pattern into a host:
// injective node maps under which the host has an edge exactly where the
// pattern has one. raw = occurrences * aut_order always.
struct EmbeddingCount {
    BigInt raw;
    BigInt occurrences;
    std::string pattern_label;
    int host_n = 0;
};

namespace detail {

inline EmbeddingCount finish_count(BigInt raw, const Pattern& p, int host_n) {
    EmbeddingCount c;
    c.occurrences = raw / p.aut_order;
    if (c.occurrences * p.aut_order != raw)
        throw std::logic_error("embedding count not divisible by aut order for " + p.label);
    c.raw = std::move(raw);
    c.pattern_label = p.label;
    c.host_n = host_n;
    return c;
}

struct NaiveState {
    const Graph* host;
    const Pattern* pattern;
    std::vector<int> image;
    std::vector<char> used;
    unsigned long long raw = 0;
};

inline void naive_extend(NaiveState& st, int depth) {
    int k = st.pattern->k();
    if (depth == k) {
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (st.host->has_edge(st.image[static_cast<std::size_t>(i)],
                                      st.image[static_cast<std::size_t>(j)]) !=
                    st.pattern->graph.has_edge(i, j))
                    return;
        ++st.raw;
        return;
    }
    for (int v = 0; v < st.host->node_count(); ++v) {
        if (st.used[static_cast<std::size_t>(v)]) continue;
        st.used[static_cast<std::size_t>(v)] = 1;
        st.image[static_cast<std::size_t>(depth)] = v;
        naive_extend(st, depth + 1);
        st.used[static_cast<std::size_t>(v)] = 0;
    }
}

}  // namespace detail

// Reference route: enumerate every injective map of pattern nodes into host
// nodes and keep those preserving edges and non-edges. Exponential in k;
// meant for small hosts and as the second leg of equivalence checks.
inline EmbeddingCount count_strict_embeddings(const Graph& host, const Pattern& pattern) {
    if (pattern.k() > host.node_count()) return detail::finish_count(0, pattern, host.node_count());
    detail::NaiveState st{&host, &pattern,
                          std::vector<int>(static_cast<std::size_t>(pattern.k())),
                          std::vector<char>(static_cast<std::size_t>(host.node_count()), 0),
                          0};
    detail::naive_extend(st, 0);
    return detail::finish_count(BigInt(st.raw), pattern, host.node_count());
}

namespace detail {

// Matching plan: pattern nodes in BFS order from the highest-degree node, so
// every non-root node has an already-matched neighbor. Candidates then come
// from host adjacency lists and per-anchor work is independent of host size.
struct MatchPlan {
    std::vector<int> order;        // pattern nodes in matching order
    std::vector<int> parent_slot;  // for slot t >= 1: earlier slot adjacent in pattern
    // required[t][s]: pattern adjacency between order[t] and order[s], s < t.
    std::vector<std::vector<char>> required;
};

inline MatchPlan build_match_plan(const Pattern& p) {
    int k = p.k();
    int root = 0;
    for (int v = 1; v < k; ++v)
        if (p.graph.degree(v) > p.graph.degree(root)) root = v;
    MatchPlan plan;
    plan.order.reserve(static_cast<std::size_t>(k));
    plan.parent_slot.assign(static_cast<std::size_t>(k), -1);
    std::vector<int> slot_of(static_cast<std::size_t>(k), -1);
    std::vector<int> queue{root};
    slot_of[static_cast<std::size_t>(root)] = 0;
    plan.order.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : p.graph.neighbors(u)) {
            if (slot_of[static_cast<std::size_t>(w)] >= 0) continue;
            slot_of[static_cast<std::size_t>(w)] = static_cast<int>(plan.order.size());
            plan.parent_slot[plan.order.size()] = slot_of[static_cast<std::size_t>(u)];
            plan.order.push_back(w);
            queue.push_back(w);
        }
    }
    if (static_cast<int>(plan.order.size()) != k)
        throw CapabilityError("anchored counting requires a connected pattern: " + p.label);
    plan.required.assign(static_cast<std::size_t>(k), {});
    for (int t = 1; t < k; ++t) {
        plan.required[static_cast<std::size_t>(t)].assign(static_cast<std::size_t>(t), 0);
        for (int s = 0; s < t; ++s)
            plan.required[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] =
                p.graph.has_edge(plan.order[static_cast<std::size_t>(t)],
                                 plan.order[static_cast<std::size_t>(s)]);
    }
    return plan;
}

struct AnchoredState {
    const Graph* host;
    const MatchPlan* plan;
    int k;
    std::vector<int> image;  // slot -> host node
    std::vector<char> used;
    BigInt raw = 0;
    const Deadline* deadline;
    std::uint32_t steps = 0;

    void poll() {
        if ((++steps & 0xffffu) == 0 && deadline->expired()) throw TimedOut{};
    }

    void extend(int t) {
        poll();
        if (t == k) {
            ++raw;
            return;
        }
        const auto& req = plan->required[static_cast<std::size_t>(t)];
        int parent_host = image[static_cast<std::size_t>(plan->parent_slot[static_cast<std::size_t>(t)])];
        for (int cand : host->neighbors(parent_host)) {
            if (used[static_cast<std::size_t>(cand)]) continue;
            bool ok = true;
            for (int s = 0; s < t; ++s)
                if (host->has_edge(cand, image[static_cast<std::size_t>(s)]) != static_cast<bool>(req[static_cast<std::size_t>(s)])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            used[static_cast<std::size_t>(cand)] = 1;
            image[static_cast<std::size_t>(t)] = cand;
            extend(t + 1);
            used[static_cast<std::size_t>(cand)] = 0;
        }
    }
};

}  // namespace detail

// Production route: anchor the matching-order root at every host node and
// extend along the BFS order, pruning on exact adjacency. Same result as the
// naive route; on bounded-degree hosts runtime is linear in host size.
inline EmbeddingCount count_strict_embeddings_anchored(const Graph& host, const Pattern& pattern,
                                                       const Deadline& deadline = Deadline::never()) {
    if (pattern.k() > host.node_count()) return detail::finish_count(0, pattern, host.node_count());
    detail::MatchPlan plan = detail::build_match_plan(pattern);
    detail::AnchoredState st{&host,
                             &plan,
                             pattern.k(),
                             std::vector<int>(static_cast<std::size_t>(pattern.k())),
                             std::vector<char>(static_cast<std::size_t>(host.node_count()), 0),
                             0,
                             &deadline,
                             0};
    int root_degree = pattern.graph.degree(plan.order[0]);
    for (int anchor = 0; anchor < host.node_count(); ++anchor) {
        if (deadline.expired()) throw TimedOut{};
        if (host.degree(anchor) < root_degree) continue;
        st.used[static_cast<std::size_t>(anchor)] = 1;
        st.image[0] = anchor;
        st.extend(1);
        st.used[static_cast<std::size_t>(anchor)] = 0;
    }
    return detail::finish_count(std::move(st.raw), pattern, host.node_count());
}

// F_Lambda(phi) is fully described by one ratio: it takes the value
// raw / C_hat on edges of the pattern and 0 elsewhere.
struct OperatorValue {
    EmbeddingCount count;
    NormalizationConstant c_hat;

    BigRat normalized() const {
        if (count.raw == 0) return BigRat(0);
        return BigRat(count.raw, c_hat.value);
    }
};

inline OperatorValue evaluate_operator(const Graph& host, const Pattern& pattern,
                                       const Deadline& deadline = Deadline::never()) {
    OperatorValue v;
    v.count = count_strict_embeddings_anchored(host, pattern, deadline);
    if (pattern.k() <= host.node_count()) {
        v.c_hat = normalization(pattern, host.node_count());
    } else {
        v.c_hat = NormalizationConstant{0, 0};  // empty permutant, value 0
    }
    return v;
}

}  // namespace regraph
