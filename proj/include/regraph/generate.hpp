// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "regraph/errors.hpp"
#include "regraph/graph.hpp"
#include "regraph/rng.hpp"

namespace regraph {

inline NodePermutation random_permutation(int n, Rng& rng) {
    std::vector<int> sigma(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) sigma[static_cast<std::size_t>(i)] = i;
    shuffle(sigma, rng);
    return NodePermutation(std::move(sigma));
}

namespace detail {

inline Graph pairing_model(int n, int r, Rng& rng, int max_attempts) {
    std::vector<int> stubs(static_cast<std::size_t>(n) * static_cast<std::size_t>(r));
    for (int v = 0; v < n; ++v)
        for (int s = 0; s < r; ++s) stubs[static_cast<std::size_t>(v) * r + s] = v;

    std::vector<std::uint64_t> keys;
    keys.reserve(stubs.size() / 2);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        shuffle(stubs, rng);
        keys.clear();
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            if (u > v) std::swap(u, v);
            keys.push_back((static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v));
        }
        if (!ok) continue;
        std::sort(keys.begin(), keys.end());
        if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) continue;
        std::vector<Edge> edges;
        edges.reserve(keys.size());
        for (std::uint64_t key : keys)
            edges.emplace_back(static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffULL));
        return Graph(n, edges);
    }
    throw GenerationFailure("pairing model rejected " + std::to_string(max_attempts) +
                            " attempts for n=" + std::to_string(n) + " r=" + std::to_string(r));
}

}  // namespace detail

// Pairing (configuration) model: each node contributes r stubs, a uniform
// perfect matching of stubs proposes the edge set, and any attempt containing
// a loop or a multi-edge is rejected wholesale. Conditioned on acceptance the
// output is uniform over simple r-regular graphs on n labeled nodes. Dense
// degrees (r > (n-1)/2) are sampled as the complement of an (n-1-r)-regular
// draw, a uniformity-preserving bijection that keeps the rejection rate away
// from the dense-regime collapse.
inline Graph random_regular(int n, int r, std::uint64_t seed, int max_attempts = 1000) {
    if (r < 2 || r >= n || (static_cast<long long>(n) * r) % 2 != 0)
        throw ContractViolation("infeasible parameters for r-regular graph: n=" + std::to_string(n) +
                                " r=" + std::to_string(r));
    Rng rng(seed);
    int rc = n - 1 - r;
    if (rc >= 2 && rc < r) {
        Graph base = detail::pairing_model(n, rc, rng, max_attempts);
        std::vector<Edge> edges;
        edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(r) / 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (!base.has_edge(i, j)) edges.emplace_back(i, j);
        return Graph(n, edges);
    }
    return detail::pairing_model(n, r, rng, max_attempts);
}

// Erdos-Renyi G(n, p); handy for randomized test suites.
inline Graph random_gnp(int n, double p, Rng& rng) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.unit() < p) edges.emplace_back(i, j);
    return Graph(n, edges);
}

}  // namespace regraph
