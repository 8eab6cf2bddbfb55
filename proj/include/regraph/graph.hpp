// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "regraph/errors.hpp"

namespace regraph {

using Edge = std::pair<int, int>;

// Dynamically sized bit row of an adjacency matrix.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(int n) : words_(static_cast<std::size_t>((n + 63) / 64), 0) {}

    bool test(int i) const {
        return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t(1) << (i & 63);
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    friend int intersection_size(const BitRow& a, const BitRow& b) {
        int c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += std::popcount(a.words_[i] & b.words_[i]);
        return c;
    }

    bool operator==(const BitRow&) const = default;

private:
    std::vector<std::uint64_t> words_;
};

// Immutable simple undirected graph over node indices 0..n-1. Rows are kept
// symmetric and loop-free by construction; sorted adjacency lists back the
// traversal-heavy algorithms.
class Graph {
public:
    Graph() = default;

    Graph(int n, const std::vector<Edge>& edge_list) : n_(n) {
        if (n < 0) throw ContractViolation("node count must be non-negative");
        rows_.assign(static_cast<std::size_t>(n), BitRow(n));
        adj_.assign(static_cast<std::size_t>(n), {});
        for (const auto& [u, v] : edge_list) add_edge_checked(u, v);
        for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    }

    int node_count() const { return n_; }
    long long edge_count() const { return edge_count_; }

    bool has_edge(int i, int j) const { return i != j && rows_[static_cast<std::size_t>(i)].test(j); }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    const BitRow& row(int v) const { return rows_[static_cast<std::size_t>(v)]; }

    // All edges with i < j, lexicographically sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(edge_count_));
        for (int i = 0; i < n_; ++i)
            for (int j : adj_[static_cast<std::size_t>(i)])
                if (i < j) out.emplace_back(i, j);
        return out;
    }

    std::vector<int> degree_sequence_sorted() const {
        std::vector<int> d(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
        std::sort(d.begin(), d.end());
        return d;
    }

    // Isolated-node padding up to `n` nodes; only ever applied on request.
    Graph padded(int n) const {
        if (n < n_) throw ContractViolation("cannot pad to a smaller node count");
        return Graph(n, edges());
    }

    bool connected() const {
        if (n_ <= 1) return true;
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : neighbors(v))
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    ++reached;
                    stack.push_back(u);
                }
        }
        return reached == n_;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && rows_ == other.rows_;
    }

private:
    void add_edge_checked(int u, int v) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw ContractViolation("edge endpoint out of range: " + std::to_string(u) + " " +
                                    std::to_string(v));
        if (u == v) throw ContractViolation("self-loop at node " + std::to_string(u));
        if (rows_[static_cast<std::size_t>(u)].test(v))
            throw ContractViolation("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        rows_[static_cast<std::size_t>(u)].set(v);
        rows_[static_cast<std::size_t>(v)].set(u);
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
        ++edge_count_;
    }

    int n_ = 0;
    long long edge_count_ = 0;
    std::vector<BitRow> rows_;
    std::vector<std::vector<int>> adj_;
};

// Bijection sigma on {0..n-1} stored as an index array.
class NodePermutation {
public:
    explicit NodePermutation(std::vector<int> sigma) : sigma_(std::move(sigma)) {
        std::vector<char> seen(sigma_.size(), 0);
        for (int x : sigma_) {
            if (x < 0 || static_cast<std::size_t>(x) >= sigma_.size() || seen[static_cast<std::size_t>(x)])
                throw ContractViolation("sigma is not a bijection");
            seen[static_cast<std::size_t>(x)] = 1;
        }
    }

    static NodePermutation identity(int n) {
        std::vector<int> s(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = i;
        return NodePermutation(std::move(s));
    }

    int size() const { return static_cast<int>(sigma_.size()); }
    int operator()(int i) const { return sigma_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& sigma() const { return sigma_; }

    NodePermutation inverse() const {
        std::vector<int> inv(sigma_.size());
        for (std::size_t i = 0; i < sigma_.size(); ++i)
            inv[static_cast<std::size_t>(sigma_[i])] = static_cast<int>(i);
        return NodePermutation(std::move(inv));
    }

private:
    std::vector<int> sigma_;
};

// Node relabeling: edge {i, j} maps to {sigma(i), sigma(j)}. The result is
// isomorphic to the input by construction.
inline Graph apply_permutation(const Graph& g, const NodePermutation& p) {
    if (p.size() != g.node_count())
        throw ContractViolation("permutation length does not match node count");
    std::vector<Edge> mapped;
    mapped.reserve(static_cast<std::size_t>(g.edge_count()));
    for (const auto& [u, v] : g.edges()) mapped.emplace_back(p(u), p(v));
    return Graph(g.node_count(), mapped);
}

}  // namespace regraph
