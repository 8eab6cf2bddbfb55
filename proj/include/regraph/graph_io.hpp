// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "regraph/errors.hpp"
#include "regraph/graph.hpp"

namespace regraph {

// Edge-list format: first line "N"; each subsequent non-empty line "i j"
// with 0 <= i < j < N, unique, whitespace-separated, LF line endings.

inline Graph read_graph_stream(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1;
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first, second, extra;
        if (!(ls >> first)) continue;  // blank line
        if (n < 0) {
            try {
                std::size_t used = 0;
                n = std::stoll(first, &used);
                if (used != first.size()) throw std::invalid_argument(first);
            } catch (const std::exception&) {
                throw ParseError("expected node count, got '" + first + "'", line_no);
            }
            if (ls >> extra) throw ParseError("trailing token '" + extra + "' after node count", line_no);
            if (n < 0) throw ParseError("node count must be non-negative", line_no);
            continue;
        }
        if (!(ls >> second)) throw ParseError("expected 'i j'", line_no);
        if (ls >> extra) throw ParseError("trailing token '" + extra + "'", line_no);
        long long i, j;
        try {
            std::size_t ui = 0, uj = 0;
            i = std::stoll(first, &ui);
            j = std::stoll(second, &uj);
            if (ui != first.size() || uj != second.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError("malformed edge '" + first + " " + second + "'", line_no);
        }
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw ParseError("node index out of range [0," + std::to_string(n) + ")", line_no);
        if (i == j) throw ParseError("self-loop at node " + std::to_string(i), line_no);
        if (i > j) throw ParseError("edge endpoints must satisfy i < j", line_no);
        std::uint64_t key = (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint64_t>(j);
        if (!seen.insert(key).second)
            throw ParseError("duplicate edge " + std::to_string(i) + " " + std::to_string(j), line_no);
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    if (n < 0) throw ParseError("empty file: missing node count");
    return Graph(static_cast<int>(n), edges);
}

inline Graph read_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return read_graph_stream(in);
    } catch (ParseError& e) {
        throw ParseError(std::string(e.what()) + " in '" + path + "'");
    }
}

inline void write_graph_stream(const Graph& g, std::ostream& out) {
    out << g.node_count() << "\n";
    for (const auto& [i, j] : g.edges()) out << i << " " << j << "\n";
}

inline void write_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    write_graph_stream(g, out);
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace regraph
