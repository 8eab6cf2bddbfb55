// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "regraph/errors.hpp"
#include "regraph/exact_iso.hpp"
#include "regraph/generate.hpp"
#include "regraph/geneo.hpp"
#include "regraph/graph.hpp"
#include "regraph/graph_io.hpp"
#include "regraph/parallel.hpp"
#include "regraph/rng.hpp"

namespace regraph {

enum class Provenance { exact_verified, construction_guaranteed, assumed_distinct };

inline const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::exact_verified: return "exact-verified";
        case Provenance::construction_guaranteed: return "construction-guaranteed";
        case Provenance::assumed_distinct: return "assumed-distinct";
    }
    return "?";
}

struct ManifestEntry {
    std::string graph_id;
    std::string path;  // relative to the manifest's directory
    int r = 0;
    int n = 0;
};

struct ManifestPair {
    std::string a, b;
    GroundTruth truth = GroundTruth::unverified;
    Provenance provenance = Provenance::assumed_distinct;
};

struct DatasetManifest {
    std::uint64_t seed = 0;
    std::vector<ManifestEntry> entries;
    std::vector<ManifestPair> pairs;
};

struct DatasetSpec {
    std::vector<int> degrees;
    std::vector<int> sizes;
    int pairs_per_cell = 0;      // non-isomorphic pairs per (r, N) cell
    int iso_pairs_per_cell = 0;  // relabeled copies, construction-guaranteed
    std::uint64_t seed = 0;
    int verify_max_n = 64;       // exact-oracle certification threshold
    double certify_timeout_secs = 30.0;
    int threads = 1;
};

namespace detail {

inline GroundTruth ground_truth_from_name(const std::string& s) {
    if (s == "isomorphic") return GroundTruth::isomorphic;
    if (s == "non-isomorphic") return GroundTruth::non_isomorphic;
    if (s == "unverified") return GroundTruth::unverified;
    throw ParseError("unknown ground truth '" + s + "'");
}

inline Provenance provenance_from_name(const std::string& s) {
    if (s == "exact-verified") return Provenance::exact_verified;
    if (s == "construction-guaranteed") return Provenance::construction_guaranteed;
    if (s == "assumed-distinct") return Provenance::assumed_distinct;
    throw ParseError("unknown provenance '" + s + "'");
}

// Seed for the RNG stream of one generated graph. `side` also separates the
// retry attempts so parallel generation stays schedule-independent.
inline std::uint64_t stream_seed(std::uint64_t seed, int r, int n, int pair_idx, int attempt,
                                 int side) {
    return mix64({seed, static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(n),
                  static_cast<std::uint64_t>(pair_idx), static_cast<std::uint64_t>(attempt),
                  static_cast<std::uint64_t>(side)});
}

struct GeneratedPair {
    Graph a, b;
    GroundTruth truth;
    Provenance provenance;
};

// One certified non-isomorphic pair. Attempts that fail generation, prove
// isomorphic, or time out certification are discarded and retried with fresh
// streams.
inline GeneratedPair generate_noniso_pair(const DatasetSpec& spec, int r, int n, int pair_idx) {
    constexpr int kPairAttempts = 64;
    bool verify = n <= spec.verify_max_n;
    for (int attempt = 0; attempt < kPairAttempts; ++attempt) {
        Graph a, b;
        try {
            a = random_regular(n, r, stream_seed(spec.seed, r, n, pair_idx, attempt, 0));
            b = random_regular(n, r, stream_seed(spec.seed, r, n, pair_idx, attempt, 1));
        } catch (const GenerationFailure&) {
            continue;
        }
        if (!verify)
            return {std::move(a), std::move(b), GroundTruth::unverified, Provenance::assumed_distinct};
        IsoResult iso = exact_isomorphic(a, b, Deadline::after(spec.certify_timeout_secs));
        if (iso.outcome == IsoOutcome::non_isomorphic)
            return {std::move(a), std::move(b), GroundTruth::non_isomorphic, Provenance::exact_verified};
        // isomorphic draw or certification timeout: try a fresh pair
    }
    throw GenerationFailure("could not produce a certified non-isomorphic pair for n=" +
                            std::to_string(n) + " r=" + std::to_string(r));
}

inline GeneratedPair generate_iso_pair(const DatasetSpec& spec, int r, int n, int pair_idx) {
    constexpr int kPairAttempts = 64;
    for (int attempt = 0; attempt < kPairAttempts; ++attempt) {
        try {
            Graph a = random_regular(n, r, stream_seed(spec.seed, r, n, pair_idx, attempt, 2));
            Rng rng(stream_seed(spec.seed, r, n, pair_idx, attempt, 3));
            Graph b = apply_permutation(a, random_permutation(n, rng));
            return {std::move(a), std::move(b), GroundTruth::isomorphic,
                    Provenance::construction_guaranteed};
        } catch (const GenerationFailure&) {
            continue;
        }
    }
    throw GenerationFailure("could not generate an isomorphic pair for n=" + std::to_string(n) +
                            " r=" + std::to_string(r));
}

}  // namespace detail

inline nlohmann::json manifest_to_json(const DatasetManifest& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : m.entries)
        entries.push_back({{"graph_id", e.graph_id}, {"path", e.path}, {"r", e.r}, {"N", e.n}});
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& p : m.pairs)
        pairs.push_back({{"a", p.a},
                         {"b", p.b},
                         {"ground_truth", ground_truth_name(p.truth)},
                         {"provenance", provenance_name(p.provenance)}});
    return {{"seed", m.seed}, {"entries", entries}, {"pairs", pairs}};
}

inline DatasetManifest manifest_from_json(const nlohmann::json& doc) {
    DatasetManifest m;
    m.seed = doc.at("seed").get<std::uint64_t>();
    for (const auto& e : doc.at("entries"))
        m.entries.push_back({e.at("graph_id").get<std::string>(), e.at("path").get<std::string>(),
                             e.at("r").get<int>(), e.at("N").get<int>()});
    for (const auto& p : doc.at("pairs")) {
        ManifestPair mp;
        mp.a = p.at("a").get<std::string>();
        mp.b = p.at("b").get<std::string>();
        mp.truth = detail::ground_truth_from_name(p.at("ground_truth").get<std::string>());
        mp.provenance = detail::provenance_from_name(p.at("provenance").get<std::string>());
        m.pairs.push_back(std::move(mp));
    }
    // Referential integrity and the unverified <-> assumed-distinct tie.
    for (const auto& p : m.pairs) {
        auto exists = [&](const std::string& id) {
            for (const auto& e : m.entries)
                if (e.graph_id == id) return true;
            return false;
        };
        if (!exists(p.a) || !exists(p.b))
            throw ParseError("pair references unknown graph id " + p.a + " / " + p.b);
        if ((p.truth == GroundTruth::unverified) != (p.provenance == Provenance::assumed_distinct))
            throw ParseError("ground_truth must be unverified exactly when provenance is assumed-distinct");
    }
    return m;
}

inline void save_manifest(const DatasetManifest& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << manifest_to_json(m).dump(2) << "\n";
}

inline DatasetManifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open manifest '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid manifest JSON in '" + path + "': " + e.what());
    }
    return manifest_from_json(doc);
}

// Generates all cells of the spec, writes one edge-list file per graph plus
// manifest.json, and returns the manifest. Identical seeds produce
// bit-identical files: streams are derived from (seed, cell, pair, attempt),
// never from scheduling.
inline DatasetManifest generate_pair_dataset(const DatasetSpec& spec, const std::string& out_dir) {
    namespace fs = std::filesystem;
    for (int r : spec.degrees)
        for (int n : spec.sizes)
            if (r < 2 || r >= n || (static_cast<long long>(n) * r) % 2 != 0)
                throw ContractViolation("infeasible cell: n=" + std::to_string(n) +
                                        " r=" + std::to_string(r));

    struct Cell {
        int r, n, pair_idx;
        bool iso;
    };
    std::vector<Cell> cells;
    for (int r : spec.degrees)
        for (int n : spec.sizes) {
            for (int p = 0; p < spec.pairs_per_cell; ++p) cells.push_back({r, n, p, false});
            for (int p = 0; p < spec.iso_pairs_per_cell; ++p) cells.push_back({r, n, p, true});
        }

    std::vector<detail::GeneratedPair> generated(cells.size());
    parallel_for(cells.size(), spec.threads, [&](std::size_t i) {
        const Cell& c = cells[i];
        generated[i] = c.iso ? detail::generate_iso_pair(spec, c.r, c.n, c.pair_idx)
                             : detail::generate_noniso_pair(spec, c.r, c.n, c.pair_idx);
    });

    DatasetManifest manifest;
    manifest.seed = spec.seed;
    if (!cells.empty()) fs::create_directories(out_dir);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& c = cells[i];
        std::string stem = "r" + std::to_string(c.r) + "-n" + std::to_string(c.n) +
                           (c.iso ? "-i" : "-p") + std::to_string(c.pair_idx);
        for (int side = 0; side < 2; ++side) {
            std::string id = stem + (side == 0 ? "a" : "b");
            std::string file = id + ".edges";
            write_graph(side == 0 ? generated[i].a : generated[i].b,
                        (fs::path(out_dir) / file).string());
            manifest.entries.push_back({id, file, c.r, c.n});
        }
        manifest.pairs.push_back({stem + "a", stem + "b", generated[i].truth, generated[i].provenance});
    }
    if (!cells.empty())
        save_manifest(manifest, (fs::path(out_dir) / "manifest.json").string());
    return manifest;
}

// Loaded pair ready for scoring/benchmarking.
struct BenchPair {
    std::string pair_id;
    int r = 0, n = 0;
    Graph a, b;
    GroundTruth truth = GroundTruth::unverified;
    Provenance provenance = Provenance::assumed_distinct;
};

inline std::vector<BenchPair> load_bench_pairs(const DatasetManifest& m, const std::string& base_dir) {
    namespace fs = std::filesystem;
    std::vector<BenchPair> out;
    auto find_entry = [&](const std::string& id) -> const ManifestEntry& {
        for (const auto& e : m.entries)
            if (e.graph_id == id) return e;
        throw ParseError("manifest pair references unknown graph id '" + id + "'");
    };
    for (const auto& p : m.pairs) {
        const ManifestEntry& ea = find_entry(p.a);
        const ManifestEntry& eb = find_entry(p.b);
        BenchPair bp;
        bp.pair_id = ea.graph_id + ":" + eb.graph_id;
        bp.r = ea.r;
        bp.n = ea.n;
        bp.a = read_graph((fs::path(base_dir) / ea.path).string());
        bp.b = read_graph((fs::path(base_dir) / eb.path).string());
        bp.truth = p.truth;
        bp.provenance = p.provenance;
        out.push_back(std::move(bp));
    }
    return out;
}

inline std::vector<LabeledPair> to_labeled_pairs(const std::vector<BenchPair>& pairs) {
    std::vector<LabeledPair> out;
    out.reserve(pairs.size());
    for (const auto& p : pairs) out.push_back({p.a, p.b, p.truth, p.pair_id});
    return out;
}

}  // namespace regraph
