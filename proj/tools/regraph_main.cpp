// SPDX-License-Identifier: Apache-2.0
//
// regraph: r-regular graph non-isomorphism testing and benchmarking.
//
// Subcommands:
//   gen     generate certified pair datasets of random r-regular graphs
//   score   non-isomorphism score of two graphs against a pattern roster
//   select  greedy forward selection of patterns over a dataset
//   bench   run methods x pairs with timeouts, emit CSV/JSON reports
//   wl      Weisfeiler-Lehman test of dimension 1, 2 or 3
//   iso     exact isomorphism oracle

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "regraph/bench.hpp"
#include "regraph/dataset.hpp"
#include "regraph/exact_iso.hpp"
#include "regraph/geneo.hpp"
#include "regraph/graph_io.hpp"
#include "regraph/parallel.hpp"
#include "regraph/pattern.hpp"
#include "regraph/wl.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// "8..40:2", "8..40", "50,100,200" or "64".
std::vector<int> parse_int_spec(const std::string& spec) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto dots = part.find("..");
        if (dots == std::string::npos) {
            out.push_back(std::stoi(part));
            continue;
        }
        int start = std::stoi(part.substr(0, dots));
        std::string rest = part.substr(dots + 2);
        int step = 1;
        auto colon = rest.find(':');
        if (colon != std::string::npos) {
            step = std::stoi(rest.substr(colon + 1));
            rest = rest.substr(0, colon);
        }
        int end = std::stoi(rest);
        if (step <= 0) throw regraph::ContractViolation("step must be positive in '" + part + "'");
        for (int v = start; v <= end; v += step) out.push_back(v);
    }
    if (out.empty()) throw regraph::ContractViolation("empty size/degree spec '" + spec + "'");
    return out;
}

std::vector<regraph::Pattern> patterns_from_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw regraph::ParseError("cannot open model '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw regraph::ParseError("invalid model JSON in '" + path + "': " + e.what());
    }
    if (doc.is_object() && doc.contains("patterns")) return regraph::roster_from_json(doc["patterns"]);
    return regraph::roster_from_json(doc);  // plain roster files work too
}

struct GlobalOpts {
    std::uint64_t seed = 1;
    bool serial = false;
    int threads = 0;  // 0: REGRAPH_THREADS env or hardware concurrency
    std::optional<double> timeout_secs;
    std::string roster_file;
    std::string out_dir = ".";
    std::string format = "table";

    int effective_threads() const { return serial ? 1 : (threads > 0 ? threads : regraph::default_thread_count()); }

    std::vector<regraph::Pattern> roster() const {
        return roster_file.empty() ? regraph::default_roster() : regraph::load_roster(roster_file);
    }
};

void print_score_table(const regraph::ScoreVector& sv) {
    std::printf("%-10s %16s %16s %16s\n", "pattern", "count_a", "count_b", "chi");
    for (const auto& c : sv.components)
        std::printf("%-10s %16s %16s %16s\n", c.pattern_label.c_str(), c.count_a.str().c_str(),
                    c.count_b.str().c_str(), regraph::decimal_string(c.chi()).c_str());
    regraph::Verdict v = regraph::verdict(sv);
    std::printf("aggregated: %s\n", regraph::decimal_string(sv.aggregated()).c_str());
    if (v.decision == regraph::Decision::non_isomorphic)
        std::printf("verdict: non-isomorphic (witness %s)\n", v.witness.c_str());
    else
        std::printf("verdict: inconclusive\n");
}

int cmd_gen(const GlobalOpts& g, const std::string& r_spec, const std::string& size_spec, int pairs,
            int iso_pairs, int verify_max, double certify_timeout) {
    regraph::DatasetSpec spec;
    spec.degrees = parse_int_spec(r_spec);
    spec.sizes = parse_int_spec(size_spec);
    spec.pairs_per_cell = pairs;
    spec.iso_pairs_per_cell = iso_pairs;
    spec.seed = g.seed;
    spec.verify_max_n = verify_max;
    spec.certify_timeout_secs = certify_timeout;
    spec.threads = g.effective_threads();
    regraph::DatasetManifest m = regraph::generate_pair_dataset(spec, g.out_dir);
    if (m.entries.empty()) {
        std::cout << "empty dataset: no files written\n";
        return 0;
    }
    std::cout << (fs::path(g.out_dir) / "manifest.json").string() << "\n";
    return 0;
}

int cmd_score(const GlobalOpts& g, const std::string& file_a, const std::string& file_b,
              const std::string& model_file, bool pad) {
    regraph::Graph a = regraph::read_graph(file_a);
    regraph::Graph b = regraph::read_graph(file_b);
    if (a.node_count() != b.node_count()) {
        if (!pad)
            throw regraph::ContractViolation("graphs differ in size (" +
                                             std::to_string(a.node_count()) + " vs " +
                                             std::to_string(b.node_count()) +
                                             "); rerun with --pad to add isolated nodes");
        int n = std::max(a.node_count(), b.node_count());
        a = a.padded(n);
        b = b.padded(n);
    }
    std::vector<regraph::Pattern> patterns =
        model_file.empty() ? g.roster() : patterns_from_model_file(model_file);
    regraph::ScoreVector sv = regraph::score_pair(a, b, patterns);
    json doc = regraph::score_report_json(file_a, file_b, sv);
    if (g.format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        print_score_table(sv);
    if (g.out_dir != ".") {
        fs::create_directories(g.out_dir);
        std::ofstream out(fs::path(g.out_dir) / "score.json");
        out << doc.dump(2) << "\n";
    }
    return 0;
}

int cmd_select(const GlobalOpts& g, const std::string& manifest_path) {
    regraph::DatasetManifest m = regraph::load_manifest(manifest_path);
    auto bench_pairs = regraph::load_bench_pairs(m, fs::path(manifest_path).parent_path().string());
    for (const auto& p : bench_pairs)
        if (p.truth == regraph::GroundTruth::unverified) {
            std::cerr << "manifest contains unverified pairs (e.g. " << p.pair_id
                      << "); selection needs ground truth\n";
            return 1;
        }
    auto pairs = regraph::to_labeled_pairs(bench_pairs);
    std::vector<regraph::Pattern> candidates = g.roster();
    regraph::SelectionResult sel = regraph::forward_select(candidates, pairs, g.effective_threads());

    json trace = json::array();
    for (const auto& acc : sel.accuracy_trace) trace.push_back(regraph::to_double(acc));
    std::vector<regraph::Pattern> chosen;
    for (int idx : sel.chosen) chosen.push_back(candidates[static_cast<std::size_t>(idx)]);
    json model = {{"patterns", regraph::roster_to_json(chosen)}, {"accuracy_trace", trace}};

    fs::create_directories(g.out_dir);
    std::string model_path = (fs::path(g.out_dir) / "model.json").string();
    std::ofstream out(model_path);
    out << model.dump(2) << "\n";

    if (g.format == "json") {
        std::cout << json({{"chosen", sel.chosen_labels}, {"accuracy_trace", trace},
                           {"model_file", model_path}})
                         .dump(2)
                  << "\n";
    } else {
        std::printf("%-6s %-10s %s\n", "step", "pattern", "accuracy");
        for (std::size_t i = 0; i < sel.chosen_labels.size(); ++i)
            std::printf("%-6zu %-10s %s\n", i + 1, sel.chosen_labels[i].c_str(),
                        regraph::decimal_string(sel.accuracy_trace[i], 6).c_str());
        std::printf("model written to %s\n", model_path.c_str());
    }
    return 0;
}

int cmd_bench(const GlobalOpts& g, const std::string& manifest_path,
              const std::vector<std::string>& method_names, const std::string& model_file,
              int reps) {
    regraph::BenchConfig cfg;
    for (const auto& name : method_names) {
        auto m = regraph::parse_method(name);
        if (!m) throw regraph::ContractViolation("unknown method '" + name + "'");
        cfg.methods.push_back(*m);
    }
    if (cfg.methods.empty()) throw regraph::ContractViolation("no methods given");
    cfg.timeout_override = g.timeout_secs;
    cfg.reps_small = reps;
    cfg.threads = g.effective_threads();
    cfg.model = model_file.empty() ? regraph::default_model() : patterns_from_model_file(model_file);

    regraph::DatasetManifest m = regraph::load_manifest(manifest_path);
    auto pairs = regraph::load_bench_pairs(m, fs::path(manifest_path).parent_path().string());
    regraph::BenchReport report = regraph::run_bench(pairs, cfg);

    fs::create_directories(g.out_dir);
    {
        std::ofstream out(fs::path(g.out_dir) / "bench_pairs.csv");
        out << regraph::bench_records_csv(report);
    }
    {
        std::ofstream out(fs::path(g.out_dir) / "bench_summary.csv");
        out << regraph::bench_summary_csv(report);
    }
    {
        std::ofstream out(fs::path(g.out_dir) / "bench_report.json");
        out << regraph::bench_report_json(report).dump(2) << "\n";
    }

    if (g.format == "json")
        std::cout << regraph::bench_report_json(report).dump(2) << "\n";
    else if (g.format == "csv")
        std::cout << regraph::bench_summary_csv(report);
    else {
        std::printf("%-14s %3s %6s %8s %10s %9s\n", "method", "r", "N", "pairs", "mean_s", "accuracy");
        for (const auto& c : report.cells)
            std::printf("%-14s %3d %6d %8d %10.4f %9.3f\n", c.method.c_str(), c.r, c.n, c.total,
                        c.mean_seconds, static_cast<double>(c.correct) / c.total);
    }
    return 0;
}

int cmd_wl(const GlobalOpts& g, int k, const std::string& file_a, const std::string& file_b) {
    regraph::Graph a = regraph::read_graph(file_a);
    regraph::Graph b = regraph::read_graph(file_b);
    regraph::Deadline dl =
        g.timeout_secs ? regraph::Deadline::after(*g.timeout_secs) : regraph::Deadline::never();
    regraph::WlResult res = regraph::wl_test(a, b, k, dl);
    if (g.format == "json")
        std::cout << json({{"k", k}, {"outcome", regraph::outcome_name(res.outcome)}}).dump(2)
                  << "\n";
    else
        std::cout << regraph::outcome_name(res.outcome) << "\n";
    return 0;
}

int cmd_iso(const GlobalOpts& g, const std::string& file_a, const std::string& file_b) {
    regraph::Graph a = regraph::read_graph(file_a);
    regraph::Graph b = regraph::read_graph(file_b);
    regraph::Deadline dl =
        g.timeout_secs ? regraph::Deadline::after(*g.timeout_secs) : regraph::Deadline::never();
    regraph::IsoResult res = regraph::exact_isomorphic(a, b, dl);
    if (g.format == "json") {
        json doc = {{"outcome", regraph::iso_outcome_name(res.outcome)}};
        if (res.mapping) doc["mapping"] = res.mapping->sigma();
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << regraph::iso_outcome_name(res.outcome) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GENEO-based non-isomorphism testing for r-regular graphs"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "RNG seed");
    app.add_flag("--serial", g.serial, "force single-threaded execution");
    app.add_option("--threads", g.threads, "worker count (default: REGRAPH_THREADS or CPU count)");
    double timeout_raw = -1;
    app.add_option("--timeout-secs", timeout_raw, "wall-clock timeout per pair/method");
    app.add_option("--roster", g.roster_file, "pattern roster JSON file");
    app.add_option("--out", g.out_dir, "output directory");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));

    auto* gen = app.add_subcommand("gen", "generate a certified pair dataset");
    std::string gen_r = "3", gen_sizes;
    int gen_pairs = 10, gen_iso_pairs = 0, gen_verify_max = 64;
    double gen_certify_timeout = 30.0;
    gen->add_option("--r", gen_r, "degrees, e.g. 3 or 3,4,5");
    gen->add_option("--sizes", gen_sizes, "sizes, e.g. 8..40:2 or 50,100,200")->required();
    gen->add_option("--pairs", gen_pairs, "non-isomorphic pairs per (r,N) cell");
    gen->add_option("--iso-pairs", gen_iso_pairs, "relabeled isomorphic pairs per cell");
    gen->add_option("--verify-max", gen_verify_max, "certify non-isomorphism up to this N");
    gen->add_option("--certify-timeout", gen_certify_timeout, "oracle budget per pair (seconds)");

    auto* score = app.add_subcommand("score", "score two graphs against a roster");
    std::string score_a, score_b, score_model;
    bool score_pad = false;
    score->add_option("graph_a", score_a)->required();
    score->add_option("graph_b", score_b)->required();
    score->add_option("--model", score_model, "model file from `select` (overrides --roster)");
    score->add_flag("--pad", score_pad, "pad the smaller graph with isolated nodes");

    auto* select = app.add_subcommand("select", "forward-select patterns over a dataset");
    std::string select_manifest;
    select->add_option("--manifest", select_manifest)->required();

    auto* bench = app.add_subcommand("bench", "run methods against a dataset");
    std::string bench_manifest, bench_model;
    std::vector<std::string> bench_methods;
    int bench_reps = 3;
    bench->add_option("--manifest", bench_manifest)->required();
    bench->add_option("--methods", bench_methods, "comma-separated method list")
        ->required()
        ->delimiter(',');
    bench->add_option("--model", bench_model, "model file for geneo-t methods");
    bench->add_option("--reps", bench_reps, "timing repetitions for N <= 1000");

    auto* wl = app.add_subcommand("wl", "Weisfeiler-Lehman test");
    int wl_k = 1;
    std::string wl_a, wl_b;
    wl->add_option("--k", wl_k, "dimension")->check(CLI::Range(1, 3));
    wl->add_option("graph_a", wl_a)->required();
    wl->add_option("graph_b", wl_b)->required();

    auto* iso = app.add_subcommand("iso", "exact isomorphism test");
    std::string iso_a, iso_b;
    iso->add_option("graph_a", iso_a)->required();
    iso->add_option("graph_b", iso_b)->required();

    // Global flags are accepted after the subcommand too.
    for (auto* sub : {gen, score, select, bench, wl, iso}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (timeout_raw > 0) g.timeout_secs = timeout_raw;

    try {
        if (gen->parsed())
            return cmd_gen(g, gen_r, gen_sizes, gen_pairs, gen_iso_pairs, gen_verify_max,
                           gen_certify_timeout);
        if (score->parsed()) return cmd_score(g, score_a, score_b, score_model, score_pad);
        if (select->parsed()) return cmd_select(g, select_manifest);
        if (bench->parsed()) return cmd_bench(g, bench_manifest, bench_methods, bench_model, bench_reps);
        if (wl->parsed()) return cmd_wl(g, wl_k, wl_a, wl_b);
        if (iso->parsed()) return cmd_iso(g, iso_a, iso_b);
    } catch (const regraph::ContractViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const regraph::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
