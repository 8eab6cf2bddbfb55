// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "regraph/dataset.hpp"
#include "regraph/exact_iso.hpp"
#include "regraph/filters.hpp"
#include "regraph/geneo.hpp"
#include "regraph/parallel.hpp"
#include "regraph/pattern.hpp"
#include "regraph/timeout.hpp"
#include "regraph/wl.hpp"

namespace regraph {

enum class Method {
    geneo1,
    geneo2,
    geneo3,
    wl1,
    wl2,
    wl3,
    filter_faster,
    filter_fast,
    filter_could,
    exact
};

inline const char* method_name(Method m) {
    switch (m) {
        case Method::geneo1: return "geneo-1";
        case Method::geneo2: return "geneo-2";
        case Method::geneo3: return "geneo-3";
        case Method::wl1: return "wl-1";
        case Method::wl2: return "wl-2";
        case Method::wl3: return "wl-3";
        case Method::filter_faster: return "filter-faster";
        case Method::filter_fast: return "filter-fast";
        case Method::filter_could: return "filter-could";
        case Method::exact: return "exact";
    }
    return "?";
}

inline std::optional<Method> parse_method(const std::string& s) {
    static const std::vector<Method> all = {Method::geneo1,        Method::geneo2,
                                            Method::geneo3,        Method::wl1,
                                            Method::wl2,           Method::wl3,
                                            Method::filter_faster, Method::filter_fast,
                                            Method::filter_could,  Method::exact};
    for (Method m : all)
        if (s == method_name(m)) return m;
    return std::nullopt;
}

struct BenchConfig {
    std::vector<Method> methods;
    std::map<int, double> timeout_by_r = {{3, 10.0}, {4, 30.0}, {5, 90.0}};
    std::optional<double> timeout_override;
    int reps_small = 3;  // repetitions for cells with N <= reps_max_n
    int reps_max_n = 1000;
    int threads = 1;
    std::vector<Pattern> model;  // geneo-t aggregates the first t entries

    double timeout_for(int r) const {
        if (timeout_override) return *timeout_override;
        auto it = timeout_by_r.find(r);
        return it != timeout_by_r.end() ? it->second : 10.0;
    }
};

// One method on one pair. Timed-out rows count as incorrect when accuracies
// are aggregated.
struct BenchRecord {
    std::string method;
    int r = 0, n = 0;
    std::string pair_id;
    std::string outcome;  // correct | incorrect | timed-out
    double seconds = 0.0;
};

struct BenchCell {
    std::string method;
    int r = 0, n = 0;
    int total = 0, correct = 0, timed_out = 0;
    double mean_seconds = 0.0;
};

struct BenchReport {
    std::vector<BenchRecord> records;
    std::vector<BenchCell> cells;
    nlohmann::json config_echo;
};

namespace detail {

enum class Prediction { non_isomorphic, isomorphic_or_unknown, timed_out };

inline Prediction run_method_once(const BenchPair& pair, Method m, const BenchConfig& cfg,
                                  const Deadline& deadline) {
    auto from_test = [](TestOutcome o) {
        switch (o) {
            case TestOutcome::distinguished: return Prediction::non_isomorphic;
            case TestOutcome::not_distinguished: return Prediction::isomorphic_or_unknown;
            case TestOutcome::timed_out: return Prediction::timed_out;
        }
        return Prediction::timed_out;
    };
    switch (m) {
        case Method::geneo1:
        case Method::geneo2:
        case Method::geneo3: {
            std::size_t t = m == Method::geneo1 ? 1 : (m == Method::geneo2 ? 2 : 3);
            t = std::min(t, cfg.model.size());
            std::vector<Pattern> sub(cfg.model.begin(), cfg.model.begin() + static_cast<long>(t));
            try {
                ScoreVector v = score_pair(pair.a, pair.b, sub, deadline);
                return verdict(v).decision == Decision::non_isomorphic
                           ? Prediction::non_isomorphic
                           : Prediction::isomorphic_or_unknown;
            } catch (const TimedOut&) {
                return Prediction::timed_out;
            }
        }
        case Method::wl1: return from_test(wl_test(pair.a, pair.b, 1, deadline).outcome);
        case Method::wl2: return from_test(wl_test(pair.a, pair.b, 2, deadline).outcome);
        case Method::wl3: return from_test(wl_test(pair.a, pair.b, 3, deadline).outcome);
        case Method::filter_faster: return from_test(filter_test(pair.a, pair.b, FilterLevel::faster, deadline));
        case Method::filter_fast: return from_test(filter_test(pair.a, pair.b, FilterLevel::fast, deadline));
        case Method::filter_could: return from_test(filter_test(pair.a, pair.b, FilterLevel::could, deadline));
        case Method::exact: {
            IsoResult r = exact_isomorphic(pair.a, pair.b, deadline);
            if (r.outcome == IsoOutcome::timed_out) return Prediction::timed_out;
            return r.outcome == IsoOutcome::non_isomorphic ? Prediction::non_isomorphic
                                                           : Prediction::isomorphic_or_unknown;
        }
    }
    return Prediction::timed_out;
}

}  // namespace detail

// Runs every configured method on every pair. Per-pair timing measures method
// execution only; cells with N <= reps_max_n are repeated and the median
// wall time is recorded. Method crashes are logged and recorded as incorrect,
// never abort the run. Pairs with unverified ground truth are scored against
// the assumed-distinct reading (non-isomorphic), as echoed in the report.
inline BenchReport run_bench(const std::vector<BenchPair>& pairs, const BenchConfig& cfg) {
    struct Task {
        std::size_t pair_idx;
        Method method;
    };
    std::vector<Task> tasks;
    for (Method m : cfg.methods)
        for (std::size_t i = 0; i < pairs.size(); ++i) tasks.push_back({i, m});

    std::vector<BenchRecord> records(tasks.size());
    parallel_for(tasks.size(), cfg.threads, [&](std::size_t ti) {
        const Task& task = tasks[ti];
        const BenchPair& pair = pairs[task.pair_idx];
        double timeout = cfg.timeout_for(pair.r);
        int reps = pair.n <= cfg.reps_max_n ? std::max(1, cfg.reps_small) : 1;

        BenchRecord rec;
        rec.method = method_name(task.method);
        rec.r = pair.r;
        rec.n = pair.n;
        rec.pair_id = pair.pair_id;

        std::vector<double> times;
        detail::Prediction pred = detail::Prediction::timed_out;
        bool crashed = false;
        for (int rep = 0; rep < reps; ++rep) {
            auto t0 = std::chrono::steady_clock::now();
            try {
                pred = detail::run_method_once(pair, task.method, cfg, Deadline::after(timeout));
            } catch (const std::exception& e) {
                std::cerr << "bench: " << rec.method << " failed on " << rec.pair_id << ": "
                          << e.what() << "\n";
                crashed = true;
            }
            auto t1 = std::chrono::steady_clock::now();
            times.push_back(std::chrono::duration<double>(t1 - t0).count());
            if (crashed || pred == detail::Prediction::timed_out) break;
        }
        std::sort(times.begin(), times.end());
        rec.seconds = times[times.size() / 2];

        bool truth_noniso = pair.truth != GroundTruth::isomorphic;  // assumed-distinct reads as non-iso
        if (crashed) {
            rec.outcome = "incorrect";
        } else if (pred == detail::Prediction::timed_out) {
            rec.outcome = "timed-out";
        } else {
            bool said_noniso = pred == detail::Prediction::non_isomorphic;
            rec.outcome = said_noniso == truth_noniso ? "correct" : "incorrect";
        }
        records[ti] = std::move(rec);
    });

    std::sort(records.begin(), records.end(), [](const BenchRecord& x, const BenchRecord& y) {
        return std::tie(x.method, x.r, x.n, x.pair_id) < std::tie(y.method, y.r, y.n, y.pair_id);
    });

    BenchReport report;
    report.records = std::move(records);
    std::map<std::tuple<std::string, int, int>, BenchCell> cells;
    for (const auto& rec : report.records) {
        auto& cell = cells[{rec.method, rec.r, rec.n}];
        cell.method = rec.method;
        cell.r = rec.r;
        cell.n = rec.n;
        ++cell.total;
        if (rec.outcome == "correct") ++cell.correct;
        if (rec.outcome == "timed-out") ++cell.timed_out;
        cell.mean_seconds += rec.seconds;
    }
    for (auto& [key, cell] : cells) {
        cell.mean_seconds /= cell.total;
        report.cells.push_back(cell);
    }

    nlohmann::json timeouts;
    for (const auto& [r, t] : cfg.timeout_by_r) timeouts[std::to_string(r)] = t;
    report.config_echo = {
        {"timeouts_by_r", timeouts},
        {"timeout_override", cfg.timeout_override ? nlohmann::json(*cfg.timeout_override)
                                                  : nlohmann::json(nullptr)},
        {"reps_small", cfg.reps_small},
        {"reps_max_n", cfg.reps_max_n},
        {"threads", cfg.threads},
        {"pairs", pairs.size()},
        {"unverified_pairs_assumed_non_isomorphic", true},
    };
    return report;
}

inline std::string bench_records_csv(const BenchReport& report) {
    std::ostringstream os;
    os << "method,r,N,pair_id,outcome,seconds\n";
    for (const auto& rec : report.records) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", rec.seconds);
        os << rec.method << "," << rec.r << "," << rec.n << "," << rec.pair_id << "," << rec.outcome
           << "," << buf << "\n";
    }
    return os.str();
}

// Pivot layout: one row per (method, r), time and accuracy columns per N.
inline std::string bench_summary_csv(const BenchReport& report) {
    std::vector<int> ns;
    for (const auto& c : report.cells)
        if (std::find(ns.begin(), ns.end(), c.n) == ns.end()) ns.push_back(c.n);
    std::sort(ns.begin(), ns.end());

    std::ostringstream os;
    os << "method,r";
    for (int n : ns) os << ",time_N" << n << ",acc_N" << n;
    os << "\n";

    std::vector<std::pair<std::string, int>> rows;
    for (const auto& c : report.cells)
        if (std::find(rows.begin(), rows.end(), std::make_pair(c.method, c.r)) == rows.end())
            rows.emplace_back(c.method, c.r);
    std::sort(rows.begin(), rows.end());

    for (const auto& [method, r] : rows) {
        os << method << "," << r;
        for (int n : ns) {
            const BenchCell* cell = nullptr;
            for (const auto& c : report.cells)
                if (c.method == method && c.r == r && c.n == n) cell = &c;
            if (!cell) {
                os << ",,";
                continue;
            }
            char tbuf[32], abuf[32];
            std::snprintf(tbuf, sizeof tbuf, "%.6f", cell->mean_seconds);
            std::snprintf(abuf, sizeof abuf, "%.3f",
                          static_cast<double>(cell->correct) / cell->total);
            os << "," << tbuf << "," << abuf;
        }
        os << "\n";
    }
    return os.str();
}

inline nlohmann::json bench_report_json(const BenchReport& report) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : report.cells)
        cells.push_back({{"method", c.method},
                         {"r", c.r},
                         {"N", c.n},
                         {"pairs", c.total},
                         {"mean_seconds", c.mean_seconds},
                         {"accuracy", static_cast<double>(c.correct) / c.total},
                         {"timed_out", c.timed_out}});
    return {{"config", report.config_echo}, {"cells", cells}};
}

}  // namespace regraph
