// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "regraph/bigint.hpp"
#include "regraph/embedding.hpp"
#include "regraph/errors.hpp"
#include "regraph/graph.hpp"
#include "regraph/parallel.hpp"
#include "regraph/pattern.hpp"
#include "regraph/timeout.hpp"

namespace regraph {

// One pattern's contribution to the non-isomorphism score of a graph pair.
// chi = |raw_a - raw_b| / (2 * C_hat), always in [0, 1/2]; every decision is
// an exact integer comparison, the rational is derived display data.
struct PatternScore {
    std::string pattern_label;
    BigInt count_a;
    BigInt count_b;
    BigInt c_hat;

    BigRat chi() const {
        if (count_a == count_b) return BigRat(0);
        BigInt diff = count_a > count_b ? count_a - count_b : count_b - count_a;
        return BigRat(diff, 2 * c_hat);
    }
};

struct ScoreVector {
    std::vector<PatternScore> components;

    BigRat aggregated() const {
        BigRat best(0);
        for (const auto& c : components) best = std::max(best, c.chi());
        return best;
    }

    // Index of the maximal component, -1 when the vector is all zero.
    int witness_index() const {
        int best = -1;
        BigRat best_chi(0);
        for (std::size_t i = 0; i < components.size(); ++i) {
            BigRat x = components[i].chi();
            if (x > best_chi) {
                best_chi = std::move(x);
                best = static_cast<int>(i);
            }
        }
        return best;
    }
};

// Scores a same-size pair against a pattern list. Pad inputs beforehand when
// sizes differ; patterns larger than the hosts contribute exact zeros (empty
// permutants on both sides).
inline ScoreVector score_pair(const Graph& a, const Graph& b, const std::vector<Pattern>& patterns,
                              const Deadline& deadline = Deadline::never()) {
    if (a.node_count() != b.node_count())
        throw ContractViolation("score_pair requires equal node counts; pad the smaller graph first");
    ScoreVector v;
    v.components.reserve(patterns.size());
    for (const Pattern& p : patterns) {
        PatternScore s;
        s.pattern_label = p.label;
        s.count_a = count_strict_embeddings_anchored(a, p, deadline).raw;
        s.count_b = count_strict_embeddings_anchored(b, p, deadline).raw;
        s.c_hat = falling_factorial(a.node_count(), p.k());
        v.components.push_back(std::move(s));
    }
    return v;
}

enum class Decision { non_isomorphic, inconclusive };

// One-sided: a positive score certifies non-isomorphism, a zero score decides
// nothing.
struct Verdict {
    Decision decision = Decision::inconclusive;
    std::string witness;  // maximal-chi pattern when non-isomorphic
};

inline Verdict verdict(const ScoreVector& v) {
    int w = v.witness_index();
    if (w < 0) return {Decision::inconclusive, ""};
    return {Decision::non_isomorphic, v.components[static_cast<std::size_t>(w)].pattern_label};
}

enum class GroundTruth { isomorphic, non_isomorphic, unverified };

inline const char* ground_truth_name(GroundTruth t) {
    switch (t) {
        case GroundTruth::isomorphic: return "isomorphic";
        case GroundTruth::non_isomorphic: return "non-isomorphic";
        case GroundTruth::unverified: return "unverified";
    }
    return "?";
}

struct LabeledPair {
    Graph a, b;
    GroundTruth truth = GroundTruth::unverified;
    std::string id;
};

namespace detail {

// dist[j][l]: pattern j separates pair l (unequal raw counts).
inline std::vector<std::vector<char>> distinguish_matrix(const std::vector<Pattern>& patterns,
                                                         const std::vector<LabeledPair>& pairs,
                                                         int threads) {
    std::vector<std::vector<char>> dist(patterns.size(),
                                        std::vector<char>(pairs.size(), 0));
    parallel_for(patterns.size() * pairs.size(), threads, [&](std::size_t idx) {
        std::size_t j = idx / pairs.size();
        std::size_t l = idx % pairs.size();
        const Pattern& p = patterns[j];
        const LabeledPair& pr = pairs[l];
        BigInt ca = count_strict_embeddings_anchored(pr.a, p).raw;
        BigInt cb = count_strict_embeddings_anchored(pr.b, p).raw;
        dist[j][l] = (ca != cb) ? 1 : 0;
    });
    return dist;
}

inline BigRat subset_accuracy(const std::vector<std::vector<char>>& dist,
                              const std::vector<LabeledPair>& pairs,
                              const std::vector<int>& chosen) {
    if (pairs.empty()) return BigRat(1);  // vacuous dataset
    long long correct = 0;
    for (std::size_t l = 0; l < pairs.size(); ++l) {
        bool separated = false;
        for (int j : chosen)
            if (dist[static_cast<std::size_t>(j)][l]) {
                separated = true;
                break;
            }
        bool truth_noniso = pairs[l].truth == GroundTruth::non_isomorphic;
        if (separated == truth_noniso) ++correct;
    }
    return BigRat(correct, static_cast<long long>(pairs.size()));
}

inline void require_verified(const std::vector<LabeledPair>& pairs) {
    for (const auto& p : pairs)
        if (p.truth == GroundTruth::unverified)
            throw ContractViolation("dataset contains unverified pairs (filter them first): " + p.id);
}

}  // namespace detail

// Proportion of pairs on which sgn(aggregated score) matches the ground
// truth (0 = isomorphic, 1 = non-isomorphic). Exact rational.
inline BigRat accuracy(const std::vector<Pattern>& model, const std::vector<LabeledPair>& pairs,
                       int threads = 1) {
    detail::require_verified(pairs);
    auto dist = detail::distinguish_matrix(model, pairs, threads);
    std::vector<int> all(model.size());
    for (std::size_t j = 0; j < model.size(); ++j) all[j] = static_cast<int>(j);
    return detail::subset_accuracy(dist, pairs, all);
}

// Greedy forward selection: start from the best single pattern, keep adding
// the candidate that maximizes aggregate accuracy, stop when no candidate
// strictly improves it. Arg-max ties break toward the lowest candidate
// index, so results do not depend on evaluation scheduling.
struct SelectionResult {
    std::vector<int> chosen;               // indices into the candidate list
    std::vector<std::string> chosen_labels;
    std::vector<BigRat> accuracy_trace;    // accuracy after each addition
};

inline SelectionResult forward_select(const std::vector<Pattern>& candidates,
                                      const std::vector<LabeledPair>& pairs, int threads = 1) {
    if (candidates.empty()) throw ContractViolation("forward_select needs at least one candidate");
    detail::require_verified(pairs);
    auto dist = detail::distinguish_matrix(candidates, pairs, threads);

    SelectionResult result;
    std::vector<char> in_model(candidates.size(), 0);
    BigRat current(-1);
    for (;;) {
        int best = -1;
        BigRat best_acc(-1);
        for (std::size_t t = 0; t < candidates.size(); ++t) {
            if (in_model[t]) continue;
            std::vector<int> trial = result.chosen;
            trial.push_back(static_cast<int>(t));
            BigRat acc = detail::subset_accuracy(dist, pairs, trial);
            if (acc > best_acc) {
                best_acc = std::move(acc);
                best = static_cast<int>(t);
            }
        }
        if (best < 0 || (!result.chosen.empty() && best_acc <= current)) break;
        result.chosen.push_back(best);
        result.chosen_labels.push_back(candidates[static_cast<std::size_t>(best)].label);
        result.accuracy_trace.push_back(best_acc);
        in_model[static_cast<std::size_t>(best)] = 1;
        current = best_acc;
    }
    return result;
}

// The shipped default model: the three patterns picked by forward selection
// over a locally generated dataset with r in {3,4,5}, N in 8..40 step 2,
// 20 certified pairs per cell, seed 1 (accuracy trace 0.9755, 0.9990,
// 1.0000). Reproducible via `gen` + `select`; see the README.
inline std::vector<Pattern> default_model() {
    return {make_path(4), make_path(6), make_cycle(3)};
}

// Score report document; counts are exact decimal strings, chi values are
// rendered with 12 significant digits.
inline nlohmann::json score_report_json(const std::string& name_a, const std::string& name_b,
                                        const ScoreVector& scores) {
    nlohmann::json patterns = nlohmann::json::array();
    for (const auto& c : scores.components)
        patterns.push_back({{"pattern", c.pattern_label},
                            {"count_a", c.count_a.str()},
                            {"count_b", c.count_b.str()},
                            {"chi_decimal", decimal_string(c.chi())}});
    Verdict v = verdict(scores);
    return {{"pair", {name_a, name_b}},
            {"patterns", patterns},
            {"aggregated", decimal_string(scores.aggregated())},
            {"verdict", v.decision == Decision::non_isomorphic ? "non-isomorphic" : "inconclusive"},
            {"witness", v.witness}};
}

}  // namespace regraph
