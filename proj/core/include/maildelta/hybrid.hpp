// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 maildelta contributors

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "maildelta/corpus.hpp"
#include "maildelta/features.hpp"
#include "maildelta/knn.hpp"
#include "maildelta/naive_bayes.hpp"
#include "maildelta/tokenizer.hpp"

namespace maildelta {

/// Weighted combination parameters and the neighborhood settings.
struct HybridConfig {
    double alpha = 1.0; // naive Bayes weight
    double beta = 1.0;  // kNN weight
    std::uint32_t k = 1;
    Metric metric = Metric::Euclidean;
    double threshold = 0.5; // legitimate iff delta_g >= threshold
};

/// Full per-document audit trail: the combined scores and both inputs.
/// delta_g + delta_s = 1.
struct ClassScores {
    double delta_g = 0.0;
    double delta_s = 0.0;
    ProbabilityPair pr_nb;
    ProbabilityPair pr_knn;
};

/// delta_c = (alpha * Pr_nb[c] + beta * Pr_knn[c]) / (alpha + beta).
/// Throws ArgumentError unless both weights are strictly positive.
ClassScores combine_scores(const ProbabilityPair& pr_nb, const ProbabilityPair& pr_knn,
                           double alpha, double beta);

/// Everything needed to classify: vocabulary, Bayes parameters, and the
/// stored training vectors (ascending doc id) for lazy kNN.
struct HybridModel {
    FeatureSet features;
    NaiveBayesModel nb;
    std::vector<TrainingVector> training_vectors;

    KnnIndex index(Metric metric) const { return KnnIndex{training_vectors, metric}; }
};

/// Tokenize-select-vectorize-train over the given training documents.
HybridModel train_model(const Corpus& corpus, const std::vector<std::uint32_t>& train_ids,
                        std::uint32_t dimension, double smoothing = 1.0);

struct Classification {
    Label category = Label::Spam;
    ClassScores scores;
};

/// vectorize -> nb_posterior -> knn vote -> combine; Legitimate iff
/// delta_g >= cfg.threshold.
Classification classify(const HybridModel& model, const TokenSequence& tokens,
                        const HybridConfig& cfg);

/// Same, tokenizing raw message bytes first.
Classification classify(const HybridModel& model, std::string_view raw_bytes,
                        const HybridConfig& cfg);

} // namespace maildelta
