// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 maildelta contributors

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "maildelta/corpus.hpp"
#include "maildelta/features.hpp"

namespace maildelta {

/// A (Legitimate, Spam) probability pair that sums to 1.
struct ProbabilityPair {
    double legitimate = 0.0;
    double spam = 0.0;
};

/// Multinomial naive Bayes with additive smoothing over the selected
/// features. Raw per-class counts are kept; likelihoods are derived as
/// (count + smoothing) / (class_total + smoothing * V).
struct NaiveBayesModel {
    std::uint32_t dimension = 0;
    double smoothing = 1.0;
    ProbabilityPair prior;
    std::vector<std::uint64_t> spam_feature_count;
    std::vector<std::uint64_t> legit_feature_count;
    std::uint64_t spam_token_total = 0;
    std::uint64_t legit_token_total = 0;

    double likelihood(Label label, std::uint32_t feature) const;
};

struct LabeledVector {
    SparseVector vec;
    Label label = Label::Spam;
};

/// Estimates priors from document counts and likelihoods from summed
/// feature counts. Throws TrainingError when a class has no documents.
NaiveBayesModel train_nb(std::span<const LabeledVector> training, const FeatureSet& features,
                         double smoothing = 1.0);

/// Posterior of one document, log domain, normalized so the pair sums to 1.
/// An empty vector returns the priors.
ProbabilityPair nb_posterior(const NaiveBayesModel& model, const SparseVector& doc);

/// Baseline decision rule: Legitimate iff the legitimate posterior >= 0.5.
Label nb_only_classify(const NaiveBayesModel& model, const SparseVector& doc);

} // namespace maildelta
