// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 maildelta contributors

#include "maildelta/naive_bayes.hpp"

#include <cmath>

#include "maildelta/errors.hpp"

namespace maildelta {

double NaiveBayesModel::likelihood(Label label, std::uint32_t feature) const {
    const bool spam = label == Label::Spam;
    const auto& counts = spam ? spam_feature_count : legit_feature_count;
    const double total = static_cast<double>(spam ? spam_token_total : legit_token_total);
    return (static_cast<double>(counts.at(feature)) + smoothing) /
           (total + smoothing * static_cast<double>(dimension));
}

NaiveBayesModel train_nb(std::span<const LabeledVector> training, const FeatureSet& features,
                         double smoothing) {
    NaiveBayesModel model;
    model.dimension = features.dimension();
    model.smoothing = smoothing;
    model.spam_feature_count.assign(model.dimension, 0);
    model.legit_feature_count.assign(model.dimension, 0);

    std::uint64_t spam_docs = 0;
    std::uint64_t legit_docs = 0;
    for (const LabeledVector& doc : training) {
        const bool spam = doc.label == Label::Spam;
        (spam ? spam_docs : legit_docs) += 1;
        auto& counts = spam ? model.spam_feature_count : model.legit_feature_count;
        auto& total = spam ? model.spam_token_total : model.legit_token_total;
        for (const auto& [index, count] : doc.vec.entries) {
            counts.at(index) += count;
            total += count;
        }
    }
    if (spam_docs == 0 || legit_docs == 0) {
        throw TrainingError("naive Bayes training needs at least one document per class");
    }

    const double total_docs = static_cast<double>(spam_docs + legit_docs);
    model.prior.spam = static_cast<double>(spam_docs) / total_docs;
    model.prior.legitimate = 1.0 - model.prior.spam;
    return model;
}

ProbabilityPair nb_posterior(const NaiveBayesModel& model, const SparseVector& doc) {
    if (doc.empty()) {
        return model.prior; // no evidence
    }

    // log domain, normalized against the max to avoid underflow
    double log_spam = std::log(model.prior.spam);
    double log_legit = std::log(model.prior.legitimate);
    for (const auto& [index, count] : doc.entries) {
        log_spam += count * std::log(model.likelihood(Label::Spam, index));
        log_legit += count * std::log(model.likelihood(Label::Legitimate, index));
    }

    const double peak = std::max(log_spam, log_legit);
    const double w_spam = std::exp(log_spam - peak);
    const double w_legit = std::exp(log_legit - peak);
    ProbabilityPair posterior;
    posterior.spam = w_spam / (w_spam + w_legit);
    posterior.legitimate = 1.0 - posterior.spam;
    return posterior;
}

Label nb_only_classify(const NaiveBayesModel& model, const SparseVector& doc) {
    return nb_posterior(model, doc).legitimate >= 0.5 ? Label::Legitimate : Label::Spam;
}

} // namespace maildelta
