// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 maildelta contributors

#include "maildelta/hybrid.hpp"

#include <algorithm>
#include <utility>

#include "maildelta/errors.hpp"

namespace maildelta {

ClassScores combine_scores(const ProbabilityPair& pr_nb, const ProbabilityPair& pr_knn,
                           double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0)) {
        throw ArgumentError("combination weights must be strictly positive");
    }
    ClassScores scores;
    scores.pr_nb = pr_nb;
    scores.pr_knn = pr_knn;
    const double norm = alpha + beta;
    scores.delta_g = (alpha * pr_nb.legitimate + beta * pr_knn.legitimate) / norm;
    scores.delta_s = (alpha * pr_nb.spam + beta * pr_knn.spam) / norm;
    return scores;
}

HybridModel train_model(const Corpus& corpus, const std::vector<std::uint32_t>& train_ids,
                        std::uint32_t dimension, double smoothing) {
    std::vector<std::uint32_t> ids = train_ids;
    std::sort(ids.begin(), ids.end()); // the kNN index wants ascending doc ids

    std::vector<LabeledTokens> tokenized;
    tokenized.reserve(ids.size());
    for (std::uint32_t id : ids) {
        const RawEmail& email = corpus.email(id);
        tokenized.push_back(LabeledTokens{tokenize_email(email.bytes), email.label});
    }

    HybridModel model;
    model.features = select_features(tokenized, dimension);

    std::vector<LabeledVector> vectors;
    vectors.reserve(tokenized.size());
    model.training_vectors.reserve(tokenized.size());
    for (std::size_t i = 0; i < tokenized.size(); ++i) {
        SparseVector vec = vectorize(tokenized[i].tokens, model.features);
        vectors.push_back(LabeledVector{vec, tokenized[i].label});
        model.training_vectors.push_back(
            TrainingVector{std::move(vec), tokenized[i].label, ids[i]});
    }
    model.nb = train_nb(vectors, model.features, smoothing);
    return model;
}

Classification classify(const HybridModel& model, const TokenSequence& tokens,
                        const HybridConfig& cfg) {
    const SparseVector doc = vectorize(tokens, model.features);
    const ProbabilityPair pr_nb = nb_posterior(model.nb, doc);
    const std::vector<Neighbor> neighbors = knn_search(model.index(cfg.metric), doc, cfg.k);
    const ProbabilityPair pr_knn = knn_probability(neighbors);

    Classification result;
    result.scores = combine_scores(pr_nb, pr_knn, cfg.alpha, cfg.beta);
    result.category =
        result.scores.delta_g >= cfg.threshold ? Label::Legitimate : Label::Spam;
    return result;
}

Classification classify(const HybridModel& model, std::string_view raw_bytes,
                        const HybridConfig& cfg) {
    return classify(model, tokenize_email(raw_bytes), cfg);
}

} // namespace maildelta
