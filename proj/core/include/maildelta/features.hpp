// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 maildelta contributors

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "maildelta/corpus.hpp"
#include "maildelta/tokenizer.hpp"

namespace maildelta {

/// Sparse occurrence-count vector over a FeatureSet. Entries are sorted by
/// strictly increasing feature index and never store a zero count.
struct SparseVector {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;

    bool empty() const { return entries.empty(); }
    std::size_t total_count() const;
};

/// The selected vocabulary: tokens ordered by descending information gain,
/// ties broken by ascending token. |features| can fall short of the
/// requested dimension when the training vocabulary is too small.
struct FeatureSet {
    std::vector<std::string> features;
    std::unordered_map<std::string, std::uint32_t> index;
    std::uint32_t requested_dimension = 0;

    std::uint32_t dimension() const { return static_cast<std::uint32_t>(features.size()); }
    bool clamped() const { return features.size() < requested_dimension; }

    static FeatureSet from_ordered_tokens(std::vector<std::string> tokens,
                                          std::uint32_t requested_dimension);
};

/// One tokenized training document with its category.
struct LabeledTokens {
    TokenSequence tokens;
    Label label = Label::Spam;
};

struct ScoredFeature {
    std::string token;
    double gain = 0.0; // bits
};

/// Binary document-presence information gain of one token, base-2 logs,
/// computed over the given training documents. Zero for tokens absent from
/// every document.
double information_gain(std::span<const LabeledTokens> training, std::string_view token);

/// Every distinct training token with its gain, sorted by descending gain
/// then ascending token.
std::vector<ScoredFeature> rank_features(std::span<const LabeledTokens> training);

/// Top `dimension` tokens of rank_features. Training documents only; a
/// vocabulary smaller than `dimension` yields a clamped FeatureSet.
FeatureSet select_features(std::span<const LabeledTokens> training, std::uint32_t dimension);

/// Raw occurrence counts of in-vocabulary tokens; everything else ignored.
SparseVector vectorize(const TokenSequence& tokens, const FeatureSet& features);

} // namespace maildelta
