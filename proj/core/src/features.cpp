// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 maildelta contributors

#include "maildelta/features.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "maildelta/errors.hpp"

namespace maildelta {

namespace {

// Entropy of a two-way count split, in bits, with 0 log 0 := 0.
double entropy2(double a, double b) {
    const double n = a + b;
    if (n <= 0.0) {
        return 0.0;
    }
    double h = 0.0;
    for (double c : {a, b}) {
        if (c > 0.0) {
            const double p = c / n;
            h -= p * std::log2(p);
        }
    }
    return h;
}

struct PresenceCounts {
    std::uint64_t spam_docs = 0;
    std::uint64_t legit_docs = 0;
    std::uint64_t spam_with = 0;  // documents of the class containing the token
    std::uint64_t legit_with = 0;
};

double gain_from_counts(const PresenceCounts& c) {
    const auto n = static_cast<double>(c.spam_docs + c.legit_docs);
    if (n <= 0.0) {
        return 0.0;
    }
    const double with = static_cast<double>(c.spam_with + c.legit_with);
    const double h_class = entropy2(static_cast<double>(c.spam_docs),
                                    static_cast<double>(c.legit_docs));
    const double h_present = entropy2(static_cast<double>(c.spam_with),
                                      static_cast<double>(c.legit_with));
    const double h_absent = entropy2(static_cast<double>(c.spam_docs - c.spam_with),
                                     static_cast<double>(c.legit_docs - c.legit_with));
    const double gain = h_class - (with / n) * h_present - ((n - with) / n) * h_absent;
    return gain > 0.0 ? gain : 0.0; // clamp -0.0 and rounding dust
}

} // namespace

std::size_t SparseVector::total_count() const {
    std::size_t total = 0;
    for (const auto& [index, count] : entries) {
        total += count;
    }
    return total;
}

FeatureSet FeatureSet::from_ordered_tokens(std::vector<std::string> tokens,
                                           std::uint32_t requested_dimension) {
    FeatureSet fs;
    fs.features = std::move(tokens);
    fs.requested_dimension = requested_dimension;
    fs.index.reserve(fs.features.size());
    for (std::uint32_t i = 0; i < fs.features.size(); ++i) {
        fs.index.emplace(fs.features[i], i);
    }
    return fs;
}

double information_gain(std::span<const LabeledTokens> training, std::string_view token) {
    PresenceCounts counts;
    const std::string needle(token);
    for (const LabeledTokens& doc : training) {
        const bool spam = doc.label == Label::Spam;
        (spam ? counts.spam_docs : counts.legit_docs) += 1;
        const auto& toks = doc.tokens.tokens;
        if (std::find(toks.begin(), toks.end(), needle) != toks.end()) {
            (spam ? counts.spam_with : counts.legit_with) += 1;
        }
    }
    return gain_from_counts(counts);
}

std::vector<ScoredFeature> rank_features(std::span<const LabeledTokens> training) {
    if (training.empty()) {
        throw TrainingError("feature selection needs a non-empty training corpus");
    }

    // document-presence counts per token
    std::unordered_map<std::string, PresenceCounts> presence;
    std::uint64_t spam_docs = 0;
    std::uint64_t legit_docs = 0;
    std::unordered_set<std::string_view> seen;
    for (const LabeledTokens& doc : training) {
        const bool spam = doc.label == Label::Spam;
        (spam ? spam_docs : legit_docs) += 1;
        seen.clear();
        for (const std::string& token : doc.tokens.tokens) {
            if (seen.insert(token).second) {
                auto& c = presence[token];
                (spam ? c.spam_with : c.legit_with) += 1;
            }
        }
    }

    std::vector<ScoredFeature> ranked;
    ranked.reserve(presence.size());
    for (auto& [token, counts] : presence) {
        counts.spam_docs = spam_docs;
        counts.legit_docs = legit_docs;
        ranked.push_back(ScoredFeature{token, gain_from_counts(counts)});
    }
    std::sort(ranked.begin(), ranked.end(), [](const ScoredFeature& a, const ScoredFeature& b) {
        if (a.gain != b.gain) {
            return a.gain > b.gain;
        }
        return a.token < b.token;
    });
    return ranked;
}

FeatureSet select_features(std::span<const LabeledTokens> training, std::uint32_t dimension) {
    if (dimension < 1) {
        throw ArgumentError("feature dimension must be at least 1");
    }
    std::vector<ScoredFeature> ranked = rank_features(training);
    const std::size_t keep = std::min<std::size_t>(dimension, ranked.size());
    std::vector<std::string> tokens;
    tokens.reserve(keep);
    for (std::size_t i = 0; i < keep; ++i) {
        tokens.push_back(std::move(ranked[i].token));
    }
    return FeatureSet::from_ordered_tokens(std::move(tokens), dimension);
}

SparseVector vectorize(const TokenSequence& tokens, const FeatureSet& features) {
    std::unordered_map<std::uint32_t, std::uint32_t> counts;
    for (const std::string& token : tokens.tokens) {
        const auto it = features.index.find(token);
        if (it != features.index.end()) {
            counts[it->second] += 1;
        }
    }
    SparseVector vec;
    vec.entries.assign(counts.begin(), counts.end());
    std::sort(vec.entries.begin(), vec.entries.end());
    return vec;
}

} // namespace maildelta
