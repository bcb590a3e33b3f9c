// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 maildelta contributors

#include "maildelta/knn.hpp"

#include <algorithm>
#include <cmath>

#include "maildelta/errors.hpp"

namespace maildelta {

const char* to_string(Metric metric) {
    return metric == Metric::Euclidean ? "euclidean" : "cosine";
}

namespace {

// Sum of squared differences over the index union; exact for count vectors.
double squared_distance(const SparseVector& u, const SparseVector& v) {
    double sum = 0.0;
    auto ui = u.entries.begin();
    auto vi = v.entries.begin();
    while (ui != u.entries.end() || vi != v.entries.end()) {
        double diff = 0.0;
        if (vi == v.entries.end() || (ui != u.entries.end() && ui->first < vi->first)) {
            diff = static_cast<double>(ui->second);
            ++ui;
        } else if (ui == u.entries.end() || vi->first < ui->first) {
            diff = static_cast<double>(vi->second);
            ++vi;
        } else {
            diff = static_cast<double>(ui->second) - static_cast<double>(vi->second);
            ++ui;
            ++vi;
        }
        sum += diff * diff;
    }
    return sum;
}

double squared_norm(const SparseVector& u) {
    double sum = 0.0;
    for (const auto& [index, count] : u.entries) {
        const double c = static_cast<double>(count);
        sum += c * c;
    }
    return sum;
}

double dot(const SparseVector& u, const SparseVector& v) {
    double sum = 0.0;
    auto ui = u.entries.begin();
    auto vi = v.entries.begin();
    while (ui != u.entries.end() && vi != v.entries.end()) {
        if (ui->first < vi->first) {
            ++ui;
        } else if (vi->first < ui->first) {
            ++vi;
        } else {
            sum += static_cast<double>(ui->second) * static_cast<double>(vi->second);
            ++ui;
            ++vi;
        }
    }
    return sum;
}

} // namespace

double euclidean_distance(const SparseVector& u, const SparseVector& v) {
    return std::sqrt(squared_distance(u, v));
}

double cosine_similarity(const SparseVector& u, const SparseVector& v) {
    if (u.empty() || v.empty()) {
        return 0.0; // the angle is undefined at the zero vector
    }
    return dot(u, v) / std::sqrt(squared_norm(u) * squared_norm(v));
}

std::vector<Neighbor> knn_search(const KnnIndex& index, const SparseVector& q, std::uint32_t k) {
    const std::size_t n = index.vectors.size();
    if (k < 1 || k > n) {
        throw ArgumentError("k must lie between 1 and the training set size");
    }

    // (key, position); smaller key is nearer, ties go to the lower doc id
    std::vector<std::pair<double, std::uint32_t>> keyed(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        const SparseVector& vec = index.vectors[i].vec;
        const double key = index.metric == Metric::Euclidean ? squared_distance(q, vec)
                                                             : -cosine_similarity(q, vec);
        keyed[i] = {key, i};
    }
    std::partial_sort(keyed.begin(), keyed.begin() + k, keyed.end());

    std::vector<Neighbor> neighbors;
    neighbors.reserve(k);
    for (std::uint32_t i = 0; i < k; ++i) {
        const TrainingVector& tv = index.vectors[keyed[i].second];
        neighbors.push_back(Neighbor{tv.doc_id, tv.label});
    }
    return neighbors;
}

ProbabilityPair knn_probability(std::span<const Neighbor> neighbors) {
    if (neighbors.empty()) {
        throw ArgumentError("the neighbor list must not be empty");
    }
    std::size_t spam = 0;
    for (const Neighbor& n : neighbors) {
        if (n.label == Label::Spam) {
            ++spam;
        }
    }
    ProbabilityPair vote;
    vote.spam = static_cast<double>(spam) / static_cast<double>(neighbors.size());
    vote.legitimate = 1.0 - vote.spam;
    return vote;
}

} // namespace maildelta
