// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 maildelta contributors

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "maildelta/corpus.hpp"
#include "maildelta/features.hpp"
#include "maildelta/naive_bayes.hpp"

namespace maildelta {

enum class Metric : std::uint8_t { Euclidean = 0, Cosine = 1 };

const char* to_string(Metric metric);

/// sqrt of summed squared coordinate differences over the index union.
double euclidean_distance(const SparseVector& u, const SparseVector& v);

/// Normalized dot product; 0 when either vector is empty.
double cosine_similarity(const SparseVector& u, const SparseVector& v);

/// One stored training document.
struct TrainingVector {
    SparseVector vec;
    Label label = Label::Spam;
    std::uint32_t doc_id = 0;
};

/// Non-owning view of the training vectors plus the similarity measure.
/// Vectors must be in ascending doc-id order; searches are exact linear
/// scans.
struct KnnIndex {
    std::span<const TrainingVector> vectors;
    Metric metric = Metric::Euclidean;
};

struct Neighbor {
    std::uint32_t doc_id = 0;
    Label label = Label::Spam;
};

/// The k training documents nearest to q (smallest distance or largest
/// similarity), best first, ties broken by ascending doc id. Throws
/// ArgumentError unless 1 <= k <= index size.
std::vector<Neighbor> knn_search(const KnnIndex& index, const SparseVector& q, std::uint32_t k);

/// Neighborhood vote: (n_G/k, n_S/k). The pair sums to exactly 1. Throws
/// ArgumentError on an empty neighbor list.
ProbabilityPair knn_probability(std::span<const Neighbor> neighbors);

} // namespace maildelta
