// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 maildelta contributors

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maildelta/corpus.hpp"
#include "maildelta/hybrid.hpp"

namespace maildelta {

/// The experiment grid: train fractions x vector dimensions x neighbor
/// counts x similarity measures, all driven by one seed. The baseline
/// (Bayes-only) row is always evaluated in addition to the listed ks.
struct SweepGrid {
    std::vector<double> fractions = {0.25, 0.3, 0.4};
    std::vector<std::uint32_t> dimensions = {500, 1000, 1500, 2000};
    std::vector<std::uint32_t> ks = {1, 2, 3, 4, 5};
    std::vector<Metric> metrics = {Metric::Euclidean, Metric::Cosine};
    std::uint64_t seed = 0;
    double alpha = 1.0;
    double beta = 1.0;
};

/// Spam is the positive class: fp counts legitimate mail flagged as spam.
struct ConfusionCounts {
    std::uint64_t tp = 0; // spam classified spam
    std::uint64_t tn = 0; // legitimate classified legitimate
    std::uint64_t fp = 0; // legitimate classified spam (false positives)
    std::uint64_t fn = 0; // spam classified legitimate
};

/// Grid coordinates of one result. k is empty for the Bayes-only baseline.
struct CellKey {
    Metric metric = Metric::Euclidean;
    double fraction = 0.0;
    std::uint32_t dimension = 0;
    std::optional<std::uint32_t> k;
};

struct CellResult {
    double legit_accuracy = 0.0; // tn / (tn + fp)
    double spam_accuracy = 0.0;  // tp / (tp + fn)
    ConfusionCounts counts;
    bool skipped = false;
    std::string skip_reason;
};

/// How often some k dominates the baseline on both per-class accuracies,
/// per (metric, fraction, dimension) configuration.
struct ImprovementSummary {
    int improved_configs = 0;
    int total_configs = 0;
    std::map<std::uint32_t, int> per_k; // configs weakly dominated by this k
};

struct EvaluationReport {
    struct Metadata {
        std::uint64_t seed = 0;
        std::string corpus_fingerprint;
        std::uint64_t corpus_spam = 0;
        std::uint64_t corpus_legitimate = 0;
        std::string started_at;  // not rendered: reports must be reproducible
        std::string finished_at;
        double alpha = 1.0;
        double beta = 1.0;
    };

    std::vector<std::pair<CellKey, CellResult>> cells; // grid-axis order
    Metadata metadata;
    ImprovementSummary improvement;

    const CellResult* find(const CellKey& key) const;
};

enum class ReportFormat : std::uint8_t { TextTable = 0, Tsv = 1 };

/// Trains on the split's training side only (feature selection included)
/// and classifies every test document. k is empty for the baseline;
/// k larger than the training set yields a skipped cell, not an error.
CellResult evaluate_cell(const Corpus& corpus, const CorpusSplit& split, std::uint32_t dimension,
                         std::optional<std::uint32_t> k, Metric metric, double alpha, double beta);

/// As evaluate_cell, but over an already trained model.
CellResult evaluate_with_model(const Corpus& corpus, const CorpusSplit& split,
                               const HybridModel& model, std::optional<std::uint32_t> k,
                               Metric metric, double alpha, double beta);

/// One cell per grid point plus the baseline row per (metric, fraction,
/// dimension); deterministic for a fixed seed.
EvaluationReport run_sweep(const Corpus& corpus, const SweepGrid& grid);

/// Renders the per-class accuracy tables (rows k, column groups by V,
/// sub-columns by fraction, column maxima starred) or the flat TSV form.
/// Accuracies carry 4 decimal places; skipped cells render "n/a".
std::string render_report(const EvaluationReport& report, ReportFormat format);

/// ".9923"-style accuracy formatting used by the text tables.
std::string format_accuracy(double value);

} // namespace maildelta
