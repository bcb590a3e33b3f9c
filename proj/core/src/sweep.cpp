// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 maildelta contributors

#include "maildelta/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <sstream>

#include "maildelta/errors.hpp"

namespace maildelta {

namespace {

std::string iso_utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

// Accuracy of an empty class is vacuously 1.
double safe_ratio(std::uint64_t correct, std::uint64_t total) {
    return total == 0 ? 1.0 : static_cast<double>(correct) / static_cast<double>(total);
}

std::string format_fraction(double fraction) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", fraction);
    return buf;
}

std::string format_k(const std::optional<std::uint32_t>& k) {
    return k ? std::to_string(*k) : "-";
}

} // namespace

std::string format_accuracy(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", value);
    std::string text = buf;
    if (text.size() > 1 && text[0] == '0' && text[1] == '.') {
        text.erase(0, 1); // ".9923" style
    }
    return text;
}

const CellResult* EvaluationReport::find(const CellKey& key) const {
    for (const auto& [cell_key, result] : cells) {
        if (cell_key.metric == key.metric && cell_key.fraction == key.fraction &&
            cell_key.dimension == key.dimension && cell_key.k == key.k) {
            return &result;
        }
    }
    return nullptr;
}

CellResult evaluate_with_model(const Corpus& corpus, const CorpusSplit& split,
                               const HybridModel& model, std::optional<std::uint32_t> k,
                               Metric metric, double alpha, double beta) {
    CellResult cell;
    if (k && *k > model.training_vectors.size()) {
        cell.skipped = true;
        cell.skip_reason = "k=" + std::to_string(*k) + " exceeds training size " +
                           std::to_string(model.training_vectors.size());
        return cell;
    }

    HybridConfig cfg;
    cfg.alpha = alpha;
    cfg.beta = beta;
    cfg.metric = metric;
    if (k) {
        cfg.k = *k;
    }

    for (std::uint32_t id : split.test_ids) {
        const RawEmail& email = corpus.email(id);
        const TokenSequence tokens = tokenize_email(email.bytes);
        Label predicted;
        if (k) {
            predicted = classify(model, tokens, cfg).category;
        } else {
            predicted = nb_only_classify(model.nb, vectorize(tokens, model.features));
        }
        if (email.label == Label::Spam) {
            (predicted == Label::Spam ? cell.counts.tp : cell.counts.fn) += 1;
        } else {
            (predicted == Label::Legitimate ? cell.counts.tn : cell.counts.fp) += 1;
        }
    }
    cell.legit_accuracy = safe_ratio(cell.counts.tn, cell.counts.tn + cell.counts.fp);
    cell.spam_accuracy = safe_ratio(cell.counts.tp, cell.counts.tp + cell.counts.fn);
    return cell;
}

CellResult evaluate_cell(const Corpus& corpus, const CorpusSplit& split, std::uint32_t dimension,
                         std::optional<std::uint32_t> k, Metric metric, double alpha,
                         double beta) {
    const HybridModel model = train_model(corpus, split.train_ids, dimension);
    return evaluate_with_model(corpus, split, model, k, metric, alpha, beta);
}

EvaluationReport run_sweep(const Corpus& corpus, const SweepGrid& grid) {
    if (grid.fractions.empty() || grid.dimensions.empty() || grid.ks.empty() ||
        grid.metrics.empty()) {
        throw ArgumentError("every sweep grid axis must be non-empty");
    }

    EvaluationReport report;
    report.metadata.seed = grid.seed;
    report.metadata.corpus_fingerprint = corpus.fingerprint();
    report.metadata.corpus_spam = corpus.count(Label::Spam);
    report.metadata.corpus_legitimate = corpus.count(Label::Legitimate);
    report.metadata.alpha = grid.alpha;
    report.metadata.beta = grid.beta;
    report.metadata.started_at = iso_utc_now();

    struct TrainedPoint {
        CorpusSplit split;
        HybridModel model;
        CellResult baseline;
    };

    // One split per fraction, one model per (fraction, dimension); the
    // baseline does not depend on the metric and is evaluated once.
    std::vector<std::vector<TrainedPoint>> points(grid.fractions.size());
    for (std::size_t f = 0; f < grid.fractions.size(); ++f) {
        CorpusSplit split = split_corpus(corpus, grid.fractions[f], grid.seed);
        for (std::uint32_t dimension : grid.dimensions) {
            TrainedPoint point{split, train_model(corpus, split.train_ids, dimension), {}};
            point.baseline = evaluate_with_model(corpus, split, point.model, std::nullopt,
                                                 Metric::Euclidean, grid.alpha, grid.beta);
            points[f].push_back(std::move(point));
        }
    }

    for (Metric metric : grid.metrics) {
        for (std::size_t f = 0; f < grid.fractions.size(); ++f) {
            for (std::size_t d = 0; d < grid.dimensions.size(); ++d) {
                const TrainedPoint& point = points[f][d];
                const double fraction = grid.fractions[f];
                const std::uint32_t dimension = grid.dimensions[d];

                report.cells.emplace_back(
                    CellKey{metric, fraction, dimension, std::nullopt}, point.baseline);

                bool any_dominates = false;
                for (std::uint32_t k : grid.ks) {
                    CellResult cell = evaluate_with_model(corpus, point.split, point.model, k,
                                                          metric, grid.alpha, grid.beta);
                    if (!cell.skipped && !point.baseline.skipped &&
                        cell.legit_accuracy >= point.baseline.legit_accuracy &&
                        cell.spam_accuracy >= point.baseline.spam_accuracy) {
                        any_dominates = true;
                        report.improvement.per_k[k] += 1;
                    }
                    report.cells.emplace_back(CellKey{metric, fraction, dimension, k},
                                              std::move(cell));
                }
                report.improvement.total_configs += 1;
                if (any_dominates) {
                    report.improvement.improved_configs += 1;
                }
            }
        }
    }

    report.metadata.finished_at = iso_utc_now();
    return report;
}

namespace {

std::string render_tsv(const EvaluationReport& report) {
    std::ostringstream out;
    out << "metric\tfraction\tV\tk\tlegit_acc\tspam_acc\tfp\tfn\ttp\ttn\n";
    for (const auto& [key, cell] : report.cells) {
        out << to_string(key.metric) << '\t' << format_fraction(key.fraction) << '\t'
            << key.dimension << '\t' << format_k(key.k) << '\t';
        if (cell.skipped) {
            out << "n/a\tn/a\tn/a\tn/a\tn/a\tn/a\n";
            continue;
        }
        char acc[32];
        std::snprintf(acc, sizeof(acc), "%.4f\t%.4f", cell.legit_accuracy, cell.spam_accuracy);
        out << acc << '\t' << cell.counts.fp << '\t' << cell.counts.fn << '\t' << cell.counts.tp
            << '\t' << cell.counts.tn << '\n';
    }
    return std::move(out).str();
}

std::string render_table(const EvaluationReport& report) {
    // recover the grid axes from the cell order
    std::vector<Metric> metrics;
    std::vector<double> fractions;
    std::vector<std::uint32_t> dimensions;
    std::vector<std::optional<std::uint32_t>> krows;
    for (const auto& [key, cell] : report.cells) {
        if (std::find(metrics.begin(), metrics.end(), key.metric) == metrics.end()) {
            metrics.push_back(key.metric);
        }
        if (std::find(fractions.begin(), fractions.end(), key.fraction) == fractions.end()) {
            fractions.push_back(key.fraction);
        }
        if (std::find(dimensions.begin(), dimensions.end(), key.dimension) ==
            dimensions.end()) {
            dimensions.push_back(key.dimension);
        }
        if (std::find(krows.begin(), krows.end(), key.k) == krows.end()) {
            krows.push_back(key.k);
        }
    }
    std::sort(krows.begin(), krows.end(),
              [](const auto& a, const auto& b) { return a.value_or(0) < b.value_or(0); });

    constexpr int kCellWidth = 8;
    std::ostringstream out;
    out << "maildelta sweep report\n";
    out << "seed=" << report.metadata.seed << " corpus=" << report.metadata.corpus_fingerprint
        << " spam=" << report.metadata.corpus_spam
        << " legitimate=" << report.metadata.corpus_legitimate
        << " alpha=" << format_fraction(report.metadata.alpha)
        << " beta=" << format_fraction(report.metadata.beta) << "\n";

    const auto accuracy_of = [](const CellResult& cell, bool legit_table) {
        return legit_table ? cell.legit_accuracy : cell.spam_accuracy;
    };

    for (Metric metric : metrics) {
        for (const bool legit_table : {true, false}) {
            out << '\n' << '[' << to_string(metric) << "] "
                << (legit_table ? "legitimate -> legitimate" : "spam -> spam") << '\n';

            std::ostringstream group_row;
            std::ostringstream frac_row;
            group_row << "k     ";
            frac_row << "      ";
            for (std::uint32_t dimension : dimensions) {
                std::string group = "| V=" + std::to_string(dimension);
                group.resize(2 + static_cast<std::size_t>(kCellWidth) * fractions.size(), ' ');
                group_row << group;
                frac_row << "| ";
                for (double fraction : fractions) {
                    std::string head = format_fraction(fraction);
                    head.resize(kCellWidth, ' ');
                    frac_row << head;
                }
            }
            out << group_row.str() << '\n' << frac_row.str() << '\n';

            // column maxima get a '*'
            std::map<std::pair<std::uint32_t, double>, double> column_max;
            for (std::uint32_t dimension : dimensions) {
                for (double fraction : fractions) {
                    double best = -1.0;
                    for (const auto& k : krows) {
                        const CellResult* cell =
                            report.find(CellKey{metric, fraction, dimension, k});
                        if (cell != nullptr && !cell->skipped) {
                            best = std::max(best, accuracy_of(*cell, legit_table));
                        }
                    }
                    column_max[{dimension, fraction}] = best;
                }
            }

            for (const auto& k : krows) {
                std::string label = format_k(k);
                label.resize(6, ' ');
                out << label;
                for (std::uint32_t dimension : dimensions) {
                    out << "| ";
                    for (double fraction : fractions) {
                        const CellResult* cell =
                            report.find(CellKey{metric, fraction, dimension, k});
                        std::string text = "n/a";
                        if (cell != nullptr && !cell->skipped) {
                            const double value = accuracy_of(*cell, legit_table);
                            text = format_accuracy(value);
                            if (value == column_max[{dimension, fraction}]) {
                                text += '*';
                            }
                        }
                        text.resize(kCellWidth, ' ');
                        out << text;
                    }
                }
                out << '\n';
            }
        }
    }

    out << "\nimprovement (some k at or above baseline on both classes): "
        << report.improvement.improved_configs << " of " << report.improvement.total_configs
        << " configurations\n";
    out << "per-k dominance:";
    for (const auto& [k, count] : report.improvement.per_k) {
        out << " k=" << k << ":" << count << "/" << report.improvement.total_configs;
    }
    out << '\n';
    return std::move(out).str();
}

} // namespace

std::string render_report(const EvaluationReport& report, ReportFormat format) {
    return format == ReportFormat::Tsv ? render_tsv(report) : render_table(report);
}

} // namespace maildelta
