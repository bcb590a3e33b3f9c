// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 maildelta contributors

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maildelta/corpus.hpp"
#include "maildelta/errors.hpp"
#include "maildelta/features.hpp"
#include "maildelta/hybrid.hpp"
#include "maildelta/model_io.hpp"
#include "maildelta/sweep.hpp"
#include "maildelta/synthetic.hpp"
#include "maildelta/tokenizer.hpp"

namespace {

using namespace maildelta;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("cannot read file: " + path);
    }
    return std::move(buf).str();
}

std::vector<Metric> parse_metrics(const std::string& name) {
    if (name == "euclidean") {
        return {Metric::Euclidean};
    }
    if (name == "cosine") {
        return {Metric::Cosine};
    }
    if (name == "both") {
        return {Metric::Euclidean, Metric::Cosine};
    }
    throw ArgumentError("unknown metric: " + name + " (expected euclidean, cosine or both)");
}

ReportFormat parse_format(const std::string& name) {
    if (name == "table") {
        return ReportFormat::TextTable;
    }
    if (name == "tsv") {
        return ReportFormat::Tsv;
    }
    throw ArgumentError("unknown format: " + name + " (expected table or tsv)");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    out << text;
    out.flush();
    if (!out) {
        throw IoError("cannot write output file: " + out_path);
    }
}

std::vector<LabeledTokens> tokenize_split(const Corpus& corpus,
                                          const std::vector<std::uint32_t>& ids) {
    std::vector<LabeledTokens> docs;
    docs.reserve(ids.size());
    for (std::uint32_t id : ids) {
        const RawEmail& email = corpus.email(id);
        docs.push_back(LabeledTokens{tokenize_email(email.bytes), email.label});
    }
    return docs;
}

int run(int argc, char** argv) {
    CLI::App app{"hybrid naive Bayes + kNN spam filter"};
    app.require_subcommand(1);

    // tokenize <file>
    auto* cmd_tokenize = app.add_subcommand("tokenize", "print one token per line");
    std::string tokenize_file;
    cmd_tokenize->add_option("file", tokenize_file, "message file")->required();

    // features
    auto* cmd_features = app.add_subcommand("features", "rank training features by information gain");
    std::string features_corpus;
    std::uint64_t features_seed = 0;
    double features_fraction = 0.25;
    std::uint32_t features_top = 500;
    cmd_features->add_option("--corpus", features_corpus, "corpus directory")->required();
    cmd_features->add_option("--split-seed", features_seed, "train/test split seed");
    cmd_features->add_option("--fraction", features_fraction, "train fraction");
    cmd_features->add_option("--top", features_top, "number of features to print");

    // train
    auto* cmd_train = app.add_subcommand("train", "train and save a model");
    std::string train_corpus;
    std::uint64_t train_seed = 0;
    double train_fraction = 0.25;
    std::uint32_t train_features = 500;
    std::string train_out;
    cmd_train->add_option("--corpus", train_corpus, "corpus directory")->required();
    cmd_train->add_option("--seed", train_seed, "train/test split seed");
    cmd_train->add_option("--fraction", train_fraction, "train fraction");
    cmd_train->add_option("--features", train_features, "vector dimension V");
    cmd_train->add_option("--out", train_out, "model file to write")->required();

    // classify
    auto* cmd_classify = app.add_subcommand("classify", "score one message with a saved model");
    std::string classify_model;
    std::string classify_file;
    std::uint32_t classify_k = 1;
    std::string classify_metric = "euclidean";
    double classify_alpha = 1.0;
    double classify_beta = 1.0;
    cmd_classify->add_option("--model", classify_model, "model file")->required();
    cmd_classify->add_option("--k", classify_k, "neighbor count");
    cmd_classify->add_option("--metric", classify_metric, "euclidean|cosine");
    cmd_classify->add_option("--alpha", classify_alpha, "naive Bayes weight");
    cmd_classify->add_option("--beta", classify_beta, "kNN weight");
    cmd_classify->add_option("file", classify_file, "message file")->required();

    // evaluate (single cell)
    auto* cmd_evaluate = app.add_subcommand("evaluate", "evaluate one grid cell");
    std::string eval_corpus;
    std::uint64_t eval_seed = 0;
    double eval_fraction = 0.25;
    std::uint32_t eval_features = 500;
    std::optional<std::uint32_t> eval_k;
    std::string eval_metric = "euclidean";
    double eval_alpha = 1.0;
    double eval_beta = 1.0;
    std::string eval_format = "tsv";
    std::string eval_out;
    cmd_evaluate->add_option("--corpus", eval_corpus, "corpus directory")->required();
    cmd_evaluate->add_option("--seed", eval_seed, "train/test split seed");
    cmd_evaluate->add_option("--fraction", eval_fraction, "train fraction");
    cmd_evaluate->add_option("--features", eval_features, "vector dimension V");
    cmd_evaluate->add_option("--k", eval_k, "neighbor count (omit for the Bayes-only baseline)");
    cmd_evaluate->add_option("--metric", eval_metric, "euclidean|cosine");
    cmd_evaluate->add_option("--alpha", eval_alpha, "naive Bayes weight");
    cmd_evaluate->add_option("--beta", eval_beta, "kNN weight");
    cmd_evaluate->add_option("--format", eval_format, "table|tsv");
    cmd_evaluate->add_option("--out", eval_out, "write the report here instead of stdout");

    // sweep (full grid)
    auto* cmd_sweep = app.add_subcommand("sweep", "run the full evaluation grid");
    std::string sweep_corpus;
    SweepGrid grid;
    std::string sweep_metric = "both";
    std::string sweep_format = "table";
    std::string sweep_out;
    cmd_sweep->add_option("--corpus", sweep_corpus, "corpus directory")->required();
    cmd_sweep->add_option("--seed", grid.seed, "train/test split seed");
    cmd_sweep->add_option("--fraction", grid.fractions, "train fractions")
        ->delimiter(',')
        ->expected(-1);
    cmd_sweep->add_option("--features", grid.dimensions, "vector dimensions V")
        ->delimiter(',')
        ->expected(-1);
    cmd_sweep->add_option("--k", grid.ks, "neighbor counts")->delimiter(',')->expected(-1);
    cmd_sweep->add_option("--metric", sweep_metric, "euclidean|cosine|both");
    cmd_sweep->add_option("--alpha", grid.alpha, "naive Bayes weight");
    cmd_sweep->add_option("--beta", grid.beta, "kNN weight");
    cmd_sweep->add_option("--format", sweep_format, "table|tsv");
    cmd_sweep->add_option("--out", sweep_out, "write the report here instead of stdout");

    // gen-corpus
    auto* cmd_gen = app.add_subcommand("gen-corpus", "write a synthetic spam/ham corpus");
    std::string gen_out;
    std::uint64_t gen_seed = 0;
    std::uint32_t gen_spam = 300;
    std::uint32_t gen_ham = 600;
    SyntheticProfile profile;
    cmd_gen->add_option("--out", gen_out, "target directory")->required();
    cmd_gen->add_option("--seed", gen_seed, "generator seed");
    cmd_gen->add_option("--spam", gen_spam, "spam message count");
    cmd_gen->add_option("--ham", gen_ham, "ham message count");
    cmd_gen->add_option("--shared-vocab", profile.shared_vocab, "shared vocabulary size");
    cmd_gen->add_option("--spam-vocab", profile.spam_vocab, "spam-only vocabulary size");
    cmd_gen->add_option("--ham-vocab", profile.ham_vocab, "ham-only vocabulary size");
    cmd_gen->add_option("--exclusive-rate", profile.exclusive_rate,
                        "probability of drawing a class-exclusive token");
    cmd_gen->add_option("--topics", profile.topics_per_class,
                        "topic windows per class over the shared pool (<2 disables)");
    cmd_gen->add_option("--topic-tilt", profile.topic_tilt,
                        "geometric weight ratio across topics (1 = uniform)");
    cmd_gen->add_option("--tilt", profile.shared_tilt,
                        "geometric weight ratio of the shared pool without topics");
    cmd_gen->add_option("--min-tokens", profile.min_tokens, "minimum tokens per message");
    cmd_gen->add_option("--max-tokens", profile.max_tokens, "maximum tokens per message");
    cmd_gen->add_option("--max-tags", profile.max_spam_tags, "maximum html tags per spam message");
    cmd_gen->add_flag("--disjoint", profile.disjoint,
                      "use fully disjoint class vocabularies (separable corpus)");

    CLI11_PARSE(app, argc, argv);

    if (cmd_tokenize->parsed()) {
        const TokenSequence tokens = tokenize_email(read_file(tokenize_file));
        for (const std::string& token : tokens.tokens) {
            std::cout << token << '\n';
        }
        return 0;
    }

    if (cmd_features->parsed()) {
        const Corpus corpus = load_corpus(features_corpus);
        const CorpusSplit split = split_corpus(corpus, features_fraction, features_seed);
        const auto training = tokenize_split(corpus, split.train_ids);
        const std::vector<ScoredFeature> ranked = rank_features(training);
        const std::size_t top = std::min<std::size_t>(features_top, ranked.size());
        for (std::size_t i = 0; i < top; ++i) {
            char line[64];
            std::snprintf(line, sizeof(line), "\t%.6f", ranked[i].gain);
            std::cout << ranked[i].token << line << '\n';
        }
        return 0;
    }

    if (cmd_train->parsed()) {
        const Corpus corpus = load_corpus(train_corpus);
        const CorpusSplit split = split_corpus(corpus, train_fraction, train_seed);
        const HybridModel model = train_model(corpus, split.train_ids, train_features);
        save_model(model, train_out);
        std::cout << "trained V=" << model.features.dimension() << " (requested "
                  << train_features << ") on " << split.train_ids.size()
                  << " documents, saved to " << train_out << '\n';
        return 0;
    }

    if (cmd_classify->parsed()) {
        if (classify_metric == "both") {
            throw ArgumentError("classify needs a single metric, not 'both'");
        }
        const HybridModel model = load_model(classify_model);
        HybridConfig cfg;
        cfg.k = classify_k;
        cfg.metric = parse_metrics(classify_metric).at(0);
        cfg.alpha = classify_alpha;
        cfg.beta = classify_beta;
        const Classification result = classify(model, read_file(classify_file), cfg);
        char line[256];
        std::snprintf(line, sizeof(line),
                      "category=%s delta_g=%.6f delta_s=%.6f pr_nb_g=%.6f pr_nb_s=%.6f "
                      "pr_knn_g=%.6f pr_knn_s=%.6f",
                      to_string(result.category), result.scores.delta_g, result.scores.delta_s,
                      result.scores.pr_nb.legitimate, result.scores.pr_nb.spam,
                      result.scores.pr_knn.legitimate, result.scores.pr_knn.spam);
        std::cout << line << '\n';
        return 0;
    }

    if (cmd_evaluate->parsed()) {
        if (eval_metric == "both") {
            throw ArgumentError("evaluate scores a single cell; pick one metric");
        }
        const Metric metric = parse_metrics(eval_metric).at(0);
        const Corpus corpus = load_corpus(eval_corpus);
        const CorpusSplit split = split_corpus(corpus, eval_fraction, eval_seed);
        const CellResult cell =
            evaluate_cell(corpus, split, eval_features, eval_k, metric, eval_alpha, eval_beta);

        EvaluationReport report;
        report.metadata.seed = eval_seed;
        report.metadata.corpus_fingerprint = corpus.fingerprint();
        report.metadata.corpus_spam = corpus.count(Label::Spam);
        report.metadata.corpus_legitimate = corpus.count(Label::Legitimate);
        report.metadata.alpha = eval_alpha;
        report.metadata.beta = eval_beta;
        report.cells.emplace_back(CellKey{metric, eval_fraction, eval_features, eval_k}, cell);
        emit(render_report(report, parse_format(eval_format)), eval_out);
        return 0;
    }

    if (cmd_sweep->parsed()) {
        grid.metrics = parse_metrics(sweep_metric);
        const Corpus corpus = load_corpus(sweep_corpus);
        const EvaluationReport report = run_sweep(corpus, grid);
        emit(render_report(report, parse_format(sweep_format)), sweep_out);
        return 0;
    }

    if (cmd_gen->parsed()) {
        generate_synthetic_corpus(gen_out, gen_seed, gen_spam, gen_ham, profile);
        std::cout << "wrote " << gen_spam << " spam and " << gen_ham << " ham messages under "
                  << gen_out << '\n';
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const maildelta::Error& e) {
        std::cerr << "maildelta: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "maildelta: unexpected error: " << e.what() << '\n';
        return 2;
    }
}
