// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 maildelta contributors

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "maildelta/errors.hpp"
#include "maildelta/hybrid.hpp"
#include "maildelta/knn.hpp"
#include "maildelta/naive_bayes.hpp"
#include "test_util.hpp"

using namespace maildelta;

namespace {

SparseVector sparse(std::vector<std::pair<std::uint32_t, std::uint32_t>> entries) {
    return SparseVector{std::move(entries)};
}

// random valid sparse vector over `dims` coordinates with counts in [0, 4]
SparseVector random_vector(std::mt19937_64& rng, std::uint32_t dims) {
    SparseVector vec;
    for (std::uint32_t i = 0; i < dims; ++i) {
        const auto count = static_cast<std::uint32_t>(rng() % 5);
        if (count > 0) {
            vec.entries.emplace_back(i, count);
        }
    }
    return vec;
}

std::vector<double> dense(const SparseVector& vec, std::uint32_t dims) {
    std::vector<double> out(dims, 0.0);
    for (const auto& [index, count] : vec.entries) {
        out[index] = count;
    }
    return out;
}

NaiveBayesModel two_doc_model() {
    // one spam document [win, money], one legitimate [meeting, notes], V=4
    const FeatureSet fs =
        FeatureSet::from_ordered_tokens({"win", "money", "meeting", "notes"}, 4);
    const std::vector<LabeledVector> docs = {
        {vectorize(TokenSequence{{"win", "money"}, 0}, fs), Label::Spam},
        {vectorize(TokenSequence{{"meeting", "notes"}, 0}, fs), Label::Legitimate},
    };
    return train_nb(docs, fs);
}

} // namespace

TEST_CASE("train_nb: hand-computed add-one smoothing") {
    const NaiveBayesModel model = two_doc_model();
    CHECK(model.prior.spam == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(model.prior.legitimate == doctest::Approx(0.5).epsilon(1e-15));
    // p(win|S) = (1+1)/(2+4), p(win|G) = (0+1)/(2+4)
    CHECK(model.likelihood(Label::Spam, 0) == doctest::Approx(2.0 / 6.0).epsilon(1e-15));
    CHECK(model.likelihood(Label::Legitimate, 0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("train_nb: identical documents in both classes give symmetric likelihoods") {
    const FeatureSet fs = FeatureSet::from_ordered_tokens({"aa", "bb"}, 2);
    const SparseVector same = sparse({{0, 2}, {1, 1}});
    const std::vector<LabeledVector> docs = {
        {same, Label::Spam},
        {same, Label::Legitimate},
    };
    const NaiveBayesModel model = train_nb(docs, fs);
    for (std::uint32_t f = 0; f < 2; ++f) {
        CHECK(model.likelihood(Label::Spam, f) == model.likelihood(Label::Legitimate, f));
    }
}

TEST_CASE("train_nb: doubling every document preserves priors and count ratios") {
    const FeatureSet fs = FeatureSet::from_ordered_tokens({"aa", "bb", "cc"}, 3);
    std::vector<LabeledVector> docs = {
        {sparse({{0, 2}}), Label::Spam},
        {sparse({{1, 1}, {2, 3}}), Label::Legitimate},
    };
    const NaiveBayesModel base = train_nb(docs, fs);

    std::vector<LabeledVector> doubled = docs;
    doubled.insert(doubled.end(), docs.begin(), docs.end());
    const NaiveBayesModel twice = train_nb(doubled, fs);

    CHECK(twice.prior.spam == base.prior.spam);
    CHECK(twice.prior.legitimate == base.prior.legitimate);
    CHECK(twice.spam_token_total == 2 * base.spam_token_total);
    CHECK(twice.legit_token_total == 2 * base.legit_token_total);
    for (std::uint32_t f = 0; f < 3; ++f) {
        CHECK(twice.spam_feature_count[f] == 2 * base.spam_feature_count[f]);
        CHECK(twice.legit_feature_count[f] == 2 * base.legit_feature_count[f]);
        // unsmoothed ratios are scale-invariant; the smoothed likelihoods
        // shift slightly because the additive constant stays fixed
        if (base.spam_token_total > 0 && base.spam_feature_count[f] > 0) {
            const double base_ratio = static_cast<double>(base.spam_feature_count[f]) /
                                      static_cast<double>(base.spam_token_total);
            const double twice_ratio = static_cast<double>(twice.spam_feature_count[f]) /
                                       static_cast<double>(twice.spam_token_total);
            CHECK(base_ratio == twice_ratio);
        }
    }
}

TEST_CASE("train_nb: a class without documents is a training error") {
    const FeatureSet fs = FeatureSet::from_ordered_tokens({"aa"}, 1);
    const std::vector<LabeledVector> docs = {{sparse({{0, 1}}), Label::Spam}};
    CHECK_THROWS_AS(train_nb(docs, fs), TrainingError);
}

TEST_CASE("nb_posterior: hand-computed posterior for [win]") {
    const NaiveBayesModel model = two_doc_model();
    const ProbabilityPair p = nb_posterior(model, sparse({{0, 1}}));
    CHECK(p.spam == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(p.legitimate == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(p.spam + p.legitimate == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("nb_posterior: an empty document returns the priors") {
    const FeatureSet fs = FeatureSet::from_ordered_tokens({"aa"}, 1);
    const std::vector<LabeledVector> docs = {
        {sparse({{0, 1}}), Label::Spam},
        {sparse({{0, 1}}), Label::Legitimate},
        {sparse({{0, 2}}), Label::Legitimate},
    };
    const NaiveBayesModel model = train_nb(docs, fs);
    const ProbabilityPair p = nb_posterior(model, SparseVector{});
    CHECK(p.spam == model.prior.spam);
    CHECK(p.legitimate == model.prior.legitimate);
}

TEST_CASE("nb_posterior: extreme repetition stays in (0.5, 1] without overflow") {
    const NaiveBayesModel model = two_doc_model();
    const ProbabilityPair p = nb_posterior(model, sparse({{0, 1000}}));
    CHECK(p.spam > 0.5);
    CHECK(p.spam <= 1.0);
    CHECK(std::isfinite(p.spam));
    CHECK(std::isfinite(p.legitimate));
}

TEST_CASE("nb_posterior: random models normalize to 1") {
    std::mt19937_64 rng(29);
    for (int round = 0; round < 1000; ++round) {
        const std::uint32_t dims = 1 + rng() % 8;
        std::vector<std::string> vocab;
        for (std::uint32_t i = 0; i < dims; ++i) {
            vocab.push_back("f" + std::to_string(i));
        }
        const FeatureSet fs = FeatureSet::from_ordered_tokens(vocab, dims);
        std::vector<LabeledVector> docs;
        const std::size_t n = 2 + rng() % 6;
        for (std::size_t i = 0; i < n; ++i) {
            docs.push_back({random_vector(rng, dims),
                            i % 2 == 0 ? Label::Spam : Label::Legitimate});
        }
        const NaiveBayesModel model = train_nb(docs, fs);
        const ProbabilityPair p = nb_posterior(model, random_vector(rng, dims));
        CHECK(std::abs(p.spam + p.legitimate - 1.0) <= 1e-12);
        CHECK(p.spam >= 0.0);
        CHECK(p.legitimate >= 0.0);
    }
}

TEST_CASE("nb_only_classify: threshold convention") {
    // symmetric model, posterior exactly (0.5, 0.5)
    const FeatureSet fs = FeatureSet::from_ordered_tokens({"aa"}, 1);
    const std::vector<LabeledVector> docs = {
        {sparse({{0, 1}}), Label::Spam},
        {sparse({{0, 1}}), Label::Legitimate},
    };
    const NaiveBayesModel model = train_nb(docs, fs);
    CHECK(nb_only_classify(model, sparse({{0, 1}})) == Label::Legitimate);
}

TEST_CASE("nb_only_classify: empty document follows the class priors") {
    // 219 legitimate vs 100 spam documents, the 10950:5000 mix scaled down
    const FeatureSet fs = FeatureSet::from_ordered_tokens({"aa"}, 1);
    std::vector<LabeledVector> docs;
    for (int i = 0; i < 100; ++i) {
        docs.push_back({sparse({{0, 1}}), Label::Spam});
    }
    for (int i = 0; i < 219; ++i) {
        docs.push_back({sparse({{0, 1}}), Label::Legitimate});
    }
    const NaiveBayesModel model = train_nb(docs, fs);
    CHECK(model.prior.legitimate == doctest::Approx(219.0 / 319.0).epsilon(1e-12));
    CHECK(nb_only_classify(model, SparseVector{}) == Label::Legitimate);
}

TEST_CASE("euclidean_distance: 3-4-5 triangle and identity") {
    CHECK(euclidean_distance(sparse({{0, 3}}), sparse({{1, 4}})) == doctest::Approx(5.0));
    const SparseVector u = sparse({{0, 2}, {3, 7}});
    CHECK(euclidean_distance(u, u) == 0.0);
}

TEST_CASE("euclidean_distance: random pairs match a dense oracle") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 300; ++round) {
        const std::uint32_t dims = 1 + rng() % 10;
        const SparseVector u = random_vector(rng, dims);
        const SparseVector v = random_vector(rng, dims);
        const std::vector<double> du = dense(u, dims);
        const std::vector<double> dv = dense(v, dims);
        double sum = 0.0;
        for (std::uint32_t i = 0; i < dims; ++i) {
            sum += (du[i] - dv[i]) * (du[i] - dv[i]);
        }
        CHECK(std::abs(euclidean_distance(u, v) - std::sqrt(sum)) <= 1e-12);
        CHECK(euclidean_distance(u, v) == euclidean_distance(v, u));
    }
}

TEST_CASE("cosine_similarity: direction, orthogonality and the zero-vector rule") {
    const SparseVector u = sparse({{0, 2}, {1, 1}});
    CHECK(cosine_similarity(u, u) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cosine_similarity(sparse({{0, 1}}), sparse({{1, 1}})) == 0.0);
    CHECK(cosine_similarity(SparseVector{}, u) == 0.0);
    CHECK(cosine_similarity(u, SparseVector{}) == 0.0);
    CHECK(cosine_similarity(SparseVector{}, SparseVector{}) == 0.0);
}

TEST_CASE("cosine_similarity: symmetric and within [0, 1] for count vectors") {
    std::mt19937_64 rng(37);
    for (int round = 0; round < 300; ++round) {
        const SparseVector u = random_vector(rng, 8);
        const SparseVector v = random_vector(rng, 8);
        const double s = cosine_similarity(u, v);
        CHECK(s == cosine_similarity(v, u));
        CHECK(s >= 0.0);
        CHECK(s <= 1.0 + 1e-15);
    }
}

namespace {

std::vector<TrainingVector> tiny_index_vectors() {
    // a=(2,0) spam, b=(0,2) legit, c=(4,0) spam; query (3,0) ties a and c
    return {
        {sparse({{0, 2}}), Label::Spam, 0},
        {sparse({{1, 2}}), Label::Legitimate, 1},
        {sparse({{0, 4}}), Label::Spam, 2},
    };
}

} // namespace

TEST_CASE("knn_search: equidistant neighbors break ties by doc id") {
    const auto vectors = tiny_index_vectors();
    const KnnIndex index{vectors, Metric::Euclidean};
    const auto neighbors = knn_search(index, sparse({{0, 3}}), 2);
    REQUIRE(neighbors.size() == 2);
    CHECK(neighbors[0].doc_id == 0);
    CHECK(neighbors[1].doc_id == 2);
}

TEST_CASE("knn_search: k equal to the index size returns everything") {
    const auto vectors = tiny_index_vectors();
    const KnnIndex index{vectors, Metric::Cosine};
    const auto neighbors = knn_search(index, sparse({{0, 1}}), 3);
    CHECK(neighbors.size() == 3);
}

TEST_CASE("knn_search: a stored vector is its own nearest neighbor") {
    const auto vectors = tiny_index_vectors();
    for (const Metric metric : {Metric::Euclidean, Metric::Cosine}) {
        const KnnIndex index{vectors, metric};
        const auto neighbors = knn_search(index, sparse({{1, 2}}), 1);
        REQUIRE(neighbors.size() == 1);
        CHECK(neighbors[0].doc_id == 1);
    }
}

TEST_CASE("knn_search: self-match ties resolve to the lowest doc id") {
    std::vector<TrainingVector> vectors = {
        {sparse({{0, 1}}), Label::Spam, 0},
        {sparse({{0, 1}}), Label::Legitimate, 1}, // duplicate coordinates
    };
    for (const Metric metric : {Metric::Euclidean, Metric::Cosine}) {
        const KnnIndex index{vectors, metric};
        CHECK(knn_search(index, sparse({{0, 1}}), 1)[0].doc_id == 0);
    }
}

TEST_CASE("knn_search: k out of range is an argument error") {
    const auto vectors = tiny_index_vectors();
    const KnnIndex index{vectors, Metric::Euclidean};
    CHECK_THROWS_AS(knn_search(index, sparse({{0, 1}}), 0), ArgumentError);
    CHECK_THROWS_AS(knn_search(index, sparse({{0, 1}}), 4), ArgumentError);
}

TEST_CASE("knn_search: matches an independent full-sort brute force") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 200; ++round) {
        const std::uint32_t dims = 1 + rng() % 10;
        const std::size_t n = 1 + rng() % 30;
        std::vector<TrainingVector> vectors;
        for (std::size_t i = 0; i < n; ++i) {
            SparseVector vec = random_vector(rng, dims);
            if (rng() % 4 == 0 && i > 0) {
                vec = vectors[rng() % i].vec; // duplicate to force ties
            }
            vectors.push_back({std::move(vec), rng() % 2 == 0 ? Label::Spam : Label::Legitimate,
                               static_cast<std::uint32_t>(i)});
        }
        const SparseVector q = random_vector(rng, dims);
        const auto k = static_cast<std::uint32_t>(1 + rng() % n);
        const Metric metric = rng() % 2 == 0 ? Metric::Euclidean : Metric::Cosine;

        // brute force: full sort over (key, id)
        std::vector<std::pair<double, std::uint32_t>> keyed;
        for (const TrainingVector& tv : vectors) {
            const double key = metric == Metric::Euclidean
                                   ? euclidean_distance(q, tv.vec)
                                   : -cosine_similarity(q, tv.vec);
            keyed.emplace_back(key, tv.doc_id);
        }
        std::sort(keyed.begin(), keyed.end());

        const KnnIndex index{vectors, metric};
        const auto neighbors = knn_search(index, q, k);
        REQUIRE(neighbors.size() == k);
        for (std::uint32_t i = 0; i < k; ++i) {
            CHECK(neighbors[i].doc_id == keyed[i].second);
        }
    }
}

TEST_CASE("knn_probability: vote ratios") {
    const std::vector<Neighbor> five = {
        {0, Label::Spam}, {1, Label::Spam}, {2, Label::Spam},
        {3, Label::Legitimate}, {4, Label::Legitimate},
    };
    const ProbabilityPair p = knn_probability(five);
    CHECK(p.legitimate == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(p.spam == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(p.legitimate + p.spam == 1.0);

    const std::vector<Neighbor> all_spam = {{0, Label::Spam}, {1, Label::Spam}};
    CHECK(knn_probability(all_spam).spam == 1.0);
    CHECK(knn_probability(all_spam).legitimate == 0.0);

    const std::vector<Neighbor> one_legit = {{0, Label::Legitimate}};
    CHECK(knn_probability(one_legit).legitimate == 1.0);

    CHECK_THROWS_AS(knn_probability(std::vector<Neighbor>{}), ArgumentError);
}

TEST_CASE("combine_scores: forced arithmetic") {
    const ClassScores even = combine_scores({0.9, 0.1}, {0.4, 0.6}, 1.0, 1.0);
    CHECK(even.delta_g == doctest::Approx(0.65).epsilon(1e-15));

    const ClassScores unanimous = combine_scores({1.0, 0.0}, {1.0, 0.0}, 1.0, 1.0);
    CHECK(unanimous.delta_g == 1.0);
    CHECK(unanimous.delta_s == 0.0);

    const ClassScores weighted = combine_scores({0.9, 0.1}, {0.6, 0.4}, 2.0, 1.0);
    CHECK(weighted.delta_g == doctest::Approx(0.8).epsilon(1e-15));

    const ClassScores override_nb = combine_scores({0.2, 0.8}, {1.0, 0.0}, 1.0, 1.0);
    CHECK(override_nb.delta_g == doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("combine_scores: rejects non-positive weights") {
    CHECK_THROWS_AS(combine_scores({0.5, 0.5}, {0.5, 0.5}, 0.0, 1.0), ArgumentError);
    CHECK_THROWS_AS(combine_scores({0.5, 0.5}, {0.5, 0.5}, 1.0, -2.0), ArgumentError);
}

TEST_CASE("combine_scores: score sum, weight scaling and monotonicity") {
    std::mt19937_64 rng(43);
    for (int round = 0; round < 2000; ++round) {
        const double pg_nb = static_cast<double>(rng() % 10001) / 10000.0;
        const double pg_knn = static_cast<double>(rng() % 10001) / 10000.0;
        const double alpha = 0.01 + static_cast<double>(rng() % 1000) / 10.0;
        const double beta = 0.01 + static_cast<double>(rng() % 1000) / 10.0;
        const ProbabilityPair pr_nb{pg_nb, 1.0 - pg_nb};
        const ProbabilityPair pr_knn{pg_knn, 1.0 - pg_knn};

        const ClassScores scores = combine_scores(pr_nb, pr_knn, alpha, beta);
        CHECK(std::abs(scores.delta_g + scores.delta_s - 1.0) <= 1e-12);

        const double c = 0.5 + static_cast<double>(rng() % 100);
        const ClassScores scaled = combine_scores(pr_nb, pr_knn, c * alpha, c * beta);
        CHECK(std::abs(scaled.delta_g - scores.delta_g) <= 1e-12);

        // strictly increasing in the naive Bayes legitimate probability
        if (pg_nb + 1e-6 <= 1.0) {
            const ProbabilityPair higher{pg_nb + 1e-6, 1.0 - (pg_nb + 1e-6)};
            CHECK(combine_scores(higher, pr_knn, alpha, beta).delta_g > scores.delta_g);
        }
    }
}

TEST_CASE("classify: delta_g exactly at the threshold is legitimate") {
    // symmetric training set; the posterior and the 2-NN vote are both 0.5
    const Corpus corpus =
        test::make_corpus({"aa bb"}, {"aa bb"});
    const HybridModel model = train_model(corpus, {0, 1}, 2);
    HybridConfig cfg;
    cfg.k = 2;
    const Classification result = classify(model, std::string_view{"aa bb"}, cfg);
    CHECK(result.scores.delta_g == 0.5);
    CHECK(result.category == Label::Legitimate);
}

TEST_CASE("classify: unanimity gives delta_g = 1") {
    const Corpus corpus = test::make_corpus({"buy pills now", "buy cheap pills"},
                                            {"project meeting notes", "meeting notes today"});
    const HybridModel model = train_model(corpus, {0, 1, 2, 3}, 8);
    HybridConfig cfg;
    cfg.k = 2;
    // enough repetition that the spam posterior underflows to exactly zero
    std::string message;
    for (int i = 0; i < 600; ++i) {
        message += "meeting notes ";
    }
    const Classification result = classify(model, std::string_view{message}, cfg);
    CHECK(result.scores.pr_nb.legitimate == 1.0);
    CHECK(result.scores.pr_knn.legitimate == 1.0);
    CHECK(result.scores.delta_g == 1.0);
    CHECK(result.category == Label::Legitimate);
}

TEST_CASE("classify: concurrent calls reproduce the serial results exactly") {
    std::vector<std::string> spam;
    std::vector<std::string> ham;
    std::mt19937_64 rng(53);
    const std::vector<std::string> pool = {"cash", "win", "free", "meet", "talk", "plan"};
    for (int i = 0; i < 24; ++i) {
        std::string body;
        for (int w = 0; w < 12; ++w) {
            body += pool[rng() % (i % 2 == 0 ? 3 : 6)] + " ";
        }
        (i % 2 == 0 ? spam : ham).push_back(body);
    }
    const Corpus corpus = test::make_corpus(spam, ham);
    std::vector<std::uint32_t> train_ids;
    for (std::uint32_t id = 0; id < 16; ++id) {
        train_ids.push_back(id);
    }
    const HybridModel model = train_model(corpus, train_ids, 6);
    HybridConfig cfg;
    cfg.k = 3;
    cfg.metric = Metric::Cosine;

    std::vector<Classification> serial;
    for (std::uint32_t id = 16; id < 24; ++id) {
        serial.push_back(classify(model, std::string_view(corpus.email(id).bytes), cfg));
    }

    std::vector<Classification> parallel(8);
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([&, t] {
            for (std::size_t i = t; i < 8; i += 4) {
                parallel[i] = classify(
                    model, std::string_view(corpus.email(16 + static_cast<std::uint32_t>(i)).bytes),
                    cfg);
            }
        });
    }
    for (std::thread& worker : workers) {
        worker.join();
    }
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(parallel[i].category == serial[i].category);
        CHECK(parallel[i].scores.delta_g == serial[i].scores.delta_g);
    }
}

TEST_CASE("classify: a legitimate nearest neighbor overrides a spam-leaning posterior") {
    // the query shares its only feature with the spam class, but its exact
    // duplicate sits in the legitimate training set
    const Corpus corpus = test::make_corpus({"cash cash cash"}, {"cash", "talk talk talk"});
    const HybridModel model = train_model(corpus, {0, 1, 2}, 4);
    HybridConfig cfg;
    cfg.k = 1;
    const Classification result = classify(model, std::string_view{"cash"}, cfg);
    CHECK(result.scores.pr_nb.legitimate < 0.5); // Bayes alone says spam
    CHECK(result.scores.pr_knn.legitimate == 1.0);
    CHECK(result.scores.delta_g ==
          doctest::Approx((result.scores.pr_nb.legitimate + 1.0) / 2.0).epsilon(1e-15));
    CHECK(result.category == Label::Legitimate);
}
