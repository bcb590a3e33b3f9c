// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 maildelta contributors

#include "maildelta/synthetic.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <string>
#include <system_error>
#include <vector>

#include "maildelta/errors.hpp"
#include "maildelta/random.hpp"

namespace maildelta {

namespace fs = std::filesystem;

namespace {

constexpr std::size_t kWordsPerLine = 12;

// Five-letter words, one prefix per pool, so generated vocabulary never
// collides across pools or with the tokenizer's "html" marker.
std::vector<std::string> make_vocab(char prefix, std::uint32_t size) {
    std::vector<std::string> vocab;
    vocab.reserve(size);
    for (std::uint32_t i = 0; i < size; ++i) {
        std::string word(5, 'a');
        word[0] = prefix;
        std::uint32_t value = i;
        for (std::size_t pos = 4; pos >= 1; --pos) {
            word[pos] = static_cast<char>('a' + value % 26);
            value /= 26;
        }
        vocab.push_back(std::move(word));
    }
    return vocab;
}

std::string render_message(const std::vector<std::string>& words) {
    std::string body;
    for (std::size_t i = 0; i < words.size(); ++i) {
        body += words[i];
        body += (i + 1) % kWordsPerLine == 0 ? '\n' : ' ';
    }
    if (!body.empty() && body.back() == ' ') {
        body.back() = '\n';
    }
    return body;
}

void write_message(const fs::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << body;
    out.flush();
    if (!out) {
        throw IoError("cannot write synthetic message: " + path.string());
    }
}

} // namespace

void generate_synthetic_corpus(const fs::path& root, std::uint64_t seed, std::uint32_t n_spam,
                               std::uint32_t n_ham, const SyntheticProfile& profile) {
    if (n_spam < 1 || n_ham < 1) {
        throw ArgumentError("the synthetic corpus needs at least one message per class");
    }
    if (profile.min_tokens < 1 || profile.max_tokens < profile.min_tokens) {
        throw ArgumentError("invalid token count range in the synthetic profile");
    }
    if (!(profile.shared_tilt > 0.0)) {
        throw ArgumentError("shared_tilt must be strictly positive");
    }
    if ((profile.disjoint || profile.shared_vocab == 0) &&
        (profile.spam_vocab == 0 || profile.ham_vocab == 0)) {
        throw ArgumentError("each class needs a non-empty vocabulary pool");
    }

    std::error_code ec;
    fs::create_directories(root / "spam", ec);
    fs::create_directories(root / "ham", ec);
    if (!fs::is_directory(root / "spam") || !fs::is_directory(root / "ham")) {
        throw IoError("cannot create corpus directories under: " + root.string());
    }

    const std::vector<std::string> shared = make_vocab('c', profile.shared_vocab);
    const std::vector<std::string> spam_only = make_vocab('s', profile.spam_vocab);
    const std::vector<std::string> ham_only = make_vocab('q', profile.ham_vocab);

    const bool topical = profile.topics_per_class >= 2 && !shared.empty();

    // without topics: geometric weights over the shared pool, walked from
    // opposite ends per class, so the same token is common in one class and
    // rare in the other
    std::vector<double> shared_cdf;
    if (!topical && !shared.empty()) {
        double cumulative = 0.0;
        double weight = 1.0;
        for (std::size_t i = 0; i < shared.size(); ++i) {
            cumulative += weight;
            shared_cdf.push_back(cumulative);
            weight *= profile.shared_tilt;
        }
        for (double& value : shared_cdf) {
            value /= cumulative;
        }
    }
    const std::size_t window =
        topical ? std::max<std::size_t>(1, shared.size() / profile.topics_per_class) : 0;

    // cumulative topic weights; ham reads them in reverse so the classes
    // favor opposite ends of the topic list
    std::vector<double> topic_cdf;
    if (topical) {
        double cumulative = 0.0;
        double weight = 1.0;
        for (std::uint32_t t = 0; t < profile.topics_per_class; ++t) {
            cumulative += weight;
            topic_cdf.push_back(cumulative);
            weight *= profile.topic_tilt;
        }
        for (double& value : topic_cdf) {
            value /= cumulative;
        }
    }

    std::mt19937_64 rng(seed);
    const auto draw_shared = [&](bool spam, std::size_t topic_base) -> const std::string& {
        if (topical) {
            return shared[(topic_base + bounded_uint(rng, window)) % shared.size()];
        }
        const double u = unit_real(rng);
        const auto it = std::lower_bound(shared_cdf.begin(), shared_cdf.end(), u);
        std::size_t rank = static_cast<std::size_t>(it - shared_cdf.begin());
        rank = std::min(rank, shared.size() - 1);
        return shared[spam ? rank : shared.size() - 1 - rank];
    };
    const auto draw_word = [&](bool spam, std::size_t topic_base) -> const std::string& {
        const auto& exclusive = spam ? spam_only : ham_only;
        if (profile.disjoint || shared.empty()) {
            return exclusive[bounded_uint(rng, exclusive.size())];
        }
        if (!exclusive.empty() && unit_real(rng) < profile.exclusive_rate) {
            return exclusive[bounded_uint(rng, exclusive.size())];
        }
        return draw_shared(spam, topic_base);
    };

    for (const bool spam : {true, false}) {
        const std::uint32_t count = spam ? n_spam : n_ham;
        const fs::path dir = root / (spam ? "spam" : "ham");
        for (std::uint32_t i = 0; i < count; ++i) {
            const std::uint32_t length =
                profile.min_tokens +
                static_cast<std::uint32_t>(
                    bounded_uint(rng, profile.max_tokens - profile.min_tokens + 1));
            // one topic per message; ham windows straddle two spam windows
            std::size_t topic_base = 0;
            if (topical) {
                const double u = unit_real(rng);
                const auto it = std::lower_bound(topic_cdf.begin(), topic_cdf.end(), u);
                std::size_t topic = static_cast<std::size_t>(it - topic_cdf.begin());
                topic = std::min<std::size_t>(topic, profile.topics_per_class - 1);
                if (!spam) {
                    topic = profile.topics_per_class - 1 - topic;
                }
                topic_base = topic * window + (spam ? 0 : window / 2);
            }
            std::vector<std::string> words;
            words.reserve(length + profile.max_spam_tags);
            for (std::uint32_t w = 0; w < length; ++w) {
                words.push_back(draw_word(spam, topic_base));
            }
            if (spam && profile.max_spam_tags > 0) {
                const auto tags = bounded_uint(rng, profile.max_spam_tags + 1);
                for (std::uint64_t t = 0; t < tags; ++t) {
                    const auto at = bounded_uint(rng, words.size() + 1);
                    words.insert(words.begin() + static_cast<std::ptrdiff_t>(at), "<b>");
                }
            }
            char name[32];
            std::snprintf(name, sizeof(name), "%05u.msg", i);
            write_message(dir / name, render_message(words));
        }
    }
}

} // namespace maildelta
