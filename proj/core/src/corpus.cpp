// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 maildelta contributors

#include "maildelta/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "maildelta/errors.hpp"
#include "maildelta/random.hpp"

namespace maildelta {

namespace fs = std::filesystem;

const char* to_string(Label label) {
    return label == Label::Spam ? "spam" : "legitimate";
}

Corpus::Corpus(std::vector<RawEmail> emails) : emails_(std::move(emails)) {
    for (std::uint32_t i = 0; i < emails_.size(); ++i) {
        emails_[i].id = i;
    }
}

std::size_t Corpus::count(Label label) const {
    return static_cast<std::size_t>(
        std::count_if(emails_.begin(), emails_.end(),
                      [label](const RawEmail& e) { return e.label == label; }));
}

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

void fnv1a_update(std::uint64_t& hash, const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        hash ^= bytes[i];
        hash *= kFnvPrime;
    }
}

std::vector<fs::path> sorted_regular_files(const fs::path& dir) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file()) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
        return a.filename().string() < b.filename().string();
    });
    return files;
}

std::string read_file_bytes(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IngestError("cannot open message file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IngestError("cannot read message file: " + path.string());
    }
    return std::move(buf).str();
}

} // namespace

std::string Corpus::fingerprint() const {
    std::uint64_t hash = kFnvOffset;
    for (const RawEmail& e : emails_) {
        const unsigned char label = static_cast<unsigned char>(e.label);
        fnv1a_update(hash, &label, 1);
        const std::uint64_t len = e.bytes.size();
        fnv1a_update(hash, &len, sizeof(len));
        fnv1a_update(hash, e.bytes.data(), e.bytes.size());
    }
    char out[17];
    std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(hash));
    return out;
}

Corpus load_corpus(const fs::path& root) {
    const fs::path spam_dir = root / "spam";
    const fs::path ham_dir = root / "ham";
    if (!fs::is_directory(spam_dir)) {
        throw ConfigError("corpus is missing the spam/ subdirectory: " + spam_dir.string());
    }
    if (!fs::is_directory(ham_dir)) {
        throw ConfigError("corpus is missing the ham/ subdirectory: " + ham_dir.string());
    }

    std::vector<RawEmail> emails;
    for (const fs::path& file : sorted_regular_files(spam_dir)) {
        emails.push_back(RawEmail{0, Label::Spam, read_file_bytes(file), file.string()});
    }
    for (const fs::path& file : sorted_regular_files(ham_dir)) {
        emails.push_back(RawEmail{0, Label::Legitimate, read_file_bytes(file), file.string()});
    }
    return Corpus(std::move(emails));
}

CorpusSplit split_corpus(const Corpus& corpus, double train_fraction, std::uint64_t seed) {
    if (!(train_fraction > 0.0) || !(train_fraction < 1.0)) {
        throw ArgumentError("train fraction must lie strictly between 0 and 1");
    }

    std::vector<std::uint32_t> spam_ids;
    std::vector<std::uint32_t> ham_ids;
    for (const RawEmail& e : corpus.emails()) {
        (e.label == Label::Spam ? spam_ids : ham_ids).push_back(e.id);
    }
    if (spam_ids.empty() || ham_ids.empty()) {
        throw ArgumentError("splitting needs at least one document per class");
    }

    CorpusSplit split;
    split.train_fraction = train_fraction;
    split.seed = seed;

    std::mt19937_64 rng(seed);
    for (auto* ids : {&spam_ids, &ham_ids}) {
        deterministic_shuffle(*ids, rng);
        // round half up
        auto train_n = static_cast<std::size_t>(
            std::floor(train_fraction * static_cast<double>(ids->size()) + 0.5));
        train_n = std::min(train_n, ids->size());
        split.train_ids.insert(split.train_ids.end(), ids->begin(), ids->begin() + train_n);
        split.test_ids.insert(split.test_ids.end(), ids->begin() + train_n, ids->end());
    }
    std::sort(split.train_ids.begin(), split.train_ids.end());
    std::sort(split.test_ids.begin(), split.test_ids.end());
    return split;
}

} // namespace maildelta
