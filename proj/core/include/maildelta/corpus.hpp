// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 maildelta contributors

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace maildelta {

enum class Label : std::uint8_t { Spam = 0, Legitimate = 1 };

const char* to_string(Label label);

/// One ingested message: raw header+body bytes plus its category.
struct RawEmail {
    std::uint32_t id = 0; // dense 0..N-1, assigned at ingestion
    Label label = Label::Spam;
    std::string bytes;
    std::string source; // originating file, for diagnostics
};

/// An immutable labeled email collection. Ids are dense and stable.
class Corpus {
public:
    Corpus() = default;
    explicit Corpus(std::vector<RawEmail> emails);

    const std::vector<RawEmail>& emails() const { return emails_; }
    const RawEmail& email(std::uint32_t id) const { return emails_.at(id); }
    std::size_t size() const { return emails_.size(); }
    std::size_t count(Label label) const;

    /// FNV-1a over labels and message bytes, in id order; hex string.
    std::string fingerprint() const;

private:
    std::vector<RawEmail> emails_;
};

/// Reads a corpus laid out as root/spam/* and root/ham/*, one message per
/// file. Ids are assigned in lexicographic filename order, spam first.
Corpus load_corpus(const std::filesystem::path& root);

/// A stratified train/test partition of a corpus. Both id lists are sorted
/// ascending; together they cover the corpus exactly once.
struct CorpusSplit {
    std::vector<std::uint32_t> train_ids;
    std::vector<std::uint32_t> test_ids;
    double train_fraction = 0.0;
    std::uint64_t seed = 0;
};

/// Stratified split: per class, round-half-up of train_fraction * class size
/// documents go to the training side. Deterministic for a fixed seed.
CorpusSplit split_corpus(const Corpus& corpus, double train_fraction, std::uint64_t seed);

} // namespace maildelta
