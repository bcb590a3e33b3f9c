// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 maildelta contributors

#pragma once

#include <cstdint>
#include <filesystem>

namespace maildelta {

/// Vocabulary profile of the synthetic corpus generator. Both classes draw
/// from a shared pool plus a class-exclusive pool; spam additionally embeds
/// HTML tags.
///
/// Shared-pool draws are topical: every message picks one topic window and
/// draws its shared tokens from it. Spam windows tile the pool, ham windows
/// sit half a window further along, and the classes prefer opposite ends of
/// the topic list (`topic_tilt`), so individual tokens carry a mild class
/// signal while messages cluster tightly by topic. With `topics_per_class`
/// < 2 the windows are dropped and the pool is instead weighted
/// geometrically per token (`shared_tilt`), walked from opposite ends per
/// class. With `disjoint` set the shared pool is ignored entirely and the
/// class vocabularies have no overlap.
struct SyntheticProfile {
    std::uint32_t shared_vocab = 60;
    std::uint32_t spam_vocab = 40;
    std::uint32_t ham_vocab = 40;
    double exclusive_rate = 0.02; // probability a drawn token is class-exclusive
    std::uint32_t topics_per_class = 4;
    double topic_tilt = 0.85;  // geometric weight ratio across topics; 1 = uniform
    double shared_tilt = 0.97; // per-token weight ratio without topics; 1 = uniform
    std::uint32_t min_tokens = 50;
    std::uint32_t max_tokens = 70;
    std::uint32_t max_spam_tags = 3; // <b> tags per spam message, 0..max
    bool disjoint = false;
};

/// Writes a spam/-ham/ directory corpus under `root`, fully reproducible
/// from the seed. Throws IoError when the target cannot be written and
/// ArgumentError when either count is zero.
void generate_synthetic_corpus(const std::filesystem::path& root, std::uint64_t seed,
                               std::uint32_t n_spam, std::uint32_t n_ham,
                               const SyntheticProfile& profile = {});

} // namespace maildelta
