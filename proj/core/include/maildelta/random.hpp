// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 maildelta contributors

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace maildelta {

// std::uniform_int_distribution and std::shuffle are implementation-defined;
// splits and synthetic corpora must reproduce byte-for-byte on any toolchain,
// so all randomized code in the library draws through these helpers instead.

/// Uniform integer in [0, n), n >= 1. Multiply-shift bounded mapping.
inline std::uint64_t bounded_uint(std::mt19937_64& rng, std::uint64_t n) {
    const unsigned __int128 wide = static_cast<unsigned __int128>(rng()) * n;
    return static_cast<std::uint64_t>(wide >> 64);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double unit_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Fisher-Yates shuffle driven by bounded_uint.
template <typename T>
void deterministic_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(bounded_uint(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

} // namespace maildelta
