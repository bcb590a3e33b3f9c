// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 maildelta contributors

#pragma once

#include <filesystem>

#include "maildelta/hybrid.hpp"

namespace maildelta {

/// Writes the model as a single versioned JSON document (UTF-8, no trailing
/// data) containing the vocabulary, class priors, per-class feature counts,
/// per-class token totals, the smoothing constant, and every training
/// vector. A checksum over the content guards against corruption.
void save_model(const HybridModel& model, const std::filesystem::path& path);

/// Reads a file written by save_model. Wrong magic -> FormatError,
/// unsupported version -> VersionError, truncation or checksum mismatch ->
/// PersistenceError. On success the loaded model classifies identically to
/// the saved one; training vectors are renumbered densely in stored order.
HybridModel load_model(const std::filesystem::path& path);

} // namespace maildelta
