// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 maildelta contributors

#pragma once

#include <stdexcept>
#include <string>

namespace maildelta {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Corpus layout problems (missing spam/ or ham/ subdirectory, not a directory).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A message file exists but could not be read; the message names the file.
class IngestError : public Error {
public:
    using Error::Error;
};

/// Caller passed an out-of-range parameter (fraction, k, weights).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Training preconditions violated (empty corpus, class with zero documents).
class TrainingError : public Error {
public:
    using Error::Error;
};

/// Failure to read or write files other than models (e.g. corpus generation).
class IoError : public Error {
public:
    using Error::Error;
};

/// Model file problems: unreadable, truncated, or checksum mismatch.
class PersistenceError : public Error {
public:
    using Error::Error;
};

/// Model file is not a model file at all (wrong magic).
class FormatError : public PersistenceError {
public:
    using PersistenceError::PersistenceError;
};

/// Model file declares an unsupported format version.
class VersionError : public PersistenceError {
public:
    using PersistenceError::PersistenceError;
};

} // namespace maildelta
