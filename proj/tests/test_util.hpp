// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 maildelta contributors

#pragma once

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "maildelta/corpus.hpp"

namespace maildelta::test {

/// Self-cleaning unique directory under the system temp path.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static std::atomic<unsigned> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("maildelta_" + tag + "_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
}

/// Writes a spam/-ham/ corpus with zero-padded file names.
inline void write_corpus(const std::filesystem::path& root,
                         const std::vector<std::string>& spam,
                         const std::vector<std::string>& ham) {
    for (std::size_t i = 0; i < spam.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "%05zu.msg", i);
        write_file(root / "spam" / name, spam[i]);
    }
    for (std::size_t i = 0; i < ham.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "%05zu.msg", i);
        write_file(root / "ham" / name, ham[i]);
    }
}

/// In-memory corpus from labeled strings, spam first, matching load order.
inline Corpus make_corpus(const std::vector<std::string>& spam,
                          const std::vector<std::string>& ham) {
    std::vector<RawEmail> emails;
    for (const std::string& bytes : spam) {
        emails.push_back(RawEmail{0, Label::Spam, bytes, ""});
    }
    for (const std::string& bytes : ham) {
        emails.push_back(RawEmail{0, Label::Legitimate, bytes, ""});
    }
    return Corpus(std::move(emails));
}

} // namespace maildelta::test
