// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 maildelta contributors

#include "maildelta/tokenizer.hpp"

namespace maildelta {

namespace {

bool is_lower(char c) {
    return c >= 'a' && c <= 'z';
}

bool is_digit(char c) {
    return c >= '0' && c <= '9';
}

// "begin <octal-mode> <name>", checked on the raw line.
bool is_uuencode_begin(std::string_view line) {
    constexpr std::string_view prefix = "begin ";
    if (line.substr(0, prefix.size()) != prefix) {
        return false;
    }
    std::size_t i = prefix.size();
    std::size_t digits = 0;
    while (i < line.size() && line[i] >= '0' && line[i] <= '7') {
        ++i;
        ++digits;
    }
    if (digits < 3 || digits > 4 || i >= line.size() || line[i] != ' ') {
        return false;
    }
    return i + 1 < line.size(); // non-empty name
}

// Lowercases and deletes <...> spans (first-close matching). Deleting a
// span joins whatever surrounds it, so "ab<br>cd" becomes "abcd".
std::string clean_line(std::string_view line, std::size_t& tag_count) {
    std::string cleaned;
    cleaned.reserve(line.size());
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '<') {
            const std::size_t close = line.find('>', i + 1);
            if (close == std::string_view::npos) {
                break; // unclosed tag: deleted to end of line, not counted
            }
            ++tag_count;
            i = close + 1;
            continue;
        }
        if (c >= 'A' && c <= 'Z') {
            c = static_cast<char>(c - 'A' + 'a');
        }
        cleaned.push_back(c);
        ++i;
    }
    return cleaned;
}

// Emits maximal [a-z]{2,} and [0-9]{2,} runs, left to right.
void emit_runs(std::string_view cleaned, std::vector<std::string>& tokens) {
    std::size_t i = 0;
    while (i < cleaned.size()) {
        const char c = cleaned[i];
        if (is_lower(c) || is_digit(c)) {
            const bool digits = is_digit(c);
            std::size_t j = i + 1;
            while (j < cleaned.size() &&
                   (digits ? is_digit(cleaned[j]) : is_lower(cleaned[j]))) {
                ++j;
            }
            if (j - i >= 2) {
                tokens.emplace_back(cleaned.substr(i, j - i));
            }
            i = j;
        } else {
            ++i; // separator byte, non-ASCII included
        }
    }
}

} // namespace

TokenSequence tokenize_email(std::string_view bytes) {
    TokenSequence out;
    bool in_uuencode = false;

    std::size_t pos = 0;
    while (pos <= bytes.size()) {
        const std::size_t eol = bytes.find('\n', pos);
        std::string_view line = (eol == std::string_view::npos) ? bytes.substr(pos)
                                                                : bytes.substr(pos, eol - pos);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }

        if (in_uuencode) {
            if (line == "end") {
                in_uuencode = false;
                emit_runs(clean_line(line, out.tag_count), out.tokens);
            }
            // payload lines contribute nothing
        } else {
            if (is_uuencode_begin(line)) {
                in_uuencode = true;
            }
            emit_runs(clean_line(line, out.tag_count), out.tokens);
        }

        if (eol == std::string_view::npos) {
            break;
        }
        pos = eol + 1;
    }

    for (std::size_t i = 0; i < 3 * out.tag_count; ++i) {
        out.tokens.emplace_back("html");
    }
    return out;
}

} // namespace maildelta
