// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 maildelta contributors

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace maildelta {

/// Token stream of one email. Every token is a maximal [a-z]{2,} or
/// [0-9]{2,} run; "html" markers for stripped tags sit at the very end,
/// three per tag.
struct TokenSequence {
    std::vector<std::string> tokens;
    std::size_t tag_count = 0; // stripped <...> spans
};

/// Tokenizes raw message bytes (header and body as one stream).
///
/// Per line: uuencode payload lines are dropped (a block opens at
/// "begin <octal-mode> <name>" and closes at a line equal to "end"; the
/// framing lines themselves are tokenized normally). Remaining lines are
/// lowercased, every <...> span up to the first '>' is deleted and counted
/// as one tag (an unclosed '<' is deleted to end of line but not counted),
/// and maximal letter/digit runs of length >= 2 are emitted. Afterwards the
/// token "html" is appended three times per counted tag.
///
/// Never fails: any byte input yields a (possibly empty) sequence, with
/// non-ASCII bytes acting as separators.
TokenSequence tokenize_email(std::string_view bytes);

} // namespace maildelta
