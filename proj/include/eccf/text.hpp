#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace eccf {

/// Canonical query-text normalization applied before any lexicon matching:
/// lowercase, punctuation to spaces, whitespace collapsed, trimmed.
/// Bytes outside ASCII are passed through untouched.
inline std::string normalize_query(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (unsigned char ch : raw) {
        if (std::isalnum(ch) || ch >= 0x80) {
            if (pending_space && !out.empty())
                out.push_back(' ');
            pending_space = false;
            out.push_back(static_cast<char>(std::tolower(ch)));
        } else {
            // spaces, control chars and punctuation all act as separators
            pending_space = true;
        }
    }
    return out;
}

/// Splits normalized text on single spaces. Views point into `normalized`.
inline std::vector<std::string_view> split_tokens(std::string_view normalized) {
    std::vector<std::string_view> tokens;
    std::size_t start = 0;
    while (start < normalized.size()) {
        auto end = normalized.find(' ', start);
        if (end == std::string_view::npos)
            end = normalized.size();
        if (end > start)
            tokens.push_back(normalized.substr(start, end - start));
        start = end + 1;
    }
    return tokens;
}

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

} // namespace eccf
