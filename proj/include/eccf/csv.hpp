#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eccf/errors.hpp"

namespace eccf {

/// Splits one CSV line into fields. Supports RFC-4180 style double-quoted
/// fields with embedded commas and doubled quotes; no multiline fields.
inline std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

/// Plain single-character split, no quote handling (used for TSV and the
/// pipe-separated category lists).
inline std::vector<std::string_view> split_char(std::string_view s, char delim) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto end = s.find(delim, start);
        if (end == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, end - start));
        start = end + 1;
    }
}

inline std::string csv_escape(std::string_view field) {
    bool needs_quotes = field.find_first_of(",\"\n\r") != std::string_view::npos;
    if (!needs_quotes)
        return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += "\"\"";
        else
            out.push_back(c);
    }
    out.push_back('"');
    return out;
}

/// Line-oriented reader that strips trailing \r (CRLF tolerant).
class LineReader {
public:
    explicit LineReader(const std::string& path) : in_(path), path_(path) {
        if (!in_)
            throw DataError("cannot open file: " + path);
    }

    bool next(std::string& line) {
        if (!std::getline(in_, line))
            return false;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        return true;
    }

    const std::string& path() const { return path_; }

private:
    std::ifstream in_;
    std::string path_;
};

/// Parses a strict non-negative integer literal; nullopt on anything else.
inline std::optional<long long> parse_int(std::string_view s) {
    if (s.empty() || s.size() > 18)
        return std::nullopt;
    long long v = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            return std::nullopt;
        v = v * 10 + (c - '0');
    }
    return v;
}

} // namespace eccf
