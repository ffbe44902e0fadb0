// Copyright 2026 The tsalab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TSALAB_TEXT_HPP
#define TSALAB_TEXT_HPP

#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

// Small helpers shared by the line-based file formats.
namespace tsalab::text {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::string_view strip_comment(std::string_view s) {
    auto p = s.find('#');
    return p == std::string_view::npos ? s : s.substr(0, p);
}

inline std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline std::vector<std::string> lines(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i <= s.size()) {
        auto j = s.find('\n', i);
        if (j == std::string_view::npos) j = s.size();
        std::string line(s.substr(i, j - i));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out.push_back(std::move(line));
        i = j + 1;
    }
    return out;
}

/// Splits `key: rest` into its parts; nullopt if there is no colon.
inline std::optional<std::pair<std::string, std::string>> key_value(std::string_view line) {
    auto p = line.find(':');
    if (p == std::string_view::npos) return std::nullopt;
    return std::pair{std::string(trim(line.substr(0, p))), std::string(trim(line.substr(p + 1)))};
}

inline std::optional<std::uint32_t> parse_uint(std::string_view s) {
    if (s.empty() || s.size() > 9) return std::nullopt;
    std::uint32_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + static_cast<std::uint32_t>(c - '0');
    }
    return v;
}

/// The formal inverse of a letter: lower and upper case are swapped.
inline char inverse_letter(char c) {
    auto u = static_cast<unsigned char>(c);
    if (std::islower(u)) return static_cast<char>(std::toupper(u));
    if (std::isupper(u)) return static_cast<char>(std::tolower(u));
    return c;
}

/// A terminal token: a single character, or `x'` meaning the inverse of x.
inline std::optional<char> parse_symbol(std::string_view tok) {
    if (tok.size() == 1) return tok[0];
    if (tok.size() == 2 && tok[1] == '\'' && std::isalpha(static_cast<unsigned char>(tok[0])))
        return inverse_letter(tok[0]);
    return std::nullopt;
}

/// Expands `x'` pairs inside a word into inverse letters: "ab'" -> "aB".
inline std::string expand_word(std::string_view w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i + 1 < w.size() && w[i + 1] == '\'') {
            out += inverse_letter(w[i]);
            ++i;
        } else {
            out += w[i];
        }
    }
    return out;
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

inline std::string show_word(std::string_view w) { return w.empty() ? std::string("eps") : std::string(w); }

}  // namespace tsalab::text

#endif  // TSALAB_TEXT_HPP
