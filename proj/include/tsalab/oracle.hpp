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

#ifndef TSALAB_ORACLE_HPP
#define TSALAB_ORACLE_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsalab/text.hpp"

namespace tsalab {

/// A total membership test for a sample language.
struct WordOracle {
    std::string name;
    std::string alphabet;
    std::function<bool(std::string_view)> member;

    bool operator()(std::string_view w) const { return member(w); }
};

namespace oracles {

/// Splits w into maximal runs of equal letters.
inline std::vector<std::pair<char, std::size_t>> runs(std::string_view w) {
    std::vector<std::pair<char, std::size_t>> out;
    for (char c : w) {
        if (!out.empty() && out.back().first == c) ++out.back().second;
        else out.emplace_back(c, 1);
    }
    return out;
}

/// Letters a, b, c, ... standing for a_1, a_2, a_3, ...
inline std::string indexed_letters(std::size_t count) {
    std::string s;
    for (std::size_t i = 0; i < count; ++i) s.push_back(static_cast<char>('a' + i));
    return s;
}

/// a_1^n a_2^n ... a_{2m+1}^n, n >= 0.
inline WordOracle s_m(std::size_t m) {
    std::string letters = indexed_letters(2 * m + 1);
    return {"s_m(" + std::to_string(m) + ")", letters, [letters](std::string_view w) {
                if (w.size() % letters.size() != 0) return false;
                std::size_t n = w.size() / letters.size();
                for (std::size_t i = 0; i < w.size(); ++i)
                    if (w[i] != letters[i / n]) return false;
                return true;
            }};
}

/// a^i b^i c^i d^i, i >= 0.
inline WordOracle abcd() {
    return {"abcd", "abcd", [](std::string_view w) {
                if (w.size() % 4 != 0) return false;
                std::size_t n = w.size() / 4;
                for (std::size_t i = 0; i < w.size(); ++i)
                    if (w[i] != "abcd"[i / n]) return false;
                return true;
            }};
}

/// a^n b^m c^n d^m, n, m >= 0.
inline WordOracle anbmcndm() {
    return {"anbmcndm", "abcd", [](std::string_view w) {
                std::size_t i = 0;
                std::size_t cnt[4] = {0, 0, 0, 0};
                for (int k = 0; k < 4; ++k) {
                    while (i < w.size() && w[i] == "abcd"[k]) {
                        ++cnt[k];
                        ++i;
                    }
                }
                return i == w.size() && cnt[0] == cnt[2] && cnt[1] == cnt[3];
            }};
}

/// (a^m b^m)^n, m, n >= 1.
inline WordOracle ambm_n() {
    return {"ambm_n", "ab", [](std::string_view w) {
                auto r = runs(w);
                if (r.empty() || r.size() % 2 != 0 || r[0].first != 'a') return false;
                for (const auto& [c, len] : r) {
                    if ((c != 'a' && c != 'b') || len != r[0].second) return false;
                }
                return true;
            }};
}

/// (a b^m)^n, m, n >= 1.
inline WordOracle ab_m_n() {
    return {"ab_m_n", "ab", [](std::string_view w) {
                auto r = runs(w);
                if (r.empty() || r.size() % 2 != 0 || r[0].first != 'a') return false;
                for (std::size_t i = 0; i < r.size(); ++i) {
                    const auto& [c, len] = r[i];
                    if (i % 2 == 0 && (c != 'a' || len != 1)) return false;
                    if (i % 2 == 1 && (c != 'b' || len != r[1].second)) return false;
                }
                return true;
            }};
}

/// a_1^{n_1} ... a_k^{n_k} with n_1 >= ... >= n_k >= 0.
inline WordOracle l_k_nonincreasing(std::size_t k) {
    std::string letters = indexed_letters(k);
    return {"l_k(" + std::to_string(k) + ")", letters, [letters](std::string_view w) {
                std::size_t i = 0;
                std::size_t prev = w.size() + 1;
                for (char c : letters) {
                    std::size_t n = 0;
                    while (i < w.size() && w[i] == c) {
                        ++n;
                        ++i;
                    }
                    if (n > prev) return false;
                    prev = n;
                }
                return i == w.size();
            }};
}

enum class UnaryFamily { Pow2, Square, Alpha, NLogN };

/// f(n) for n >= 1; the logarithm is natural.
inline std::uint64_t unary_length(UnaryFamily f, std::uint64_t n, double alpha = 1.5) {
    switch (f) {
        case UnaryFamily::Pow2: return std::uint64_t{1} << n;
        case UnaryFamily::Square: return n * n;
        case UnaryFamily::Alpha: return static_cast<std::uint64_t>(std::floor(std::pow(static_cast<double>(n), alpha)));
        case UnaryFamily::NLogN:
            return static_cast<std::uint64_t>(std::floor(static_cast<double>(n) * std::log(static_cast<double>(n))));
    }
    return 0;
}

/// {a^{f(n)} : n >= 1}.
inline WordOracle unary(UnaryFamily f, double alpha = 1.5) {
    return {"unary", "a", [f, alpha](std::string_view w) {
                for (char c : w)
                    if (c != 'a') return false;
                // Every family is non-decreasing in n.
                for (std::uint64_t n = 1; !(f == UnaryFamily::Pow2 && n >= 63); ++n) {
                    auto len = unary_length(f, n, alpha);
                    if (len == w.size()) return true;
                    if (len > w.size()) return false;
                }
                return false;
            }};
}

/// Free reduction over letters whose inverse is the case-swapped letter.
inline std::string free_reduce(std::string_view w) {
    std::string st;
    for (char c : w) {
        if (!st.empty() && st.back() == text::inverse_letter(c) && st.back() != c) st.pop_back();
        else st.push_back(c);
    }
    return st;
}

/// Word problem of Z = <t>, with T the inverse of t.
inline WordOracle wp_z() {
    return {"wp_z", "tT", [](std::string_view w) {
                long bal = 0;
                for (char c : w) {
                    if (c == 't') ++bal;
                    else if (c == 'T') --bal;
                    else return false;
                }
                return bal == 0;
            }};
}

/// Word problem of F(a,b) x F(c,d); capitals are inverses.
inline WordOracle wp_f2xf2() {
    return {"wp_f2xf2", "abcdABCD", [](std::string_view w) {
                std::string left, right;
                for (char c : w) {
                    switch (c) {
                        case 'a': case 'b': case 'A': case 'B': left.push_back(c); break;
                        case 'c': case 'd': case 'C': case 'D': right.push_back(c); break;
                        default: return false;
                    }
                }
                return free_reduce(left).empty() && free_reduce(right).empty();
            }};
}

inline std::optional<WordOracle> by_name(std::string_view name, std::size_t param = 2) {
    if (name == "abcd") return abcd();
    if (name == "anbmcndm") return anbmcndm();
    if (name == "s_m") return s_m(param);
    if (name == "ambm_n") return ambm_n();
    if (name == "ab_m_n") return ab_m_n();
    if (name == "l_k") return l_k_nonincreasing(param);
    if (name == "wp_z") return wp_z();
    if (name == "wp_f2xf2") return wp_f2xf2();
    if (name == "pow2") return unary(UnaryFamily::Pow2);
    if (name == "square") return unary(UnaryFamily::Square);
    if (name == "nlogn") return unary(UnaryFamily::NLogN);
    return std::nullopt;
}

}  // namespace oracles

}  // namespace tsalab

#endif  // TSALAB_ORACLE_HPP
