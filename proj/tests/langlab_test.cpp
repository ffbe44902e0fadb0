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


#include <gtest/gtest.h>

#include <random>
#include <regex>

#include "tsalab/fixtures.hpp"
#include "tsalab/fsa.hpp"
#include "tsalab/langlab.hpp"

namespace tsalab {
namespace {

// Regex syntax of the library with x' written as the capital letter.
std::regex as_std_regex(std::string re) {
    std::string out;
    for (std::size_t i = 0; i < re.size(); ++i) {
        if (i + 1 < re.size() && re[i + 1] == '\'') {
            out += static_cast<char>(std::toupper(static_cast<unsigned char>(re[i])));
            ++i;
        } else {
            out += re[i];
        }
    }
    return std::regex(out);
}

// Cancels adjacent inverse pairs by rewriting until nothing changes.
std::string cancel_pairs(std::string w) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] != w[i + 1] && std::tolower(static_cast<unsigned char>(w[i])) ==
                                         std::tolower(static_cast<unsigned char>(w[i + 1]))) {
                w.erase(i, 2);
                changed = true;
                break;
            }
        }
    }
    return w;
}

bool trivial_in_f2xf2(const std::string& w) {
    std::string ab, cd;
    for (char c : w) (std::string("abAB").find(c) != std::string::npos ? ab : cd).push_back(c);
    return cancel_pairs(ab).empty() && cancel_pairs(cd).empty();
}

std::vector<std::string> words_up_to(std::string_view alphabet, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t len = 0; len <= n; ++len) for_each_word(alphabet, len, [&](const std::string& w) { out.push_back(w); });
    return out;
}

TEST(Parikh, Counts) {
    auto v = parikh("abcab", "abc");
    ASSERT_TRUE(v);
    EXPECT_EQ(v->counts, (std::vector<std::uint64_t>{2, 2, 1}));
    EXPECT_EQ(render(*v), "(2,2,1)");
    EXPECT_EQ(render(*v + *parikh("c", "abc")), "(2,2,2)");
    EXPECT_EQ(parikh("abz", "ab").error().letter, 'z');
    EXPECT_EQ(render(*parikh("", "ab")), "(0,0)");
}

TEST(Parikh, LinearSetAgainstEnumeration) {
    LinearSet s{{1, 0}, {{2, 1}, {0, 3}}};
    std::set<std::vector<std::uint64_t>> members;
    for (std::uint64_t i = 0; i < 8; ++i)
        for (std::uint64_t j = 0; j < 8; ++j) members.insert({1 + 2 * i, i + 3 * j});
    for (std::uint64_t x = 0; x < 12; ++x)
        for (std::uint64_t y = 0; y < 12; ++y) EXPECT_EQ(s.contains({x, y}), members.count({x, y}) != 0) << x << "," << y;
    EXPECT_FALSE(s.contains({1}));
}

TEST(Gaps, Thresholds) {
    auto rep = gap_check({1, 2, 4, 8, 16}, 3);
    ASSERT_EQ(rep.threshold.size(), 4u);
    EXPECT_EQ(rep.threshold[0], 0u);
    EXPECT_EQ(rep.threshold[1], 1u);
    EXPECT_EQ(rep.threshold[2], 2u);
    EXPECT_EQ(rep.threshold[3], 2u);
    EXPECT_EQ(rep.verdict, GapVerdict::Divergent);

    auto flat = gap_check({3, 6, 9, 12}, 5);
    EXPECT_FALSE(flat.threshold[3]);
    EXPECT_EQ(flat.verdict, GapVerdict::Inconclusive);
    EXPECT_EQ(gap_check({7}, 2).verdict, GapVerdict::Inconclusive);
}

TEST(Gaps, UnaryFamilies) {
    using F = oracles::UnaryFamily;
    EXPECT_EQ(unary_lengths(F::Pow2, 5), (std::vector<std::uint64_t>{2, 4, 8, 16, 32}));
    EXPECT_EQ(unary_lengths(F::Square, 4), (std::vector<std::uint64_t>{1, 4, 9, 16}));
    for (auto f : {F::Pow2, F::Square, F::Alpha, F::NLogN}) {
        auto ls = unary_lengths(f, 30);
        auto oracle = oracles::unary(f);
        for (std::size_t i = 0; i < ls.size(); ++i) {
            if (i) {
                EXPECT_LT(ls[i - 1], ls[i]);
            }
            if (ls[i] < 2000) {
                EXPECT_TRUE(oracle(std::string(ls[i], 'a')));
            }
        }
    }
    EXPECT_EQ(gap_check(unary_lengths(F::Square, 60), 20).verdict, GapVerdict::Divergent);
}

TEST(Types, ByHand) {
    EXPECT_EQ(types_of("abbaaaba", TypeScheme::Blocks), (std::set<std::size_t>{1, 2, 3}));
    EXPECT_EQ(types_of("aabbb", TypeScheme::Blocks), (std::set<std::size_t>{0}));
    EXPECT_EQ(types_of("", TypeScheme::Blocks), (std::set<std::size_t>{0}));
    EXPECT_TRUE(is_type("abbba", 3, TypeScheme::SingleA));
    EXPECT_FALSE(is_type("baaab", 3, TypeScheme::SingleA));
    EXPECT_TRUE(is_type("baaab", 3, TypeScheme::Blocks));
    EXPECT_TRUE(is_type("bbab", 0, TypeScheme::SingleA, 3));
    EXPECT_FALSE(is_type("bbbab", 0, TypeScheme::SingleA, 3));
    EXPECT_FALSE(is_type("abab", 0, TypeScheme::SingleA, 3));
}

TEST(Regex, AgreesWithStdRegex) {
    const char* patterns[] = {"a*b", "(ab|ba)+", "a(b|c)*a'", "((ab)+c')*", "(a|b)*aa(a|b)*", "c'+d"};
    for (const char* re : patterns) {
        auto f = regex_to_fsa(re);
        ASSERT_TRUE(f) << re;
        auto ref = as_std_regex(re);
        auto dfa = determinize(*f);
        auto noeps = remove_epsilon(*f);
        EXPECT_FALSE(noeps.has_epsilon());
        for (const auto& w : words_up_to("abcdAC", 5)) {
            const bool want = std::regex_match(w, ref);
            EXPECT_EQ(fsa_accepts(*f, w), want) << re << " " << w;
            EXPECT_EQ(fsa_accepts(noeps, w), want) << re << " " << w;
            EXPECT_EQ(dfa.accepts(w), want) << re << " " << w;
        }
    }
}

TEST(Regex, Errors) {
    for (const char* re : {"(ab", "a)", "*a", "a|*", "'"}) EXPECT_FALSE(regex_to_fsa(re)) << re;
}

TEST(Regex, TheRationalSetT) {
    auto t = f2f2_T();
    auto ref = as_std_regex(kF2F2Regex);
    std::mt19937 rng(11);
    const std::string letters = "abcdABCD";
    for (int i = 0; i < 3000; ++i) {
        std::string w;
        std::size_t len = rng() % 14;
        for (std::size_t j = 0; j < len; ++j) w += letters[rng() % letters.size()];
        EXPECT_EQ(fsa_accepts(t, w), std::regex_match(w, ref)) << w;
    }
    EXPECT_TRUE(fsa_accepts(t, "cadbBDAC"));
    EXPECT_FALSE(fsa_accepts(t, ""));
}

TEST(Fsa, TextRoundTrip) {
    auto f = parse_fsa("fsa\nstates: p q\ninitial: p\nfinal: q\nalphabet: a b\ntrans: p a q\ntrans: q eps p\n");
    ASSERT_TRUE(f);
    EXPECT_TRUE(fsa_accepts(*f, "aaa"));
    EXPECT_FALSE(fsa_accepts(*f, "ab"));
    auto g = parse_fsa(to_text(*f));
    ASSERT_TRUE(g);
    EXPECT_EQ(to_text(*g), to_text(*f));
    EXPECT_EQ(parse_fsa("fsa\nstates: p\ninitial: p\nalphabet: a\ntrans: p b p\n").error().kind,
              ParseError::Kind::UnknownLetter);
}

TEST(Fsa, RightQuotientByInverse) {
    auto b = *regex_to_fsa("(ab)*a");
    EXPECT_EQ(group_inverse("abC"), "cBA");
    for (std::string w : {"", "a", "ba", "Ab"}) {
        auto bw = build_Bw(b, w);
        EXPECT_EQ(bw.finals.size(), 1u);
        const std::string winv = group_inverse(w);
        for (const auto& u : words_up_to("ab", 6))
            EXPECT_EQ(fsa_accepts(bw, u + winv), fsa_accepts(b, u)) << w << " " << u;
    }
}

TEST(Product, IntersectsLanguages) {
    auto a = fixtures::abcd();
    for (const char* re : {"a*b*c*d*", "(a|b|c|d)*", "abcd|aabbccdd|ab"}) {
        auto f = *regex_to_fsa(re);
        auto prod = tsa_fsa_product(a, f);
        ASSERT_TRUE(prod);
        std::set<std::string> want;
        for (const auto& w : enumerate(a, 8).words)
            if (fsa_accepts(f, w)) want.insert(w);
        EXPECT_EQ(enumerate(*prod, 8).words, want) << re;
    }
    auto bad = tsa_fsa_product(a, *regex_to_fsa("ax"));
    ASSERT_FALSE(bad);
    EXPECT_EQ(bad.error().extra, "x");
}

TEST(Rational, WordProblemOfZ) {
    auto wp = fixtures::wpz_tsa().tsa;
    auto yes = rational_membership(wp, *regex_to_fsa("tt"), "tt", 6);
    ASSERT_TRUE(yes);
    EXPECT_TRUE(yes->yes);
    ASSERT_TRUE(yes->witness);
    EXPECT_EQ(yes->witness->word, "ttTT");

    // No power of t equals T, so the search finds nothing and the answer stays open.
    auto no = rational_membership(wp, *regex_to_fsa("t*"), "T", 6);
    ASSERT_TRUE(no);
    EXPECT_FALSE(no->yes);
    EXPECT_TRUE(no->failure);

    auto star = rational_membership(wp, *regex_to_fsa("t*T*"), "", 6);
    ASSERT_TRUE(star);
    EXPECT_TRUE(star->yes);
}

TEST(F2F2, OracleAgreesWithRewriting) {
    auto wp = oracles::wp_f2xf2();
    std::mt19937 rng(5);
    const std::string letters = "abcdABCD";
    for (int i = 0; i < 5000; ++i) {
        std::string w;
        std::size_t len = 2 * (rng() % 6);
        for (std::size_t j = 0; j < len; ++j) w += letters[rng() % letters.size()];
        EXPECT_EQ(wp(w), trivial_in_f2xf2(w)) << w;
    }
    EXPECT_TRUE(wp("acAC"));
    EXPECT_FALSE(wp("abAB"));
}

TEST(F2F2, TWords) {
    TWord tw{{1}, {1}, {1, 1}, {1}};
    EXPECT_EQ(tw.word(), "cadbBDAC");
    EXPECT_TRUE(tw.first_equations());
    EXPECT_TRUE(tw.second_equations());
    EXPECT_TRUE(tw.all_equal());
    EXPECT_TRUE(trivial_in_f2xf2(tw.word()));
    TWord off{{2}, {1}, {1, 2}, {2}};
    EXPECT_TRUE(off.first_equations());
    EXPECT_FALSE(off.second_equations());
    EXPECT_FALSE(trivial_in_f2xf2(off.word()));
    EXPECT_EQ(erasing_hom(tw.word(), {{'a', "a"}, {'b', "b"}}), "ab");
}

TEST(F2F2, SmallExperiment) {
    auto rep = f2f2_experiment(2, 2);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.members, 4u);
    EXPECT_EQ(rep.image, (std::set<std::string>{"ab", "abab", "aabb", "aabbaabb"}));
    // 2^5 + 2^7 + 2^7 + 2^9 exponent choices.
    EXPECT_EQ(rep.words, 32u + 128u + 128u + 512u);
    for (const auto& w : rep.image) EXPECT_TRUE(oracles::ambm_n()(w));
}

TEST(Pumping, SmNeedsMPlusOnePairs) {
    for (std::size_t m = 1; m <= 2; ++m) {
        auto rep = sm_experiment(m, 2);
        EXPECT_TRUE(rep.ok()) << m;
        for (const auto& row : rep.rows) {
            ASSERT_TRUE(row.with_m_plus_1.found);
            auto v = weak_pump_verify(oracles::s_m(m), *row.with_m_plus_1.found, 3);
            ASSERT_TRUE(v);
            EXPECT_FALSE(v->first_failure) << row.word;
        }
    }
}

TEST(Pumping, AnbmcndmPumpsWithTwoPairs) {
    auto oracle = oracles::anbmcndm();
    auto r = find_weak_pump(oracle, "aabbccdd", 2);
    ASSERT_TRUE(r.found);
    EXPECT_EQ(r.found->at(1), "aabbccdd");
    EXPECT_TRUE(oracle(r.found->at(0)));
    EXPECT_TRUE(oracle(r.found->at(2)));
    EXPECT_FALSE(find_weak_pump(oracles::s_m(1), "aabbcc", 1).found);
}

TEST(Pumping, AmbmFactors) {
    auto rep = ambm_experiment(3, 3);
    ASSERT_EQ(rep.rows.size(), 3u);
    EXPECT_TRUE(rep.ok());
    for (const auto& row : rep.rows) {
        EXPECT_EQ(row.word.size(), 6 * row.m);
        EXPECT_EQ(row.factors, (row.word.size() + 1) * (row.word.size() + 2) / 2);
    }
}

}  // namespace
}  // namespace tsalab
