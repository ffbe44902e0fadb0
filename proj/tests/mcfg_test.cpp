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

#include <regex>

#include "tsalab/fixtures.hpp"
#include "tsalab/mcfg.hpp"
#include "tsalab/run.hpp"

namespace tsalab {
namespace {

std::set<std::string> words_where(std::string_view alphabet, std::size_t max_len,
                                  const std::function<bool(const std::string&)>& keep) {
    std::set<std::string> out;
    for (std::size_t len = 0; len <= max_len; ++len)
        for_each_word(alphabet, len, [&](const std::string& w) {
            if (keep(w)) out.insert(w);
        });
    return out;
}

long count(const std::string& w, char c) { return std::count(w.begin(), w.end(), c); }

bool blocks_abcd(const std::string& w) {
    static const std::regex shape("a*b*c*d*");
    return std::regex_match(w, shape);
}

TEST(Mcfg, EqualBlocks) {
    auto got = mcfg_enumerate(fixtures::eq_blocks(), 12);
    auto want = words_where("abcd", 12, [](const std::string& w) {
        return blocks_abcd(w) && count(w, 'a') == count(w, 'b') && count(w, 'b') == count(w, 'c') &&
               count(w, 'c') == count(w, 'd');
    });
    EXPECT_EQ(got, want);
}

TEST(Mcfg, CrossedPairs) {
    auto got = mcfg_enumerate(fixtures::crossed(), 10);
    auto want = words_where("abcd", 10, [](const std::string& w) {
        return blocks_abcd(w) && count(w, 'a') == count(w, 'c') && count(w, 'b') == count(w, 'd');
    });
    EXPECT_EQ(got, want);
}

TEST(Mcfg, CopyLanguage) {
    auto g = parse_mcfg(R"(mcfg
start: S
rule: C(,) <-
rule: C(a x1, a x2) <- C(x1, x2)
rule: C(b x1, b x2) <- C(x1, x2)
rule: S(x1 x2) <- C(x1, x2)
)");
    ASSERT_TRUE(g) << describe(g.error());
    EXPECT_EQ(g->rank(), 2u);
    auto want = words_where("ab", 10, [](const std::string& w) {
        return w.size() % 2 == 0 && w.substr(0, w.size() / 2) == w.substr(w.size() / 2);
    });
    EXPECT_EQ(mcfg_enumerate(*g, 10), want);
    EXPECT_TRUE(mcfg_member(*g, "abab"));
    EXPECT_FALSE(mcfg_member(*g, "abba"));
}

// A rank-1 grammar for balanced brackets against a counter.
TEST(Mcfg, ContextFreeSpecialCase) {
    auto g = *parse_mcfg("mcfg\nrule: S() <-\nrule: S(a x1 b x2) <- S(x1), S(x2)\n");
    EXPECT_EQ(g.start, "S");
    auto want = words_where("ab", 10, [](const std::string& w) {
        int depth = 0;
        for (char c : w) {
            depth += c == 'a' ? 1 : -1;
            if (depth < 0) return false;
        }
        return depth == 0;
    });
    EXPECT_EQ(mcfg_enumerate(g, 10), want);
}

TEST(Mcfg, ValuesRespectBound) {
    auto vals = mcfg_values(fixtures::eq_blocks(), 8);
    for (const auto& t : vals["T"]) {
        ASSERT_EQ(t.size(), 2u);
        EXPECT_LE(total_length(t), 8u);
        EXPECT_EQ(t[0].size(), t[1].size());
    }
    EXPECT_EQ(vals["T"].size(), 3u);
}

TEST(Mcfg, Emptiness) {
    EXPECT_FALSE(mcfg_is_empty(fixtures::eq_blocks()));
    auto g = *parse_mcfg("mcfg\nrule: S(x1) <- A(x1)\nrule: A(a x1) <- A(x1)\n");
    EXPECT_TRUE(mcfg_is_empty(g));
    EXPECT_TRUE(mcfg_enumerate(g, 8).empty());
}

TEST(Mcfg, WitnessBoundFindsAWord) {
    for (const auto& g : {fixtures::eq_blocks(), fixtures::crossed(),
                          *parse_mcfg("mcfg\nrule: A(a b c,d) <-\nrule: S(x2 x1) <- A(x1, x2)\n")}) {
        auto b = witness_bounds(g);
        ASSERT_TRUE(b.count(g.start));
        EXPECT_FALSE(mcfg_enumerate(g, b.at(g.start)).empty());
    }
}

TEST(Mcfg, Errors) {
    struct Case {
        const char* src;
        McfgError::Kind kind;
    };
    const Case cases[] = {
        {"mcfg\nrule: S(x1) <- A(x1)\nrule: A(a, b) <-\n", McfgError::Kind::RankMismatch},
        {"mcfg\nrule: S(x1 x1) <- A(x1)\nrule: A(a) <-\n", McfgError::Kind::VariableReused},
        {"mcfg\nrule: S(x1) <- A(x1), B(x1)\n", McfgError::Kind::VariableReused},
        {"mcfg\nrule: S(x2) <- A(x1)\n", McfgError::Kind::SyntaxError},
        {"mcfg\nrule: S(ab) <-\n", McfgError::Kind::SyntaxError},
        {"mcfg\nrule: S(a)\n", McfgError::Kind::SyntaxError},
        {"grammar\n", McfgError::Kind::SyntaxError},
        {"mcfg\nstart: T\nrule: T(a, b) <-\n", McfgError::Kind::RankMismatch},
    };
    for (const auto& c : cases) {
        auto g = parse_mcfg(c.src);
        ASSERT_FALSE(g) << c.src;
        EXPECT_EQ(g.error().kind, c.kind) << c.src << describe(g.error());
    }
}

TEST(Mcfg, TextRoundTrip) {
    for (const auto& g : {fixtures::eq_blocks(), fixtures::crossed()}) {
        auto again = parse_mcfg(to_text(g));
        ASSERT_TRUE(again);
        EXPECT_EQ(to_text(*again), to_text(g));
        EXPECT_EQ(mcfg_enumerate(*again, 8), mcfg_enumerate(g, 8));
    }
}

}  // namespace
}  // namespace tsalab
