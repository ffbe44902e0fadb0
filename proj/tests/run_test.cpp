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
#include "tsalab/run.hpp"

namespace tsalab {
namespace {

// a^n b^n c^n d^n by counting, independent of the library oracles.
bool abcd_member(const std::string& w) {
    static const std::regex shape("a*b*c*d*");
    if (!std::regex_match(w, shape)) return false;
    auto n = std::count(w.begin(), w.end(), 'a');
    return std::count(w.begin(), w.end(), 'b') == n && std::count(w.begin(), w.end(), 'c') == n &&
           std::count(w.begin(), w.end(), 'd') == n;
}

TEST(Run, AbcdEnumerationMatchesCounting) {
    auto a = fixtures::abcd();
    auto e = enumerate(a, 8);
    EXPECT_TRUE(e.complete());
    std::set<std::string> expected;
    for (std::size_t len = 0; len <= 8; ++len) {
        for_each_word("abcd", len, [&](const std::string& w) {
            if (abcd_member(w)) expected.insert(w);
        });
    }
    EXPECT_EQ(e.words, expected);
}

TEST(Run, TableRunReplays) {
    auto a = fixtures::abcd();
    for (std::size_t m = 0; m <= 5; ++m) {
        auto tr = build_trace(a, fixtures::abcd_word(m), fixtures::abcd_run(m));
        ASSERT_TRUE(tr) << m;
        EXPECT_TRUE(consumed_whole_word(*tr));
        EXPECT_TRUE(is_accepting(a, tr->final_configuration(), tr->word.size(), AcceptMode::Root));
        EXPECT_TRUE(replay(a, *tr));
        EXPECT_TRUE(is_k_restricted(a, *tr, 2));
        // Vertex 1 is entered by a push and later by up 1, even for m = 0.
        EXPECT_FALSE(is_k_restricted(a, *tr, 1));
        EXPECT_EQ(tr->final_configuration().max_visits(), 2u);
    }
}

TEST(Run, ReplayReportsFirstBadStep) {
    auto a = fixtures::abcd();
    auto seq = fixtures::abcd_run(2);
    std::swap(seq[3], seq[4]);
    auto tr = build_trace(a, "aabbccdd", seq);
    ASSERT_FALSE(tr);
    EXPECT_EQ(tr.error().step, 3u);

    auto good = *build_trace(a, "aabbccdd", fixtures::abcd_run(2));
    good.steps[5].cfg.state = 0;
    auto r = replay(a, good);
    ASSERT_FALSE(r);
    EXPECT_EQ(r.error().step, 5u);
}

TEST(Run, StepReasons) {
    auto a = fixtures::abcd();
    auto c0 = initial_configuration(a);
    EXPECT_EQ(step(a, "b", c0, a.delta[0]).error().reason, NotApplicable::Reason::InputMismatch);
    EXPECT_EQ(step(a, "a", c0, a.delta[2]).error().reason, NotApplicable::Reason::WrongState);
    auto c1 = *step(a, "", c0, a.delta[1]);
    EXPECT_EQ(step(a, "", c1, a.delta[4]).error().reason, NotApplicable::Reason::PredicateFails);
    auto e = step(a, "", c0, Transition{0, std::nullopt, Predicate::always(), Instruction::down(), 0, "x"});
    EXPECT_EQ(e.error().reason, NotApplicable::Reason::InstructionFails);
    EXPECT_EQ(e.error().ts_error, TsError::PointerAtRoot);
}

TEST(Run, RestrictionChangesLanguage) {
    auto a = fixtures::abcd();
    SearchOptions k1;
    k1.k = 1;
    EXPECT_TRUE(accepts(a, ""));
    for (std::string w : {"", "abcd"}) {
        auto r = accepts(a, w, k1);
        ASSERT_FALSE(r);
        EXPECT_EQ(r.error().reason, NotFound::Reason::Exhausted);
    }
    EXPECT_TRUE(enumerate(a, 8, k1).words.empty());
}

TEST(Run, BudgetIsNotRejection) {
    auto a = fixtures::abcd();
    SearchOptions tight;
    tight.max_steps = 3;
    auto r = accepts(a, "aabbccdd", tight);
    ASSERT_FALSE(r);
    EXPECT_EQ(r.error().reason, NotFound::Reason::Budget);
    auto wrong = accepts(a, "aabbccd");
    ASSERT_FALSE(wrong);
    EXPECT_EQ(wrong.error().reason, NotFound::Reason::Exhausted);
}

TEST(Run, AnyModeAcceptsAwayFromRoot) {
    auto a = *parse_tsa("tsa\nstates: x y\ninitial: x\nfinal: y\nlabels: L\nalphabet: a\n"
                        "trans: x a true push 1 L y\n");
    SearchOptions any;
    any.accept_mode = AcceptMode::Any;
    EXPECT_FALSE(accepts(a, "a"));
    EXPECT_TRUE(accepts(a, "a", any));
}

TEST(Run, AStarEnumeration) {
    auto e = enumerate(fixtures::a_star(), 5);
    EXPECT_EQ(e.words, (std::set<std::string>{"", "a", "aa", "aaa", "aaaa", "aaaaa"}));
}

TEST(Run, BranchingWordAndRun) {
    auto a = fixtures::branching();
    auto tr = build_trace(a, "abcdefgh", fixtures::branching_run());
    ASSERT_TRUE(tr);
    EXPECT_TRUE(is_accepting(a, tr->final_configuration(), 8, AcceptMode::Root));
    EXPECT_TRUE(accepts(a, "abcdefgh"));
    EXPECT_FALSE(accepts(a, "abcdefg"));
}

TEST(Run, ProperRuns) {
    auto a = *parse_tsa("tsa\nstates: x y z\ninitial: x\nfinal: z\nlabels: L\nalphabet: a\n"
                        "trans: x eps true id y\ntrans: y eps true id z\ntrans: x eps true id z\n");
    auto two = *build_trace(a, "", {0, 1});
    EXPECT_FALSE(is_proper(a, two));
    EXPECT_TRUE(is_proper(a, *build_trace(a, "", {2})));
    SearchOptions proper;
    proper.proper = true;
    auto r = accepts(a, "", proper);
    ASSERT_TRUE(r);
    EXPECT_TRUE(is_proper(a, *r));
}

TEST(Run, FindAnyWord) {
    auto found = find_any_word(fixtures::abcd(), 8);
    ASSERT_TRUE(found);
    EXPECT_EQ(found->word, "");
    auto empty = *parse_tsa("tsa\nstates: x y\ninitial: x\nfinal: y\nlabels: L\nalphabet: a\n"
                            "trans: x a true push 1 L x\n");
    auto none = find_any_word(empty, 4);
    ASSERT_FALSE(none);
    EXPECT_EQ(none.error().reason, NotFound::Reason::Budget);
}

TEST(Run, VisitCountsAgreeWithConfiguration) {
    auto a = fixtures::branching();
    auto tr = *build_trace(a, "abcdefgh", fixtures::branching_run());
    EXPECT_EQ(visited_from_below_counts(a, tr), tr.final_configuration().vfb);
}

}  // namespace
}  // namespace tsalab
