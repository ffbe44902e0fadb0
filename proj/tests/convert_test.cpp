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

#include "tsalab/convert.hpp"
#include "tsalab/fixtures.hpp"
#include "tsalab/report.hpp"

namespace tsalab {
namespace {

// Words over {t, T} that reduce to the identity: equal counts suffice in Z.
bool balanced(const std::string& w) { return std::count(w.begin(), w.end(), 't') * 2 == static_cast<long>(w.size()); }

std::vector<std::string> words_up_to(std::string_view alphabet, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t len = 0; len <= n; ++len) for_each_word(alphabet, len, [&](const std::string& w) { out.push_back(w); });
    return out;
}

bool anbn(const std::string& w) {
    auto n = w.find_first_not_of('a');
    if (n == std::string::npos) return w.empty();
    return w.size() == 2 * n && w.find_first_not_of('b', n) == std::string::npos;
}

constexpr const char* kAnbn = R"(tsa
states: q0 q1 q2
initial: q0
final: q2
labels: A
alphabet: a b
trans: q0 a    true   push 1 A  q0
trans: q0 eps  true   id        q1
trans: q1 b    eq A   down      q1
trans: q1 eps  eq @   id        q2
)";

TEST(Pda, ParseAndPrint) {
    auto p = fixtures::wpz_pda();
    EXPECT_EQ(p.stack, (std::vector<std::string>{"@", "t", "T"}));
    EXPECT_EQ(p.delta.size(), 7u);
    EXPECT_EQ(render_transition(p, p.delta[4]), "q t pop T q");
    EXPECT_EQ(render_transition(p, p.delta[6]), "q eps push @ - qf");
    auto again = parse_pda(to_text(p));
    ASSERT_TRUE(again);
    EXPECT_EQ(to_text(*again), to_text(p));
}

TEST(Pda, ParseErrors) {
    const std::string head = "pda\nstates: q\ninitial: q\nfinal: q\nstack: t\nalphabet: t\n";
    EXPECT_EQ(parse_pda(head + "trans: r t push @ t q\n").error().kind, ParseError::Kind::UnknownState);
    EXPECT_EQ(parse_pda(head + "trans: q x push @ t q\n").error().kind, ParseError::Kind::UnknownLetter);
    EXPECT_FALSE(parse_pda(head + "trans: q t shove @ t q\n"));
    EXPECT_FALSE(parse_pda(head + "trans: q t push Z t q\n"));
    EXPECT_FALSE(parse_pda(head + "trans: q t pop @ q\n"));
}

TEST(Pda, WpzLanguage) {
    auto p = fixtures::wpz_pda();
    for (const auto& w : words_up_to("tT", 8)) {
        auto r = pda_accepts(p, w);
        EXPECT_EQ(r.has_value(), balanced(w)) << w;
        if (!r) {
            EXPECT_EQ(r.error().reason, NotFound::Reason::Exhausted) << w;
        }
    }
}

TEST(PdaToTsa, ShapeOfWpzConversion) {
    auto conv = fixtures::wpz_tsa();
    const auto& a = conv.tsa;
    EXPECT_TRUE(conv.example_root_return);
    EXPECT_FALSE(has_up(a));
    EXPECT_EQ(degree(a).value(), 2u);
    EXPECT_EQ(a.labels, (std::vector<std::string>{"t", "T", "[@]", "[t]", "[T]"}));
    EXPECT_EQ(a.states, (std::vector<std::string>{"q", "qf", "q(u)", "q(t)", "q(T)", "q(d)"}));
    EXPECT_EQ(a.delta.size(), conv.origin.size());
    EXPECT_EQ(a.delta.size(), 23u);
    for (std::size_t i = 0; i < a.delta.size(); ++i)
        for (std::size_t j = i + 1; j < a.delta.size(); ++j) EXPECT_FALSE(a.delta[i].same_as(a.delta[j]));
}

TEST(PdaToTsa, WpzLanguageOneRestricted) {
    auto conv = fixtures::wpz_tsa();
    SearchOptions k1;
    k1.k = 1;
    for (const auto& w : words_up_to("tT", 6)) {
        auto r = accepts(conv.tsa, w, k1);
        EXPECT_EQ(r.has_value(), balanced(w)) << w;
    }
}

TEST(PdaToTsa, SeventeenStepRun) {
    auto p = fixtures::wpz_pda();
    auto conv = fixtures::wpz_tsa();
    auto seq = fixtures::indices_of(conv.tsa, fixtures::wpz_ttTtTT_names());
    ASSERT_EQ(seq.size(), 17u);
    auto tr = build_trace(conv.tsa, "ttTtTT", seq);
    ASSERT_TRUE(tr) << tr.error().step;
    EXPECT_TRUE(is_accepting(conv.tsa, tr->final_configuration(), 6, AcceptMode::Root));
    EXPECT_TRUE(is_k_restricted(conv.tsa, *tr, 1));
    auto checked = check_simulation_locality(conv, p, *tr);
    ASSERT_TRUE(checked) << checked.error().detail;
    EXPECT_EQ(*checked, 7u);

    // Breadth-first search finds a run of the same length.
    auto found = accepts(conv.tsa, "ttTtTT");
    ASSERT_TRUE(found);
    EXPECT_EQ(found->size(), 17u);
}

TEST(PdaToTsa, LocalityHoldsOnSearchedRuns) {
    auto p = fixtures::wpz_pda();
    auto conv = fixtures::wpz_tsa();
    for (const auto& w : words_up_to("tT", 6)) {
        if (!balanced(w)) continue;
        auto tr = accepts(conv.tsa, w);
        ASSERT_TRUE(tr) << w;
        EXPECT_TRUE(check_simulation_locality(conv, p, *tr)) << w;
    }
}

TEST(PdaToTsa, LetterIntoFinalUsesDrain) {
    auto p = parse_pda("pda\nstates: q f\ninitial: q\nfinal: f\nstack: A\nalphabet: a b\n"
                       "trans: q a push @ A q\ntrans: q a push A A q\ntrans: q b pop A q\ntrans: q b push @ - f\n");
    ASSERT_TRUE(p);
    auto conv = pda_to_tsa1(*p);
    EXPECT_FALSE(conv.example_root_return);
    EXPECT_TRUE(conv.tsa.state_id("f.root"));
    auto bare = pda_to_tsa1(*p, RootReturn::None);
    EXPECT_FALSE(bare.tsa.state_id("f.root"));
    SearchOptions any;
    any.accept_mode = AcceptMode::Any;
    for (const auto& w : words_up_to("ab", 6)) {
        const bool want = pda_accepts(*p, w).has_value();
        EXPECT_EQ(accepts(conv.tsa, w).has_value(), want) << w;
        EXPECT_EQ(accepts(bare.tsa, w, any).has_value(), want) << w;
    }
}

TEST(TsaToPda, RejectsUp) {
    auto r = tsa1_to_pda(fixtures::abcd());
    ASSERT_FALSE(r);
    EXPECT_EQ(r.error().transition, 4u);
}

TEST(TsaToPda, AnbnAgrees) {
    auto a = *parse_tsa(kAnbn);
    auto p = tsa1_to_pda(a);
    ASSERT_TRUE(p);
    for (const auto& w : words_up_to("ab", 8)) {
        EXPECT_EQ(pda_accepts(*p, w).has_value(), anbn(w)) << w;
        EXPECT_EQ(accepts(a, w).has_value(), anbn(w)) << w;
    }
}

TEST(TsaToPda, SetBecomesPopPush) {
    auto a = *parse_tsa("tsa\nstates: q0 q1 q2 q3\ninitial: q0\nfinal: q3\nlabels: A B\nalphabet: a b c\n"
                        "trans: q0 a true push 1 A q1\ntrans: q1 b true set B q2\ntrans: q2 c eq B down q3\n");
    auto p = tsa1_to_pda(a);
    ASSERT_TRUE(p);
    EXPECT_TRUE(p->state_id("q2(A)"));
    for (const auto& w : words_up_to("abc", 4))
        EXPECT_EQ(pda_accepts(*p, w).has_value(), w == "abc") << w;
}

TEST(RoundTrip, WpzThroughBothDirections) {
    auto p = fixtures::wpz_pda();
    auto conv = pda_to_tsa1(p);
    auto back = tsa1_to_pda(conv.tsa);
    ASSERT_TRUE(back);
    for (const auto& w : words_up_to("tT", 6)) EXPECT_EQ(pda_accepts(*back, w).has_value(), balanced(w)) << w;
}

}  // namespace
}  // namespace tsalab
