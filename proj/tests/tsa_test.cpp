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

#include "tsalab/fixtures.hpp"
#include "tsalab/run.hpp"
#include "tsalab/transform.hpp"
#include "tsalab/tsa.hpp"

namespace tsalab {
namespace {

constexpr const char* kStationary = R"(tsa
states: p q r s
initial: p
final: s
labels: A B
alphabet: a
trans: p a    true   push 1 A  q
trans: q eps  true   set B     r
trans: r eps  eq B   id        s
trans: r eps  eq A   set A     s
trans: s eps  true   down      s
)";

TEST(TsaFormat, ParsesAbcd) {
    auto a = fixtures::abcd();
    EXPECT_EQ(a.states.size(), 5u);
    EXPECT_EQ(a.labels, (std::vector<std::string>{"STAR", "HASH"}));
    EXPECT_EQ(a.alphabet, "abcd");
    EXPECT_EQ(a.delta.size(), 9u);
    EXPECT_EQ(a.delta[0].name, "s1");
    EXPECT_EQ(render_transition(a, a.delta[2]), "q1 eps eq HASH down q1");
    EXPECT_EQ(render_transition(a, a.delta[4]), "q1 eps eq @ up 1 q2");
}

TEST(TsaFormat, RoundTrip) {
    for (const char* src : {fixtures::kAbcdTsa, fixtures::kBranchTsa, fixtures::kLookaheadTsa, kStationary}) {
        auto a = parse_tsa(src);
        ASSERT_TRUE(a) << describe(a.error());
        auto b = parse_tsa(to_text(*a));
        ASSERT_TRUE(b) << describe(b.error());
        EXPECT_EQ(to_text(*a), to_text(*b));
        ASSERT_EQ(a->delta.size(), b->delta.size());
        for (std::size_t i = 0; i < a->delta.size(); ++i) {
            EXPECT_TRUE(a->delta[i].same_as(b->delta[i]));
            EXPECT_EQ(a->delta[i].name, b->delta[i].name);
        }
    }
}

TEST(TsaFormat, CommentsAndNames) {
    auto a = parse_tsa("# machine\ntsa\nstates: x\ninitial: x\nfinal: x\nlabels: L\nalphabet: a\n"
                       "trans: x a true push 1 L x as grow  # comment\n");
    ASSERT_TRUE(a);
    EXPECT_EQ(a->delta[0].name, "grow");
}

struct BadInput {
    const char* body;
    ParseError::Kind kind;
};

TEST(TsaFormat, Errors) {
    const std::string head = "tsa\nstates: x y\ninitial: x\nfinal: y\nlabels: L\nalphabet: a\n";
    const BadInput cases[] = {
        {"trans: z a true id y\n", ParseError::Kind::UnknownState},
        {"trans: x b true id y\n", ParseError::Kind::UnknownLetter},
        {"trans: x a eq M id y\n", ParseError::Kind::UnknownLabel},
        {"trans: x a true push 0 L y\n", ParseError::Kind::BadIndex},
        {"trans: x a true push 1 @ y\n", ParseError::Kind::UnknownLabel},
        {"trans: x a maybe id y\n", ParseError::Kind::SyntaxError},
        {"trans: x a true id y extra\n", ParseError::Kind::SyntaxError},
        {"colour: red\n", ParseError::Kind::SyntaxError},
    };
    for (const auto& c : cases) {
        auto a = parse_tsa(head + c.body);
        ASSERT_FALSE(a) << c.body;
        EXPECT_EQ(a.error().kind, c.kind) << c.body << describe(a.error());
        EXPECT_EQ(a.error().line, 7u);
    }
    EXPECT_FALSE(parse_tsa("states: x\n"));
    EXPECT_FALSE(parse_tsa("tsa\nstates: x\n"));
}

TEST(TsaDegree, CountsPushIndices) {
    EXPECT_EQ(degree(fixtures::abcd()).value(), 1u);
    EXPECT_EQ(degree(fixtures::branching()).value(), 2u);
    EXPECT_EQ(degree(fixtures::lookahead()).value(), 2u);
}

TEST(TsaDegree, NormalizeRemapsIndices) {
    auto a = parse_tsa("tsa\nstates: x\ninitial: x\nfinal: x\nlabels: L\nalphabet: a\n"
                       "trans: x a true push 5 L x\ntrans: x a true push 9 L x\n"
                       "trans: x eps true up 9 x\ntrans: x eps true up 4 x\n");
    ASSERT_TRUE(a);
    auto b = normalize_child_indices(*a);
    ASSERT_EQ(b.delta.size(), 3u);
    EXPECT_EQ(b.delta[0].instr.n, 1u);
    EXPECT_EQ(b.delta[1].instr.n, 2u);
    EXPECT_EQ(b.delta[2].instr, Instruction::up(2));
    EXPECT_TRUE(has_up(b));
}

// Every tree stack of depth <= 2 over two labels and pushes at index 1.
std::vector<TreeStack> small_stacks() {
    std::vector<TreeStack> out{ts_init()};
    for (int c : {0, 1}) {
        auto one = *ts_init().apply(Instruction::push(1, Label::of(c)));
        out.push_back(one);
        out.push_back(*one.apply(Instruction::down()));
        for (int d : {0, 1}) out.push_back(*one.apply(Instruction::push(1, Label::of(d))));
    }
    return out;
}

// Each transition the closure adds does exactly what its two parts do in sequence.
TEST(Standardise, CompositesAreSound) {
    auto a = *parse_tsa(kStationary);
    auto b = standardise(a);
    EXPECT_TRUE(is_standardised(b));
    EXPECT_FALSE(is_standardised(a));
    ASSERT_GT(b.delta.size(), a.delta.size());
    for (std::size_t i = a.delta.size(); i < b.delta.size(); ++i) {
        const auto& t3 = b.delta[i];
        EXPECT_TRUE(t3.is_stationary_epsilon());
        for (const auto& ts : small_stacks()) {
            if (!ts.holds(t3.pred)) continue;
            auto direct = ts.apply(t3.instr);
            if (!direct) continue;
            bool matched = false;
            for (const auto& t1 : b.delta) {
                for (const auto& t2 : b.delta) {
                    if (&t1 == &t3 || &t2 == &t3) continue;
                    if (t1.src != t3.src || t1.dst != t2.src || t2.dst != t3.dst) continue;
                    if (!t1.is_stationary_epsilon() || !t2.is_stationary_epsilon()) continue;
                    if (!ts.holds(t1.pred)) continue;
                    auto mid = ts.apply(t1.instr);
                    if (!mid || !mid->holds(t2.pred)) continue;
                    auto end = mid->apply(t2.instr);
                    if (end && *end == *direct) matched = true;
                }
            }
            EXPECT_TRUE(matched) << render_transition(b, t3);
        }
    }
}

TEST(Standardise, PreservesLanguage) {
    for (const char* src : {kStationary, fixtures::kBranchTsa, fixtures::kAbcdTsa}) {
        auto a = *parse_tsa(src);
        auto b = standardise(a);
        EXPECT_EQ(enumerate(a, 6).words, enumerate(b, 6).words);
    }
}

TEST(RootAccepting, AddsDrainStates) {
    auto a = *parse_tsa(kStationary);
    SearchOptions any;
    any.accept_mode = AcceptMode::Any;
    EXPECT_TRUE(accepts(a, "a", any));
    auto b = make_root_accepting(a);
    ASSERT_TRUE(b.state_id("s.down"));
    ASSERT_TRUE(b.state_id("s.root"));
    EXPECT_EQ(b.finals, (std::set<StateId>{*b.state_id("s.root")}));
    auto run = accepts(b, "a");
    ASSERT_TRUE(run);
    EXPECT_TRUE(run->final_configuration().ts.pointer().is_root());
    EXPECT_EQ(enumerate(a, 4, any).words, enumerate(b, 4).words);
}

}  // namespace
}  // namespace tsalab
