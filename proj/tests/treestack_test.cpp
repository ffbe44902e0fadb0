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

#include <map>
#include <random>
#include <string>

#include "tsalab/treestack.hpp"

namespace tsalab {
namespace {

// Naive model: vertices keyed by dotted strings, pointer as a string.
struct NaiveStack {
    std::map<std::string, int> nodes{{"", -1}};
    std::string ptr;

    static std::string child(const std::string& p, unsigned n) {
        return p.empty() ? std::to_string(n) : p + "." + std::to_string(n);
    }
    static std::string parent(const std::string& p) {
        auto dot = p.rfind('.');
        return dot == std::string::npos ? std::string() : p.substr(0, dot);
    }
    bool apply(const Instruction& f) {
        switch (f.kind) {
            case Instruction::Kind::Id: return true;
            case Instruction::Kind::Push: {
                auto c = child(ptr, f.n);
                if (nodes.count(c)) return false;
                nodes[c] = f.label.id;
                ptr = c;
                return true;
            }
            case Instruction::Kind::Up: {
                auto c = child(ptr, f.n);
                if (!nodes.count(c)) return false;
                ptr = c;
                return true;
            }
            case Instruction::Kind::Down:
                if (ptr.empty()) return false;
                ptr = parent(ptr);
                return true;
            case Instruction::Kind::Set:
                if (ptr.empty()) return false;
                nodes[ptr] = f.label.id;
                return true;
        }
        return false;
    }
};

std::string key(const Address& a) { return a.is_root() ? std::string() : a.to_string(); }

TEST(Address, ParseAndPrint) {
    EXPECT_EQ(Address::parse("eps"), Address::root());
    EXPECT_EQ(Address::parse(""), Address::root());
    EXPECT_EQ(Address::parse("1.2"), (Address{1, 2}));
    EXPECT_EQ(Address::parse("12"), (Address{12}));
    EXPECT_FALSE(Address::parse("1..2"));
    EXPECT_FALSE(Address::parse("0"));
    EXPECT_FALSE(Address::parse("1.x"));
    EXPECT_EQ((Address{3, 1, 4}).to_string(), "3.1.4");
    EXPECT_EQ(Address::root().to_string(), "eps");
    EXPECT_THROW(Address({1, 0}), std::invalid_argument);
}

TEST(Address, PrefixAndRebase) {
    Address a{1, 2}, b{1, 2, 3};
    EXPECT_TRUE(a.is_prefix_of(b));
    EXPECT_TRUE(a.is_prefix_of(a));
    EXPECT_FALSE(b.is_prefix_of(a));
    EXPECT_TRUE(Address::root().is_prefix_of(a));
    EXPECT_EQ(b.rebase(a, Address{2}), (Address{2, 3}));
    EXPECT_EQ(b.parent(), a);
    EXPECT_EQ(b.last(), 3u);
}

TEST(TreeStack, InitialIsRootOnly) {
    auto ts = ts_init();
    EXPECT_EQ(ts.size(), 1u);
    EXPECT_TRUE(ts.pointer().is_root());
    EXPECT_TRUE(ts.pointer_label().is_root());
    EXPECT_TRUE(ts.well_formed());
}

TEST(TreeStack, InstructionErrors) {
    auto ts = ts_init();
    EXPECT_EQ(ts.apply(Instruction::down()).error(), TsError::PointerAtRoot);
    EXPECT_EQ(ts.apply(Instruction::set(Label::of(0))).error(), TsError::PointerAtRoot);
    EXPECT_EQ(ts.apply(Instruction::up(1)).error(), TsError::UpTargetMissing);
    auto pushed = ts.apply(Instruction::push(1, Label::of(0)));
    ASSERT_TRUE(pushed);
    auto back = pushed->apply(Instruction::down());
    ASSERT_TRUE(back);
    EXPECT_EQ(back->apply(Instruction::push(1, Label::of(1))).error(), TsError::PushTargetExists);
    auto up = back->apply(Instruction::up(1));
    ASSERT_TRUE(up);
    EXPECT_EQ(up->pointer(), (Address{1}));
}

TEST(TreeStack, PredicatesAndRender) {
    auto ts = *ts_init().apply(Instruction::push(2, Label::of(1)));
    EXPECT_TRUE(ts.holds(Predicate::always()));
    EXPECT_TRUE(ts.holds(Predicate::eq(Label::of(1))));
    EXPECT_FALSE(ts.holds(Predicate::eq(Label::root())));
    std::vector<std::string> names{"A", "B"};
    EXPECT_EQ(render(ts, names), "(eps=@, 2=B; ptr=2)");
}

TEST(TreeStack, FromNodesRejectsGaps) {
    std::map<Address, Label> nodes{{Address::root(), Label::root()}, {Address{1, 1}, Label::of(0)}};
    EXPECT_THROW(TreeStack::from_nodes(nodes, Address::root()), std::invalid_argument);
    nodes[Address{1}] = Label::of(0);
    EXPECT_NO_THROW(TreeStack::from_nodes(nodes, Address{1, 1}));
}

TEST(TreeStack, AboveBelowPartitions) {
    auto ts = ts_init();
    for (auto f : {Instruction::push(1, Label::of(0)), Instruction::push(1, Label::of(0)), Instruction::down(),
                   Instruction::push(2, Label::of(1)), Instruction::down(), Instruction::down()})
        ts = *ts.apply(f);
    auto ab = above_below(ts, Address{1});
    ASSERT_TRUE(ab);
    EXPECT_EQ(ab->above.size() + ab->below.size(), ts.size());
    EXPECT_EQ(ab->above.size(), 3u);
    EXPECT_FALSE(above_below(ts, Address{2}));
}

// Random instruction sequences against the naive model.
TEST(TreeStack, MatchesNaiveModel) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        TreeStack ts;
        NaiveStack model;
        for (int i = 0; i < 60; ++i) {
            Instruction f;
            unsigned n = 1 + rng() % 2;
            Label c = Label::of(static_cast<int>(rng() % 3));
            switch (rng() % 5) {
                case 0: f = Instruction::id(); break;
                case 1: f = Instruction::push(n, c); break;
                case 2: f = Instruction::up(n); break;
                case 3: f = Instruction::down(); break;
                default: f = Instruction::set(c); break;
            }
            auto next = ts.apply(f);
            bool ok = model.apply(f);
            ASSERT_EQ(next.has_value(), ok);
            if (next) ts = *next;
            ASSERT_TRUE(ts.well_formed());
            ASSERT_EQ(key(ts.pointer()), model.ptr);
            ASSERT_EQ(ts.size(), model.nodes.size());
            for (const auto& [addr, lab] : ts.nodes()) {
                ASSERT_EQ(model.nodes.at(key(addr)), lab.id);
            }
        }
    }
}

}  // namespace
}  // namespace tsalab
