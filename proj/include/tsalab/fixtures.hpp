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

#ifndef TSALAB_FIXTURES_HPP
#define TSALAB_FIXTURES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "tsalab/convert.hpp"
#include "tsalab/mcfg.hpp"
#include "tsalab/tsa.hpp"

// Reference machines used by the CLI, the suites and the tests. The same
// machines ship as files under data/.
namespace tsalab::fixtures {

inline constexpr const char* kAbcdTsa = R"(tsa
states: q0 q1 q2 q3 q4
initial: q0
final: q4
labels: STAR HASH
alphabet: a b c d
trans: q0 a    true     push 1 STAR  q0
trans: q0 eps  true     push 1 HASH  q1
trans: q1 eps  eq HASH  down         q1
trans: q1 b    eq STAR  down         q1
trans: q1 eps  eq @     up 1         q2
trans: q2 c    eq STAR  up 1         q2
trans: q2 eps  eq HASH  down         q3
trans: q3 d    eq STAR  down         q3
trans: q3 eps  eq @     id           q4
)";

inline constexpr const char* kBranchTsa = R"(tsa
states: q0 q1 q2 q3 q4 q5 q6 q7 q8
initial: q0
final: q8
labels: c1 c2 c3 c4 c5 c6 c7
alphabet: a b c d e f g h
trans: q0 a    true  push 1 c1  q1
trans: q1 b    true  push 1 c2  q2
trans: q2 eps  true  set c3     q3
trans: q3 c    true  push 2 c4  q4
trans: q4 eps  true  down       q5
trans: q5 d    true  down       q6
trans: q6 e    true  push 2 c5  q7
trans: q7 eps  true  down       q4
trans: q4 eps  true  up 1       q4
trans: q4 eps  true  set c6     q3
trans: q3 f    true  push 1 c7  q3
trans: q3 eps  true  down       q0
trans: q0 g    true  down       q7
trans: q7 h    true  down       q8
)";

/// Two states over one label, accepting a*: the loop reads a at the root.
inline constexpr const char* kAStarTsa = R"(tsa
states: q0 q1
initial: q0
final: q1
labels: c
alphabet: a
trans: q0 a    true  id  q0
trans: q0 eps  true  id  q1
)";

inline Tsa load(const char* src) { return *parse_tsa(src); }

inline Tsa abcd() { return load(kAbcdTsa); }
inline Tsa branching() { return load(kBranchTsa); }
inline Tsa a_star() { return load(kAStarTsa); }

/// The table run for a^m b^m c^m d^m, as 0-based delta indices.
inline std::vector<std::size_t> abcd_run(std::size_t m) {
    std::vector<std::size_t> seq;
    seq.insert(seq.end(), m, 0);
    seq.push_back(1);
    seq.push_back(2);
    seq.insert(seq.end(), m, 3);
    seq.push_back(4);
    seq.insert(seq.end(), m, 5);
    seq.push_back(6);
    seq.insert(seq.end(), m, 7);
    seq.push_back(8);
    return seq;
}

inline std::string abcd_word(std::size_t m) {
    return std::string(m, 'a') + std::string(m, 'b') + std::string(m, 'c') + std::string(m, 'd');
}

inline std::vector<std::size_t> branching_run() {
    std::vector<std::size_t> seq;
    for (std::size_t i = 0; i < 14; ++i) seq.push_back(i);
    return seq;
}

inline constexpr const char* kEqBlocksMcfg = R"(mcfg
start: S
rule: T(,) <-
rule: T(a x1 b, c x2 d) <- T(x1, x2)
rule: S(x1 x2) <- T(x1, x2)
)";

inline constexpr const char* kCrossedMcfg = R"(mcfg
start: S
rule: P(,) <-
rule: Q(,) <-
rule: P(a x1, c x2) <- P(x1, x2)
rule: Q(b x1, d x2) <- Q(x1, x2)
rule: S(x1 y1 x2 y2) <- P(x1, x2), Q(y1, y2)
)";

inline Mcfg eq_blocks() { return *parse_mcfg(kEqBlocksMcfg); }
inline Mcfg crossed() { return *parse_mcfg(kCrossedMcfg); }

// Word problem of Z over {t, T}: T is the inverse of t.
inline constexpr const char* kWpzPda = R"(pda
states: q qf
initial: q
final: qf
stack: t T
alphabet: t T
trans: q t   push @ t  q   as s_t@
trans: q t   push t t  q   as s_tt
trans: q T   push @ T  q   as s_T@
trans: q T   push T T  q   as s_TT
trans: q t   pop T     q   as s_t
trans: q T   pop t     q   as s_T
trans: q eps push @ -  qf  as s_f
)";

inline Pda wpz_pda() { return *parse_pda(kWpzPda); }
inline Tsa1Conversion wpz_tsa() { return pda_to_tsa1(wpz_pda()); }

/// The 17 transitions accepting ttTtTT on the converted WP(Z) machine, by name.
inline std::vector<std::string> wpz_ttTtTT_names() {
    return {"s0",   "s_t@.1", "s_t@.2", "s_tt.1", "s_t@.2", "s_T.5", "s_T.7", "s_tt.3", "s_tt.4",
            "s_t@.2", "s_T.5", "s_T.7", "s_T.5", "s_T.6", "s_T.7", "s_f.f1", "s_f.f2"};
}

// A one-letter-lookahead attempt at WP(Z) with a single box label. The noteq
// guards are expanded into one transition per allowed label.
inline constexpr const char* kLookaheadTsa = R"(tsa
states: S qf qt qT
initial: S
final: qf
labels: t T []
alphabet: t T
trans: S  t   eq t   push 1 []  qt  as s1.t
trans: S  t   eq @   push 1 []  qt  as s1.@
trans: S  t   eq []  push 1 []  qt  as s1.[]
trans: qt eps true   push 2 t   S   as s2
trans: S  T   eq T   push 1 []  qT  as s3.T
trans: S  T   eq @   push 1 []  qT  as s3.@
trans: S  T   eq []  push 1 []  qT  as s3.[]
trans: qT eps true   push 2 T   S   as s4
trans: S  eps eq []  down       S   as s5
trans: S  t   eq T   down       S   as s6
trans: S  T   eq t   down       S   as s7
trans: S  eps eq @   id         qf  as s8
)";

inline Tsa lookahead() { return load(kLookaheadTsa); }

/// The run prefix on ttTtTT that gets stuck before the fourth letter.
inline std::vector<std::string> lookahead_stuck_prefix_names() { return {"s1.@", "s2", "s1.t", "s2", "s7", "s5"}; }

inline std::vector<std::size_t> indices_of(const Tsa& a, const std::vector<std::string>& names) {
    std::vector<std::size_t> out;
    for (const auto& n : names) {
        for (std::size_t i = 0; i < a.delta.size(); ++i) {
            if (a.delta[i].name == n) {
                out.push_back(i);
                break;
            }
        }
    }
    return out;
}

}  // namespace tsalab::fixtures

#endif  // TSALAB_FIXTURES_HPP
