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

#ifndef TSALAB_TRANSFORM_HPP
#define TSALAB_TRANSFORM_HPP

#include <optional>
#include <string>
#include <vector>

#include "tsalab/tsa.hpp"

namespace tsalab {

namespace detail {

inline bool is_set_of(const Instruction& f, Label c) { return f.kind == Instruction::Kind::Set && f.label == c; }

/// The composite (p3, f3) for two stationary eps transitions applied in sequence,
/// or nullopt when no rule of the standardisation table covers the pair.
inline std::optional<std::pair<Predicate, Instruction>> compose_stationary(const Transition& t1, const Transition& t2) {
    using PK = Predicate::Kind;
    using IK = Instruction::Kind;
    const auto& p1 = t1.pred;
    const auto& p2 = t2.pred;
    const auto& f1 = t1.instr;
    const auto& f2 = t2.instr;
    const bool f2_id = f2.kind == IK::Id;

    if (p1.kind == PK::True && p2.kind == PK::True) {
        return std::pair{p2, f2_id ? f1 : f2};
    }
    if (p1.kind == PK::True && p2.kind == PK::Eq) {
        const Label c = p2.label;
        if (f1.kind == IK::Id) return std::pair{p2, f2_id ? f1 : f2};
        if (is_set_of(f1, c)) return std::pair{p1, f2_id ? f1 : f2};
        return std::nullopt;
    }
    if (p1.kind == PK::Eq && p2.kind == PK::True) {
        if (f2_id) return std::pair{p1, f1};
        return std::nullopt;
    }
    // both eq
    const Label c = p1.label;
    const Label d = p2.label;
    if (c == d) {
        if (f1.kind == IK::Id || is_set_of(f1, c)) return std::pair{p1, f2};
        return std::nullopt;
    }
    if (is_set_of(f1, d)) return std::pair{p1, f2_id ? f1 : f2};
    return std::nullopt;
}

inline bool contains_transition(const Tsa& a, const Transition& t) {
    for (const auto& u : a.delta) {
        if (u.same_as(t)) return true;
    }
    return false;
}

}  // namespace detail

/// Closes delta under composition of consecutive stationary eps transitions.
inline Tsa standardise(const Tsa& a) {
    Tsa out = a;
    bool changed = true;
    while (changed) {
        changed = false;
        const std::size_t n = out.delta.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const auto t1 = out.delta[i];
                const auto t2 = out.delta[j];
                if (!t1.is_stationary_epsilon() || !t2.is_stationary_epsilon() || t1.dst != t2.src) continue;
                auto comp = detail::compose_stationary(t1, t2);
                if (!comp) continue;
                Transition t3{t1.src, std::nullopt, comp->first, comp->second, t2.dst, {}};
                if (detail::contains_transition(out, t3)) continue;
                out.add(t3.src, std::nullopt, t3.pred, t3.instr, t3.dst);
                changed = true;
            }
        }
    }
    return out;
}

inline bool is_standardised(const Tsa& a) {
    for (const auto& t1 : a.delta) {
        for (const auto& t2 : a.delta) {
            if (!t1.is_stationary_epsilon() || !t2.is_stationary_epsilon() || t1.dst != t2.src) continue;
            auto comp = detail::compose_stationary(t1, t2);
            if (!comp) continue;
            Transition t3{t1.src, std::nullopt, comp->first, comp->second, t2.dst, {}};
            if (!detail::contains_transition(a, t3)) return false;
        }
    }
    return true;
}

/// Adds drain states so that acceptance with the pointer anywhere becomes
/// acceptance at the root: f -> f.down (walk down) -> f.root.
inline Tsa make_root_accepting(const Tsa& a) {
    Tsa out = a;
    out.finals.clear();
    for (auto f : a.finals) {
        const std::string base = a.state_name(f);
        StateId down = out.add_state(base + ".down");
        StateId root = out.add_state(base + ".root");
        out.add(f, std::nullopt, Predicate::always(), Instruction::id(), down);
        out.add(down, std::nullopt, Predicate::always(), Instruction::down(), down);
        out.add(down, std::nullopt, Predicate::eq(Label::root()), Instruction::id(), root);
        out.finals.insert(root);
    }
    return out;
}

}  // namespace tsalab

#endif  // TSALAB_TRANSFORM_HPP
