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

#ifndef TSALAB_CONVERT_HPP
#define TSALAB_CONVERT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "tsalab/expected.hpp"
#include "tsalab/run.hpp"
#include "tsalab/text.hpp"
#include "tsalab/transform.hpp"
#include "tsalab/tsa.hpp"

namespace tsalab {

using StackSymbol = std::uint32_t;  // index into Pda::stack; 0 is the bottom marker @

struct PdaTransition {
    enum class Kind { Push, Pop };
    StateId src = 0;
    std::optional<char> input;
    Kind kind = Kind::Push;
    StackSymbol top = 0;                // push: required top z; pop: removed symbol t
    std::optional<StackSymbol> pushed;  // push only; nullopt pushes nothing
    StateId dst = 0;
    std::string name;

    bool same_as(const PdaTransition& o) const {
        return src == o.src && input == o.input && kind == o.kind && top == o.top && pushed == o.pushed &&
               dst == o.dst;
    }
};

struct Pda {
    std::vector<std::string> states;
    std::string alphabet;
    std::vector<std::string> stack{"@"};
    StateId initial = 0;
    std::set<StateId> finals;
    std::vector<PdaTransition> delta;

    std::optional<StateId> state_id(std::string_view n) const {
        auto it = std::find(states.begin(), states.end(), n);
        if (it == states.end()) return std::nullopt;
        return static_cast<StateId>(it - states.begin());
    }
    std::optional<StackSymbol> symbol_id(std::string_view n) const {
        auto it = std::find(stack.begin(), stack.end(), n);
        if (it == stack.end()) return std::nullopt;
        return static_cast<StackSymbol>(it - stack.begin());
    }
    StateId add_state(std::string n) {
        if (auto s = state_id(n)) return *s;
        states.push_back(std::move(n));
        return static_cast<StateId>(states.size() - 1);
    }
    StackSymbol add_symbol(std::string n) {
        if (auto s = symbol_id(n)) return *s;
        stack.push_back(std::move(n));
        return static_cast<StackSymbol>(stack.size() - 1);
    }
    bool is_final(StateId q) const { return finals.count(q) != 0; }

    /// Adds a transition unless an identical one exists; returns its index.
    std::size_t add(PdaTransition t) {
        for (std::size_t i = 0; i < delta.size(); ++i)
            if (delta[i].same_as(t)) return i;
        if (t.name.empty()) t.name = "p" + std::to_string(delta.size() + 1);
        delta.push_back(std::move(t));
        return delta.size() - 1;
    }
};

inline std::string render_transition(const Pda& p, const PdaTransition& t) {
    std::string s = p.states[t.src] + " " + render_input(t.input) + " ";
    if (t.kind == PdaTransition::Kind::Push)
        s += "push " + p.stack[t.top] + " " + (t.pushed ? p.stack[*t.pushed] : std::string("-"));
    else
        s += "pop " + p.stack[t.top];
    return s + " " + p.states[t.dst];
}

inline Expected<Pda, ParseError> parse_pda(std::string_view src) {
    using PK = ParseError::Kind;
    Pda p;
    bool header = false;
    std::optional<std::string> initial;
    std::vector<std::pair<std::string, std::size_t>> finals, trans;
    auto all = text::lines(src);
    for (std::size_t i = 0; i < all.size(); ++i) {
        const std::size_t ln = i + 1;
        auto line = text::trim(text::strip_comment(all[i]));
        if (line.empty()) continue;
        if (!header) {
            if (line != "pda") return unexpected(ParseError{PK::SyntaxError, ln, "expected 'pda' header"});
            header = true;
            continue;
        }
        auto kv = text::key_value(line);
        if (!kv) return unexpected(ParseError{PK::SyntaxError, ln, "expected 'key: value'"});
        auto toks = text::split_ws(kv->second);
        if (kv->first == "states") {
            for (auto& s : toks) p.add_state(s);
        } else if (kv->first == "stack") {
            for (auto& s : toks) {
                if (s == "-") return unexpected(ParseError{PK::SyntaxError, ln, "'-' is reserved"});
                p.add_symbol(s);
            }
        } else if (kv->first == "alphabet") {
            for (auto& s : toks) {
                auto c = text::parse_symbol(s);
                if (!c) return unexpected(ParseError{PK::SyntaxError, ln, "letters are single characters: " + s});
                if (p.alphabet.find(*c) == std::string::npos) p.alphabet.push_back(*c);
            }
        } else if (kv->first == "initial") {
            if (toks.size() != 1) return unexpected(ParseError{PK::SyntaxError, ln, "one initial state"});
            initial = toks[0];
        } else if (kv->first == "final") {
            for (auto& s : toks) finals.emplace_back(s, ln);
        } else if (kv->first == "trans") {
            trans.emplace_back(kv->second, ln);
        } else {
            return unexpected(ParseError{PK::SyntaxError, ln, "unknown key " + kv->first});
        }
    }
    if (!header) return unexpected(ParseError{PK::SyntaxError, 1, "empty input"});
    if (!initial) return unexpected(ParseError{PK::SyntaxError, 0, "missing initial state"});
    auto q0 = p.state_id(*initial);
    if (!q0) return unexpected(ParseError{PK::UnknownState, 0, "unknown initial state " + *initial});
    p.initial = *q0;
    for (auto& [s, ln] : finals) {
        auto q = p.state_id(s);
        if (!q) return unexpected(ParseError{PK::UnknownState, ln, "unknown final state " + s});
        p.finals.insert(*q);
    }
    for (auto& [body, ln] : trans) {
        auto toks = text::split_ws(body);
        auto fail = [&](PK k, std::string m) { return unexpected(ParseError{k, ln, std::move(m)}); };
        if (toks.size() < 5) return fail(PK::SyntaxError, "transition needs at least 5 fields");
        PdaTransition t;
        auto src_state = p.state_id(toks[0]);
        if (!src_state) return fail(PK::UnknownState, "unknown state " + toks[0]);
        t.src = *src_state;
        if (toks[1] != "eps") {
            auto c = text::parse_symbol(toks[1]);
            if (!c || p.alphabet.find(*c) == std::string::npos) return fail(PK::UnknownLetter, "bad input " + toks[1]);
            t.input = *c;
        }
        std::size_t k = 2;
        auto sym = [&](const std::string& n) { return p.symbol_id(n); };
        if (toks[k] == "push") {
            if (toks.size() < 6) return fail(PK::SyntaxError, "push needs z and s");
            t.kind = PdaTransition::Kind::Push;
            auto z = sym(toks[3]);
            if (!z) return fail(PK::UnknownLabel, "unknown stack symbol " + toks[3]);
            t.top = *z;
            if (toks[4] != "-") {
                auto s = sym(toks[4]);
                if (!s) return fail(PK::UnknownLabel, "unknown stack symbol " + toks[4]);
                if (*s == 0) return fail(PK::UnknownLabel, "@ cannot be pushed");
                t.pushed = *s;
            }
            k = 5;
        } else if (toks[k] == "pop") {
            t.kind = PdaTransition::Kind::Pop;
            auto z = sym(toks[3]);
            if (!z) return fail(PK::UnknownLabel, "unknown stack symbol " + toks[3]);
            if (*z == 0) return fail(PK::UnknownLabel, "@ cannot be popped");
            t.top = *z;
            k = 4;
        } else {
            return fail(PK::SyntaxError, "unknown action " + toks[k]);
        }
        if (k >= toks.size()) return fail(PK::SyntaxError, "missing target state");
        auto dst = p.state_id(toks[k]);
        if (!dst) return fail(PK::UnknownState, "unknown state " + toks[k]);
        t.dst = *dst;
        ++k;
        if (k < toks.size()) {
            if (toks[k] != "as" || k + 2 != toks.size()) return fail(PK::SyntaxError, "trailing tokens");
            t.name = toks[k + 1];
        }
        if (t.name.empty()) t.name = "p" + std::to_string(p.delta.size() + 1);
        p.delta.push_back(std::move(t));
    }
    return p;
}

inline std::string to_text(const Pda& p) {
    std::string out = "pda\nstates: " + text::join(p.states, " ") + "\ninitial: " + p.states[p.initial] + "\n";
    std::vector<std::string> fs;
    for (auto q : p.finals) fs.push_back(p.states[q]);
    out += "final: " + text::join(fs, " ") + "\n";
    out += "stack: " + text::join(std::vector<std::string>(p.stack.begin() + 1, p.stack.end()), " ") + "\n";
    std::vector<std::string> letters;
    for (char c : p.alphabet) letters.emplace_back(1, c);
    out += "alphabet: " + text::join(letters, " ") + "\n";
    for (const auto& t : p.delta) out += "trans: " + render_transition(p, t) + " as " + t.name + "\n";
    return out;
}

struct PdaConfig {
    StateId state = 0;
    std::vector<StackSymbol> stack{0};  // bottom first
    std::size_t pos = 0;
    bool operator==(const PdaConfig&) const = default;
};

struct PdaTrace {
    std::string word;
    std::vector<std::size_t> transitions;
    std::vector<PdaConfig> configs;  // configs[i] is the configuration after transitions[i]
};

inline std::optional<PdaConfig> pda_step(const Pda&, std::string_view w, const PdaConfig& c, const PdaTransition& t) {
    if (c.state != t.src) return std::nullopt;
    if (t.input && (c.pos >= w.size() || w[c.pos] != *t.input)) return std::nullopt;
    if (c.stack.back() != t.top) return std::nullopt;
    PdaConfig out = c;
    out.state = t.dst;
    if (t.input) ++out.pos;
    if (t.kind == PdaTransition::Kind::Push) {
        if (t.pushed) out.stack.push_back(*t.pushed);
    } else {
        if (t.top == 0) return std::nullopt;
        out.stack.pop_back();
    }
    return out;
}

struct PdaSearchOptions {
    std::optional<std::size_t> max_steps;   // default 64(|w|+1)|Q|
    std::optional<std::size_t> max_stack;   // default 16(|w|+1)
    std::size_t max_configs = 2'000'000;
};

/// Breadth-first search for a run reading w that ends in a final state (any stack).
inline Expected<PdaTrace, NotFound> pda_accepts(const Pda& p, std::string_view w, const PdaSearchOptions& opts = {}) {
    const std::size_t max_steps = opts.max_steps.value_or(64 * (w.size() + 1) * std::max<std::size_t>(p.states.size(), 1));
    const std::size_t max_stack = opts.max_stack.value_or(16 * (w.size() + 1));
    struct Node {
        PdaConfig cfg;
        std::size_t parent, transition, depth;
    };
    struct Hash {
        std::size_t operator()(const PdaConfig& c) const {
            std::size_t h = c.state;
            hash_combine(h, c.pos);
            for (auto s : c.stack) hash_combine(h, s);
            return h;
        }
    };
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<Node> nodes{Node{PdaConfig{p.initial, {0}, 0}, none, 0, 0}};
    std::unordered_set<PdaConfig, Hash> seen{nodes[0].cfg};
    bool cut = false;
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        if (nodes[head].cfg.pos == w.size() && p.is_final(nodes[head].cfg.state)) {
            PdaTrace tr{std::string(w), {}, {}};
            for (std::size_t i = head; nodes[i].parent != none; i = nodes[i].parent) {
                tr.transitions.push_back(nodes[i].transition);
                tr.configs.push_back(nodes[i].cfg);
            }
            std::reverse(tr.transitions.begin(), tr.transitions.end());
            std::reverse(tr.configs.begin(), tr.configs.end());
            return tr;
        }
        if (nodes[head].depth >= max_steps) {
            cut = true;
            continue;
        }
        for (std::size_t ti = 0; ti < p.delta.size(); ++ti) {
            auto next = pda_step(p, w, nodes[head].cfg, p.delta[ti]);
            if (!next) continue;
            if (next->stack.size() > max_stack) {
                cut = true;
                continue;
            }
            if (!seen.insert(*next).second) continue;
            if (nodes.size() >= opts.max_configs) {
                cut = true;
                continue;
            }
            const std::size_t d = nodes[head].depth + 1;
            nodes.push_back(Node{std::move(*next), head, ti, d});
        }
    }
    return unexpected(NotFound{cut ? NotFound::Reason::Budget : NotFound::Reason::Exhausted, nodes.size()});
}

struct ConvertError {
    enum class Kind { NotOneTsa };
    Kind kind = Kind::NotOneTsa;
    std::size_t transition = 0;
};

/// 1-TSA to PDA: the stack mirrors the path from the root to the pointer.
/// Stack symbols are @ followed by the tree labels in order.
inline Expected<Pda, ConvertError> tsa1_to_pda(const Tsa& a) {
    for (std::size_t i = 0; i < a.delta.size(); ++i)
        if (a.delta[i].instr.kind == Instruction::Kind::Up) return unexpected(ConvertError{ConvertError::Kind::NotOneTsa, i});
    Pda p;
    p.states = a.states;
    p.alphabet = a.alphabet;
    for (const auto& l : a.labels) p.add_symbol(l);
    p.initial = a.initial;
    p.finals = a.finals;
    auto sym = [](Label l) { return static_cast<StackSymbol>(l.id + 1); };
    const auto gamma = static_cast<StackSymbol>(p.stack.size());

    for (const auto& t : a.delta) {
        std::vector<StackSymbol> tops;
        const bool any = t.pred.kind == Predicate::Kind::True;
        if (any) {
            for (StackSymbol z = 0; z < gamma; ++z) tops.push_back(z);
        } else {
            tops.push_back(sym(t.pred.label));
        }
        using K = Instruction::Kind;
        for (auto z : tops) {
            PdaTransition base{t.src, t.input, PdaTransition::Kind::Push, z, std::nullopt, t.dst, {}};
            switch (t.instr.kind) {
                case K::Push:
                    base.pushed = sym(t.instr.label);
                    base.name = t.name;
                    p.add(base);
                    break;
                case K::Id:
                    base.name = t.name;
                    p.add(base);
                    break;
                case K::Down:
                    if (z == 0) break;
                    base.kind = PdaTransition::Kind::Pop;
                    base.name = t.name;
                    p.add(base);
                    break;
                case K::Set: {
                    if (z == 0) break;
                    StateId tagged = p.add_state(a.state_name(t.dst) + "(" + p.stack[z] + ")");
                    p.add(PdaTransition{t.src, t.input, PdaTransition::Kind::Pop, z, std::nullopt, tagged, t.name + "'"});
                    for (StackSymbol y = 0; y < gamma; ++y)
                        p.add(PdaTransition{tagged, std::nullopt, PdaTransition::Kind::Push, y, sym(t.instr.label), t.dst,
                                            t.name + "''"});
                    break;
                }
                case K::Up: break;
            }
        }
    }
    return p;
}

enum class RootReturn { None, Auto };

/// Which PDA transition a converted transition came from, and its role in the
/// simulation: '0' start, '1'..'7' as in the construction, '*' empty push, 'f' root return.
struct TransitionOrigin {
    std::optional<std::size_t> pda_transition;
    char role = '0';
};

struct Tsa1Conversion {
    Tsa tsa;
    std::vector<TransitionOrigin> origin;  // parallel to tsa.delta
    bool example_root_return = false;
};

inline std::string box_label(const std::string& gamma) { return "[" + gamma + "]"; }

/// PDA to 1-TSA. The pointer always rests on a box vertex [z] for the simulated top z.
inline Tsa1Conversion pda_to_tsa1(const Pda& p, RootReturn rr = RootReturn::Auto) {
    Tsa1Conversion out;
    Tsa& a = out.tsa;
    a.states = p.states;
    a.alphabet = p.alphabet;
    a.initial = p.initial;
    a.finals = p.finals;
    for (std::size_t i = 1; i < p.stack.size(); ++i) a.add_label(p.stack[i]);
    for (const auto& g : p.stack) a.add_label(box_label(g));
    auto plain = [&](StackSymbol s) { return *a.label_id(p.stack[s]); };
    auto box = [&](StackSymbol s) { return *a.label_id(box_label(p.stack[s])); };
    auto tag = [&](StateId q, const std::string& t) { return a.add_state(a.state_name(q) + "(" + t + ")"); };

    auto add = [&](StateId s, std::optional<char> x, Predicate pr, Instruction f, StateId d, std::string name,
                   TransitionOrigin o) {
        Transition t{s, x, pr, f, d, {}};
        for (const auto& u : a.delta)
            if (u.same_as(t)) return;
        a.add(s, x, pr, f, d, std::move(name));
        out.origin.push_back(o);
    };

    // Root return in the style of the WP(Z) example is possible when acceptance is
    // always entered through an eps push(@, eps).
    bool example_style = rr == RootReturn::Auto && !p.is_final(p.initial);
    bool any_final_edge = false;
    for (const auto& t : p.delta) {
        if (!p.is_final(t.dst)) continue;
        any_final_edge = true;
        const bool ok = !t.input && t.kind == PdaTransition::Kind::Push && t.top == 0 && !t.pushed;
        if (!ok) example_style = false;
    }
    example_style = example_style && any_final_edge;
    out.example_root_return = example_style;

    add(p.initial, std::nullopt, Predicate::eq(Label::root()), Instruction::push(1, box(0)), p.initial, "s0",
        TransitionOrigin{std::nullopt, '0'});

    for (std::size_t i = 0; i < p.delta.size(); ++i) {
        const auto& t = p.delta[i];
        const std::string& n = t.name;
        auto o = [&](char role) { return TransitionOrigin{i, role}; };
        if (t.kind == PdaTransition::Kind::Push && t.pushed) {
            const StackSymbol z = t.top;
            const StackSymbol s = *t.pushed;
            StateId qu = tag(t.src, "u");
            StateId qs = tag(t.src, p.stack[s]);
            add(t.src, t.input, Predicate::eq(box(z)), Instruction::push(1, plain(s)), qu, n + ".1", o('1'));
            add(qu, std::nullopt, Predicate::eq(plain(s)), Instruction::push(1, box(s)), t.dst, n + ".2", o('2'));
            add(t.src, t.input, Predicate::eq(box(z)), Instruction::push(2, box(z)), qs, n + ".3", o('3'));
            add(qs, std::nullopt, Predicate::eq(box(z)), Instruction::push(1, plain(s)), qu, n + ".4", o('4'));
        } else if (t.kind == PdaTransition::Kind::Pop) {
            const StackSymbol y = t.top;
            StateId qd = tag(t.src, "d");
            add(t.src, t.input, Predicate::eq(box(y)), Instruction::down(), qd, n + ".5", o('5'));
            add(qd, std::nullopt, Predicate::eq(box(y)), Instruction::down(), qd, n + ".6", o('6'));
            add(qd, std::nullopt, Predicate::eq(plain(y)), Instruction::down(), t.dst, n + ".7", o('7'));
        } else if (example_style && p.is_final(t.dst)) {
            add(t.src, std::nullopt, Predicate::eq(box(0)), Instruction::down(), t.src, n + ".f1", o('f'));
            add(t.src, std::nullopt, Predicate::eq(Label::root()), Instruction::id(), t.dst, n + ".f2", o('f'));
        } else {
            add(t.src, t.input, Predicate::eq(box(t.top)), Instruction::id(), t.dst, n + ".*", o('*'));
        }
    }
    if (rr == RootReturn::Auto && !example_style) {
        const std::size_t before = a.delta.size();
        a = make_root_accepting(a);
        for (std::size_t i = before; i < a.delta.size(); ++i) out.origin.push_back(TransitionOrigin{std::nullopt, 'f'});
    }
    return out;
}

struct InvariantBreach {
    std::size_t step = 0;  // 1-based step after which the check failed
    std::string detail;
};

/// Replays a run of a converted machine and checks that after every completed
/// simulated PDA step the pointer sits on [z] for the simulated top z.
/// Returns the number of simulated steps checked.
inline Expected<std::size_t, InvariantBreach> check_simulation_locality(const Tsa1Conversion& conv, const Pda& p,
                                                                        const RunTrace& tr) {
    const Tsa& a = conv.tsa;
    std::vector<StackSymbol> stack{0};
    std::size_t checked = 0;
    bool started = false;
    for (std::size_t x = 1; x <= tr.size(); ++x) {
        const auto ti = tr.steps[x - 1].transition;
        const auto& origin = conv.origin.at(ti);
        bool complete = false;
        switch (origin.role) {
            case '0': started = complete = true; break;
            case '2': {
                const auto& t = a.delta[ti];
                auto s = p.symbol_id(a.label_name(t.pred.label));
                if (!s) return unexpected(InvariantBreach{x, "unknown pushed symbol"});
                stack.push_back(*s);
                complete = true;
                break;
            }
            case '7':
                if (stack.size() <= 1) return unexpected(InvariantBreach{x, "pop below bottom"});
                stack.pop_back();
                complete = true;
                break;
            case '*': complete = true; break;
            default: break;
        }
        if (!complete || !started) continue;
        const auto& cfg = tr.before(x);
        const std::string expect = box_label(p.stack[stack.back()]);
        const std::string got = a.label_name(cfg.ts.pointer_label());
        if (got != expect) return unexpected(InvariantBreach{x, "pointer label " + got + ", expected " + expect});
        ++checked;
    }
    return checked;
}

}  // namespace tsalab

#endif  // TSALAB_CONVERT_HPP
