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

#ifndef TSALAB_TSA_HPP
#define TSALAB_TSA_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tsalab/expected.hpp"
#include "tsalab/text.hpp"
#include "tsalab/treestack.hpp"

namespace tsalab {

using StateId = std::uint32_t;

struct Transition {
    StateId src = 0;
    std::optional<char> input;  // nullopt reads nothing
    Predicate pred = Predicate::always();
    Instruction instr = Instruction::id();
    StateId dst = 0;
    std::string name;

    bool is_epsilon() const { return !input.has_value(); }
    bool is_stationary_epsilon() const { return is_epsilon() && instr.is_stationary(); }

    /// Structural equality; the display name is ignored.
    bool same_as(const Transition& o) const {
        return src == o.src && input == o.input && pred == o.pred && instr == o.instr && dst == o.dst;
    }
};

/// A tree stack automaton. States and labels are interned names.
struct Tsa {
    std::vector<std::string> states;
    std::vector<std::string> labels;
    std::string alphabet;
    StateId initial = 0;
    std::set<StateId> finals;
    std::vector<Transition> delta;

    std::optional<StateId> state_id(std::string_view name) const {
        auto it = std::find(states.begin(), states.end(), name);
        if (it == states.end()) return std::nullopt;
        return static_cast<StateId>(it - states.begin());
    }
    std::optional<Label> label_id(std::string_view name) const {
        if (name == "@") return Label::root();
        auto it = std::find(labels.begin(), labels.end(), name);
        if (it == labels.end()) return std::nullopt;
        return Label::of(static_cast<std::int32_t>(it - labels.begin()));
    }
    StateId add_state(std::string name) {
        if (auto s = state_id(name)) return *s;
        states.push_back(std::move(name));
        return static_cast<StateId>(states.size() - 1);
    }
    Label add_label(std::string name) {
        if (auto l = label_id(name)) return *l;
        labels.push_back(std::move(name));
        return Label::of(static_cast<std::int32_t>(labels.size() - 1));
    }
    bool has_letter(char c) const { return alphabet.find(c) != std::string::npos; }
    void add_letter(char c) {
        if (!has_letter(c)) alphabet.push_back(c);
    }
    bool is_final(StateId q) const { return finals.count(q) != 0; }

    std::string label_name(Label l) const {
        return l.is_root() ? std::string("@") : labels.at(static_cast<std::size_t>(l.id));
    }
    const std::string& state_name(StateId q) const { return states.at(q); }

    /// Appends a transition named s<i> unless a name is given.
    std::size_t add(StateId src, std::optional<char> input, Predicate p, Instruction f, StateId dst,
                    std::string name = {}) {
        if (name.empty()) name = "s" + std::to_string(delta.size() + 1);
        delta.push_back(Transition{src, input, p, f, dst, std::move(name)});
        return delta.size() - 1;
    }
};

struct ParseError {
    enum class Kind { SyntaxError, UnknownState, UnknownLabel, BadIndex, UnknownLetter };
    Kind kind = Kind::SyntaxError;
    std::size_t line = 0;
    std::string message;
};

inline const char* to_string(ParseError::Kind k) {
    switch (k) {
        case ParseError::Kind::SyntaxError: return "SyntaxError";
        case ParseError::Kind::UnknownState: return "UnknownState";
        case ParseError::Kind::UnknownLabel: return "UnknownLabel";
        case ParseError::Kind::BadIndex: return "BadIndex";
        case ParseError::Kind::UnknownLetter: return "UnknownLetter";
    }
    return "?";
}

inline std::string describe(const ParseError& e) {
    return std::string(to_string(e.kind)) + " at line " + std::to_string(e.line) + ": " + e.message;
}

inline std::string render_predicate(const Tsa& a, const Predicate& p) {
    return p.kind == Predicate::Kind::True ? std::string("true") : "eq " + a.label_name(p.label);
}

inline std::string render_instruction(const Tsa& a, const Instruction& f) {
    using K = Instruction::Kind;
    switch (f.kind) {
        case K::Id: return "id";
        case K::Down: return "down";
        case K::Up: return "up " + std::to_string(f.n);
        case K::Push: return "push " + std::to_string(f.n) + " " + a.label_name(f.label);
        case K::Set: return "set " + a.label_name(f.label);
    }
    return "?";
}

inline std::string render_input(std::optional<char> x) { return x ? std::string(1, *x) : std::string("eps"); }

inline std::string render_transition(const Tsa& a, const Transition& t) {
    return a.state_name(t.src) + " " + render_input(t.input) + " " + render_predicate(a, t.pred) + " " +
           render_instruction(a, t.instr) + " " + a.state_name(t.dst);
}

namespace detail {

struct TransitionLexer {
    const Tsa& a;
    std::vector<std::string> toks;
    std::size_t i = 0;
    std::size_t line;

    Unexpected<ParseError> fail(ParseError::Kind k, std::string msg) const {
        return unexpected(ParseError{k, line, std::move(msg)});
    }
    bool done() const { return i >= toks.size(); }
    const std::string& peek() const { return toks[i]; }
    std::string next() { return toks[i++]; }
};

inline Expected<Label, ParseError> lex_label(detail::TransitionLexer& lx, bool allow_root) {
    if (lx.done()) return lx.fail(ParseError::Kind::SyntaxError, "missing label");
    auto name = lx.next();
    if (name == "@" && !allow_root) return lx.fail(ParseError::Kind::UnknownLabel, "@ cannot be written");
    auto l = lx.a.label_id(name);
    if (!l) return lx.fail(ParseError::Kind::UnknownLabel, "unknown label " + name);
    return *l;
}

inline Expected<std::uint32_t, ParseError> lex_index(detail::TransitionLexer& lx) {
    if (lx.done()) return lx.fail(ParseError::Kind::SyntaxError, "missing child index");
    auto tok = lx.next();
    bool digits = !tok.empty() && std::all_of(tok.begin(), tok.end(), [](char c) {
        return (c >= '0' && c <= '9') || c == '-';
    });
    if (!digits) return lx.fail(ParseError::Kind::SyntaxError, "child index is not a number: " + tok);
    auto n = text::parse_uint(tok);
    if (!n || *n == 0) return lx.fail(ParseError::Kind::BadIndex, "child index must be >= 1: " + tok);
    return *n;
}

}  // namespace detail

/// Parses `src input pred instr dst [as NAME]` against the declared sets of `a`.
inline Expected<Transition, ParseError> parse_transition(const Tsa& a, std::string_view body, std::size_t line) {
    detail::TransitionLexer lx{a, text::split_ws(body), 0, line};
    using PK = ParseError::Kind;
    Transition t;
    if (lx.toks.size() < 5) return lx.fail(PK::SyntaxError, "transition needs at least 5 fields");

    auto src = lx.next();
    auto sid = a.state_id(src);
    if (!sid) return lx.fail(PK::UnknownState, "unknown state " + src);
    t.src = *sid;

    auto in = lx.next();
    if (in != "eps") {
        auto c = text::parse_symbol(in);
        if (!c) return lx.fail(PK::SyntaxError, "input must be one letter or eps: " + in);
        if (!a.has_letter(*c)) return lx.fail(PK::UnknownLetter, "letter not in alphabet: " + in);
        t.input = *c;
    }

    auto pk = lx.next();
    if (pk == "true") {
        t.pred = Predicate::always();
    } else if (pk == "eq") {
        auto l = detail::lex_label(lx, true);
        if (!l) return unexpected(l.error());
        t.pred = Predicate::eq(*l);
    } else {
        return lx.fail(PK::SyntaxError, "unknown predicate " + pk);
    }

    if (lx.done()) return lx.fail(PK::SyntaxError, "missing instruction");
    auto ik = lx.next();
    if (ik == "id") {
        t.instr = Instruction::id();
    } else if (ik == "down") {
        t.instr = Instruction::down();
    } else if (ik == "up") {
        auto n = detail::lex_index(lx);
        if (!n) return unexpected(n.error());
        t.instr = Instruction::up(*n);
    } else if (ik == "push") {
        auto n = detail::lex_index(lx);
        if (!n) return unexpected(n.error());
        auto l = detail::lex_label(lx, false);
        if (!l) return unexpected(l.error());
        t.instr = Instruction::push(*n, *l);
    } else if (ik == "set") {
        auto l = detail::lex_label(lx, false);
        if (!l) return unexpected(l.error());
        t.instr = Instruction::set(*l);
    } else {
        return lx.fail(PK::SyntaxError, "unknown instruction " + ik);
    }

    if (lx.done()) return lx.fail(PK::SyntaxError, "missing target state");
    auto dst = lx.next();
    auto did = a.state_id(dst);
    if (!did) return lx.fail(PK::UnknownState, "unknown state " + dst);
    t.dst = *did;

    if (!lx.done()) {
        if (lx.next() != "as" || lx.done()) return lx.fail(PK::SyntaxError, "trailing tokens");
        t.name = lx.next();
        if (!lx.done()) return lx.fail(PK::SyntaxError, "trailing tokens");
    }
    return t;
}

/// Parses the line-based TSA format. Transition order is file order.
inline Expected<Tsa, ParseError> parse_tsa(std::string_view src) {
    using PK = ParseError::Kind;
    Tsa a;
    bool header = false;
    std::optional<std::string> initial;
    std::vector<std::pair<std::string, std::size_t>> finals;
    std::vector<std::pair<std::string, std::size_t>> trans;
    auto all = text::lines(src);
    for (std::size_t ln = 0; ln < all.size(); ++ln) {
        auto line = text::trim(text::strip_comment(all[ln]));
        if (line.empty()) continue;
        std::size_t lineno = ln + 1;
        if (!header) {
            if (line != "tsa") return unexpected(ParseError{PK::SyntaxError, lineno, "expected 'tsa' header"});
            header = true;
            continue;
        }
        auto kv = text::key_value(line);
        if (!kv) return unexpected(ParseError{PK::SyntaxError, lineno, "expected 'key: value'"});
        auto& [key, val] = *kv;
        auto toks = text::split_ws(val);
        if (key == "states") {
            for (auto& s : toks) a.add_state(s);
        } else if (key == "labels") {
            for (auto& s : toks) {
                if (s == "@") return unexpected(ParseError{PK::SyntaxError, lineno, "@ is reserved"});
                a.add_label(s);
            }
        } else if (key == "alphabet") {
            for (auto& s : toks) {
                auto c = text::parse_symbol(s);
                if (!c) return unexpected(ParseError{PK::SyntaxError, lineno, "letters are single characters: " + s});
                a.add_letter(*c);
            }
        } else if (key == "initial") {
            if (toks.size() != 1) return unexpected(ParseError{PK::SyntaxError, lineno, "one initial state"});
            initial = toks[0];
        } else if (key == "final") {
            for (auto& s : toks) finals.emplace_back(s, lineno);
        } else if (key == "trans") {
            trans.emplace_back(val, lineno);
        } else {
            return unexpected(ParseError{PK::SyntaxError, lineno, "unknown key " + key});
        }
    }
    if (!header) return unexpected(ParseError{PK::SyntaxError, 1, "empty input"});
    if (!initial) return unexpected(ParseError{PK::SyntaxError, 0, "missing initial state"});
    auto q0 = a.state_id(*initial);
    if (!q0) return unexpected(ParseError{PK::UnknownState, 0, "unknown initial state " + *initial});
    a.initial = *q0;
    for (auto& [s, ln] : finals) {
        auto q = a.state_id(s);
        if (!q) return unexpected(ParseError{PK::UnknownState, ln, "unknown final state " + s});
        a.finals.insert(*q);
    }
    for (auto& [body, ln] : trans) {
        auto t = parse_transition(a, body, ln);
        if (!t) return unexpected(t.error());
        if (t->name.empty()) t->name = "s" + std::to_string(a.delta.size() + 1);
        a.delta.push_back(std::move(*t));
    }
    return a;
}

inline std::string letter_token(char c) { return std::string(1, c); }

/// Serializes to the format read by parse_tsa.
inline std::string to_text(const Tsa& a) {
    std::string out = "tsa\n";
    out += "states: " + text::join(a.states, " ") + "\n";
    out += "initial: " + a.state_name(a.initial) + "\n";
    std::vector<std::string> fs;
    for (auto q : a.finals) fs.push_back(a.state_name(q));
    out += "final: " + text::join(fs, " ") + "\n";
    out += "labels: " + text::join(a.labels, " ") + "\n";
    std::vector<std::string> letters;
    for (char c : a.alphabet) letters.push_back(letter_token(c));
    out += "alphabet: " + text::join(letters, " ") + "\n";
    for (std::size_t i = 0; i < a.delta.size(); ++i) {
        const auto& t = a.delta[i];
        out += "trans: " + render_transition(a, t);
        if (t.name != "s" + std::to_string(i + 1)) out += " as " + t.name;
        out += "\n";
    }
    return out;
}

struct Degree {
    std::set<std::uint32_t> delta_set;
    std::size_t value() const { return delta_set.size(); }
};

inline Degree degree(const Tsa& a) {
    Degree d;
    for (const auto& t : a.delta) {
        if (t.instr.kind == Instruction::Kind::Push) d.delta_set.insert(t.instr.n);
    }
    return d;
}

/// Remaps push/up indices order-preservingly onto 1..D. An up transition whose
/// index is never pushed can never fire and is dropped.
inline Tsa normalize_child_indices(const Tsa& a) {
    auto d = degree(a);
    std::map<std::uint32_t, std::uint32_t> remap;
    std::uint32_t next = 1;
    for (auto n : d.delta_set) remap[n] = next++;
    Tsa out = a;
    out.delta.clear();
    for (auto t : a.delta) {
        if (t.instr.kind == Instruction::Kind::Push || t.instr.kind == Instruction::Kind::Up) {
            auto it = remap.find(t.instr.n);
            if (it == remap.end()) continue;
            t.instr.n = it->second;
        }
        out.delta.push_back(std::move(t));
    }
    return out;
}

inline bool has_up(const Tsa& a) {
    return std::any_of(a.delta.begin(), a.delta.end(),
                       [](const Transition& t) { return t.instr.kind == Instruction::Kind::Up; });
}

}  // namespace tsalab

#endif  // TSALAB_TSA_HPP
