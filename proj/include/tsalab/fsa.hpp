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

#ifndef TSALAB_FSA_HPP
#define TSALAB_FSA_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tsalab/expected.hpp"
#include "tsalab/text.hpp"
#include "tsalab/tsa.hpp"

namespace tsalab {

struct FsaEdge {
    StateId src = 0;
    std::optional<char> input;
    StateId dst = 0;
    bool operator==(const FsaEdge&) const = default;
};

/// A nondeterministic finite automaton with eps-edges.
struct Fsa {
    std::vector<std::string> states;
    std::string alphabet;
    StateId initial = 0;
    std::set<StateId> finals;
    std::vector<FsaEdge> edges;

    StateId add_state(std::string name = {}) {
        if (name.empty()) name = "p" + std::to_string(states.size());
        states.push_back(std::move(name));
        return static_cast<StateId>(states.size() - 1);
    }
    std::optional<StateId> state_id(std::string_view n) const {
        auto it = std::find(states.begin(), states.end(), n);
        if (it == states.end()) return std::nullopt;
        return static_cast<StateId>(it - states.begin());
    }
    void add_letter(char c) {
        if (alphabet.find(c) == std::string::npos) alphabet.push_back(c);
    }
    void add(StateId s, std::optional<char> x, StateId d) {
        FsaEdge e{s, x, d};
        if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
        if (x) add_letter(*x);
    }
    bool has_epsilon() const {
        return std::any_of(edges.begin(), edges.end(), [](const FsaEdge& e) { return !e.input; });
    }
};

inline std::set<StateId> eps_closure(const Fsa& f, std::set<StateId> s) {
    std::vector<StateId> work(s.begin(), s.end());
    while (!work.empty()) {
        StateId q = work.back();
        work.pop_back();
        for (const auto& e : f.edges)
            if (e.src == q && !e.input && s.insert(e.dst).second) work.push_back(e.dst);
    }
    return s;
}

inline bool fsa_accepts(const Fsa& f, std::string_view w) {
    auto cur = eps_closure(f, {f.initial});
    for (char c : w) {
        std::set<StateId> next;
        for (const auto& e : f.edges)
            if (e.input == c && cur.count(e.src)) next.insert(e.dst);
        cur = eps_closure(f, std::move(next));
        if (cur.empty()) return false;
    }
    return std::any_of(cur.begin(), cur.end(), [&](StateId q) { return f.finals.count(q) != 0; });
}

/// Same language, no eps-edges. States and the initial state are kept.
inline Fsa remove_epsilon(const Fsa& f) {
    Fsa g;
    g.states = f.states;
    g.alphabet = f.alphabet;
    g.initial = f.initial;
    for (StateId q = 0; q < f.states.size(); ++q) {
        auto cl = eps_closure(f, {q});
        for (StateId r : cl) {
            if (f.finals.count(r)) g.finals.insert(q);
            for (const auto& e : f.edges)
                if (e.src == r && e.input) g.add(q, e.input, e.dst);
        }
    }
    return g;
}

/// A complete deterministic automaton over an alphabet; state 0 is initial.
struct Dfa {
    std::string alphabet;
    std::vector<std::vector<std::uint32_t>> next;  // next[q][letter index]
    std::vector<bool> final;

    bool accepts(std::string_view w) const {
        std::uint32_t q = 0;
        for (char c : w) {
            auto i = alphabet.find(c);
            if (i == std::string::npos) return false;
            q = next[q][i];
        }
        return final[q];
    }
};

inline Dfa determinize(const Fsa& f) {
    Dfa d;
    d.alphabet = f.alphabet;
    std::map<std::set<StateId>, std::uint32_t> ids;
    std::vector<std::set<StateId>> sets;
    auto intern = [&](std::set<StateId> s) {
        auto [it, fresh] = ids.emplace(s, static_cast<std::uint32_t>(sets.size()));
        if (fresh) {
            sets.push_back(std::move(s));
            d.next.emplace_back(f.alphabet.size(), 0);
            const auto& back = sets.back();
            d.final.push_back(std::any_of(back.begin(), back.end(), [&](StateId q) { return f.finals.count(q) != 0; }));
        }
        return it->second;
    };
    intern(eps_closure(f, {f.initial}));
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t li = 0; li < f.alphabet.size(); ++li) {
            std::set<StateId> n;
            for (const auto& e : f.edges)
                if (e.input == f.alphabet[li] && sets[i].count(e.src)) n.insert(e.dst);
            auto id = intern(eps_closure(f, std::move(n)));
            d.next[i][li] = id;
        }
    }
    return d;
}

struct RegexError {
    std::size_t pos = 0;
    std::string message;
};

namespace detail {

// Recursive descent over: alt := cat ('|' cat)* ; cat := rep* ; rep := atom ('*' | '+')* ;
// atom := letter ['\''] | '(' alt ')'. Each piece is a Thompson fragment.
class RegexBuilder {
public:
    explicit RegexBuilder(std::string_view src) : src_(src) {}

    Expected<Fsa, RegexError> build() {
        auto frag = alt();
        if (!frag) return unexpected(frag.error());
        skip();
        if (pos_ != src_.size()) return unexpected(RegexError{pos_, "unexpected character"});
        fsa_.initial = frag->in;
        fsa_.finals = {frag->out};
        return fsa_;
    }

private:
    struct Frag {
        StateId in, out;
    };
    using Result = Expected<Frag, RegexError>;

    void skip() {
        while (pos_ < src_.size() && src_[pos_] == ' ') ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < src_.size() && src_[pos_] == c;
    }
    Frag empty() {
        StateId a = fsa_.add_state();
        return Frag{a, a};
    }

    Result alt() {
        auto first = cat();
        if (!first) return first;
        if (!peek('|')) return first;
        StateId in = fsa_.add_state(), out = fsa_.add_state();
        fsa_.add(in, std::nullopt, first->in);
        fsa_.add(first->out, std::nullopt, out);
        while (peek('|')) {
            ++pos_;
            auto next = cat();
            if (!next) return next;
            fsa_.add(in, std::nullopt, next->in);
            fsa_.add(next->out, std::nullopt, out);
        }
        return Frag{in, out};
    }

    Result cat() {
        std::optional<Frag> acc;
        while (true) {
            skip();
            if (pos_ >= src_.size() || src_[pos_] == '|' || src_[pos_] == ')') break;
            auto r = rep();
            if (!r) return r;
            if (acc) {
                fsa_.add(acc->out, std::nullopt, r->in);
                acc->out = r->out;
            } else {
                acc = *r;
            }
        }
        return acc ? *acc : empty();
    }

    Result rep() {
        auto a = atom();
        if (!a) return a;
        Frag f = *a;
        while (peek('*') || peek('+')) {
            const bool star = src_[pos_] == '*';
            ++pos_;
            StateId in = fsa_.add_state(), out = fsa_.add_state();
            fsa_.add(in, std::nullopt, f.in);
            fsa_.add(f.out, std::nullopt, out);
            fsa_.add(f.out, std::nullopt, f.in);
            if (star) fsa_.add(in, std::nullopt, out);
            f = Frag{in, out};
        }
        return f;
    }

    Result atom() {
        skip();
        if (pos_ >= src_.size()) return unexpected(RegexError{pos_, "unexpected end"});
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = alt();
            if (!inner) return inner;
            if (!peek(')')) return unexpected(RegexError{pos_, "missing )"});
            ++pos_;
            return inner;
        }
        if (c == '*' || c == '+' || c == '\'' || c == ')' || c == '|')
            return unexpected(RegexError{pos_, std::string("misplaced '") + c + "'"});
        ++pos_;
        if (pos_ < src_.size() && src_[pos_] == '\'') {
            c = text::inverse_letter(c);
            ++pos_;
        }
        StateId a = fsa_.add_state(), b = fsa_.add_state();
        fsa_.add(a, c, b);
        return Frag{a, b};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    Fsa fsa_;
};

}  // namespace detail

/// Thompson construction. Supports concatenation, |, *, +, grouping and x' for inverses.
inline Expected<Fsa, RegexError> regex_to_fsa(std::string_view re) { return detail::RegexBuilder(re).build(); }

/// The regular language used to cut WP(F2 x F2) down to its (a^m b^m)^n core.
inline const char* kF2F2Regex = "((ca)+(db)+)+(b')+((d'a')+(c'b')+)*(d'a')+(c')+";

inline Fsa f2f2_T() { return *regex_to_fsa(kF2F2Regex); }

inline Expected<Fsa, ParseError> parse_fsa(std::string_view src) {
    using PK = ParseError::Kind;
    Fsa f;
    bool header = false;
    std::optional<std::string> initial;
    std::vector<std::pair<std::string, std::size_t>> finals, edges;
    auto all = text::lines(src);
    for (std::size_t i = 0; i < all.size(); ++i) {
        const std::size_t ln = i + 1;
        auto line = text::trim(text::strip_comment(all[i]));
        if (line.empty()) continue;
        if (!header) {
            if (line != "fsa") return unexpected(ParseError{PK::SyntaxError, ln, "expected 'fsa' header"});
            header = true;
            continue;
        }
        auto kv = text::key_value(line);
        if (!kv) return unexpected(ParseError{PK::SyntaxError, ln, "expected 'key: value'"});
        auto toks = text::split_ws(kv->second);
        if (kv->first == "states") {
            for (auto& s : toks)
                if (!f.state_id(s)) f.add_state(s);
        } else if (kv->first == "alphabet") {
            for (auto& s : toks) {
                auto c = text::parse_symbol(s);
                if (!c) return unexpected(ParseError{PK::SyntaxError, ln, "letters are single characters: " + s});
                f.add_letter(*c);
            }
        } else if (kv->first == "initial") {
            if (toks.size() != 1) return unexpected(ParseError{PK::SyntaxError, ln, "one initial state"});
            initial = toks[0];
        } else if (kv->first == "final") {
            for (auto& s : toks) finals.emplace_back(s, ln);
        } else if (kv->first == "trans") {
            edges.emplace_back(kv->second, ln);
        } else {
            return unexpected(ParseError{PK::SyntaxError, ln, "unknown key " + kv->first});
        }
    }
    if (!header) return unexpected(ParseError{PK::SyntaxError, 1, "empty input"});
    if (!initial) return unexpected(ParseError{PK::SyntaxError, 0, "missing initial state"});
    auto q0 = f.state_id(*initial);
    if (!q0) return unexpected(ParseError{PK::UnknownState, 0, "unknown initial state " + *initial});
    f.initial = *q0;
    for (auto& [s, ln] : finals) {
        auto q = f.state_id(s);
        if (!q) return unexpected(ParseError{PK::UnknownState, ln, "unknown final state " + s});
        f.finals.insert(*q);
    }
    for (auto& [body, ln] : edges) {
        auto toks = text::split_ws(body);
        if (toks.size() != 3) return unexpected(ParseError{PK::SyntaxError, ln, "expected 'src input dst'"});
        auto s = f.state_id(toks[0]);
        auto d = f.state_id(toks[2]);
        if (!s || !d) return unexpected(ParseError{PK::UnknownState, ln, "unknown state"});
        std::optional<char> x;
        if (toks[1] != "eps") {
            x = text::parse_symbol(toks[1]);
            if (!x || f.alphabet.find(*x) == std::string::npos)
                return unexpected(ParseError{PK::UnknownLetter, ln, "bad input " + toks[1]});
        }
        f.add(*s, x, *d);
    }
    return f;
}

inline std::string to_text(const Fsa& f) {
    std::string out = "fsa\nstates: " + text::join(f.states, " ") + "\ninitial: " + f.states[f.initial] + "\n";
    std::vector<std::string> fs, letters;
    for (auto q : f.finals) fs.push_back(f.states[q]);
    for (char c : f.alphabet) letters.emplace_back(1, c);
    out += "final: " + text::join(fs, " ") + "\nalphabet: " + text::join(letters, " ") + "\n";
    for (const auto& e : f.edges)
        out += "trans: " + f.states[e.src] + " " + (e.input ? std::string(1, *e.input) : "eps") + " " + f.states[e.dst] + "\n";
    return out;
}

using Pairing = std::function<char(char)>;

/// Letterwise-inverted reverse of w.
inline std::string group_inverse(std::string_view w, const Pairing& inv = text::inverse_letter) {
    std::string out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out += inv(*it);
    return out;
}

/// L(B_w) = L(B) . w^-1: all finals are joined by eps-edges to one fresh state,
/// from which a path reads w^-1 to the new single final state.
inline Fsa build_Bw(const Fsa& b, std::string_view w, const Pairing& inv = text::inverse_letter) {
    Fsa g = b;
    auto fresh = [&g](std::string n) {
        while (g.state_id(n)) n += "'";
        return g.add_state(n);
    };
    StateId f = fresh("f");
    for (auto q : b.finals) g.add(q, std::nullopt, f);
    StateId cur = f;
    std::size_t i = 0;
    for (char c : group_inverse(w, inv)) {
        StateId n = fresh("f" + std::to_string(++i));
        g.add(cur, c, n);
        cur = n;
    }
    g.finals = {cur};
    for (char c : b.alphabet) g.add_letter(inv(c));
    return g;
}

}  // namespace tsalab

#endif  // TSALAB_FSA_HPP
