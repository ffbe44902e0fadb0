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

#ifndef TSALAB_MCFG_HPP
#define TSALAB_MCFG_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tsalab/expected.hpp"
#include "tsalab/text.hpp"

namespace tsalab {

/// One symbol of a head argument: a terminal, or component `arg` of body item `item`.
struct McfgToken {
    bool is_var = false;
    char terminal = 0;
    std::size_t item = 0;
    std::size_t arg = 0;
};

struct McfgBodyItem {
    std::string nonterminal;
    std::vector<std::string> vars;
};

struct McfgRule {
    std::string head;
    std::vector<std::vector<McfgToken>> head_args;
    std::vector<McfgBodyItem> body;
};

using StringTuple = std::vector<std::string>;

struct Mcfg {
    std::string start;
    std::map<std::string, std::size_t> ranks;
    std::string terminals;
    std::vector<McfgRule> rules;

    std::size_t rank() const {
        std::size_t k = 0;
        for (const auto& [n, r] : ranks) k = std::max(k, r);
        return k;
    }
};

struct McfgError {
    enum class Kind { SyntaxError, RankMismatch, VariableReused };
    Kind kind = Kind::SyntaxError;
    std::size_t line = 0;
    std::string message;
};

inline const char* to_string(McfgError::Kind k) {
    switch (k) {
        case McfgError::Kind::SyntaxError: return "SyntaxError";
        case McfgError::Kind::RankMismatch: return "RankMismatch";
        case McfgError::Kind::VariableReused: return "VariableReused";
    }
    return "?";
}

inline std::string describe(const McfgError& e) {
    return std::string(to_string(e.kind)) + " at line " + std::to_string(e.line) + ": " + e.message;
}

namespace detail {

inline bool is_variable(std::string_view tok) {
    if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'y' && tok[0] != 'z')) return false;
    return std::all_of(tok.begin() + 1, tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

inline bool is_identifier(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

/// Splits `N(a, b)` into name and comma-separated fields.
inline std::optional<std::pair<std::string, std::vector<std::string>>> split_call(std::string_view s) {
    s = text::trim(s);
    auto open = s.find('(');
    if (open == std::string_view::npos || s.back() != ')') return std::nullopt;
    std::string name(text::trim(s.substr(0, open)));
    auto inner = s.substr(open + 1, s.size() - open - 2);
    std::vector<std::string> fields;
    std::size_t i = 0;
    while (true) {
        auto j = inner.find(',', i);
        fields.emplace_back(text::trim(inner.substr(i, j == std::string_view::npos ? std::string_view::npos : j - i)));
        if (j == std::string_view::npos) break;
        i = j + 1;
    }
    return std::pair{name, fields};
}

/// Splits a body `A(x1), B(y1, y2)` at the commas that sit outside parentheses.
inline std::vector<std::string> split_body(std::string_view s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.emplace_back(text::trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!text::trim(cur).empty()) out.emplace_back(text::trim(cur));
    return out;
}

}  // namespace detail

inline Expected<Mcfg, McfgError> parse_mcfg(std::string_view src) {
    using EK = McfgError::Kind;
    Mcfg g;
    bool header = false;
    auto all = text::lines(src);
    auto fail = [](EK k, std::size_t ln, std::string m) { return unexpected(McfgError{k, ln, std::move(m)}); };
    auto set_rank = [&](const std::string& n, std::size_t r, std::size_t ln) -> std::optional<McfgError> {
        auto [it, fresh] = g.ranks.emplace(n, r);
        if (!fresh && it->second != r)
            return McfgError{EK::RankMismatch, ln, n + " used with rank " + std::to_string(r) + " and " +
                                                       std::to_string(it->second)};
        return std::nullopt;
    };
    for (std::size_t ln0 = 0; ln0 < all.size(); ++ln0) {
        const std::size_t ln = ln0 + 1;
        auto line = text::trim(text::strip_comment(all[ln0]));
        if (line.empty()) continue;
        if (!header) {
            if (line != "mcfg") return fail(EK::SyntaxError, ln, "expected 'mcfg' header");
            header = true;
            continue;
        }
        auto kv = text::key_value(line);
        if (!kv) return fail(EK::SyntaxError, ln, "expected 'key: value'");
        if (kv->first == "start") {
            g.start = kv->second;
            continue;
        }
        if (kv->first != "rule") return fail(EK::SyntaxError, ln, "unknown key " + kv->first);
        const std::string& body_text = kv->second;
        auto arrow = body_text.find("<-");
        if (arrow == std::string::npos) return fail(EK::SyntaxError, ln, "missing <-");
        auto head = detail::split_call(std::string_view(body_text).substr(0, arrow));
        if (!head || !detail::is_identifier(head->first)) return fail(EK::SyntaxError, ln, "malformed head");
        McfgRule rule;
        rule.head = head->first;

        std::map<std::string, std::pair<std::size_t, std::size_t>> var_pos;
        for (const auto& item : detail::split_body(std::string_view(body_text).substr(arrow + 2))) {
            auto call = detail::split_call(item);
            if (!call || !detail::is_identifier(call->first)) return fail(EK::SyntaxError, ln, "malformed body item " + item);
            McfgBodyItem bi{call->first, {}};
            for (const auto& v : call->second) {
                if (!detail::is_variable(v)) return fail(EK::SyntaxError, ln, "body arguments must be variables: " + v);
                if (var_pos.count(v)) return fail(EK::VariableReused, ln, "variable " + v + " repeated in body");
                var_pos[v] = {rule.body.size(), bi.vars.size()};
                bi.vars.push_back(v);
            }
            if (auto e = set_rank(bi.nonterminal, bi.vars.size(), ln)) return unexpected(*e);
            rule.body.push_back(std::move(bi));
        }

        std::set<std::string> used;
        for (const auto& field : head->second) {
            std::vector<McfgToken> arg;
            for (const auto& tok : text::split_ws(field)) {
                if (detail::is_variable(tok)) {
                    auto it = var_pos.find(tok);
                    if (it == var_pos.end()) return fail(EK::SyntaxError, ln, "variable " + tok + " not bound in body");
                    if (!used.insert(tok).second) return fail(EK::VariableReused, ln, "variable " + tok + " used twice");
                    arg.push_back(McfgToken{true, 0, it->second.first, it->second.second});
                } else if (tok.size() == 1) {
                    arg.push_back(McfgToken{false, tok[0], 0, 0});
                    if (g.terminals.find(tok[0]) == std::string::npos) g.terminals.push_back(tok[0]);
                } else {
                    return fail(EK::SyntaxError, ln, "terminals are single characters: " + tok);
                }
            }
            rule.head_args.push_back(std::move(arg));
        }
        if (auto e = set_rank(rule.head, rule.head_args.size(), ln)) return unexpected(*e);
        g.rules.push_back(std::move(rule));
    }
    if (!header) return fail(EK::SyntaxError, 1, "empty input");
    if (g.start.empty()) g.start = "S";
    auto it = g.ranks.find(g.start);
    if (it != g.ranks.end() && it->second != 1) return fail(EK::RankMismatch, 0, "start symbol must have rank 1");
    g.ranks.emplace(g.start, 1);
    return g;
}

/// Applies a rule to chosen body tuples.
inline StringTuple apply_rule(const McfgRule& r, const std::vector<const StringTuple*>& args) {
    StringTuple out;
    for (const auto& field : r.head_args) {
        std::string s;
        for (const auto& t : field) {
            if (t.is_var) s += (*args[t.item])[t.arg];
            else s += t.terminal;
        }
        out.push_back(std::move(s));
    }
    return out;
}

inline std::size_t total_length(const StringTuple& t) {
    std::size_t n = 0;
    for (const auto& s : t) n += s.size();
    return n;
}

using McfgValues = std::map<std::string, std::set<StringTuple>>;

/// Least fixpoint of all derivable tuples whose total length is at most `bound`.
/// Rules that delete variables may need longer intermediate tuples; those
/// derivations are cut by the bound.
inline McfgValues mcfg_values(const Mcfg& g, std::size_t bound) {
    McfgValues vals;
    for (const auto& [n, r] : g.ranks) vals[n];
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& rule : g.rules) {
            // Snapshot body sets so that iteration is stable while inserting.
            std::vector<std::vector<StringTuple>> pools;
            bool empty = false;
            for (const auto& bi : rule.body) {
                const auto& s = vals[bi.nonterminal];
                if (s.empty()) empty = true;
                pools.emplace_back(s.begin(), s.end());
            }
            if (empty) continue;
            std::vector<const StringTuple*> pick(rule.body.size());
            std::function<void(std::size_t)> rec = [&](std::size_t i) {
                if (i == pools.size()) {
                    auto t = apply_rule(rule, pick);
                    if (total_length(t) <= bound && vals[rule.head].insert(std::move(t)).second) changed = true;
                    return;
                }
                for (const auto& t : pools[i]) {
                    pick[i] = &t;
                    rec(i + 1);
                }
            };
            rec(0);
        }
    }
    return vals;
}

inline std::set<std::string> mcfg_enumerate(const Mcfg& g, std::size_t max_total_len) {
    std::set<std::string> out;
    auto vals = mcfg_values(g, max_total_len);
    for (const auto& t : vals[g.start]) out.insert(t.at(0));
    return out;
}

inline bool mcfg_member(const Mcfg& g, std::string_view w) { return mcfg_enumerate(g, w.size()).count(std::string(w)) != 0; }

inline std::set<std::string> productive_nonterminals(const Mcfg& g) {
    std::set<std::string> prod;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : g.rules) {
            if (prod.count(r.head)) continue;
            bool ok = std::all_of(r.body.begin(), r.body.end(), [&](const McfgBodyItem& b) { return prod.count(b.nonterminal) != 0; });
            if (ok) {
                prod.insert(r.head);
                changed = true;
            }
        }
    }
    return prod;
}

inline bool mcfg_is_empty(const Mcfg& g) { return productive_nonterminals(g).count(g.start) == 0; }

/// Per productive nonterminal, the size of a smallest derivation counted as
/// terminals written plus the bound of every body item (deletion ignored).
/// Every intermediate tuple of that derivation fits the start bound, so
/// mcfg_enumerate(g, witness_bound(g)[S]) is non-empty whenever S is productive.
inline std::map<std::string, std::size_t> witness_bounds(const Mcfg& g) {
    constexpr auto inf = std::numeric_limits<std::size_t>::max();
    std::map<std::string, std::size_t> best;
    for (const auto& [n, r] : g.ranks) best[n] = inf;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : g.rules) {
            std::size_t cost = 0;
            for (const auto& f : r.head_args)
                for (const auto& t : f)
                    if (!t.is_var) ++cost;
            bool ok = true;
            for (const auto& b : r.body) {
                if (best[b.nonterminal] == inf) {
                    ok = false;
                    break;
                }
                cost += best[b.nonterminal];
            }
            if (ok && cost < best[r.head]) {
                best[r.head] = cost;
                changed = true;
            }
        }
    }
    for (auto it = best.begin(); it != best.end();) {
        if (it->second == inf) it = best.erase(it);
        else ++it;
    }
    return best;
}

inline std::string to_text(const Mcfg& g) {
    std::string out = "mcfg\nstart: " + g.start + "\n";
    for (const auto& r : g.rules) {
        out += "rule: " + r.head + "(";
        for (std::size_t i = 0; i < r.head_args.size(); ++i) {
            if (i) out += ", ";
            std::vector<std::string> toks;
            for (const auto& t : r.head_args[i])
                toks.push_back(t.is_var ? r.body[t.item].vars[t.arg] : std::string(1, t.terminal));
            out += text::join(toks, " ");
        }
        out += ") <-";
        for (std::size_t i = 0; i < r.body.size(); ++i) {
            out += i ? ", " : " ";
            out += r.body[i].nonterminal + "(" + text::join(r.body[i].vars, ", ") + ")";
        }
        out += "\n";
    }
    return out;
}

}  // namespace tsalab

#endif  // TSALAB_MCFG_HPP
