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

#ifndef TSALAB_RUN_HPP
#define TSALAB_RUN_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "tsalab/expected.hpp"
#include "tsalab/treestack.hpp"
#include "tsalab/tsa.hpp"

namespace tsalab {

using VisitCounts = std::map<Address, std::uint32_t>;

struct Configuration {
    StateId state = 0;
    TreeStack ts;
    std::size_t pos = 0;
    VisitCounts vfb;

    std::uint32_t max_visits() const {
        std::uint32_t m = 0;
        for (const auto& [a, n] : vfb) m = std::max(m, n);
        return m;
    }
    bool operator==(const Configuration&) const = default;
};

inline Configuration initial_configuration(const Tsa& a) { return Configuration{a.initial, ts_init(), 0, {}}; }

struct TraceStep {
    std::size_t transition = 0;  // index into delta
    Configuration cfg;           // configuration after the step
};

struct RunTrace {
    std::string word;
    Configuration initial;
    std::vector<TraceStep> steps;

    std::size_t size() const { return steps.size(); }
    const Configuration& final_configuration() const { return steps.empty() ? initial : steps.back().cfg; }
    /// Configuration before step i (0-based); i == size() gives the final one.
    const Configuration& before(std::size_t i) const { return i == 0 ? initial : steps[i - 1].cfg; }
    std::vector<std::size_t> transitions() const {
        std::vector<std::size_t> out;
        for (const auto& s : steps) out.push_back(s.transition);
        return out;
    }
};

struct NotApplicable {
    enum class Reason { WrongState, InputMismatch, PredicateFails, InstructionFails };
    Reason reason = Reason::WrongState;
    std::optional<TsError> ts_error;
};

inline const char* to_string(NotApplicable::Reason r) {
    switch (r) {
        case NotApplicable::Reason::WrongState: return "WrongState";
        case NotApplicable::Reason::InputMismatch: return "InputMismatch";
        case NotApplicable::Reason::PredicateFails: return "PredicateFails";
        case NotApplicable::Reason::InstructionFails: return "InstructionFails";
    }
    return "?";
}

inline Expected<Configuration, NotApplicable> step(const Tsa&, std::string_view w, const Configuration& cfg,
                                                   const Transition& t) {
    using R = NotApplicable::Reason;
    if (cfg.state != t.src) return unexpected(NotApplicable{R::WrongState, {}});
    if (t.input && (cfg.pos >= w.size() || w[cfg.pos] != *t.input))
        return unexpected(NotApplicable{R::InputMismatch, {}});
    if (!pred_eval(cfg.ts, t.pred)) return unexpected(NotApplicable{R::PredicateFails, {}});
    auto ts = ts_apply(cfg.ts, t.instr);
    if (!ts) return unexpected(NotApplicable{R::InstructionFails, ts.error()});
    Configuration out{t.dst, std::move(*ts), cfg.pos + (t.input ? 1 : 0), cfg.vfb};
    if (t.instr.moves_up()) ++out.vfb[out.ts.pointer()];
    return out;
}

struct ReplayMismatch {
    std::size_t step = 0;  // 0-based index of the first failing step
    NotApplicable cause;
};

/// Executes a transition sequence on w from the initial configuration.
inline Expected<RunTrace, ReplayMismatch> build_trace(const Tsa& a, std::string_view w,
                                                      const std::vector<std::size_t>& seq) {
    RunTrace tr{std::string(w), initial_configuration(a), {}};
    Configuration cur = tr.initial;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] >= a.delta.size()) return unexpected(ReplayMismatch{i, {}});
        auto next = step(a, w, cur, a.delta[seq[i]]);
        if (!next) return unexpected(ReplayMismatch{i, next.error()});
        cur = std::move(*next);
        tr.steps.push_back(TraceStep{seq[i], cur});
    }
    return tr;
}

/// Re-executes a recorded trace and checks every stored configuration.
inline Expected<Configuration, ReplayMismatch> replay(const Tsa& a, const RunTrace& trace) {
    Configuration cur = initial_configuration(a);
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& s = trace.steps[i];
        if (s.transition >= a.delta.size()) return unexpected(ReplayMismatch{i, {}});
        auto next = step(a, trace.word, cur, a.delta[s.transition]);
        if (!next) return unexpected(ReplayMismatch{i, next.error()});
        if (!(*next == s.cfg)) return unexpected(ReplayMismatch{i, {}});
        cur = std::move(*next);
    }
    return cur;
}

inline bool consumed_whole_word(const RunTrace& tr) { return tr.final_configuration().pos == tr.word.size(); }

enum class AcceptMode { Root, Any };

struct SearchOptions {
    std::optional<std::uint32_t> k;
    AcceptMode accept_mode = AcceptMode::Root;
    std::optional<std::size_t> max_steps;     // run length; default 64(|w|+1)|Q|
    std::optional<std::size_t> max_vertices;  // tree size; default 16(|w|+1)
    std::size_t max_configs = 2'000'000;      // distinct configurations explored
    bool proper = false;                      // forbid two consecutive stationary eps steps
};

inline std::size_t default_max_steps(const Tsa& a, std::size_t word_len) {
    return 64 * (word_len + 1) * std::max<std::size_t>(a.states.size(), 1);
}
inline std::size_t default_max_vertices(std::size_t word_len) { return 16 * (word_len + 1); }

struct NotFound {
    enum class Reason { Exhausted, Budget };
    Reason reason = Reason::Exhausted;
    std::size_t explored = 0;
};

inline const char* to_string(NotFound::Reason r) { return r == NotFound::Reason::Exhausted ? "exhausted" : "budget"; }

using SearchResult = Expected<RunTrace, NotFound>;

inline bool is_accepting(const Tsa& a, const Configuration& c, std::size_t word_len, AcceptMode mode) {
    return c.pos == word_len && a.is_final(c.state) && (mode == AcceptMode::Any || c.ts.pointer().is_root());
}

namespace detail {

struct SearchKey {
    StateId state;
    std::size_t pos;
    TreeStack ts;
    VisitCounts vfb;
    bool last_stationary_eps;
    bool operator==(const SearchKey&) const = default;
};

struct SearchKeyHash {
    std::size_t operator()(const SearchKey& k) const {
        std::size_t h = k.ts.hash();
        hash_combine(h, k.state);
        hash_combine(h, k.pos);
        hash_combine(h, k.last_stationary_eps ? 1 : 0);
        for (const auto& [a, n] : k.vfb) {
            hash_combine(h, AddressHash{}(a));
            hash_combine(h, n);
        }
        return h;
    }
};

struct SearchNode {
    Configuration cfg;
    std::size_t parent;  // npos for the root
    std::size_t transition;
    std::size_t depth;
    bool last_stationary_eps;
};

inline constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

/// Breadth-first search from the initial configuration on w until `goal` holds.
/// Successors are generated in delta order, so the first witness is canonical.
inline SearchResult bfs(const Tsa& a, std::string_view w, const SearchOptions& opts,
                        const std::function<bool(const Configuration&)>& goal) {
    const std::size_t max_steps = opts.max_steps.value_or(default_max_steps(a, w.size()));
    const std::size_t max_vertices = opts.max_vertices.value_or(default_max_vertices(w.size()));
    std::vector<SearchNode> nodes;
    std::unordered_set<SearchKey, SearchKeyHash> seen;
    bool cut = false;

    auto remember = [&](const Configuration& c, bool lse) {
        return seen.insert(SearchKey{c.state, c.pos, c.ts, c.vfb, opts.proper && lse}).second;
    };

    nodes.push_back(SearchNode{initial_configuration(a), kNoParent, 0, 0, false});
    remember(nodes[0].cfg, false);

    auto rebuild = [&](std::size_t idx) {
        std::vector<std::size_t> chain;
        for (std::size_t i = idx; nodes[i].parent != kNoParent; i = nodes[i].parent) chain.push_back(i);
        std::reverse(chain.begin(), chain.end());
        RunTrace tr{std::string(w), nodes[0].cfg, {}};
        for (auto i : chain) tr.steps.push_back(TraceStep{nodes[i].transition, nodes[i].cfg});
        return tr;
    };

    for (std::size_t head = 0; head < nodes.size(); ++head) {
        if (goal(nodes[head].cfg)) return rebuild(head);
        if (nodes[head].depth >= max_steps) {
            cut = true;
            continue;
        }
        for (std::size_t ti = 0; ti < a.delta.size(); ++ti) {
            const auto& t = a.delta[ti];
            const auto& cur = nodes[head];
            if (t.src != cur.cfg.state) continue;
            const bool lse = t.is_stationary_epsilon();
            if (opts.proper && lse && cur.last_stationary_eps) continue;
            auto next = step(a, w, cur.cfg, t);
            if (!next) continue;
            if (opts.k && next->ts.pointer().depth() > 0 && t.instr.moves_up() &&
                next->vfb[next->ts.pointer()] > *opts.k)
                continue;
            if (next->ts.size() > max_vertices) {
                cut = true;
                continue;
            }
            if (!remember(*next, lse)) continue;
            if (nodes.size() >= opts.max_configs) {
                cut = true;
                continue;
            }
            nodes.push_back(SearchNode{std::move(*next), head, ti, cur.depth + 1, lse});
        }
    }
    return unexpected(NotFound{cut ? NotFound::Reason::Budget : NotFound::Reason::Exhausted, nodes.size()});
}

}  // namespace detail

/// Searches for an accepting run on w. The witness is a shortest run, ties broken by delta order.
inline SearchResult accepts(const Tsa& a, std::string_view w, const SearchOptions& opts = {}) {
    return detail::bfs(a, w, opts,
                       [&](const Configuration& c) { return is_accepting(a, c, w.size(), opts.accept_mode); });
}

/// Searches for any run that consumes all of w (acceptance not required).
inline SearchResult reads_prefix(const Tsa& a, std::string_view w, const SearchOptions& opts = {}) {
    return detail::bfs(a, w, opts, [&](const Configuration& c) { return c.pos == w.size(); });
}

struct Enumeration {
    std::set<std::string> words;
    std::vector<std::string> budget_hits;  // words whose search was cut off
    bool complete() const { return budget_hits.empty(); }
};

inline void for_each_word(std::string_view alphabet, std::size_t len, const std::function<void(const std::string&)>& f) {
    std::string w(len, ' ');
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == len) {
            f(w);
            return;
        }
        for (char c : alphabet) {
            w[i] = c;
            rec(i + 1);
        }
    };
    rec(0);
}

/// All words of length <= max_len that `accepts` accepts. A prefix that no run can
/// read (exhausted search) prunes all its extensions.
inline Enumeration enumerate(const Tsa& a, std::size_t max_len, const SearchOptions& opts = {}) {
    Enumeration out;
    std::function<void(std::string&)> rec = [&](std::string& w) {
        auto r = accepts(a, w, opts);
        if (r) {
            out.words.insert(w);
        } else if (r.error().reason == NotFound::Reason::Budget) {
            out.budget_hits.push_back(w);
        }
        if (w.size() == max_len) return;
        for (char c : a.alphabet) {
            w.push_back(c);
            auto p = reads_prefix(a, w, opts);
            if (p || p.error().reason == NotFound::Reason::Budget) rec(w);
            w.pop_back();
        }
    };
    std::string w;
    rec(w);
    return out;
}

/// Pushes and ups into each vertex, recomputed from the instructions of the trace.
inline VisitCounts visited_from_below_counts(const Tsa& a, const RunTrace& trace) {
    VisitCounts out;
    for (const auto& s : trace.steps) {
        if (a.delta[s.transition].instr.moves_up()) ++out[s.cfg.ts.pointer()];
    }
    return out;
}

inline bool is_k_restricted(const Tsa& a, const RunTrace& trace, std::uint32_t k) {
    for (const auto& [addr, n] : visited_from_below_counts(a, trace)) {
        if (n > k) return false;
    }
    return true;
}

/// No two consecutive steps are stationary eps transitions.
inline bool is_proper(const Tsa& a, const RunTrace& trace) {
    for (std::size_t i = 1; i < trace.steps.size(); ++i) {
        if (a.delta[trace.steps[i - 1].transition].is_stationary_epsilon() &&
            a.delta[trace.steps[i].transition].is_stationary_epsilon())
            return false;
    }
    return true;
}

struct FoundWord {
    std::string word;
    RunTrace trace;
};

/// Looks for any accepted word of length <= max_len, shortest run first.
inline Expected<FoundWord, NotFound> find_any_word(const Tsa& a, std::size_t max_len, const SearchOptions& opts = {}) {
    const std::size_t max_steps = opts.max_steps.value_or(default_max_steps(a, max_len));
    const std::size_t max_vertices = opts.max_vertices.value_or(default_max_vertices(max_len));
    struct Node {
        Configuration cfg;
        std::string word;
        std::size_t parent;
        std::size_t transition;
        std::size_t depth;
    };
    std::vector<Node> nodes;
    std::unordered_set<detail::SearchKey, detail::SearchKeyHash> seen;
    bool cut = false;
    nodes.push_back(Node{initial_configuration(a), {}, detail::kNoParent, 0, 0});
    seen.insert(detail::SearchKey{a.initial, 0, nodes[0].cfg.ts, {}, false});
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        const auto& cur = nodes[head];
        if (a.is_final(cur.cfg.state) && (opts.accept_mode == AcceptMode::Any || cur.cfg.ts.pointer().is_root())) {
            std::vector<std::size_t> chain;
            for (std::size_t i = head; nodes[i].parent != detail::kNoParent; i = nodes[i].parent) chain.push_back(i);
            std::reverse(chain.begin(), chain.end());
            std::vector<std::size_t> seq;
            for (auto i : chain) seq.push_back(nodes[i].transition);
            auto tr = build_trace(a, cur.word, seq);
            return FoundWord{cur.word, std::move(*tr)};
        }
        if (cur.depth >= max_steps) {
            cut = true;
            continue;
        }
        for (std::size_t ti = 0; ti < a.delta.size(); ++ti) {
            const auto& t = a.delta[ti];
            const auto& c = nodes[head];
            if (t.src != c.cfg.state) continue;
            std::string w = c.word;
            if (t.input) {
                if (w.size() >= max_len) {
                    cut = true;
                    continue;
                }
                w.push_back(*t.input);
            }
            auto next = step(a, w, Configuration{c.cfg.state, c.cfg.ts, c.word.size(), c.cfg.vfb}, t);
            if (!next) continue;
            if (opts.k && t.instr.moves_up() && next->vfb[next->ts.pointer()] > *opts.k) continue;
            if (next->ts.size() > max_vertices) {
                cut = true;
                continue;
            }
            if (!seen.insert(detail::SearchKey{next->state, w.size(), next->ts, next->vfb, false}).second) continue;
            if (nodes.size() >= opts.max_configs) {
                cut = true;
                continue;
            }
            std::size_t d = c.depth + 1;
            nodes.push_back(Node{std::move(*next), std::move(w), head, ti, d});
        }
    }
    return unexpected(NotFound{cut ? NotFound::Reason::Budget : NotFound::Reason::Exhausted, nodes.size()});
}

}  // namespace tsalab

#endif  // TSALAB_RUN_HPP
