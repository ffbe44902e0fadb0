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

#ifndef TSALAB_ANALYSIS_HPP
#define TSALAB_ANALYSIS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tsalab/expected.hpp"
#include "tsalab/mcfg.hpp"
#include "tsalab/oracle.hpp"
#include "tsalab/run.hpp"
#include "tsalab/tsa.hpp"

namespace tsalab {

struct AnalysisError {
    enum class Kind {
        VertexNotInFinalTree,
        TraceNotProper,
        NotRootAccepting,
        HistoryMismatch,
        EmptyLevel1,
        StrongConditionViolated,
        ArityMismatch,
        ZeroPumpVolume,
    };
    Kind kind = Kind::VertexNotInFinalTree;
    std::optional<Address> vertex;
};

inline const char* to_string(AnalysisError::Kind k) {
    using K = AnalysisError::Kind;
    switch (k) {
        case K::VertexNotInFinalTree: return "VertexNotInFinalTree";
        case K::TraceNotProper: return "TraceNotProper";
        case K::NotRootAccepting: return "NotRootAccepting";
        case K::HistoryMismatch: return "HistoryMismatch";
        case K::EmptyLevel1: return "EmptyLevel1";
        case K::StrongConditionViolated: return "StrongConditionViolated";
        case K::ArityMismatch: return "ArityMismatch";
        case K::ZeroPumpVolume: return "ZeroPumpVolume";
    }
    return "?";
}

inline std::string describe(const AnalysisError& e) {
    std::string s = to_string(e.kind);
    if (e.vertex) s += " at " + e.vertex->to_string();
    return s;
}

/// Indices are 1-based positions in the run: step x is the x-th transition.
struct UpDownVector {
    std::vector<std::size_t> l;
    std::vector<std::size_t> m;

    std::size_t s() const { return l.size(); }
    std::vector<std::size_t> flat() const {
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < l.size(); ++j) {
            out.push_back(l[j]);
            out.push_back(m[j]);
        }
        return out;
    }
    bool operator==(const UpDownVector&) const = default;
};

struct NuFactorisation {
    std::string w0;
    std::vector<std::string> u;  // u_1..u_s
    std::vector<std::string> w;  // w_1..w_s

    std::string word() const {
        std::string out = w0;
        for (std::size_t j = 0; j < u.size(); ++j) out += u[j] + w[j];
        return out;
    }
    std::vector<std::string> parts() const {
        std::vector<std::string> out{w0};
        for (std::size_t j = 0; j < u.size(); ++j) {
            out.push_back(u[j]);
            out.push_back(w[j]);
        }
        return out;
    }
    bool operator==(const NuFactorisation&) const = default;
};

/// Row one holds labels (c^u_1, c^d_1, ...), row two states (q^u_1, q^d_1, ...).
struct HistoryArray {
    std::vector<Label> labels;
    std::vector<StateId> states;

    std::size_t s() const { return labels.size() / 2; }
    auto operator<=>(const HistoryArray&) const = default;
    bool operator==(const HistoryArray&) const = default;
};

inline std::string render(const UpDownVector& v) {
    std::vector<std::string> parts;
    for (auto x : v.flat()) parts.push_back(std::to_string(x));
    return "(" + text::join(parts, ",") + ")";
}

inline std::string render(const NuFactorisation& f) {
    std::vector<std::string> parts;
    for (const auto& p : f.parts()) parts.push_back(text::show_word(p));
    return text::join(parts, " . ");
}

inline std::string render(const Tsa& a, const HistoryArray& h) {
    std::vector<std::string> ls, qs;
    for (auto l : h.labels) ls.push_back(a.label_name(l));
    for (auto q : h.states) qs.push_back(a.state_name(q));
    return "((" + text::join(ls, ",") + "),(" + text::join(qs, ",") + "))";
}

namespace detail {

/// rho_x for x in [0, r].
inline const Address& pointer_after(const RunTrace& tr, std::size_t x) { return tr.before(x).ts.pointer(); }

/// Letters read by steps a..b (1-based, inclusive).
inline std::string read_between(const Tsa& a, const RunTrace& tr, std::size_t from, std::size_t to) {
    std::string out;
    for (std::size_t x = from; x <= to && x <= tr.size(); ++x) {
        if (x == 0) continue;
        if (auto c = a.delta[tr.steps[x - 1].transition].input) out.push_back(*c);
    }
    return out;
}

inline std::optional<AnalysisError> check_vertex(const Tsa& a, const RunTrace& tr, const Address& nu) {
    if (nu.is_root() || !tr.final_configuration().ts.contains(nu))
        return AnalysisError{AnalysisError::Kind::VertexNotInFinalTree, nu};
    if (!is_proper(a, tr)) return AnalysisError{AnalysisError::Kind::TraceNotProper, nu};
    return std::nullopt;
}

inline NuFactorisation factorise(const Tsa& a, const RunTrace& tr, const std::vector<std::size_t>& l,
                                 const std::vector<std::size_t>& m) {
    NuFactorisation f;
    const std::size_t s = l.size();
    f.w0 = read_between(a, tr, 1, l[0]);
    for (std::size_t j = 0; j < s; ++j) {
        f.u.push_back(read_between(a, tr, l[j] + 1, m[j]));
        const std::size_t end = j + 1 < s ? l[j + 1] : tr.size();
        f.w.push_back(read_between(a, tr, m[j] + 1, end));
    }
    return f;
}

}  // namespace detail

/// Crossings of the edge between nu and its parent. When the run ends above
/// nu the last m is the run length.
inline Expected<UpDownVector, AnalysisError> up_down_vector(const Tsa& a, const RunTrace& tr, const Address& nu) {
    if (auto e = detail::check_vertex(a, tr, nu)) return unexpected(*e);
    const Address parent = nu.parent();
    UpDownVector v;
    bool open = false;
    for (std::size_t x = 1; x <= tr.size(); ++x) {
        const auto& prev = detail::pointer_after(tr, x - 1);
        const auto& cur = detail::pointer_after(tr, x);
        if (!open && prev == parent && cur == nu) {
            v.l.push_back(x);
            open = true;
        } else if (open && prev == nu && cur == parent) {
            v.m.push_back(x - 1);
            open = false;
        }
    }
    if (open) v.m.push_back(tr.size());
    return v;
}

inline Expected<NuFactorisation, AnalysisError> nu_factorisation(const Tsa& a, const RunTrace& tr, const Address& nu) {
    auto v = up_down_vector(a, tr, nu);
    if (!v) return unexpected(v.error());
    return detail::factorise(a, tr, v->l, v->m);
}

inline Expected<HistoryArray, AnalysisError> history_array(const Tsa& a, const RunTrace& tr, const Address& nu) {
    auto v = up_down_vector(a, tr, nu);
    if (!v) return unexpected(v.error());
    HistoryArray h;
    for (std::size_t j = 0; j < v->s(); ++j) {
        for (auto x : {v->l[j], v->m[j]}) {
            const auto& cfg = tr.before(x);
            h.labels.push_back(*cfg.ts.label(nu));
            h.states.push_back(cfg.state);
        }
    }
    return h;
}

struct SwapReport {
    std::string word;                        // w0 u'_1 w_1 ... u'_s w_s
    std::vector<std::size_t> spliced_run;    // transition indices of the explicit splice
    std::optional<RunTrace> spliced_trace;   // set when the splice replays on word
    std::optional<std::size_t> splice_failure;
    bool accepted = false;                   // result of an independent search on word
    std::optional<NotFound::Reason> search_failure;
};

/// Replaces the u-factors of (tr1, nu1) by those of (tr2, nu2). The splice follows
/// tr1 until the pointer first reaches nu1, then tr2 while it stays above nu2, and so on.
inline Expected<SwapReport, AnalysisError> single_swap(const Tsa& a, const RunTrace& tr1, const Address& nu1,
                                                       const RunTrace& tr2, const Address& nu2,
                                                       const SearchOptions& opts = {}) {
    auto h1 = history_array(a, tr1, nu1);
    if (!h1) return unexpected(h1.error());
    auto h2 = history_array(a, tr2, nu2);
    if (!h2) return unexpected(h2.error());
    if (!(*h1 == *h2)) return unexpected(AnalysisError{AnalysisError::Kind::HistoryMismatch, nu1});
    auto v1 = *up_down_vector(a, tr1, nu1);
    auto v2 = *up_down_vector(a, tr2, nu2);
    auto f1 = detail::factorise(a, tr1, v1.l, v1.m);
    auto f2 = detail::factorise(a, tr2, v2.l, v2.m);

    SwapReport rep;
    rep.word = f1.w0;
    for (std::size_t j = 0; j < f1.u.size(); ++j) rep.word += f2.u[j] + f1.w[j];

    auto seq1 = tr1.transitions();
    auto seq2 = tr2.transitions();
    auto slice = [](const std::vector<std::size_t>& seq, std::size_t from, std::size_t to) {
        // steps from..to, 1-based inclusive
        std::vector<std::size_t> out;
        for (std::size_t x = from; x <= to; ++x) out.push_back(seq[x - 1]);
        return out;
    };
    auto append = [&](const std::vector<std::size_t>& part) {
        rep.spliced_run.insert(rep.spliced_run.end(), part.begin(), part.end());
    };
    append(slice(seq1, 1, v1.l[0]));
    for (std::size_t j = 0; j < v1.s(); ++j) {
        append(slice(seq2, v2.l[j] + 1, v2.m[j]));
        const std::size_t end = j + 1 < v1.s() ? v1.l[j + 1] : tr1.size();
        append(slice(seq1, v1.m[j] + 1, end));
    }
    auto spliced = build_trace(a, rep.word, rep.spliced_run);
    if (spliced) rep.spliced_trace = std::move(*spliced);
    else rep.splice_failure = spliced.error().step;

    auto found = accepts(a, rep.word, opts);
    rep.accepted = found.has_value();
    if (!found) rep.search_failure = found.error().reason;
    return rep;
}

struct UpSetProvenance {
    std::string word;
    Address vertex;
    bool operator==(const UpSetProvenance&) const = default;
};

struct EmpiricalUpSet {
    std::map<HistoryArray, std::map<StringTuple, std::vector<UpSetProvenance>>> entries;
    std::vector<std::pair<std::string, NotFound::Reason>> failures;

    /// Largest total length of a stored tuple per array; an estimate only.
    std::map<HistoryArray, std::size_t> max_total_length() const {
        std::map<HistoryArray, std::size_t> out;
        for (const auto& [h, tuples] : entries) {
            std::size_t best = 0;
            for (const auto& [t, prov] : tuples) best = std::max(best, total_length(t));
            out[h] = best;
        }
        return out;
    }
};

/// Records (history array -> u-tuple) for every non-root vertex of a proper witness per word.
inline EmpiricalUpSet collect_upsets(const Tsa& a, const std::vector<std::string>& words, SearchOptions opts = {}) {
    opts.proper = true;
    EmpiricalUpSet out;
    for (const auto& w : words) {
        auto tr = accepts(a, w, opts);
        if (!tr) {
            out.failures.emplace_back(w, tr.error().reason);
            continue;
        }
        for (const auto& [addr, lab] : tr->final_configuration().ts.nodes()) {
            if (addr.is_root()) continue;
            auto h = history_array(a, *tr, addr);
            auto f = nu_factorisation(a, *tr, addr);
            if (!h || !f) continue;
            out.entries[*h][f->u].push_back(UpSetProvenance{w, addr});
        }
    }
    return out;
}

struct PumpWitness {
    std::string x, y, z;
    Address vertex;
    std::size_t first_step = 0;  // 1-based step after which y starts
    std::map<std::size_t, bool> verified;  // n -> x y^n z accepted
    bool all_verified() const {
        return std::all_of(verified.begin(), verified.end(), [](const auto& kv) { return kv.second; });
    }
};

inline std::string pump_word(const PumpWitness& p, std::size_t n) {
    std::string out = p.x;
    for (std::size_t i = 0; i < n; ++i) out += p.y;
    return out + p.z;
}

/// Looks for more than m|C||Q| consecutive stationary steps at one vertex and a
/// repeated (label, state) pair inside them giving m <= |y| <= m|C||Q|.
inline std::optional<PumpWitness> find_pumpable(const Tsa& a, const RunTrace& tr, std::size_t m,
                                                const SearchOptions& opts = {},
                                                const std::vector<std::size_t>& check = {0, 2, 3}) {
    const std::size_t cq = std::max<std::size_t>(a.labels.size(), 1) * a.states.size();
    const std::size_t p = m * cq + 1;
    const std::size_t r = tr.size();
    std::size_t x = 1;
    while (x <= r) {
        if (!a.delta[tr.steps[x - 1].transition].instr.is_stationary()) {
            ++x;
            continue;
        }
        std::size_t end = x;
        while (end + 1 <= r && a.delta[tr.steps[end].transition].instr.is_stationary()) ++end;
        if (end - x + 1 > m * cq) {
            for (std::size_t start = x; start + p - 1 <= end; ++start) {
                std::map<std::pair<Label, StateId>, std::vector<std::size_t>> seen;
                for (std::size_t j = start; j < start + p; ++j) {
                    const auto& cfg = tr.before(j);
                    auto& hits = seen[{cfg.ts.pointer_label(), cfg.state}];
                    hits.push_back(j);
                    if (hits.size() < m + 1) continue;
                    const std::size_t j1 = hits[hits.size() - m - 1];
                    std::string y = detail::read_between(a, tr, j1 + 1, j);
                    if (y.size() < m || y.size() > m * cq) continue;
                    PumpWitness pw;
                    pw.x = detail::read_between(a, tr, 1, j1);
                    pw.y = std::move(y);
                    pw.z = detail::read_between(a, tr, j + 1, r);
                    pw.vertex = tr.before(j).ts.pointer();
                    pw.first_step = j1;
                    for (auto n : check) pw.verified[n] = accepts(a, pump_word(pw, n), opts).has_value();
                    return pw;
                }
            }
        }
        x = end + 1;
    }
    return std::nullopt;
}

/// A word with some positions marked (0-based).
struct MarkedWord {
    std::string word;
    std::set<std::size_t> marks;

    std::size_t marked_count(std::size_t from, std::size_t to) const {
        std::size_t n = 0;
        for (auto p : marks)
            if (p >= from && p < to) ++n;
        return n;
    }
};

struct VertexBound {
    enum class Role { Root, Interior, Leaf };
    Address vertex;
    Role role = Role::Leaf;
    std::size_t letters = 0;  // letters read by stationary steps at the vertex
    std::size_t bound = 0;
    bool ok = true;
    std::optional<std::size_t> outside_marked;  // marked letters read outside the subtree
    std::optional<bool> singular;
};

inline const char* to_string(VertexBound::Role r) {
    switch (r) {
        case VertexBound::Role::Root: return "root";
        case VertexBound::Role::Interior: return "interior";
        case VertexBound::Role::Leaf: return "leaf";
    }
    return "?";
}

struct BoundsReport {
    std::size_t mu = 1, k = 0, d = 0, c = 0, q = 0;
    std::vector<VertexBound> vertices;
    bool all_ok() const {
        return std::all_of(vertices.begin(), vertices.end(), [](const VertexBound& v) { return v.ok; });
    }
};

/// Letter-count bounds per vertex, after checking that no stationary factor at a
/// vertex exceeds mu|C||Q| letters. With a marked word and lambda, each vertex
/// also reports whether it is lambda-singular.
inline Expected<BoundsReport, AnalysisError> check_atv_bounds(const Tsa& a, const RunTrace& tr, std::size_t mu,
                                                              const std::optional<MarkedWord>& marked = std::nullopt,
                                                              std::size_t lambda = 0) {
    BoundsReport rep;
    rep.mu = mu;
    rep.c = a.labels.size();
    rep.q = a.states.size();
    rep.d = degree(a).value();
    for (const auto& [addr, n] : visited_from_below_counts(a, tr)) rep.k = std::max<std::size_t>(rep.k, n);

    // Stationary letters per vertex, and the strong condition per maximal block.
    std::map<Address, std::size_t> letters;
    std::size_t block_letters = 0;
    for (std::size_t x = 1; x <= tr.size(); ++x) {
        const auto& t = a.delta[tr.steps[x - 1].transition];
        if (!t.instr.is_stationary()) {
            block_letters = 0;
            continue;
        }
        if (!t.input) continue;
        const auto& at = tr.before(x).ts.pointer();
        ++letters[at];
        if (++block_letters > mu * rep.c * rep.q)
            return unexpected(AnalysisError{AnalysisError::Kind::StrongConditionViolated, at});
    }

    const auto& tree = tr.final_configuration().ts;
    for (const auto& [addr, lab] : tree.nodes()) {
        VertexBound vb;
        vb.vertex = addr;
        bool has_child = false;
        for (const auto& [other, l2] : tree.nodes()) {
            if (other.depth() == addr.depth() + 1 && addr.is_prefix_of(other)) {
                has_child = true;
                break;
            }
        }
        if (addr.is_root()) {
            vb.role = VertexBound::Role::Root;
            vb.bound = mu * rep.k * rep.d * rep.q;
        } else if (has_child) {
            vb.role = VertexBound::Role::Interior;
            vb.bound = mu * rep.k * rep.c * rep.q * (rep.d + 1);
        } else {
            vb.role = VertexBound::Role::Leaf;
            vb.bound = mu * rep.k * rep.c * rep.q;
        }
        vb.letters = letters.count(addr) ? letters.at(addr) : 0;
        vb.ok = vb.letters <= vb.bound;
        if (marked) {
            // A letter counts as read inside the subtree when the step starts and ends there.
            std::size_t outside = 0;
            std::size_t pos = 0;
            for (std::size_t x = 1; x <= tr.size(); ++x) {
                const auto& t = a.delta[tr.steps[x - 1].transition];
                if (!t.input) continue;
                bool inside = addr.is_prefix_of(tr.before(x - 1).ts.pointer()) &&
                              addr.is_prefix_of(tr.before(x).ts.pointer());
                if (!inside && marked->marks.count(pos)) ++outside;
                ++pos;
            }
            vb.outside_marked = outside;
            vb.singular = outside < lambda;
        }
        rep.vertices.push_back(vb);
    }
    return rep;
}

struct SubstitutionBound {
    std::uint64_t n_lambda = 0;
    std::uint64_t n_mu = 0;
};

/// N = (D+1)(mu k |C||Q| + lambda) + D M, and the same with lambda = mu.
inline SubstitutionBound substitution_bound(std::uint64_t mu, std::uint64_t lambda, std::uint64_t k,
                                            std::uint64_t c_size, std::uint64_t q_size, std::uint64_t d,
                                            std::uint64_t m_est) {
    auto f = [&](std::uint64_t lam) { return (d + 1) * (mu * k * c_size * q_size + lam) + d * m_est; };
    return {f(lambda), f(mu)};
}

struct SwitchCheck {
    StringTuple tuple;
    std::string word;
    bool member = false;
};

struct SwitchReport {
    std::vector<SwitchCheck> checks;
    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const SwitchCheck& c) { return c.member; });
    }
};

inline Expected<SwitchReport, AnalysisError> check_U_switchable(const WordOracle& oracle, const NuFactorisation& f,
                                                                const std::set<StringTuple>& sample) {
    SwitchReport rep;
    for (const auto& t : sample) {
        if (t.size() != f.u.size()) return unexpected(AnalysisError{AnalysisError::Kind::ArityMismatch, {}});
        NuFactorisation g = f;
        g.u = t;
        rep.checks.push_back(SwitchCheck{t, g.word(), oracle(g.word())});
    }
    return rep;
}

/// u_1 v_1^i w_1 s_1^i u_2 ... u_k v_k^i w_k s_k^i u_{k+1}.
struct WeakPumpDecomposition {
    std::vector<std::string> u;  // k + 1 entries
    std::vector<std::string> v, w, s;

    std::string at(std::size_t i) const {
        std::string out;
        for (std::size_t j = 0; j < v.size(); ++j) {
            out += u[j];
            for (std::size_t n = 0; n < i; ++n) out += v[j];
            out += w[j];
            for (std::size_t n = 0; n < i; ++n) out += s[j];
        }
        return out + u.back();
    }
};

struct WeakPumpReport {
    std::vector<std::pair<std::size_t, bool>> results;  // i -> member
    std::optional<std::size_t> first_failure;
};

inline Expected<WeakPumpReport, AnalysisError> weak_pump_verify(const WordOracle& oracle,
                                                                const WeakPumpDecomposition& d, std::size_t i_max) {
    const std::size_t k = d.v.size();
    if (d.w.size() != k || d.s.size() != k || d.u.size() != k + 1)
        return unexpected(AnalysisError{AnalysisError::Kind::ArityMismatch, {}});
    std::size_t volume = 0;
    for (std::size_t j = 0; j < k; ++j) volume += d.v[j].size() + d.s[j].size();
    if (volume == 0) return unexpected(AnalysisError{AnalysisError::Kind::ZeroPumpVolume, {}});
    WeakPumpReport rep;
    for (std::size_t i = 0; i <= i_max; ++i) {
        bool ok = oracle(d.at(i));
        rep.results.emplace_back(i, ok);
        if (!ok && !rep.first_failure) rep.first_failure = i;
    }
    return rep;
}

struct Level1Arrays {
    std::vector<std::size_t> l, m;
    std::vector<std::uint32_t> n;  // root child of each column
    NuFactorisation factorisation;
    HistoryArray history;          // rows one and two
    std::vector<std::uint32_t> tags;  // row three, two entries per column

    std::size_t s() const { return l.size(); }
};

/// Columns for every push or up applied at the root, in run order.
inline Expected<Level1Arrays, AnalysisError> level1_arrays(const Tsa& a, const RunTrace& tr) {
    if (!is_proper(a, tr)) return unexpected(AnalysisError{AnalysisError::Kind::TraceNotProper, {}});
    if (!tr.final_configuration().ts.pointer().is_root())
        return unexpected(AnalysisError{AnalysisError::Kind::NotRootAccepting, {}});
    Level1Arrays out;
    std::optional<Address> open;
    for (std::size_t x = 1; x <= tr.size(); ++x) {
        const auto& prev = detail::pointer_after(tr, x - 1);
        const auto& cur = detail::pointer_after(tr, x);
        if (!open && prev.is_root() && !cur.is_root()) {
            out.l.push_back(x);
            out.n.push_back(cur.last());
            open = cur;
        } else if (open && prev == *open && cur.is_root()) {
            out.m.push_back(x - 1);
            open.reset();
        }
    }
    if (out.l.empty()) return unexpected(AnalysisError{AnalysisError::Kind::EmptyLevel1, {}});
    out.factorisation = detail::factorise(a, tr, out.l, out.m);
    for (std::size_t j = 0; j < out.s(); ++j) {
        const Address child = Address::root().child(out.n[j]);
        for (auto x : {out.l[j], out.m[j]}) {
            const auto& cfg = tr.before(x);
            out.history.labels.push_back(*cfg.ts.label(child));
            out.history.states.push_back(cfg.state);
            out.tags.push_back(out.n[j]);
        }
    }
    return out;
}

}  // namespace tsalab

#endif  // TSALAB_ANALYSIS_HPP
