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

#ifndef TSALAB_LANGLAB_HPP
#define TSALAB_LANGLAB_HPP

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

#include "tsalab/analysis.hpp"
#include "tsalab/expected.hpp"
#include "tsalab/fsa.hpp"
#include "tsalab/oracle.hpp"
#include "tsalab/run.hpp"
#include "tsalab/tsa.hpp"

namespace tsalab {

// ---- Parikh vectors and linear sets ----

struct ParikhVector {
    std::string alphabet;
    std::vector<std::uint64_t> counts;  // parallel to alphabet

    bool operator==(const ParikhVector&) const = default;
    ParikhVector operator+(const ParikhVector& o) const {
        ParikhVector r = *this;
        for (std::size_t i = 0; i < counts.size() && i < o.counts.size(); ++i) r.counts[i] += o.counts[i];
        return r;
    }
};

struct UnknownLetter {
    char letter = 0;
};

inline Expected<ParikhVector, UnknownLetter> parikh(std::string_view w, std::string_view alphabet) {
    ParikhVector v{std::string(alphabet), std::vector<std::uint64_t>(alphabet.size(), 0)};
    for (char c : w) {
        auto i = alphabet.find(c);
        if (i == std::string_view::npos) return unexpected(UnknownLetter{c});
        ++v.counts[i];
    }
    return v;
}

inline std::string render(const ParikhVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.counts.size(); ++i) s += (i ? "," : "") + std::to_string(v.counts[i]);
    return s + ")";
}

/// {v0 + a1 v1 + ... + am vm : ai >= 0}.
struct LinearSet {
    std::vector<std::uint64_t> base;
    std::vector<std::vector<std::uint64_t>> periods;

    bool contains(const std::vector<std::uint64_t>& v) const {
        if (v.size() != base.size()) return false;
        std::vector<std::uint64_t> rest(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < base[i]) return false;
            rest[i] = v[i] - base[i];
        }
        return reach(rest, 0);
    }

private:
    bool reach(const std::vector<std::uint64_t>& r, std::size_t p) const {
        if (std::all_of(r.begin(), r.end(), [](auto x) { return x == 0; })) return true;
        if (p == periods.size()) return false;
        const auto& per = periods[p];
        if (std::all_of(per.begin(), per.end(), [](auto x) { return x == 0; })) return reach(r, p + 1);
        std::vector<std::uint64_t> cur = r;
        while (true) {
            if (reach(cur, p + 1)) return true;
            for (std::size_t i = 0; i < cur.size(); ++i) {
                if (cur[i] < per[i]) return false;
                cur[i] -= per[i];
            }
        }
    }
};

// ---- Gap checks on length sets ----

enum class GapVerdict { Divergent, Inconclusive };

inline const char* to_string(GapVerdict v) {
    return v == GapVerdict::Divergent ? "gap-divergent (sample)" : "inconclusive";
}

struct GapReport {
    std::vector<std::optional<std::size_t>> threshold;  // threshold[m]: least index past which all gaps exceed m
    GapVerdict verdict = GapVerdict::Inconclusive;
};

/// For each m <= m_max finds the least index N_m such that every consecutive gap
/// from N_m on exceeds m. The verdict only speaks about the sample.
inline GapReport gap_check(const std::vector<std::uint64_t>& lengths, std::size_t m_max) {
    GapReport rep;
    std::vector<std::uint64_t> gaps;
    for (std::size_t i = 1; i < lengths.size(); ++i) gaps.push_back(lengths[i] - lengths[i - 1]);
    bool all = !gaps.empty();
    for (std::size_t m = 0; m <= m_max; ++m) {
        std::optional<std::size_t> n;
        if (!gaps.empty() && gaps.back() > m) {
            std::size_t i = gaps.size();
            while (i > 0 && gaps[i - 1] > m) --i;
            n = i;
        }
        if (!n) all = false;
        rep.threshold.push_back(n);
    }
    rep.verdict = all ? GapVerdict::Divergent : GapVerdict::Inconclusive;
    return rep;
}

inline std::vector<std::uint64_t> unary_lengths(oracles::UnaryFamily f, std::uint64_t n_max, double alpha = 1.5) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        auto l = oracles::unary_length(f, n, alpha);
        if (out.empty() || l > out.back()) out.push_back(l);
    }
    return out;
}

// ---- Types of words over {a, b} ----

enum class TypeScheme {
    Blocks,   // type p: contains a b^p a or b a^p b; type 0: a*b* or b*a*
    SingleA,  // type p: contains a b^p a; type 0: b^s a b^t with s, t < context
};

/// context is only used by SingleA for type 0.
inline bool is_type(std::string_view w, std::size_t p, TypeScheme scheme, std::size_t context = 0) {
    auto rs = oracles::runs(w);
    if (p == 0) {
        if (scheme == TypeScheme::Blocks)
            return rs.size() <= 2 && std::all_of(rs.begin(), rs.end(), [](auto& r) { return r.first == 'a' || r.first == 'b'; });
        std::size_t as = 0, s = 0, t = 0;
        for (std::size_t i = 0; i < rs.size(); ++i) {
            if (rs[i].first == 'a') {
                as += rs[i].second;
                if (i > 0) s = rs[i - 1].second;
                if (i + 1 < rs.size()) t = rs[i + 1].second;
            } else if (rs[i].first != 'b') {
                return false;
            }
        }
        return as == 1 && s < context && t < context;
    }
    for (std::size_t i = 1; i + 1 < rs.size(); ++i) {
        if (rs[i].second != p) continue;
        if (rs[i].first == 'b' && rs[i - 1].first == 'a' && rs[i + 1].first == 'a') return true;
        if (scheme == TypeScheme::Blocks && rs[i].first == 'a' && rs[i - 1].first == 'b' && rs[i + 1].first == 'b')
            return true;
    }
    return false;
}

inline std::set<std::size_t> types_of(std::string_view w, TypeScheme scheme, std::size_t context = 0) {
    std::set<std::size_t> out;
    if (is_type(w, 0, scheme, context)) out.insert(0);
    for (const auto& r : oracles::runs(w))
        if (is_type(w, r.second, scheme, context)) out.insert(r.second);
    return out;
}

// ---- TSA x FSA ----

struct AlphabetMismatch {
    std::string extra;  // FSA letters the TSA does not know
};

/// Runs the FSA alongside the TSA. eps-moves of the TSA leave the FSA state alone.
inline Expected<Tsa, AlphabetMismatch> tsa_fsa_product(const Tsa& a, const Fsa& fsa) {
    const Fsa f = fsa.has_epsilon() ? remove_epsilon(fsa) : fsa;
    std::string extra;
    for (char c : f.alphabet)
        if (!a.has_letter(c)) extra.push_back(c);
    if (!extra.empty()) return unexpected(AlphabetMismatch{extra});

    Tsa p;
    p.labels = a.labels;
    p.alphabet = a.alphabet;
    const auto nf = static_cast<StateId>(f.states.size());
    auto pair = [nf](StateId q, StateId r) { return q * nf + r; };
    for (StateId q = 0; q < a.states.size(); ++q)
        for (StateId r = 0; r < nf; ++r) p.states.push_back(a.states[q] + "|" + f.states[r]);
    p.initial = pair(a.initial, f.initial);
    for (auto q : a.finals)
        for (auto r : f.finals) p.finals.insert(pair(q, r));
    for (const auto& t : a.delta) {
        if (!t.input) {
            for (StateId r = 0; r < nf; ++r)
                p.add(pair(t.src, r), std::nullopt, t.pred, t.instr, pair(t.dst, r), t.name + "|" + f.states[r]);
            continue;
        }
        for (const auto& e : f.edges) {
            if (e.input != t.input) continue;
            p.add(pair(t.src, e.src), t.input, t.pred, t.instr, pair(t.dst, e.dst),
                  t.name + "|" + f.states[e.src] + ">" + f.states[e.dst]);
        }
    }
    return p;
}

// ---- Rational subset membership, bounded ----

struct RationalResult {
    bool yes = false;
    std::optional<FoundWord> witness;  // a word u w^-1 in L(B) w^-1 that the product accepts
    std::size_t product_states = 0;
    std::size_t product_transitions = 0;
    std::optional<NotFound> failure;
};

/// Is w in the rational subset pi(L(b))? Searches the product of the word-problem
/// machine with B_w for an accepted word of length <= max_len. Only answers yes
/// with a witness that replays; otherwise the answer is unknown.
inline Expected<RationalResult, AlphabetMismatch> rational_membership(const Tsa& wp, const Fsa& b, std::string_view w,
                                                                      std::size_t max_len, SearchOptions opts = {},
                                                                      const Pairing& inv = text::inverse_letter) {
    auto prod = tsa_fsa_product(wp, build_Bw(b, w, inv));
    if (!prod) return unexpected(prod.error());
    RationalResult res;
    res.product_states = prod->states.size();
    res.product_transitions = prod->delta.size();
    auto found = find_any_word(*prod, max_len, opts);
    if (!found) {
        res.failure = found.error();
        return res;
    }
    if (!replay(*prod, found->trace)) {
        res.failure = NotFound{NotFound::Reason::Budget, 0};
        return res;
    }
    res.yes = true;
    res.witness = std::move(*found);
    return res;
}

// ---- Homomorphisms and the F2 x F2 experiment ----

/// Letters missing from the map are erased.
inline std::string erasing_hom(std::string_view w, const std::map<char, std::string>& image) {
    std::string out;
    for (char c : w) {
        auto it = image.find(c);
        if (it != image.end()) out += it->second;
    }
    return out;
}

/// Exponents of a word of T: [(ca)^x1 (db)^y1 ... (ca)^xn (db)^yn] (b')^p1
/// [(d'a')^q1 (c'b')^p2 ... (c'b')^pt (d'a')^qt] (c')^p(t+1).
struct TWord {
    std::vector<std::size_t> x, y, p, q;

    std::string word() const {
        std::string s;
        auto rep = [&s](std::string_view u, std::size_t e) {
            for (std::size_t i = 0; i < e; ++i) s += u;
        };
        for (std::size_t i = 0; i < x.size(); ++i) {
            rep("ca", x[i]);
            rep("db", y[i]);
        }
        rep("B", p[0]);
        for (std::size_t j = 0; j < q.size(); ++j) {
            if (j) rep("CB", p[j]);
            rep("DA", q[j]);
        }
        rep("C", p.back());
        return s;
    }

    // y_n = p_1, x_n = q_1, y_(n-1) = p_2, x_(n-1) = q_2, ... and n = t.
    bool first_equations() const {
        const std::size_t n = x.size();
        if (q.size() != n) return false;
        for (std::size_t j = 0; j < n; ++j)
            if (y[n - 1 - j] != p[j] || x[n - 1 - j] != q[j]) return false;
        return true;
    }
    // y_n = q_1, x_n = p_2, ..., y_1 = q_n, x_1 = p_(n+1).
    bool second_equations() const {
        const std::size_t n = x.size();
        if (q.size() != n) return false;
        for (std::size_t j = 0; j < n; ++j)
            if (y[n - 1 - j] != q[j] || x[n - 1 - j] != p[j + 1]) return false;
        return true;
    }
    bool all_equal() const {
        if (q.size() != x.size()) return false;
        const std::size_t e = x.front();
        auto same = [e](const std::vector<std::size_t>& v) { return std::all_of(v.begin(), v.end(), [e](auto z) { return z == e; }); };
        return same(x) && same(y) && same(p) && same(q);
    }
};

struct F2F2Report {
    std::size_t words = 0;
    std::size_t members = 0;
    std::size_t outside_T = 0;                // generated words T rejects; expected 0
    std::vector<std::string> mismatches;      // membership, equations and equal exponents disagree
    std::set<std::string> image;              // psi of the members
    std::set<std::string> expected_image;     // (a^m b^m)^n in range
    bool image_ok() const { return image == expected_image; }
    bool ok() const { return outside_T == 0 && mismatches.empty() && image_ok(); }
};

inline F2F2Report f2f2_experiment(std::size_t n_max, std::size_t m_max) {
    F2F2Report rep;
    const Dfa t = determinize(f2f2_T());
    const auto wp = oracles::wp_f2xf2();
    const std::map<char, std::string> psi{{'a', "a"}, {'b', "b"}};
    for (std::size_t m = 1; m <= m_max; ++m) {
        for (std::size_t n = 1; n <= n_max; ++n) {
            std::string s;
            for (std::size_t i = 0; i < n; ++i) s += std::string(m, 'a') + std::string(m, 'b');
            rep.expected_image.insert(s);
        }
    }
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (std::size_t tt = 1; tt <= n_max; ++tt) {
            // Odometer over the 2n + 2t + 1 exponents.
            std::vector<std::size_t> e(2 * n + 2 * tt + 1, 1);
            while (true) {
                TWord tw;
                tw.x.assign(e.begin(), e.begin() + n);
                tw.y.assign(e.begin() + n, e.begin() + 2 * n);
                tw.p.assign(e.begin() + 2 * n, e.begin() + 2 * n + tt + 1);
                tw.q.assign(e.begin() + 2 * n + tt + 1, e.end());
                const std::string w = tw.word();
                ++rep.words;
                if (!t.accepts(w)) ++rep.outside_T;
                const bool member = wp(w);
                const bool eqs = tw.first_equations() && tw.second_equations();
                if (member != eqs || member != tw.all_equal()) {
                    if (rep.mismatches.size() < 16) rep.mismatches.push_back(w);
                }
                if (member) {
                    ++rep.members;
                    rep.image.insert(erasing_hom(w, psi));
                }
                std::size_t i = 0;
                while (i < e.size() && e[i] == m_max) e[i++] = 1;
                if (i == e.size()) break;
                ++e[i];
            }
        }
    }
    return rep;
}

// ---- Pumping experiments on S_m and (a^m b^m)^n ----

/// Searches cut points of w for u_1 v_1 w_1 s_1 ... u_k v_k w_k s_k u_(k+1) with
/// some pumped factor non-empty, such that the word stays in the language for
/// every i in pumps. Returns the first decomposition found in lexicographic cut
/// order, and the number of decompositions tried.
struct WeakPumpSearch {
    std::optional<WeakPumpDecomposition> found;
    std::size_t tried = 0;
};

inline WeakPumpSearch find_weak_pump(const WordOracle& oracle, std::string_view w, std::size_t k,
                                     const std::vector<std::size_t>& pumps = {0, 2}) {
    WeakPumpSearch res;
    const std::size_t cuts = 4 * k;
    std::vector<std::size_t> c(cuts, 0);
    const std::size_t len = w.size();
    auto decompose = [&] {
        WeakPumpDecomposition d;
        std::size_t prev = 0;
        for (std::size_t j = 0; j < k; ++j) {
            auto piece = [&](std::size_t idx) {
                std::string s(w.substr(prev, c[idx] - prev));
                prev = c[idx];
                return s;
            };
            d.u.push_back(piece(4 * j));
            d.v.push_back(piece(4 * j + 1));
            d.w.push_back(piece(4 * j + 2));
            d.s.push_back(piece(4 * j + 3));
        }
        d.u.emplace_back(w.substr(prev));
        return d;
    };
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t idx, std::size_t lo) {
        if (idx == cuts) {
            auto d = decompose();
            std::size_t volume = 0;
            for (std::size_t j = 0; j < k; ++j) volume += d.v[j].size() + d.s[j].size();
            if (volume == 0) return false;
            ++res.tried;
            for (auto i : pumps)
                if (!oracle(d.at(i))) return false;
            res.found = std::move(d);
            return true;
        }
        for (std::size_t x = lo; x <= len; ++x) {
            c[idx] = x;
            if (rec(idx + 1, x)) return true;
        }
        return false;
    };
    if (cuts > 0) rec(0, 0);
    return res;
}

struct SmRow {
    std::size_t n = 0;
    std::string word;
    std::size_t deletions = 0;           // factors u with 1 <= |u| < n removed
    std::size_t deletions_in_language = 0;  // expected 0
    WeakPumpSearch with_m;                // k = m pairs; expected none
    WeakPumpSearch with_m_plus_1;         // k = m + 1 pairs; expected one
    bool ok() const { return deletions_in_language == 0 && !with_m.found && with_m_plus_1.found; }
};

struct SmReport {
    std::size_t m = 0;
    std::vector<SmRow> rows;
    bool ok() const { return std::all_of(rows.begin(), rows.end(), [](const SmRow& r) { return r.ok(); }); }
};

/// a_1^n ... a_(2m+1)^n for n in [1, n_max]: no short factor can be deleted, no
/// weak pumping with m pairs exists, and one with m + 1 pairs does.
inline SmReport sm_experiment(std::size_t m, std::size_t n_max) {
    SmReport rep{m, {}};
    const auto oracle = oracles::s_m(m);
    const std::string letters = oracles::indexed_letters(2 * m + 1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        SmRow row;
        row.n = n;
        for (char c : letters) row.word += std::string(n, c);
        for (std::size_t i = 0; i < row.word.size(); ++i) {
            for (std::size_t l = 1; l < n && i + l <= row.word.size(); ++l) {
                ++row.deletions;
                if (oracle(row.word.substr(0, i) + row.word.substr(i + l))) ++row.deletions_in_language;
            }
        }
        row.with_m = find_weak_pump(oracle, row.word, m);
        row.with_m_plus_1 = find_weak_pump(oracle, row.word, m + 1);
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

struct AmbmRow {
    std::size_t m = 0;
    std::string word;                    // (a^m b^m)^n
    std::size_t factors = 0;
    std::size_t untyped_factors = 0;     // factors with a type other than 0 and m; expected 0
    std::size_t deletions = 0;           // factors u with 1 <= |u| < 2m removed
    std::size_t deletions_in_language = 0;  // expected 0
    bool parikh_ok = false;              // psi(w) = (mn, mn) lies on (1,1) + N(1,1)
    // (a b^m)^n under the single-a scheme, reported only: factors with two or more
    // a's that are not of type m, and factors with exactly one a that are not type 0.
    std::size_t single_a_multi_untyped = 0;
    std::size_t single_a_one_untyped = 0;
    bool ok() const { return untyped_factors == 0 && deletions_in_language == 0 && parikh_ok; }
};

struct AmbmReport {
    std::size_t n = 0;
    std::vector<AmbmRow> rows;
    bool ok() const { return std::all_of(rows.begin(), rows.end(), [](const AmbmRow& r) { return r.ok(); }); }
};

inline AmbmReport ambm_experiment(std::size_t m_max, std::size_t n) {
    AmbmReport rep{n, {}};
    const auto oracle = oracles::ambm_n();
    const LinearSet diagonal{{1, 1}, {{1, 1}}};
    for (std::size_t m = 1; m <= m_max; ++m) {
        AmbmRow row;
        row.m = m;
        for (std::size_t i = 0; i < n; ++i) row.word += std::string(m, 'a') + std::string(m, 'b');
        const std::string& w = row.word;
        for (std::size_t i = 0; i <= w.size(); ++i) {
            for (std::size_t l = 0; i + l <= w.size(); ++l) {
                ++row.factors;
                auto ts = types_of(w.substr(i, l), TypeScheme::Blocks);
                if (ts.empty() || std::any_of(ts.begin(), ts.end(), [m](auto p) { return p != 0 && p != m; }))
                    ++row.untyped_factors;
                if (l >= 1 && l < 2 * m) {
                    ++row.deletions;
                    if (oracle(w.substr(0, i) + w.substr(i + l))) ++row.deletions_in_language;
                }
            }
        }
        auto pv = parikh(w, "ab");
        row.parikh_ok = pv && pv->counts[0] == m * n && pv->counts[1] == m * n && diagonal.contains(pv->counts);

        std::string w2;
        for (std::size_t i = 0; i < n; ++i) w2 += "a" + std::string(m, 'b');
        for (std::size_t i = 0; i <= w2.size(); ++i) {
            for (std::size_t l = 1; i + l <= w2.size(); ++l) {
                auto f = w2.substr(i, l);
                auto as = static_cast<std::size_t>(std::count(f.begin(), f.end(), 'a'));
                if (as >= 2 && !is_type(f, m, TypeScheme::SingleA)) ++row.single_a_multi_untyped;
                if (as == 1 && !is_type(f, 0, TypeScheme::SingleA, m)) ++row.single_a_one_untyped;
            }
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace tsalab

#endif  // TSALAB_LANGLAB_HPP
