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

#ifndef TSALAB_SUITES_HPP
#define TSALAB_SUITES_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tsalab/analysis.hpp"
#include "tsalab/convert.hpp"
#include "tsalab/fixtures.hpp"
#include "tsalab/langlab.hpp"
#include "tsalab/mcfg.hpp"
#include "tsalab/oracle.hpp"
#include "tsalab/report.hpp"
#include "tsalab/run.hpp"

// Checks bundled by topic. Each check computes its expectation independently
// of the code under test wherever that is possible.
namespace tsalab::suites {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::vector<Check> checks;
    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }
};

namespace detail {

inline std::vector<std::string> names_of(const Tsa& a, const RunTrace& tr) {
    std::vector<std::string> out;
    for (auto i : tr.transitions()) out.push_back(a.delta[i].name);
    return out;
}

inline std::vector<std::string> words_up_to(std::string_view alphabet, std::size_t max_len) {
    std::vector<std::string> out;
    for (std::size_t n = 0; n <= max_len; ++n)
        for_each_word(alphabet, n, [&](const std::string& w) { out.push_back(w); });
    return out;
}

}  // namespace detail

// Witness runs for a^m b^m c^m d^m are 2-restricted and end at the root, and the
// m = 2 witness is the reference run.
inline Check abcd_reproduction() {
    const Tsa a = fixtures::abcd();
    SearchOptions opts;
    opts.k = 2;
    for (std::size_t m = 0; m <= 6; ++m) {
        auto tr = accepts(a, fixtures::abcd_word(m), opts);
        if (!tr) return {"abcd reproduction", false, "no witness for m=" + std::to_string(m)};
        if (!is_k_restricted(a, *tr, 2) || !tr->final_configuration().ts.pointer().is_root())
            return {"abcd reproduction", false, "witness for m=" + std::to_string(m) + " not 2-restricted at root"};
        if (m == 2) {
            const std::vector<std::string> expect{"s1", "s1", "s2", "s3", "s4", "s4", "s5",
                                                  "s6", "s6", "s7", "s8", "s8", "s9"};
            if (detail::names_of(a, *tr) != expect)
                return {"abcd reproduction", false, "m=2 sequence " + text::join(detail::names_of(a, *tr), " ")};
        }
    }
    return {"abcd reproduction", true, "m in [0,6] accepted, m=2 sequence matches"};
}

// Every word over {a,b,c,d} of length <= 8 is accepted iff the oracle says so,
// and every rejection is an exhausted search.
inline Check abcd_rejection(std::size_t max_len = 8) {
    const Tsa a = fixtures::abcd();
    const auto oracle = oracles::abcd();
    std::size_t words = 0, bad = 0, budget = 0;
    std::string first;
    for (std::size_t n = 0; n <= max_len; ++n) {
        for_each_word("abcd", n, [&](const std::string& w) {
            ++words;
            auto r = accepts(a, w);
            if (!r && r.error().reason == NotFound::Reason::Budget) ++budget;
            if (r.has_value() != oracle(w)) {
                if (!bad++) first = w;
            }
        });
    }
    const bool pass = bad == 0 && budget == 0;
    std::string d = std::to_string(words) + " words, " + std::to_string(bad) + " disagreements, " +
                    std::to_string(budget) + " budget cuts";
    if (!first.empty()) d += ", first " + text::show_word(first);
    return {"abcd rejection soundness", pass, d};
}

inline Check branching_reproduction() {
    const Tsa a = fixtures::branching();
    auto tr = build_trace(a, "abcdefgh", fixtures::branching_run());
    if (!tr) return {"two-branch run reproduction", false, "fixture run does not replay"};
    const auto nu = *Address::parse("1.1");
    auto v = up_down_vector(a, *tr, nu);
    auto f = nu_factorisation(a, *tr, nu);
    auto h = history_array(a, *tr, nu);
    if (!v || !f || !h) return {"two-branch run reproduction", false, "analysis failed"};
    const std::string got = render(*v) + " " + render(*f) + " " + render(a, *h);
    const std::string expect = "(2,5,9,12) ab . c . de . f . gh ((c2,c3,c3,c6),(q2,q5,q4,q0))";
    return {"two-branch run reproduction", got == expect, got};
}

// Swapping u-factors between any two witnesses at vertices with equal history
// arrays gives accepted words.
inline Check single_swap_soundness(std::size_t m_max = 4) {
    const Tsa a = fixtures::abcd();
    std::vector<RunTrace> runs;
    for (std::size_t m = 0; m <= m_max; ++m) {
        auto tr = accepts(a, fixtures::abcd_word(m));
        if (!tr) return {"single swap soundness", false, "no witness for m=" + std::to_string(m)};
        runs.push_back(std::move(*tr));
    }
    std::size_t swaps = 0, rejected = 0, unreplayed = 0;
    std::string first;
    for (const auto& t1 : runs) {
        for (const auto& t2 : runs) {
            for (const auto& [n1, l1] : t1.final_configuration().ts.nodes()) {
                if (n1.is_root()) continue;
                auto h1 = history_array(a, t1, n1);
                if (!h1) continue;
                for (const auto& [n2, l2] : t2.final_configuration().ts.nodes()) {
                    if (n2.is_root()) continue;
                    auto h2 = history_array(a, t2, n2);
                    if (!h2 || !(*h1 == *h2)) continue;
                    auto rep = single_swap(a, t1, n1, t2, n2);
                    if (!rep) continue;
                    ++swaps;
                    if (!rep->spliced_trace) ++unreplayed;
                    if (!rep->accepted && !rejected++) first = rep->word;
                }
            }
        }
    }
    std::string d = std::to_string(swaps) + " swaps, " + std::to_string(rejected) + " rejected, " +
                    std::to_string(unreplayed) + " splices not replayable";
    if (!first.empty()) d += ", first rejected " + text::show_word(first);
    return {"single swap soundness", swaps > 0 && rejected == 0, d};
}

inline Check mcfg_fixtures(std::size_t bound = 12) {
    // Enumerating all of {a,b,c,d}^<=12 is too much; both languages only hold
    // words of the shape a^i b^j c^k d^l, so the oracle is asked about those.
    auto shaped = [&](const WordOracle& o) {
        std::set<std::string> out;
        for (std::size_t i = 0; i <= bound; ++i)
            for (std::size_t j = 0; i + j <= bound; ++j)
                for (std::size_t k = 0; i + j + k <= bound; ++k)
                    for (std::size_t l = 0; i + j + k + l <= bound; ++l) {
                        std::string w = std::string(i, 'a') + std::string(j, 'b') + std::string(k, 'c') + std::string(l, 'd');
                        if (o(w)) out.insert(w);
                    }
        return out;
    };
    const auto e21 = mcfg_enumerate(fixtures::eq_blocks(), bound);
    const auto e22 = mcfg_enumerate(fixtures::crossed(), bound);
    const bool ok21 = e21 == shaped(oracles::abcd());
    const bool ok22 = e22 == shaped(oracles::anbmcndm());
    return {"mcfg fixtures", ok21 && ok22,
            "eqblocks " + std::to_string(e21.size()) + (ok21 ? " ok" : " differs") + ", crossed " + std::to_string(e22.size()) +
                (ok22 ? " ok" : " differs")};
}

inline Check wpz_round_trip(std::size_t max_len = 8) {
    const Pda p = fixtures::wpz_pda();
    const auto conv = pda_to_tsa1(p);
    auto back = tsa1_to_pda(conv.tsa);
    if (!back) return {"wpz round trip", false, "converted machine is not a 1-TSA"};
    const auto oracle = oracles::wp_z();
    std::size_t words = 0, bad = 0, unrestricted = 0;
    std::string first;
    for (std::size_t n = 1; n <= max_len; ++n) {
        for_each_word("tT", n, [&](const std::string& w) {
            ++words;
            const bool x = pda_accepts(p, w).has_value();
            auto tr = accepts(conv.tsa, w);
            const bool y = tr.has_value();
            const bool z = pda_accepts(*back, w).has_value();
            const bool o = oracle(w);
            if (!(x == o && y == o && z == o) && !bad++) first = w;
            if (tr && !is_k_restricted(conv.tsa, *tr, 1)) ++unrestricted;
        });
    }
    std::string d = std::to_string(words) + " words, " + std::to_string(bad) + " disagreements, " +
                    std::to_string(unrestricted) + " witnesses not 1-restricted";
    if (!first.empty()) d += ", first " + first;
    return {"wpz round trip", bad == 0 && unrestricted == 0, d};
}

/// The rendered table of the 17-step run; golden files hold this text.
inline std::string wpz_trace_table() {
    const auto conv = fixtures::wpz_tsa();
    auto tr = build_trace(conv.tsa, "ttTtTT", fixtures::indices_of(conv.tsa, fixtures::wpz_ttTtTT_names()));
    return tr ? render_trace(conv.tsa, *tr) : std::string();
}

inline Check wpz_trace(std::optional<std::string> golden = std::nullopt) {
    const auto conv = fixtures::wpz_tsa();
    const auto names = fixtures::wpz_ttTtTT_names();
    auto idx = fixtures::indices_of(conv.tsa, names);
    if (idx.size() != names.size()) return {"wpz trace", false, "a named transition is missing"};
    auto tr = build_trace(conv.tsa, "ttTtTT", idx);
    if (!tr) return {"wpz trace", false, "sequence does not replay at step " + std::to_string(tr.error().step)};
    const auto& fin = tr->final_configuration();
    const bool accepting = is_accepting(conv.tsa, fin, 6, AcceptMode::Root);
    bool golden_ok = true;
    if (golden) golden_ok = *golden == render_trace(conv.tsa, *tr);
    std::string d = std::to_string(tr->size()) + " steps, " + (accepting ? "accepting" : "not accepting");
    if (golden) d += golden_ok ? ", golden table matches" : ", golden table differs";
    return {"wpz trace", accepting && tr->size() == 17 && golden_ok, d};
}

/// The table for the stuck prefix, followed by the stuck marker line.
inline std::string lookahead_trace_table() {
    const Tsa a = fixtures::lookahead();
    auto tr = build_trace(a, "ttTtTT", fixtures::indices_of(a, fixtures::lookahead_stuck_prefix_names()));
    if (!tr) return {};
    return render_trace(a, *tr) + render(diagnose(a, "ttTtTT", tr->final_configuration())) + "\n";
}

// The claimed simulation should reject ttTtTT, which is in the word problem, and
// the reference prefix gets stuck at the expected configuration.
inline Check lookahead_regression() {
    const Tsa a = fixtures::lookahead();
    auto tr = build_trace(a, "ttTtTT", fixtures::indices_of(a, fixtures::lookahead_stuck_prefix_names()));
    if (!tr) return {"lookahead regression", false, "reference prefix does not replay"};
    const auto info = diagnose(a, "ttTtTT", tr->final_configuration());
    const bool stuck_ok = info.state == "S" && info.pointer == *Address::parse("1.2") && info.label == "t" &&
                          info.next_letter == 't' && info.applicable == 0;
    auto r = accepts(a, "ttTtTT");
    const bool rejected = !r && r.error().reason == NotFound::Reason::Exhausted;
    std::string d = render(info) + "; search " +
                    (r ? "accepts via " + text::join(detail::names_of(a, *r), " ")
                       : std::string("rejects (") + to_string(r.error().reason) + ")");
    return {"lookahead regression", stuck_ok && rejected, d};
}

inline Check f2f2(std::size_t n_max = 3, std::size_t m_max = 3) {
    const auto rep = f2f2_experiment(n_max, m_max);
    std::string d = std::to_string(rep.words) + " words, " + std::to_string(rep.members) + " members, " +
                    std::to_string(rep.mismatches.size()) + " mismatches, " + std::to_string(rep.outside_T) +
                    " outside T, image " + (rep.image_ok() ? "exact" : "differs");
    return {"f2xf2 experiment", rep.ok(), d};
}

inline Check gap_families(std::size_t m_max = 50) {
    using F = oracles::UnaryFamily;
    const auto pow2 = gap_check(unary_lengths(F::Pow2, 20), m_max);
    const auto square = gap_check(unary_lengths(F::Square, 50), m_max);
    std::vector<std::uint64_t> constant;
    for (std::uint64_t i = 1; i <= 50; ++i) constant.push_back(3 * i);
    const auto flat = gap_check(constant, m_max);
    const bool ok = pow2.verdict == GapVerdict::Divergent && square.verdict == GapVerdict::Divergent &&
                    flat.verdict == GapVerdict::Inconclusive;
    return {"unary gap families", ok,
            std::string("pow2 ") + to_string(pow2.verdict) + ", square " + to_string(square.verdict) + ", constant " +
                to_string(flat.verdict)};
}

inline Check bound_formulas(std::size_t samples = 1000) {
    const auto b = substitution_bound(1, 1, 2, 2, 5, 1, 0);
    bool ok = b.n_lambda == 42 && b.n_mu == 42;
    std::mt19937_64 rng(20261015);
    std::uniform_int_distribution<std::uint64_t> dist(0, 30);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        std::array<std::uint64_t, 7> v{};
        for (auto& x : v) x = dist(rng);
        auto at = [](const std::array<std::uint64_t, 7>& t) {
            return substitution_bound(t[0], t[1], t[2], t[3], t[4], t[5], t[6]);
        };
        const auto base = at(v);
        if (v[0] == v[1] && base.n_lambda != base.n_mu) ++failures;
        if ((v[1] >= v[0]) != (base.n_lambda >= base.n_mu)) ++failures;
        for (std::size_t j = 0; j < v.size(); ++j) {
            auto w = v;
            ++w[j];
            if (at(w).n_lambda < base.n_lambda) ++failures;
        }
    }
    ok = ok && failures == 0;
    return {"bound formulas", ok,
            "N=" + std::to_string(b.n_lambda) + ", " + std::to_string(failures) + " property failures over " +
                std::to_string(samples) + " tuples"};
}

inline Check pumpability() {
    const Tsa star = fixtures::a_star();
    const std::size_t cq = std::max<std::size_t>(star.labels.size(), 1) * star.states.size();
    std::size_t found = 0;
    std::string d;
    bool ok = true;
    for (std::size_t n = 3; n <= 6; ++n) {
        auto tr = accepts(star, std::string(n, 'a'));
        if (!tr) return {"pumpability", false, "a* acceptor rejects a^" + std::to_string(n)};
        auto p = find_pumpable(star, *tr, 1);
        if (!p || p->y.empty() || p->y.size() > cq || !p->all_verified()) {
            ok = false;
            d += "no valid witness for a^" + std::to_string(n) + "; ";
            continue;
        }
        ++found;
    }
    const Tsa a = fixtures::abcd();
    std::size_t spurious = 0;
    for (std::size_t m = 0; m <= 3; ++m) {
        auto tr = accepts(a, fixtures::abcd_word(m));
        if (tr && find_pumpable(a, *tr, 1)) ++spurious;
    }
    ok = ok && spurious == 0;
    d += std::to_string(found) + " a* witnesses pumped, " + std::to_string(spurious) + " abcd witnesses pumpable";
    return {"pumpability", ok, d};
}

inline Check level1_abcd() {
    const Tsa a = fixtures::abcd();
    auto tr = build_trace(a, fixtures::abcd_word(2), fixtures::abcd_run(2));
    if (!tr) return {"level-1 arrays", false, "table run does not replay"};
    auto l1 = level1_arrays(a, *tr);
    if (!l1) return {"level-1 arrays", false, describe(l1.error())};
    const bool ok = l1->l == std::vector<std::size_t>{1, 7} && l1->m == std::vector<std::size_t>{5, 11} &&
                    l1->n == std::vector<std::uint32_t>{1, 1};
    UpDownVector v{l1->l, l1->m};
    return {"level-1 arrays", ok, "columns " + render(v)};
}

inline Check sm(std::size_t m_max = 2, std::size_t n_max = 2) {
    bool ok = true;
    std::string d;
    for (std::size_t m = 1; m <= m_max; ++m) {
        const auto rep = sm_experiment(m, n_max);
        ok = ok && rep.ok();
        d += "m=" + std::to_string(m) + (rep.ok() ? " ok; " : " fails; ");
    }
    return {"S_m pumping", ok, d};
}

inline Check ambm(std::size_t m_max = 4, std::size_t n = 3) {
    const auto rep = ambm_experiment(m_max, n);
    return {"(a^m b^m)^n factor types", rep.ok(), rep.ok() ? "all factors typed 0 or m" : "violations found"};
}

/// The twelve acceptance criteria in order.
inline std::vector<std::function<Check()>> criteria(std::optional<std::string> wpz_golden = std::nullopt) {
    return {
        [] { return abcd_reproduction(); },
        [] { return abcd_rejection(); },
        [] { return branching_reproduction(); },
        [] { return single_swap_soundness(); },
        [] { return mcfg_fixtures(); },
        [] { return wpz_round_trip(); },
        [g = std::move(wpz_golden)] { return wpz_trace(g); },
        [] { return lookahead_regression(); },
        [] { return f2f2(); },
        [] { return gap_families(); },
        [] { return bound_formulas(); },
        [] { return pumpability(); },
    };
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"abcd", "wpz", "lookahead", "f2f2", "gaps", "sm", "ambm", "swap", "pump", "level1"};
    return names;
}

inline std::optional<SuiteResult> run_suite(std::string_view name) {
    SuiteResult r{std::string(name), {}};
    if (name == "abcd") r.checks = {abcd_reproduction(), abcd_rejection(), mcfg_fixtures()};
    else if (name == "wpz") r.checks = {wpz_round_trip(), wpz_trace()};
    else if (name == "lookahead") r.checks = {lookahead_regression()};
    else if (name == "f2f2") r.checks = {f2f2()};
    else if (name == "gaps") r.checks = {gap_families()};
    else if (name == "sm") r.checks = {sm()};
    else if (name == "ambm") r.checks = {ambm()};
    else if (name == "swap") r.checks = {branching_reproduction(), single_swap_soundness()};
    else if (name == "pump") r.checks = {pumpability(), bound_formulas()};
    else if (name == "level1") r.checks = {level1_abcd()};
    else return std::nullopt;
    return r;
}

}  // namespace tsalab::suites

#endif  // TSALAB_SUITES_HPP
