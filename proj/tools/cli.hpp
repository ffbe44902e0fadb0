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

#ifndef TSALAB_TOOLS_CLI_HPP
#define TSALAB_TOOLS_CLI_HPP

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tsalab/tsalab.hpp"

// Command-line front end. Every command is a thin adapter over the library.
// Exit codes: 0 success or accept, 1 reject or failed check, 2 budget cut or
// bad input.
namespace tsalab::cli {

enum Exit : int { kOk = 0, kNo = 1, kBudget = 2, kUsage = 2 };

class Printer {
public:
    Printer(std::ostream& os, bool porcelain) : os_(os), porcelain_(porcelain) {}

    void kv(const std::string& key, const std::string& value) {
        os_ << key << (porcelain_ ? "=" : ": ") << value << "\n";
    }
    void block(const std::string& text) { os_ << text; }
    bool porcelain() const { return porcelain_; }

private:
    std::ostream& os_;
    bool porcelain_;
};

struct InputError {
    std::string message;
};

inline Expected<std::string, InputError> read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return unexpected(InputError{"cannot open " + path});
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// A TSA file, or a built-in machine: @abcd, @branch, @astar, @wpz, @lookahead.
inline Expected<Tsa, InputError> load_tsa(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') {
        const std::string n = spec.substr(1);
        if (n == "abcd") return fixtures::abcd();
        if (n == "branch") return fixtures::branching();
        if (n == "astar") return fixtures::a_star();
        if (n == "wpz") return fixtures::wpz_tsa().tsa;
        if (n == "lookahead") return fixtures::lookahead();
        return unexpected(InputError{"unknown built-in machine " + spec});
    }
    auto src = read_file(spec);
    if (!src) return unexpected(src.error());
    auto a = parse_tsa(*src);
    if (!a) return unexpected(InputError{spec + ": " + describe(a.error())});
    return *a;
}

inline Expected<Pda, InputError> load_pda(const std::string& spec) {
    if (spec == "@wpz") return fixtures::wpz_pda();
    auto src = read_file(spec);
    if (!src) return unexpected(src.error());
    auto p = parse_pda(*src);
    if (!p) return unexpected(InputError{spec + ": " + describe(p.error())});
    return *p;
}

inline Expected<Mcfg, InputError> load_mcfg(const std::string& spec) {
    if (spec == "@eqblocks") return fixtures::eq_blocks();
    if (spec == "@crossed") return fixtures::crossed();
    auto src = read_file(spec);
    if (!src) return unexpected(src.error());
    auto g = parse_mcfg(*src);
    if (!g) return unexpected(InputError{spec + ": " + describe(g.error())});
    return *g;
}

/// Search flags shared by every command that runs a machine.
struct BudgetFlags {
    std::optional<std::size_t> max_steps, max_vertices;
    std::size_t max_configs = SearchOptions{}.max_configs;
    std::optional<std::uint32_t> k;
    std::string accept = "root";
    bool proper = false;

    void attach(CLI::App* app) {
        app->add_option("--max-steps", max_steps, "Run length budget (default 64(|w|+1)|Q|, or TSALAB_MAX_STEPS)");
        app->add_option("--max-vertices", max_vertices, "Tree size budget (default 16(|w|+1))");
        app->add_option("--max-configs", max_configs, "Distinct configurations explored");
        app->add_option("-k,--restrict", k, "Only k-restricted runs");
        app->add_option("--accept", accept, "root or any")->check(CLI::IsMember({"root", "any"}));
        app->add_flag("--proper", proper, "Only proper runs");
    }

    SearchOptions options() const {
        SearchOptions o;
        o.k = k;
        o.accept_mode = accept == "any" ? AcceptMode::Any : AcceptMode::Root;
        o.max_steps = max_steps;
        if (!o.max_steps) {
            if (const char* env = std::getenv("TSALAB_MAX_STEPS")) {
                if (auto v = text::parse_uint(env)) o.max_steps = static_cast<std::size_t>(*v);
            }
        }
        o.max_vertices = max_vertices;
        o.max_configs = max_configs;
        o.proper = proper;
        return o;
    }
};

inline std::string describe_budgets(const SearchOptions& o, const Tsa& a, std::size_t word_len) {
    return "max_steps=" + std::to_string(o.max_steps.value_or(default_max_steps(a, word_len))) +
           " max_vertices=" + std::to_string(o.max_vertices.value_or(default_max_vertices(word_len))) +
           " max_configs=" + std::to_string(o.max_configs) + " k=" + (o.k ? std::to_string(*o.k) : "none") +
           " accept=" + (o.accept_mode == AcceptMode::Root ? "root" : "any") + " proper=" + (o.proper ? "yes" : "no");
}

inline std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

inline std::string sequence_of(const Tsa& a, const RunTrace& tr) {
    std::vector<std::string> names;
    for (auto i : tr.transitions()) names.push_back(a.delta[i].name);
    return names.empty() ? std::string("eps") : text::join(names, " ");
}

/// A run either replayed from named transitions or found by search.
struct TraceSource {
    std::string sequence;
    BudgetFlags budgets;

    void attach(CLI::App* app) {
        app->add_option("--sequence", sequence, "Replay these transitions (comma separated names) instead of searching");
        budgets.attach(app);
    }
};

inline Expected<RunTrace, std::string> obtain_trace(const Tsa& a, const std::string& word, const TraceSource& src,
                                                    SearchOptions opts) {
    if (!src.sequence.empty()) {
        auto names = split_names(src.sequence);
        auto idx = fixtures::indices_of(a, names);
        if (idx.size() != names.size()) return unexpected(std::string("unknown transition name in sequence"));
        auto tr = build_trace(a, word, idx);
        if (!tr) return unexpected("sequence fails at step " + std::to_string(tr.error().step));
        return *tr;
    }
    auto tr = accepts(a, word, opts);
    if (!tr) return unexpected(std::string("no accepting run (") + to_string(tr.error().reason) + ")");
    return *tr;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tree stack automata, multiple context-free grammars and run analysis", "tsalab"};
    app.require_subcommand(1);
    bool porcelain = false;
    app.add_flag("--porcelain", porcelain, "Stable key=value output for scripts");

    int code = kOk;
    std::string echo;
    for (const auto& s : args) echo += (echo.empty() ? "" : " ") + s;
    auto printer = [&] {
        Printer p(out, porcelain);
        p.kv("command", echo);
        return p;
    };
    auto fail_input = [&](const std::string& m) {
        err << "error: " << m << "\n";
        code = kUsage;
    };

    // run / trace
    std::string tsa_spec, word, vertex;
    TraceSource tsrc;
    auto* run = app.add_subcommand("run", "Decide whether a machine accepts a word");
    run->add_option("tsa", tsa_spec, "TSA file or @fixture")->required();
    run->add_option("word", word, "Input word; x' is the inverse of x")->required();
    tsrc.budgets.attach(run);
    run->callback([&] {
        auto a = load_tsa(tsa_spec);
        if (!a) return fail_input(a.error().message);
        const std::string w = text::expand_word(word);
        const auto opts = tsrc.budgets.options();
        auto p = printer();
        p.kv("budgets", describe_budgets(opts, *a, w.size()));
        auto r = accepts(*a, w, opts);
        if (r) {
            p.kv("result", "accept");
            p.kv("steps", std::to_string(r->size()));
            p.kv("sequence", sequence_of(*a, *r));
            code = kOk;
        } else {
            p.kv("result", r.error().reason == NotFound::Reason::Exhausted ? "reject" : "unknown");
            p.kv("reason", to_string(r.error().reason));
            p.kv("explored", std::to_string(r.error().explored));
            code = r.error().reason == NotFound::Reason::Exhausted ? kNo : kBudget;
        }
    });

    auto* trace = app.add_subcommand("trace", "Print a run as a Transition | State | Tree stack | Input read table");
    trace->add_option("tsa", tsa_spec, "TSA file or @fixture")->required();
    trace->add_option("word", word, "Input word")->required();
    std::string prefix;
    trace->add_option("--prefix", prefix, "Replay these transitions and report where the run stops");
    tsrc.attach(trace);
    trace->callback([&] {
        auto a = load_tsa(tsa_spec);
        if (!a) return fail_input(a.error().message);
        const std::string w = text::expand_word(word);
        const auto style = porcelain ? TableStyle::Porcelain : TableStyle::Pretty;
        if (!prefix.empty()) {
            auto names = split_names(prefix);
            auto idx = fixtures::indices_of(*a, names);
            if (idx.size() != names.size()) return fail_input("unknown transition name in prefix");
            auto tr = build_trace(*a, w, idx);
            if (!tr) return fail_input("prefix fails at step " + std::to_string(tr.error().step));
            out << render_trace(*a, *tr, style);
            const auto& fin = tr->final_configuration();
            if (is_accepting(*a, fin, w.size(), tsrc.budgets.options().accept_mode)) {
                code = kOk;
                return;
            }
            auto info = diagnose(*a, w, fin);
            if (info.applicable == 0) {
                out << render(info) << "\n";
                code = kNo;
            } else {
                code = kOk;
            }
            return;
        }
        const auto opts = tsrc.budgets.options();
        auto tr = obtain_trace(*a, w, tsrc, opts);
        if (!tr) {
            err << "error: " << tr.error() << "\n";
            code = tr.error().find("budget") != std::string::npos ? kBudget : kNo;
            return;
        }
        out << render_trace(*a, *tr, style);
    });

    // enumerate
    std::size_t max_len = 6;
    BudgetFlags ebudget;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List accepted words up to a length");
    enumerate_cmd->add_option("tsa", tsa_spec, "TSA file or @fixture")->required();
    enumerate_cmd->add_option("--max-len", max_len, "Longest word");
    ebudget.attach(enumerate_cmd);
    enumerate_cmd->callback([&] {
        auto a = load_tsa(tsa_spec);
        if (!a) return fail_input(a.error().message);
        const auto opts = ebudget.options();
        auto e = enumerate(*a, max_len, opts);
        auto p = printer();
        p.kv("budgets", describe_budgets(opts, *a, max_len));
        p.kv("count", std::to_string(e.words.size()));
        for (const auto& w : e.words) p.kv("word", text::show_word(w));
        for (const auto& w : e.budget_hits) p.kv("budget_hit", text::show_word(w));
        code = e.budget_hits.empty() ? kOk : kBudget;
    });

    // standardise / degree
    auto* stdz = app.add_subcommand("standardise", "Print the standardised machine");
    stdz->add_option("tsa", tsa_spec, "TSA file or @fixture")->required();
    stdz->callback([&] {
        auto a = load_tsa(tsa_spec);
        if (!a) return fail_input(a.error().message);
        auto s = standardise(*a);
        out << to_text(s);
        code = kOk;
    });

    auto* deg = app.add_subcommand("degree", "Print the child indices used and the degree");
    deg->add_option("tsa", tsa_spec, "TSA file or @fixture")->required();
    deg->callback([&] {
        auto a = load_tsa(tsa_spec);
        if (!a) return fail_input(a.error().message);
        auto d = degree(*a);
        std::vector<std::string> idx;
        for (auto n : d.delta_set) idx.push_back(std::to_string(n));
        auto p = printer();
        p.kv("indices", idx.empty() ? "none" : text::join(idx, " "));
        p.kv("degree", std::to_string(d.value()));
        p.kv("standardised", is_standardised(*a) ? "yes" : "no");
        code = kOk;
    });

    // mcfg
    std::string mcfg_spec;
    std::size_t bound = 12;
    auto* mcfg = app.add_subcommand("mcfg", "Multiple context-free grammars");
    mcfg->require_subcommand(1);
    auto* mcfg_enum = mcfg->add_subcommand("enumerate", "Words up to a length");
    mcfg_enum->add_option("grammar", mcfg_spec, "MCFG file, @eqblocks or @crossed")->required();
    mcfg_enum->add_option("--bound", bound, "Longest word");
    mcfg_enum->callback([&] {
        auto g = load_mcfg(mcfg_spec);
        if (!g) return fail_input(g.error().message);
        auto words = mcfg_enumerate(*g, bound);
        auto p = printer();
        p.kv("count", std::to_string(words.size()));
        for (const auto& w : words) p.kv("word", text::show_word(w));
        code = kOk;
    });
    auto* mcfg_member_cmd = mcfg->add_subcommand("member", "Membership test");
    mcfg_member_cmd->add_option("grammar", mcfg_spec, "MCFG file")->required();
    mcfg_member_cmd->add_option("word", word, "Word")->required();
    mcfg_member_cmd->callback([&] {
        auto g = load_mcfg(mcfg_spec);
        if (!g) return fail_input(g.error().message);
        const bool m = mcfg_member(*g, word == "eps" ? std::string() : word);
        printer().kv("result", m ? "member" : "not member");
        code = m ? kOk : kNo;
    });
    auto* mcfg_empty = mcfg->add_subcommand("empty", "Emptiness by productive nonterminals");
    mcfg_empty->add_option("grammar", mcfg_spec, "MCFG file")->required();
    mcfg_empty->callback([&] {
        auto g = load_mcfg(mcfg_spec);
        if (!g) return fail_input(g.error().message);
        const bool e = mcfg_is_empty(*g);
        auto p = printer();
        p.kv("result", e ? "empty" : "nonempty");
        for (const auto& [nt, b] : witness_bounds(*g)) p.kv("bound " + nt, std::to_string(b));
        code = e ? kNo : kOk;
    });

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Run analysis at a vertex or across the root");
    analyze->require_subcommand(1);
    auto vertex_command = [&](const std::string& name, const std::string& help,
                              std::function<void(const Tsa&, const RunTrace&, const Address&, Printer&)> body) {
        auto* c = analyze->add_subcommand(name, help);
        c->add_option("tsa", tsa_spec, "TSA file or @fixture")->required();
        c->add_option("word", word, "Accepted word")->required();
        c->add_option("vertex", vertex, "Vertex address such as 1.1")->required();
        tsrc.attach(c);
        c->callback([&, body] {
            auto a = load_tsa(tsa_spec);
            if (!a) return fail_input(a.error().message);
            auto nu = Address::parse(vertex);
            if (!nu) return fail_input("bad vertex " + vertex);
            auto tr = obtain_trace(*a, text::expand_word(word), tsrc, tsrc.budgets.options());
            if (!tr) return fail_input(tr.error());
            auto p = printer();
            p.kv("sequence", sequence_of(*a, *tr));
            body(*a, *tr, *nu, p);
        });
    };
    vertex_command("updown", "Up-down vector", [&](const Tsa& a, const RunTrace& tr, const Address& nu, Printer& p) {
        auto v = up_down_vector(a, tr, nu);
        if (!v) return fail_input(describe(v.error()));
        p.kv("updown", render(*v));
        code = kOk;
    });
    vertex_command("factorise", "Factorisation at a vertex",
                   [&](const Tsa& a, const RunTrace& tr, const Address& nu, Printer& p) {
                       auto f = nu_factorisation(a, tr, nu);
                       if (!f) return fail_input(describe(f.error()));
                       p.kv("factorisation", render(*f));
                       code = kOk;
                   });
    vertex_command("history", "History array", [&](const Tsa& a, const RunTrace& tr, const Address& nu, Printer& p) {
        auto h = history_array(a, tr, nu);
        if (!h) return fail_input(describe(h.error()));
        p.kv("history", render(a, *h));
        code = kOk;
    });

    auto* level1 = analyze->add_subcommand("level1", "Level-1 arrays of a proper run ending at the root");
    level1->add_option("tsa", tsa_spec, "TSA file or @fixture")->required();
    level1->add_option("word", word, "Accepted word")->required();
    tsrc.attach(level1);
    level1->callback([&] {
        auto a = load_tsa(tsa_spec);
        if (!a) return fail_input(a.error().message);
        auto opts = tsrc.budgets.options();
        opts.proper = true;
        auto tr = obtain_trace(*a, text::expand_word(word), tsrc, opts);
        if (!tr) return fail_input(tr.error());
        auto l1 = level1_arrays(*a, *tr);
        if (!l1) return fail_input(describe(l1.error()));
        auto p = printer();
        p.kv("sequence", sequence_of(*a, *tr));
        std::vector<std::string> ns, tags;
        for (auto n : l1->n) ns.push_back(std::to_string(n));
        for (auto t : l1->tags) tags.push_back(std::to_string(t));
        p.kv("columns", render(UpDownVector{l1->l, l1->m}));
        p.kv("children", "(" + text::join(ns, ",") + ")");
        p.kv("factorisation", render(l1->factorisation));
        p.kv("history", render(*a, l1->history));
        p.kv("tags", "(" + text::join(tags, ",") + ")");
        code = kOk;
    });

    std::vector<std::string> words;
    BudgetFlags ubudget;
    auto* upsets = analyze->add_subcommand("upsets", "Collect u-tuples per history array over proper witnesses");
    upsets->add_option("tsa", tsa_spec, "TSA file or @fixture")->required();
    upsets->add_option("words", words, "Accepted words")->required();
    ubudget.attach(upsets);
    upsets->callback([&] {
        auto a = load_tsa(tsa_spec);
        if (!a) return fail_input(a.error().message);
        std::vector<std::string> ws;
        for (const auto& w : words) ws.push_back(w == "eps" ? std::string() : text::expand_word(w));
        auto u = collect_upsets(*a, ws, ubudget.options());
        auto p = printer();
        for (const auto& [h, tuples] : u.entries) {
            for (const auto& [t, prov] : tuples) {
                std::vector<std::string> parts;
                for (const auto& s : t) parts.push_back(text::show_word(s));
                p.kv(render(*a, h), "(" + text::join(parts, ",") + ") x" + std::to_string(prov.size()));
            }
        }
        for (const auto& [w, r] : u.failures) p.kv("failure", text::show_word(w) + " " + to_string(r));
        code = u.failures.empty() ? kOk : kBudget;
    });

    std::string word2, vertex2;
    auto* swap = analyze->add_subcommand("swap", "Swap u-factors between two witnesses");
    swap->add_option("tsa", tsa_spec, "TSA file or @fixture")->required();
    swap->add_option("word1", word, "First word")->required();
    swap->add_option("vertex1", vertex, "Vertex in the first run")->required();
    swap->add_option("word2", word2, "Second word")->required();
    swap->add_option("vertex2", vertex2, "Vertex in the second run")->required();
    tsrc.budgets.attach(swap);
    swap->callback([&] {
        auto a = load_tsa(tsa_spec);
        if (!a) return fail_input(a.error().message);
        const auto opts = tsrc.budgets.options();
        auto t1 = accepts(*a, text::expand_word(word), opts);
        auto t2 = accepts(*a, text::expand_word(word2), opts);
        auto n1 = Address::parse(vertex);
        auto n2 = Address::parse(vertex2);
        if (!t1 || !t2) return fail_input("a word has no accepting run");
        if (!n1 || !n2) return fail_input("bad vertex");
        auto rep = single_swap(*a, *t1, *n1, *t2, *n2, opts);
        if (!rep) return fail_input(describe(rep.error()));
        auto p = printer();
        p.kv("word", text::show_word(rep->word));
        p.kv("splice", rep->spliced_trace ? "replays" : "fails at step " + std::to_string(*rep->splice_failure));
        p.kv("result", rep->accepted ? "accept" : "reject");
        code = rep->accepted ? kOk : kNo;
    });

    std::size_t pump_m = 1;
    auto* pump = analyze->add_subcommand("pump", "Look for a pumpable stationary block");
    pump->add_option("tsa", tsa_spec, "TSA file or @fixture")->required();
    pump->add_option("word", word, "Accepted word")->required();
    pump->add_option("-m", pump_m, "Lower bound on |y|");
    tsrc.attach(pump);
    pump->callback([&] {
        auto a = load_tsa(tsa_spec);
        if (!a) return fail_input(a.error().message);
        auto tr = obtain_trace(*a, text::expand_word(word), tsrc, tsrc.budgets.options());
        if (!tr) return fail_input(tr.error());
        auto pw = find_pumpable(*a, *tr, pump_m, tsrc.budgets.options());
        auto p = printer();
        if (!pw) {
            p.kv("result", "none");
            code = kNo;
            return;
        }
        p.kv("result", "pumpable");
        p.kv("x", text::show_word(pw->x));
        p.kv("y", text::show_word(pw->y));
        p.kv("z", text::show_word(pw->z));
        p.kv("vertex", pw->vertex.to_string());
        for (const auto& [n, ok] : pw->verified) p.kv("x y^" + std::to_string(n) + " z", ok ? "accept" : "reject");
        code = pw->all_verified() ? kOk : kNo;
    });

    std::uint64_t mu = 1, lambda = 1, bk = 1, bc = 1, bq = 1, bd = 0, bm = 0;
    std::string marks;
    auto* bounds = analyze->add_subcommand("bounds", "Substitution bound, and per-vertex letter bounds of a run");
    bounds->add_option("tsa", tsa_spec, "TSA file or @fixture");
    bounds->add_option("word", word, "Accepted word");
    bounds->add_option("--mu", mu, "mu");
    bounds->add_option("--lambda", lambda, "lambda");
    bounds->add_option("--K", bk, "k for the formula");
    bounds->add_option("--C", bc, "|C| for the formula");
    bounds->add_option("--Q", bq, "|Q| for the formula");
    bounds->add_option("--D", bd, "Degree for the formula");
    bounds->add_option("--M", bm, "Estimate of the pumping constant");
    bounds->add_option("--marks", marks, "Marked positions (0-based, comma separated)");
    tsrc.attach(bounds);
    bounds->callback([&] {
        auto p = printer();
        auto nb = substitution_bound(mu, lambda, bk, bc, bq, bd, bm);
        p.kv("N_lambda", std::to_string(nb.n_lambda));
        p.kv("N_mu", std::to_string(nb.n_mu));
        code = kOk;
        if (tsa_spec.empty()) return;
        auto a = load_tsa(tsa_spec);
        if (!a) return fail_input(a.error().message);
        const std::string w = text::expand_word(word);
        auto tr = obtain_trace(*a, w, tsrc, tsrc.budgets.options());
        if (!tr) return fail_input(tr.error());
        std::optional<MarkedWord> mw;
        if (!marks.empty()) {
            mw = MarkedWord{w, {}};
            for (const auto& s : split_names(marks))
                if (auto v = text::parse_uint(s)) mw->marks.insert(static_cast<std::size_t>(*v));
        }
        auto rep = check_atv_bounds(*a, *tr, mu, mw, lambda);
        if (!rep) {
            p.kv("result", describe(rep.error()));
            code = kNo;
            return;
        }
        for (const auto& v : rep->vertices) {
            std::string s = std::string(to_string(v.role)) + " letters=" + std::to_string(v.letters) +
                            " bound=" + std::to_string(v.bound) + (v.ok ? " ok" : " exceeded");
            if (v.singular) s += *v.singular ? " singular" : "";
            p.kv("vertex " + v.vertex.to_string(), s);
        }
        code = rep->all_ok() ? kOk : kNo;
    });

    // convert
    std::string machine;
    bool no_root_return = false;
    auto* convert = app.add_subcommand("convert", "Pushdown automata and 1-TSA");
    convert->require_subcommand(1);
    auto* p2t = convert->add_subcommand("pda2tsa", "Simulate a PDA by a 1-TSA");
    p2t->add_option("pda", machine, "PDA file or @wpz")->required();
    p2t->add_flag("--no-root-return", no_root_return, "Accept wherever the pointer is");
    p2t->callback([&] {
        auto p = load_pda(machine);
        if (!p) return fail_input(p.error().message);
        out << to_text(pda_to_tsa1(*p, no_root_return ? RootReturn::None : RootReturn::Auto).tsa);
        code = kOk;
    });
    auto* t2p = convert->add_subcommand("tsa2pda", "Turn a 1-TSA into a PDA");
    t2p->add_option("tsa", machine, "TSA file or @fixture")->required();
    t2p->callback([&] {
        auto a = load_tsa(machine);
        if (!a) return fail_input(a.error().message);
        auto p = tsa1_to_pda(*a);
        if (!p) {
            err << "error: transition " << a->delta[p.error().transition].name << " moves up; not a 1-TSA\n";
            code = kNo;
            return;
        }
        out << to_text(*p);
        code = kOk;
    });

    // fixtures
    auto* fx = app.add_subcommand("fixtures", "Print a reference machine and its reference trace");
    fx->require_subcommand(1);
    fx->add_subcommand("abcd", "a^m b^m c^m d^m")->callback([&] {
        const Tsa a = fixtures::abcd();
        out << to_text(a) << "\n";
        auto tr = build_trace(a, fixtures::abcd_word(2), fixtures::abcd_run(2));
        out << render_trace(a, *tr, porcelain ? TableStyle::Porcelain : TableStyle::Pretty);
        code = kOk;
    });
    fx->add_subcommand("wpz", "Word problem of Z, as PDA and converted 1-TSA")->callback([&] {
        out << to_text(fixtures::wpz_pda()) << "\n" << to_text(fixtures::wpz_tsa().tsa) << "\n";
        out << suites::wpz_trace_table();
        code = kOk;
    });
    fx->add_subcommand("lookahead", "The one-lookahead attempt at the word problem of Z")->callback([&] {
        out << to_text(fixtures::lookahead()) << "\n" << suites::lookahead_trace_table();
        code = kOk;
    });

    // experiments
    auto* exp = app.add_subcommand("experiment", "Word-level experiments");
    exp->require_subcommand(1);
    std::size_t n_max = 3, m_max = 3;
    auto* f2 = exp->add_subcommand("f2f2", "Word problem of F2 x F2 cut down by T");
    f2->add_option("--n-max", n_max, "Most blocks");
    f2->add_option("--m-max", m_max, "Largest exponent");
    f2->callback([&] {
        auto rep = f2f2_experiment(n_max, m_max);
        auto p = printer();
        p.kv("words", std::to_string(rep.words));
        p.kv("members", std::to_string(rep.members));
        p.kv("outside_T", std::to_string(rep.outside_T));
        p.kv("mismatches", std::to_string(rep.mismatches.size()));
        for (const auto& w : rep.mismatches) p.kv("mismatch", w);
        p.kv("image", rep.image_ok() ? "exact" : "differs");
        for (const auto& w : rep.image) p.kv("psi", w);
        code = rep.ok() ? kOk : kNo;
    });
    std::string family = "pow2";
    std::size_t gn = 30, gm = 50;
    auto* gaps = exp->add_subcommand("gaps", "Gap check on a unary family");
    gaps->add_option("--family", family, "pow2, square, nlogn or alpha:<x>");
    gaps->add_option("--n", gn, "Largest n");
    gaps->add_option("--m-max", gm, "Largest gap bound");
    gaps->callback([&] {
        using F = oracles::UnaryFamily;
        F f = F::Pow2;
        double alpha = 1.5;
        if (family == "pow2") f = F::Pow2;
        else if (family == "square") f = F::Square;
        else if (family == "nlogn") f = F::NLogN;
        else if (family.rfind("alpha:", 0) == 0) {
            f = F::Alpha;
            try {
                alpha = std::stod(family.substr(6));
            } catch (const std::exception&) {
                return fail_input("bad alpha in " + family);
            }
        } else {
            return fail_input("unknown family " + family);
        }
        if (f == F::Pow2 && gn > 62) return fail_input("pow2 supports n <= 62");
        auto lengths = unary_lengths(f, gn, alpha);
        auto rep = gap_check(lengths, gm);
        auto p = printer();
        p.kv("lengths", std::to_string(lengths.size()));
        for (std::size_t m = 0; m < rep.threshold.size(); ++m)
            p.kv("N_" + std::to_string(m), rep.threshold[m] ? std::to_string(*rep.threshold[m]) : "none");
        p.kv("verdict", to_string(rep.verdict));
        code = rep.verdict == GapVerdict::Divergent ? kOk : kNo;
    });
    std::size_t sm_m = 1, sm_n = 2;
    auto* smc = exp->add_subcommand("sm", "Deletion and weak pumping on a_1^n ... a_(2m+1)^n");
    smc->add_option("--m", sm_m, "m");
    smc->add_option("--n-max", sm_n, "Largest n");
    smc->callback([&] {
        auto rep = sm_experiment(sm_m, sm_n);
        auto p = printer();
        for (const auto& r : rep.rows) {
            p.kv("n=" + std::to_string(r.n),
                 "deletions_in_language=" + std::to_string(r.deletions_in_language) + "/" + std::to_string(r.deletions) +
                     " pump_m=" + (r.with_m.found ? "found" : "none") + "/" + std::to_string(r.with_m.tried) +
                     " pump_m+1=" + (r.with_m_plus_1.found ? "found" : "none") + "/" +
                     std::to_string(r.with_m_plus_1.tried));
        }
        code = rep.ok() ? kOk : kNo;
    });
    std::size_t am_m = 4, am_n = 3;
    auto* amc = exp->add_subcommand("ambm", "Factor types and deletions on (a^m b^m)^n");
    amc->add_option("--m-max", am_m, "Largest m");
    amc->add_option("--n", am_n, "n");
    amc->callback([&] {
        auto rep = ambm_experiment(am_m, am_n);
        auto p = printer();
        for (const auto& r : rep.rows) {
            p.kv("m=" + std::to_string(r.m),
                 "untyped=" + std::to_string(r.untyped_factors) + "/" + std::to_string(r.factors) +
                     " deletions_in_language=" + std::to_string(r.deletions_in_language) + "/" +
                     std::to_string(r.deletions) + " parikh=" + (r.parikh_ok ? "ok" : "bad") +
                     " single_a_untyped=" + std::to_string(r.single_a_multi_untyped) + "," +
                     std::to_string(r.single_a_one_untyped));
        }
        code = rep.ok() ? kOk : kNo;
    });

    // rational
    std::string wp_spec = "@wpz", regex;
    std::size_t budget = 12;
    BudgetFlags rbudget;
    auto* rational = app.add_subcommand("rational", "Bounded search for w in a rational subset of a group");
    rational->add_option("--wp", wp_spec, "Machine accepting the word problem");
    rational->add_option("--regex", regex, "The rational subset")->required();
    rational->add_option("--word", word, "Group element as a word")->required();
    rational->add_option("--budget", budget, "Longest product word searched");
    rbudget.attach(rational);
    rational->callback([&] {
        auto a = load_tsa(wp_spec);
        if (!a) return fail_input(a.error().message);
        auto f = regex_to_fsa(regex);
        if (!f) return fail_input("regex: " + f.error().message + " at " + std::to_string(f.error().pos));
        const std::string w = word == "eps" ? std::string() : text::expand_word(word);
        auto r = rational_membership(*a, *f, w, budget, rbudget.options());
        if (!r) return fail_input("letters " + r.error().extra + " are not in the machine alphabet");
        auto p = printer();
        p.kv("product", std::to_string(r->product_states) + " states, " + std::to_string(r->product_transitions) +
                            " transitions");
        if (r->yes) {
            p.kv("result", "yes");
            p.kv("witness", text::show_word(r->witness->word));
            code = kOk;
        } else {
            p.kv("result", "unknown");
            p.kv("reason", r->failure ? to_string(r->failure->reason) : "budget");
            code = kBudget;
        }
    });

    // suite
    std::string suite_name;
    auto* suite = app.add_subcommand("suite", "Run a bundle of checks");
    suite->add_option("name", suite_name, "abcd, wpz, lookahead, f2f2, gaps, sm, ambm, swap, pump or level1")->required();
    suite->callback([&] {
        auto r = suites::run_suite(suite_name);
        if (!r) return fail_input("unknown suite " + suite_name);
        auto p = printer();
        for (const auto& c : r->checks) p.kv(std::string(c.pass ? "PASS " : "FAIL ") + c.name, c.detail);
        code = r->ok() ? kOk : kNo;
    });

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::Error& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kUsage;
    }
    return code;
}

}  // namespace tsalab::cli

#endif  // TSALAB_TOOLS_CLI_HPP
