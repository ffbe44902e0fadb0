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

#ifndef TSALAB_REPORT_HPP
#define TSALAB_REPORT_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsalab/run.hpp"
#include "tsalab/tsa.hpp"

namespace tsalab {

struct TraceRow {
    std::string transition, state, tree, input;
};

/// One row for the initial configuration, then one per step.
inline std::vector<TraceRow> trace_rows(const Tsa& a, const RunTrace& tr) {
    std::vector<TraceRow> rows;
    rows.push_back({"", a.state_name(tr.initial.state), render(tr.initial.ts, a.labels), ""});
    for (const auto& s : tr.steps) {
        const auto& t = a.delta[s.transition];
        rows.push_back({t.name, a.state_name(s.cfg.state), render(s.cfg.ts, a.labels), render_input(t.input)});
    }
    return rows;
}

/// Why a configuration cannot move on.
struct StuckInfo {
    std::string state;
    Address pointer;
    std::string label;
    std::optional<char> next_letter;
    std::size_t applicable = 0;  // transitions enabled here; 0 means stuck
};

inline StuckInfo diagnose(const Tsa& a, std::string_view w, const Configuration& cfg) {
    StuckInfo s{a.state_name(cfg.state), cfg.ts.pointer(), a.label_name(cfg.ts.pointer_label()), std::nullopt, 0};
    if (cfg.pos < w.size()) s.next_letter = w[cfg.pos];
    for (const auto& t : a.delta)
        if (step(a, w, cfg, t)) ++s.applicable;
    return s;
}

inline std::string render(const StuckInfo& s) {
    return "STUCK state=" + s.state + " pointer=" + s.pointer.to_string() + " label=" + s.label +
           " next=" + (s.next_letter ? std::string(1, *s.next_letter) : std::string("end")) +
           " applicable=" + std::to_string(s.applicable);
}

enum class TableStyle { Pretty, Porcelain };

/// Transition | State | Tree stack | Input read. Porcelain output is tab separated
/// with no header decoration.
inline std::string render_table(const std::vector<TraceRow>& rows, TableStyle style = TableStyle::Pretty) {
    const std::vector<std::string> head{"Transition", "State", "Tree stack", "Input read"};
    auto cells = [](const TraceRow& r) { return std::vector<std::string>{r.transition, r.state, r.tree, r.input}; };
    std::string out;
    if (style == TableStyle::Porcelain) {
        for (const auto& r : rows) {
            auto c = cells(r);
            out += c[0] + "\t" + c[1] + "\t" + c[2] + "\t" + c[3] + "\n";
        }
        return out;
    }
    std::vector<std::size_t> width(4);
    for (std::size_t i = 0; i < 4; ++i) width[i] = head[i].size();
    for (const auto& r : rows) {
        auto c = cells(r);
        for (std::size_t i = 0; i < 4; ++i) width[i] = std::max(width[i], c[i].size());
    }
    auto line = [&](const std::vector<std::string>& c) {
        std::string s;
        for (std::size_t i = 0; i < 4; ++i) {
            s += c[i];
            if (i < 3) s += std::string(width[i] - c[i].size(), ' ') + " | ";
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        return s + "\n";
    };
    out += line(head);
    std::string rule;
    for (std::size_t i = 0; i < 4; ++i) rule += std::string(width[i] + (i < 3 ? 1 : 0), '-') + (i < 3 ? "+-" : "");
    out += rule + "\n";
    for (const auto& r : rows) out += line(cells(r));
    return out;
}

inline std::string render_trace(const Tsa& a, const RunTrace& tr, TableStyle style = TableStyle::Pretty) {
    return render_table(trace_rows(a, tr), style);
}

}  // namespace tsalab

#endif  // TSALAB_REPORT_HPP
