// Copyright 2026 The Revlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "revlab/seq.hpp"

#include <algorithm>
#include <set>

namespace revlab::seq {

namespace {

using netlist::InputMap;
using netlist::Netlist;

std::vector<int> commit(const Netlist& n, const std::vector<int>& values,
                        const std::vector<int>& prev,
                        const std::vector<bool>& live) {
    std::vector<int> next(size_t(n.width), 0);
    for (size_t i = 0; i < n.feedbacks.size(); ++i) {
        const auto& fb = n.feedbacks[i];
        next[size_t(fb.dst)] =
            live[i] ? values[size_t(fb.src)] : prev[size_t(fb.dst)];
    }
    return next;
}

std::vector<bool> live_mask(const Netlist& n, const std::vector<bool>& live) {
    if (live.empty()) return std::vector<bool>(n.feedbacks.size(), true);
    if (live.size() != n.feedbacks.size()) {
        throw std::invalid_argument("live mask must cover every feedback arc");
    }
    return live;
}

}  // namespace

std::vector<int> initial_state(const Netlist& n) {
    return std::vector<int>(size_t(n.width), 0);
}

StepResult step(const Netlist& n, const InputMap& inputs,
                const std::vector<int>& state) {
    if (state.size() != size_t(n.width)) {
        throw std::invalid_argument("state must cover every line");
    }
    auto values = netlist::evaluate(n, inputs, state);
    auto all = std::vector<bool>(n.feedbacks.size(), true);
    return {values, commit(n, values, state, all), 1};
}

StepResult settle(const Netlist& n, const InputMap& inputs,
                  std::vector<int> state, const std::vector<bool>& live,
                  int cap) {
    if (state.size() != size_t(n.width)) {
        throw std::invalid_argument("state must cover every line");
    }
    auto lv = live_mask(n, live);
    std::set<std::vector<int>> seen;
    seen.insert(state);
    for (int iter = 1; iter <= cap; ++iter) {
        auto values = netlist::evaluate(n, inputs, state);
        auto next = commit(n, values, state, lv);
        if (next == state) return {values, next, iter};
        if (seen.count(next)) {
            throw OscillationError(
                "feedback state revisited without reaching a fixed point");
        }
        seen.insert(next);
        state = std::move(next);
    }
    throw std::runtime_error("feedback did not settle within " +
                             std::to_string(cap) + " traversals");
}

int output_value(const Netlist& n, const std::vector<int>& line_values,
                 const std::string& label) {
    for (const auto& o : n.outputs) {
        if (o.label == label) return line_values[size_t(o.line)];
    }
    throw std::out_of_range("no output labeled '" + label + "'");
}

int stored_bit(const LatchSpec& spec, const std::vector<int>& state) {
    const auto& fb = spec.net.feedbacks.at(size_t(spec.primary_arc));
    return state[size_t(fb.dst)];
}

std::vector<int> seeded_state(const LatchSpec& spec, int q) {
    if (q != 0 && q != 1) throw std::invalid_argument("stored bit must be 0 or 1");
    auto state = initial_state(spec.net);
    // In a quiescent design every feedback destination carries the stored
    // bit: latches have one state arc, and a clocked pair has master ==
    // slave after a full pulse.
    for (const auto& fb : spec.net.feedbacks) state[size_t(fb.dst)] = q;
    return state;
}

StepResult clock_step(const LatchSpec& spec, const InputMap& inputs,
                      const std::vector<int>& state) {
    if (!spec.master_slave) {
        throw std::invalid_argument(spec.id + " is not clocked in two phases");
    }
    const auto& n = spec.net;
    std::vector<bool> live(n.feedbacks.size());
    for (size_t i = 0; i < live.size(); ++i) live[i] = !spec.slave_arcs[i];

    InputMap high = inputs;
    high[spec.clock_input] = 1;
    auto p1 = settle(n, high, state, live);
    // Hand-off: every arc commits from the settled traversal (a frozen
    // slave evaluated to its held value, so its seed is unchanged).
    auto all = std::vector<bool>(n.feedbacks.size(), true);
    auto mid = commit(n, p1.line_values, p1.state, all);

    InputMap low = inputs;
    low[spec.clock_input] = 0;
    return settle(n, low, std::move(mid));
}

StepResult excite(const LatchSpec& spec, const InputMap& inputs,
                  const std::vector<int>& state) {
    if (!spec.legal(inputs)) {
        std::string rule = spec.legal_text.empty() ? "the design's input rule"
                                                   : spec.legal_text;
        throw std::invalid_argument(spec.id + ": inputs violate " + rule);
    }
    return spec.master_slave ? clock_step(spec, inputs, state)
                             : step(spec.net, inputs, state);
}

std::vector<CharacteristicRow> verify_characteristic(const LatchSpec& spec) {
    std::vector<CharacteristicRow> rows;
    size_t k = spec.data_inputs.size();
    for (unsigned code = 0; code < (1u << k); ++code) {
        InputMap inputs;
        for (size_t i = 0; i < k; ++i) {
            inputs[spec.data_inputs[i]] = int(code >> (k - 1 - i) & 1u);
        }
        if (!spec.legal(inputs)) continue;
        for (int q = 0; q <= 1; ++q) {
            CharacteristicRow row;
            row.inputs = inputs;
            row.q = q;
            row.expected = spec.next_state(q, inputs);
            auto state = seeded_state(spec, q);
            StepResult res = spec.master_slave
                                 ? clock_step(spec, inputs, state)
                                 : step(spec.net, inputs, state);
            row.got = output_value(spec.net, res.line_values, "Q");
            row.pass = row.got == row.expected;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

namespace {

struct DesignSource {
    const char* id;
    const char* display_name;
    bool master_slave;
    std::string source;
    std::vector<bool> slave_arcs;
    int primary_arc;
    std::vector<std::string> data_inputs;
    const char* clock_input;
    std::function<int(int, const InputMap&)> next_state;
    std::function<bool(const InputMap&)> legal;
    const char* equation;
    const char* printed_equation;  // "" when the cited form already matches
    const char* legal_text;        // "" when every combination is legal
};

bool always_legal(const InputMap&) { return true; }
bool not_both_commands(const InputMap& in) {
    return !(in.at("S") == 1 && in.at("R") == 1);
}

std::vector<DesignSource> design_sources() {
    // The level-sensitive cell keeps its complement on the gate column the
    // search pinned, so the plain set-reset netlist names that line.
    std::string sr_qbar_line = std::to_string(gates::mpg_complement_column());
    std::vector<DesignSource> ds;

    ds.push_back({"sr", "set-reset latch", false,
                  "width 4\n"
                  "line 0 wire\n"
                  "line 1 input R\n"
                  "line 2 input S\n"
                  "line 3 const 0\n"
                  "gate MPG 0 1 2\n"
                  "gate FG 2 3\n"
                  "output 3 Q\n"
                  "output " + sr_qbar_line + " QBAR\n"
                  "feedback 2 -> 0\n",
                  {false},
                  0,
                  {"S", "R"},
                  "",
                  [](int q, const InputMap& in) {
                      return in.at("S") | ((1 - in.at("R")) & q);
                  },
                  not_both_commands,
                  "Q+ = S + R'Q", "", "S and R must not both be 1"});

    ds.push_back({"gated_sr", "gated set-reset latch", false,
                  "width 7\n"
                  "line 0 wire\n"
                  "line 1 input R\n"
                  "line 2 input S\n"
                  "line 3 input CLK\n"
                  "line 4 wire\n"
                  "line 5 const 0\n"
                  "line 6 const 1\n"
                  "gate MPG 0 1 2\n"
                  "gate SAM 3 2 4\n"
                  "gate DFG 4 5 6\n"
                  "output 5 Q\n"
                  "output 6 QBAR\n"
                  "feedback 4 -> 0\n"
                  "feedback 4 -> 4\n",
                  {false, false},
                  0,
                  {"CLK", "S", "R"},
                  "",
                  [](int q, const InputMap& in) {
                      int held = in.at("S") | ((1 - in.at("R")) & q);
                      return in.at("CLK") ? held : q;
                  },
                  not_both_commands,
                  "Q+ = CLK'Q + CLK(S + R'Q)", "", "S and R must not both be 1"});

    ds.push_back({"ms_sr", "master-slave set-reset flip-flop", true,
                  "width 8\n"
                  "line 0 wire\n"
                  "line 1 input R\n"
                  "line 2 input S\n"
                  "line 3 input CLK\n"
                  "line 4 wire\n"
                  "line 5 const 0\n"
                  "line 6 wire\n"
                  "line 7 const 0\n"
                  "gate MPG 0 1 2\n"
                  "gate SAM 3 2 4\n"
                  "gate DFG 4 0 5\n"
                  "gate SAM 3 5 6\n"
                  "gate FG 4 7\n"
                  "output 7 Q\n"
                  "output 5 QBAR\n"
                  "feedback 6 -> 0\n"
                  "feedback 4 -> 4\n"
                  "feedback 6 -> 6\n",
                  {true, false, true},
                  0,
                  {"S", "R"},
                  "CLK",
                  [](int q, const InputMap& in) {
                      return in.at("S") | ((1 - in.at("R")) & q);
                  },
                  not_both_commands,
                  "Q+ = S + R'Q", "", "S and R must not both be 1"});

    ds.push_back({"jk", "JK latch", false,
                  "width 4\n"
                  "line 0 wire\n"
                  "line 1 input J\n"
                  "line 2 input K\n"
                  "line 3 const 0\n"
                  "gate SAM 0 1 2\n"
                  "gate FG 1 3\n"
                  "output 3 Q\n"
                  "output 0 QBAR\n"
                  "feedback 1 -> 0\n",
                  {false},
                  0,
                  {"J", "K"},
                  "",
                  [](int q, const InputMap& in) {
                      return (in.at("J") & (1 - q)) | ((1 - in.at("K")) & q);
                  },
                  always_legal,
                  "Q+ = JQ' + K'Q", "Q+ = JQ' + Q'K", ""});

    ds.push_back({"gated_jk", "gated JK latch", false,
                  "width 7\n"
                  "line 0 wire\n"
                  "line 1 input J\n"
                  "line 2 input K\n"
                  "line 3 input CLK\n"
                  "line 4 wire\n"
                  "line 5 const 0\n"
                  "line 6 const 1\n"
                  "gate SAM 0 1 2\n"
                  "gate SAM 3 1 4\n"
                  "gate DFG 4 5 6\n"
                  "output 5 Q\n"
                  "output 6 QBAR\n"
                  "feedback 4 -> 0\n"
                  "feedback 4 -> 4\n",
                  {false, false},
                  0,
                  {"CLK", "J", "K"},
                  "",
                  [](int q, const InputMap& in) {
                      int held = (in.at("J") & (1 - q)) | ((1 - in.at("K")) & q);
                      return in.at("CLK") ? held : q;
                  },
                  always_legal,
                  "Q+ = CLK'Q + CLK(JQ' + K'Q)", "", ""});

    ds.push_back({"ms_jk", "master-slave JK flip-flop", true,
                  "width 8\n"
                  "line 0 wire\n"
                  "line 1 input J\n"
                  "line 2 input K\n"
                  "line 3 input CLK\n"
                  "line 4 wire\n"
                  "line 5 const 0\n"
                  "line 6 wire\n"
                  "line 7 const 0\n"
                  "gate SAM 0 1 2\n"
                  "gate SAM 3 1 4\n"
                  "gate DFG 4 0 5\n"
                  "gate SAM 3 5 6\n"
                  "gate FG 4 7\n"
                  "output 7 Q\n"
                  "output 5 QBAR\n"
                  "feedback 6 -> 0\n"
                  "feedback 4 -> 4\n"
                  "feedback 6 -> 6\n",
                  {true, false, true},
                  0,
                  {"J", "K"},
                  "CLK",
                  [](int q, const InputMap& in) {
                      return (in.at("J") & (1 - q)) | ((1 - in.at("K")) & q);
                  },
                  always_legal,
                  "Q+ = JQ' + K'Q", "", ""});

    ds.push_back({"gated_d", "gated D latch", false,
                  "width 5\n"
                  "line 0 input CLK\n"
                  "line 1 input D\n"
                  "line 2 wire\n"
                  "line 3 const 0\n"
                  "line 4 const 1\n"
                  "gate SAM 0 1 2\n"
                  "gate DFG 2 3 4\n"
                  "output 3 Q\n"
                  "output 4 QBAR\n"
                  "feedback 2 -> 2\n",
                  {false},
                  0,
                  {"CLK", "D"},
                  "",
                  [](int q, const InputMap& in) {
                      return in.at("CLK") ? in.at("D") : q;
                  },
                  always_legal,
                  "Q+ = CLK'Q + CLK D", "Q+ = CLK Q + CLK D", ""});

    ds.push_back({"ms_d", "master-slave D flip-flop", true,
                  "width 7\n"
                  "line 0 input CLK\n"
                  "line 1 input D\n"
                  "line 2 wire\n"
                  "line 3 const 0\n"
                  "line 4 wire\n"
                  "line 5 const 0\n"
                  "line 6 const 1\n"
                  "gate SAM 0 1 2\n"
                  "gate DFG 2 3 6\n"
                  "gate SAM 0 3 4\n"
                  "gate FG 2 5\n"
                  "output 5 Q\n"
                  "output 6 QBAR\n"
                  "feedback 2 -> 2\n"
                  "feedback 4 -> 4\n",
                  {false, true},
                  0,
                  {"D"},
                  "CLK",
                  [](int q, const InputMap& in) {
                      (void)q;
                      return in.at("D");
                  },
                  always_legal,
                  "Q+ = D", "", ""});

    return ds;
}

std::vector<LatchSpec> make_builtin_designs() {
    std::vector<LatchSpec> specs;
    for (auto& ds : design_sources()) {
        LatchSpec spec;
        spec.id = ds.id;
        spec.display_name = ds.display_name;
        spec.master_slave = ds.master_slave;
        spec.net = netlist::parse_netlist(ds.source);
        spec.slave_arcs = ds.slave_arcs;
        spec.primary_arc = ds.primary_arc;
        spec.data_inputs = ds.data_inputs;
        spec.clock_input = ds.clock_input;
        spec.next_state = std::move(ds.next_state);
        spec.legal = std::move(ds.legal);
        spec.equation = ds.equation;
        spec.printed_equation = ds.printed_equation;
        spec.legal_text = ds.legal_text;
        specs.push_back(std::move(spec));
    }
    return specs;
}

}  // namespace

const std::vector<LatchSpec>& builtin_designs() {
    static const std::vector<LatchSpec> specs = make_builtin_designs();
    return specs;
}

const LatchSpec& builtin_design(const std::string& id) {
    for (const auto& s : builtin_designs()) {
        if (s.id == id) return s;
    }
    throw std::out_of_range("unknown design: " + id);
}

std::vector<std::string> design_ids() {
    std::vector<std::string> ids;
    for (const auto& s : builtin_designs()) ids.push_back(s.id);
    return ids;
}

const std::string& design_source(const std::string& id) {
    static const std::map<std::string, std::string> sources = [] {
        std::map<std::string, std::string> out;
        for (auto& ds : design_sources()) out[ds.id] = ds.source;
        return out;
    }();
    auto it = sources.find(id);
    if (it == sources.end()) throw std::out_of_range("unknown design: " + id);
    return it->second;
}

}  // namespace revlab::seq
