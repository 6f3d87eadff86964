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

#include "revlab/netlist.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "revlab/quantum.hpp"

namespace revlab::netlist {

namespace {

constexpr int kMaxWidth = 16;

bool valid_label(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(uint8_t(s[0])) && s[0] != '_') return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(uint8_t(c)) || c == '_';
    });
}

std::vector<std::string> tokenize(const std::string& raw) {
    std::string text = raw.substr(0, raw.find('#'));
    std::vector<std::string> toks;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) toks.push_back(tok);
    return toks;
}

int parse_index(const std::string& tok, size_t line_no, const std::string& what) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line_no, "bad " + what + " '" + tok + "'");
    }
}

}  // namespace

const LineDecl& Netlist::line(int index) const {
    for (const auto& l : lines) {
        if (l.index == index) return l;
    }
    throw std::out_of_range("line " + std::to_string(index) + " not declared");
}

std::vector<std::string> Netlist::input_labels() const {
    std::vector<std::string> out;
    for (const auto& l : lines) {
        if (l.kind == LineKind::Input) out.push_back(l.label);
    }
    return out;
}

std::vector<int> Netlist::feedback_sources() const {
    std::vector<int> out;
    for (const auto& fb : feedbacks) {
        if (std::find(out.begin(), out.end(), fb.src) == out.end()) {
            out.push_back(fb.src);
        }
    }
    return out;
}

Netlist parse_netlist(const std::string& text) {
    Netlist n;
    bool have_width = false;
    std::istringstream in(text);
    std::string raw;
    size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto toks = tokenize(raw);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "width") {
            if (have_width) throw ParseError(line_no, "duplicate width statement");
            if (toks.size() != 2) throw ParseError(line_no, "width takes one value");
            n.width = parse_index(toks[1], line_no, "width");
            if (n.width < 1 || n.width > kMaxWidth) {
                throw ParseError(line_no, "width must be in 1.." +
                                              std::to_string(kMaxWidth));
            }
            have_width = true;
            continue;
        }
        if (!have_width) {
            throw ParseError(line_no, "width must come before '" + kw + "'");
        }
        if (kw == "line") {
            if (toks.size() < 3) {
                throw ParseError(line_no, "line takes an index and a kind");
            }
            LineDecl d;
            d.index = parse_index(toks[1], line_no, "line index");
            const std::string& kind = toks[2];
            if (kind == "input") {
                if (toks.size() != 4) {
                    throw ParseError(line_no, "input line takes a label");
                }
                if (!valid_label(toks[3])) {
                    throw ParseError(line_no, "bad label '" + toks[3] + "'");
                }
                d.kind = LineKind::Input;
                d.label = toks[3];
            } else if (kind == "const") {
                if (toks.size() != 4 || (toks[3] != "0" && toks[3] != "1")) {
                    throw ParseError(line_no, "const line takes 0 or 1");
                }
                d.kind = LineKind::Const;
                d.const_value = toks[3] == "1" ? 1 : 0;
            } else if (kind == "wire") {
                if (toks.size() != 3) {
                    throw ParseError(line_no, "wire line takes nothing further");
                }
                d.kind = LineKind::Wire;
            } else {
                throw ParseError(line_no, "unknown line kind '" + kind + "'");
            }
            n.lines.push_back(d);
        } else if (kw == "gate") {
            if (toks.size() < 3) {
                throw ParseError(line_no, "gate takes a name and line indices");
            }
            GateInst g;
            g.gate = toks[1];
            for (size_t i = 2; i < toks.size(); ++i) {
                g.lines.push_back(parse_index(toks[i], line_no, "gate line"));
            }
            n.gates.push_back(std::move(g));
        } else if (kw == "output") {
            if (toks.size() != 3) {
                throw ParseError(line_no, "output takes an index and a label");
            }
            OutputDecl o;
            o.line = parse_index(toks[1], line_no, "output line");
            if (!valid_label(toks[2])) {
                throw ParseError(line_no, "bad label '" + toks[2] + "'");
            }
            o.label = toks[2];
            n.outputs.push_back(o);
        } else if (kw == "feedback") {
            // Accept "feedback 2 -> 0" and "feedback 2->0".
            std::string rest;
            for (size_t i = 1; i < toks.size(); ++i) rest += toks[i];
            size_t arrow = rest.find("->");
            if (arrow == std::string::npos) {
                throw ParseError(line_no, "feedback takes SRC -> DST");
            }
            FeedbackArc fb;
            fb.src = parse_index(rest.substr(0, arrow), line_no, "feedback source");
            fb.dst = parse_index(rest.substr(arrow + 2), line_no,
                                 "feedback destination");
            n.feedbacks.push_back(fb);
        } else {
            throw ParseError(line_no, "unknown statement '" + kw + "'");
        }
    }
    if (!have_width) throw ParseError(line_no, "missing width statement");
    try {
        validate(n);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
    return n;
}

Netlist parse_netlist_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read netlist file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_netlist(buf.str());
}

std::string serialize(const Netlist& n) {
    std::ostringstream out;
    out << "width " << n.width << "\n";
    for (const auto& l : n.lines) {
        out << "line " << l.index << ' ';
        switch (l.kind) {
            case LineKind::Input: out << "input " << l.label; break;
            case LineKind::Const: out << "const " << l.const_value; break;
            case LineKind::Wire: out << "wire"; break;
        }
        out << "\n";
    }
    for (const auto& g : n.gates) {
        out << "gate " << g.gate;
        for (int idx : g.lines) out << ' ' << idx;
        out << "\n";
    }
    for (const auto& o : n.outputs) {
        out << "output " << o.line << ' ' << o.label << "\n";
    }
    for (const auto& fb : n.feedbacks) {
        out << "feedback " << fb.src << " -> " << fb.dst << "\n";
    }
    return out.str();
}

void validate(const Netlist& n) {
    if (n.width < 1 || n.width > kMaxWidth) {
        throw std::invalid_argument("width must be in 1.." +
                                    std::to_string(kMaxWidth));
    }
    std::vector<int> declared(size_t(n.width), 0);
    std::set<std::string> input_labels;
    for (const auto& l : n.lines) {
        if (l.index < 0 || l.index >= n.width) {
            throw std::invalid_argument("line " + std::to_string(l.index) +
                                        " outside width " +
                                        std::to_string(n.width));
        }
        if (declared[size_t(l.index)]++) {
            throw std::invalid_argument("line " + std::to_string(l.index) +
                                        " declared twice");
        }
        if (l.kind == LineKind::Input && !input_labels.insert(l.label).second) {
            throw std::invalid_argument("duplicate input label '" + l.label + "'");
        }
    }
    for (int i = 0; i < n.width; ++i) {
        if (!declared[size_t(i)]) {
            throw std::invalid_argument("line " + std::to_string(i) +
                                        " never declared");
        }
    }
    for (const auto& g : n.gates) {
        if (!gates::is_builtin_gate(g.gate)) {
            throw std::invalid_argument("unknown gate '" + g.gate + "'");
        }
        const auto& def = gates::builtin_gate(g.gate);
        if (int(g.lines.size()) != def.width) {
            throw std::invalid_argument(g.gate + " takes " +
                                        std::to_string(def.width) + " lines");
        }
        std::set<int> seen;
        for (int idx : g.lines) {
            if (idx < 0 || idx >= n.width) {
                throw std::invalid_argument("gate line " + std::to_string(idx) +
                                            " outside width");
            }
            if (!seen.insert(idx).second) {
                throw std::invalid_argument(g.gate +
                                            " lines must be distinct");
            }
        }
    }
    std::set<std::string> output_labels;
    std::set<int> output_lines;
    for (const auto& o : n.outputs) {
        if (o.line < 0 || o.line >= n.width) {
            throw std::invalid_argument("output line outside width");
        }
        if (!output_labels.insert(o.label).second) {
            throw std::invalid_argument("duplicate output label '" + o.label +
                                        "'");
        }
        if (!output_lines.insert(o.line).second) {
            throw std::invalid_argument("line " + std::to_string(o.line) +
                                        " used by two outputs");
        }
    }
    std::set<int> fb_dsts;
    for (const auto& fb : n.feedbacks) {
        if (fb.src < 0 || fb.src >= n.width || fb.dst < 0 || fb.dst >= n.width) {
            throw std::invalid_argument("feedback endpoint outside width");
        }
        if (!fb_dsts.insert(fb.dst).second) {
            throw std::invalid_argument("line " + std::to_string(fb.dst) +
                                        " seeded by two feedback arcs");
        }
        if (n.line(fb.dst).kind == LineKind::Const) {
            throw std::invalid_argument("feedback destination " +
                                        std::to_string(fb.dst) +
                                        " cannot be a constant");
        }
        if (output_lines.count(fb.src)) {
            throw std::invalid_argument(
                "line " + std::to_string(fb.src) +
                " cannot be both an output and a state source");
        }
    }
}

std::vector<int> evaluate(const Netlist& n, const InputMap& inputs,
                          const std::vector<int>& wire_state) {
    if (wire_state.size() != size_t(n.width)) {
        throw std::invalid_argument("wire state must cover every line");
    }
    for (const auto& [label, value] : inputs) {
        if (value != 0 && value != 1) {
            throw std::invalid_argument("input '" + label + "' must be 0 or 1");
        }
    }
    std::vector<int> values(size_t(n.width), 0);
    size_t bound = 0;
    for (const auto& l : n.lines) {
        switch (l.kind) {
            case LineKind::Input: {
                auto it = inputs.find(l.label);
                if (it == inputs.end()) {
                    throw std::invalid_argument("missing input '" + l.label +
                                                "'");
                }
                values[size_t(l.index)] = it->second;
                ++bound;
                break;
            }
            case LineKind::Const:
                values[size_t(l.index)] = l.const_value;
                break;
            case LineKind::Wire:
                values[size_t(l.index)] = 0;
                break;
        }
    }
    for (const auto& fb : n.feedbacks) {
        values[size_t(fb.dst)] = wire_state[size_t(fb.dst)] ? 1 : 0;
    }
    if (bound != inputs.size()) {
        for (const auto& [label, value] : inputs) {
            (void)value;
            bool known = false;
            for (const auto& l : n.lines) {
                known = known ||
                        (l.kind == LineKind::Input && l.label == label);
            }
            if (!known) {
                throw std::invalid_argument("unknown input '" + label + "'");
            }
        }
    }
    for (const auto& g : n.gates) {
        const auto& def = gates::builtin_gate(g.gate);
        std::vector<int> bits(g.lines.size());
        for (size_t i = 0; i < g.lines.size(); ++i) {
            bits[i] = values[size_t(g.lines[i])];
        }
        auto out = def.perm.apply(gates::BitVector::from_bits(bits));
        for (size_t i = 0; i < g.lines.size(); ++i) {
            values[size_t(g.lines[i])] = out.bit(int(i));
        }
    }
    return values;
}

quantum::QuantumCircuit primitive_expansion(const Netlist& n) {
    quantum::QuantumCircuit circuit;
    circuit.width = n.width;
    for (const auto& g : n.gates) {
        const auto& local = quantum::registered_decomposition(g.gate);
        for (const auto& p : local.prims) {
            quantum::Primitive mapped = p;
            mapped.target = g.lines[size_t(p.target)];
            if (p.control >= 0) {
                mapped.control = g.lines[size_t(p.control)];
            }
            circuit.prims.push_back(mapped);
        }
    }
    return circuit;
}

Metrics metrics(const Netlist& n) {
    Metrics m;
    m.width = n.width;
    m.gate_count = int(n.gates.size());
    for (const auto& g : n.gates) {
        m.quantum_cost += quantum::registered_decomposition(g.gate).cost();
    }
    m.delay = m.quantum_cost;
    m.logical_depth = quantum::logical_depth(primitive_expansion(n));
    m.garbage = n.width - int(n.outputs.size()) -
                int(n.feedback_sources().size());
    return m;
}

gates::Permutation lift_permutation(const Netlist& n) {
    if (!n.feedbacks.empty()) {
        throw std::invalid_argument(
            "only feedback-free netlists induce one fixed map");
    }
    if (n.width > 6) {
        throw std::invalid_argument("lifting is limited to width 6");
    }
    size_t size = size_t(1) << n.width;
    std::vector<uint8_t> map(size);
    for (size_t code = 0; code < size; ++code) {
        std::vector<int> values(size_t(n.width));
        for (int i = 0; i < n.width; ++i) {
            values[size_t(i)] = int(code >> (n.width - 1 - i) & 1);
        }
        for (const auto& g : n.gates) {
            const auto& def = gates::builtin_gate(g.gate);
            std::vector<int> bits(g.lines.size());
            for (size_t i = 0; i < g.lines.size(); ++i) {
                bits[i] = values[size_t(g.lines[i])];
            }
            auto out = def.perm.apply(gates::BitVector::from_bits(bits));
            for (size_t i = 0; i < g.lines.size(); ++i) {
                values[size_t(g.lines[i])] = out.bit(int(i));
            }
        }
        unsigned result = 0;
        for (int i = 0; i < n.width; ++i) {
            result = result << 1 | unsigned(values[size_t(i)]);
        }
        map[code] = uint8_t(result);
    }
    return gates::Permutation(n.width, std::move(map));
}

}  // namespace revlab::netlist
