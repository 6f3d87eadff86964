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

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "revlab/gates.hpp"
#include "revlab/quantum.hpp"

namespace revlab::netlist {

// Circuit description format (one statement per line, '#' to end of line
// is a comment):
//
//   width N
//   line IDX input LABEL      -- driven by a named primary input
//   line IDX const 0|1        -- driven by a constant
//   line IDX wire             -- internal line (seeded by feedback or zero)
//   gate NAME IDX...          -- builtin gate over distinct lines, in order
//   output IDX LABEL          -- named primary output
//   feedback SRC -> DST       -- DST is seeded from SRC's settled value
//
// `width` must come first; every line index is declared exactly once; a
// feedback destination is a wire or input (never a const) and receives at
// most one arc; output lines and feedback source lines never coincide (so
// the garbage count is a clean partition); several arcs may share one
// source.

enum class LineKind { Input, Const, Wire };

struct LineDecl {
    int index = 0;
    LineKind kind = LineKind::Wire;
    std::string label;    // Input only
    int const_value = 0;  // Const only
};

struct GateInst {
    std::string gate;
    std::vector<int> lines;
};

struct OutputDecl {
    int line = 0;
    std::string label;
};

struct FeedbackArc {
    int src = 0;
    int dst = 0;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(size_t line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg),
          line_(line) {}
    size_t line() const { return line_; }

  private:
    size_t line_;
};

struct Netlist {
    int width = 0;
    std::vector<LineDecl> lines;  // declaration order; covers 0..width-1
    std::vector<GateInst> gates;
    std::vector<OutputDecl> outputs;
    std::vector<FeedbackArc> feedbacks;

    const LineDecl& line(int index) const;
    std::vector<std::string> input_labels() const;  // declaration order
    std::vector<int> feedback_sources() const;      // distinct, first-seen order
};

Netlist parse_netlist(const std::string& text);
Netlist parse_netlist_file(const std::string& path);

// Canonical text form: width, then lines, gates, outputs, feedbacks, each
// in declaration order, comments dropped. parse(serialize(n)) == n.
std::string serialize(const Netlist& n);

// Structural rules beyond the grammar; throws std::invalid_argument.
void validate(const Netlist& n);

using InputMap = std::map<std::string, int>;

// One combinational traversal: seed line values by role (inputs from the
// map, consts from their declaration, wires start at 0), then seed every
// feedback destination from `wire_state` (only those entries are read),
// apply the gates in order, and return all final line values. The input
// map must bind exactly the declared input labels.
std::vector<int> evaluate(const Netlist& n, const InputMap& inputs,
                          const std::vector<int>& wire_state);

// The netlist's gates replaced by their registered primitive realizations,
// concatenated in gate order over the netlist's lines.
quantum::QuantumCircuit primitive_expansion(const Netlist& n);

struct Metrics {
    int width = 0;
    int gate_count = 0;
    int quantum_cost = 0;    // sum of the gates' primitive counts
    int delay = 0;           // serial schedule: one primitive per time slot
    int logical_depth = 0;   // greedy per-line schedule of the expansion
    int garbage = 0;         // lines that are neither outputs nor state sources
};

Metrics metrics(const Netlist& n);

// For a feedback-free netlist, the induced map on full line-value space.
// Always a bijection (gates are bijections on disjoint-by-statement lines);
// throws std::invalid_argument when feedback arcs are present.
gates::Permutation lift_permutation(const Netlist& n);

}  // namespace revlab::netlist
