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

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "revlab/netlist.hpp"

namespace revlab::seq {

// Thrown when feedback settling revisits a state: the circuit is chasing
// its own tail (e.g. a transparent toggle latch) and has no fixed point
// under the applied inputs.
class OscillationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// State is a full-width value vector, but only feedback-destination entries
// persist; every other wire reads zero at the start of a traversal.
std::vector<int> initial_state(const netlist::Netlist& n);

struct StepResult {
    std::vector<int> line_values;  // settled/committed traversal values
    std::vector<int> state;        // next-traversal seeds
    int iterations = 0;
};

// One traversal, then every feedback arc commits src's value into dst.
StepResult step(const netlist::Netlist& n, const netlist::InputMap& inputs,
                const std::vector<int>& state);

// Repeats traversals, each time re-seeding the destinations of the arcs
// marked live, until the seeds stop changing. `live` is parallel to
// n.feedbacks (empty means all live); a frozen arc's destination keeps its
// entry value through every iteration. Throws OscillationError on a state
// revisit and std::runtime_error past `cap` traversals.
StepResult settle(const netlist::Netlist& n, const netlist::InputMap& inputs,
                  std::vector<int> state, const std::vector<bool>& live = {},
                  int cap = 16);

// A storage design under test: the circuit, its clocking discipline, and
// the next-state behaviour it must realise.
struct LatchSpec {
    std::string id;
    std::string display_name;
    bool master_slave = false;
    netlist::Netlist net;
    // Parallel to net.feedbacks; a slave arc holds frozen while the clock
    // is high and goes live when it falls.
    std::vector<bool> slave_arcs;
    int primary_arc = 0;  // index of the arc that carries the stored bit
    std::vector<std::string> data_inputs;  // non-clock inputs, e.g. {"S","R"}
    std::string clock_input;               // "" for unclocked latches
    // Expected stored bit after the excitation, given the current bit.
    std::function<int(int q, const netlist::InputMap&)> next_state;
    // Input combinations the design is specified for.
    std::function<bool(const netlist::InputMap&)> legal;
    std::string equation;          // normalized next-state equation
    std::string printed_equation;  // as cited (may differ; kept for the record)
    std::string legal_text;        // human-readable input rule ("" = all legal)
};

const std::vector<LatchSpec>& builtin_designs();
const LatchSpec& builtin_design(const std::string& id);
std::vector<std::string> design_ids();
// The canonical netlist text the design is built from.
const std::string& design_source(const std::string& id);

// Reads the stored bit out of a committed state vector.
int stored_bit(const LatchSpec& spec, const std::vector<int>& state);
// A committed state holding bit q (all other seeds settled to match, via a
// settle with the design's hold inputs).
std::vector<int> seeded_state(const LatchSpec& spec, int q);

// One full clock pulse for a master-slave design: settle with CLK high and
// slave arcs frozen, commit, then settle with CLK low and every arc live.
StepResult clock_step(const LatchSpec& spec, const netlist::InputMap& inputs,
                      const std::vector<int>& state);

// One excitation of the design from `state`: for latches one traversal with
// its commit, for master-slave designs a full clock pulse. Rejects an input
// combination outside the design's specified set with std::invalid_argument
// naming the violated rule.
StepResult excite(const LatchSpec& spec, const netlist::InputMap& inputs,
                  const std::vector<int>& state);

struct CharacteristicRow {
    netlist::InputMap inputs;  // data inputs (and clock level for latches)
    int q = 0;
    int expected = 0;
    int got = 0;
    bool pass = false;
};

// Drives every legal input combination from both stored bits and compares
// the resulting bit with the next-state equation. Latches take one
// traversal per row; master-slave designs take one full clock pulse.
std::vector<CharacteristicRow> verify_characteristic(const LatchSpec& spec);

// The named output's line value, by label.
int output_value(const netlist::Netlist& n, const std::vector<int>& line_values,
                 const std::string& label);

}  // namespace revlab::seq
