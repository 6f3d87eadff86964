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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace revlab::gates {

// A fixed-width tuple of bits on a gate's lines. Line 0 is the first (top)
// line and is the most significant bit of the integer encoding, so the
// row order of a truth table printed in code order matches the usual
// textbook layout (000, 001, ..., 111 with the first input as MSB).
class BitVector {
  public:
    BitVector(int width, unsigned code);
    static BitVector from_bits(const std::vector<int>& bits);

    int width() const { return width_; }
    unsigned code() const { return code_; }
    int bit(int line) const;
    void set_bit(int line, int value);
    std::vector<int> bits() const;
    std::string str() const;  // e.g. "101"

    bool operator==(const BitVector& o) const = default;

  private:
    int width_;
    unsigned code_;
};

// A bijection on the 2^width basis codes of `width` lines.
class Permutation {
  public:
    Permutation(int width, std::vector<uint8_t> map);

    int width() const { return width_; }
    size_t size() const { return map_.size(); }
    const std::vector<uint8_t>& map() const { return map_; }
    unsigned apply(unsigned code) const { return map_[code]; }
    BitVector apply(const BitVector& in) const;

    Permutation inverse() const;
    // p_then_q: apply *this first, then q.
    Permutation then(const Permutation& q) const;
    static Permutation identity(int width);

    // Values of output line `column` listed over all input codes in order.
    std::vector<int> output_column(int column) const;
    // Every output column carries exactly 2^(width-1) ones.
    bool is_balanced() const;

    bool operator==(const Permutation& o) const = default;

  private:
    int width_;
    std::vector<uint8_t> map_;
};

// True iff `table` (output codes listed per input code) is a bijection.
// The table length must be a power of two matching some width in 1..=6.
bool is_bijective(const std::vector<unsigned>& table);

struct GateDef {
    std::string name;
    int width = 0;
    Permutation perm;
    std::vector<std::string> input_ports;   // e.g. {"A","B","C"}
    std::vector<std::string> output_ports;  // e.g. {"P","Q","R"}
    std::optional<int> claimed_cost;        // cost figure cited for the gate
};

// Builtin gate set: NOT, FG, DFG, TG, FRG, PG, SAM, MPG.
const std::vector<std::string>& builtin_gate_names();
bool is_builtin_gate(const std::string& name);
const GateDef& builtin_gate(const std::string& name);  // throws std::out_of_range

BitVector apply_gate(const GateDef& g, const BitVector& in);

// The MPG permutation is pinned by constrained search (see synth::derive_mpg);
// this reports which output column carries the stability complement.
int mpg_complement_column();

}  // namespace revlab::gates
