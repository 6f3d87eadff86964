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

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "revlab/gates.hpp"
#include "revlab/quantum.hpp"

namespace revlab::synth {

// Exact matrix over the Gaussian integers scaled by 1/2^e. Every unitary a
// primitive sequence can produce has all entries in (Z[i])/2^e, so circuit
// products, permutation tests, and state dedup all run in integer
// arithmetic with no rounding.
class GMat {
  public:
    static GMat identity(int width);
    static GMat from_permutation(const gates::Permutation& p);

    int width() const { return width_; }
    int dim() const { return dim_; }
    int scale() const { return e_; }
    int16_t re(int row, int col) const { return re_[row * dim_ + col]; }
    int16_t im(int row, int col) const { return im_[row * dim_ + col]; }

    // this := prim * this (prepend prim to the product, i.e. run it last).
    void apply_left(const quantum::Primitive& p);

    // The permutation this matrix equals up to a global phase, if any.
    std::optional<gates::Permutation> as_permutation() const;

    // Phase-canonical 128-bit fingerprint: equal for two matrices exactly
    // when they differ only by a global phase.
    std::pair<uint64_t, uint64_t> fingerprint() const;

    bool operator==(const GMat& o) const = default;

  private:
    GMat() = default;
    void normalize();

    int width_ = 0;
    int dim_ = 0;
    int e_ = 0;
    std::array<int16_t, 64> re_{};
    std::array<int16_t, 64> im_{};
};

// The primitive alphabet in index order: X on each line, then CX, CV, CVDG,
// each over control/target pairs in lexicographic order. This order is a
// file-format contract: atlas snapshots store primitive indices.
std::vector<quantum::Primitive> enumerate_primitives(int width);

struct AtlasRecord {
    std::vector<uint8_t> perm_codes;
    int cost = 0;
    std::vector<int> prim_indices;
};

// Minimal-cost circuits for every permutation reachable within max_cost
// primitives, found by breadth-first search over primitive sequences with
// exact phase-canonical state dedup. Witnesses are the lexicographically
// first minimal sequences, so a build is bit-reproducible.
class CostAtlas {
  public:
    static constexpr int kMaxWidth = 3;
    static constexpr int kMaxCost = 6;

    using Progress = std::function<void(int level, size_t states)>;
    static CostAtlas build(int width, int max_cost, Progress progress = {});

    int width() const { return width_; }
    int max_cost() const { return max_cost_; }
    size_t size() const { return records_.size(); }

    std::optional<AtlasRecord> lookup(const gates::Permutation& p) const;
    const std::map<uint64_t, AtlasRecord>& records() const { return records_; }

    void save(std::ostream& out) const;
    void save_file(const std::string& path) const;
    // Parses and re-verifies a snapshot: every witness is simulated and
    // must realise its recorded permutation at its recorded cost.
    static CostAtlas load(std::istream& in);
    static CostAtlas load_file(const std::string& path);

    static uint64_t pack_key(const std::vector<uint8_t>& codes);

  private:
    CostAtlas(int width, int max_cost) : width_(width), max_cost_(max_cost) {}

    int width_;
    int max_cost_;
    std::map<uint64_t, AtlasRecord> records_;
};

quantum::QuantumCircuit circuit_from_indices(int width,
                                             const std::vector<int>& prim_indices);

// Atlas lookup in circuit form; nullopt when the permutation needs more
// than max_cost primitives.
std::optional<quantum::QuantumCircuit> min_cost_synthesis(
    const gates::Permutation& perm, const CostAtlas& atlas);

// A requirement that output column `column` reads `value` on input row `row`.
struct ColumnConstraint {
    int row;
    int column;
    int value;
};

// All width-wide permutations whose output columns meet every constraint,
// in lexicographic table order.
std::vector<gates::Permutation> satisfying_perms(
    int width, const std::vector<ColumnConstraint>& constraints);

// Cheapest constrained permutation in the atlas: minimum cost, ties broken
// toward the lexicographically smallest table. nullopt when no satisfying
// permutation is reachable within the atlas bound.
struct ConstrainedResult {
    gates::Permutation perm;
    quantum::QuantumCircuit circuit;
};
std::optional<ConstrainedResult> constrained_synthesis(
    const CostAtlas& atlas, const std::vector<ColumnConstraint>& constraints);

// Pins the MPG gate: next-state column is fixed on the six rows where the
// two command lines are not both high, and one of the remaining columns
// must read the settled complement on the four hold rows. Both candidate
// complement columns are searched; lower cost wins, then the smaller table,
// trying column 0 before column 1.
struct MpgResult {
    gates::Permutation perm;
    quantum::QuantumCircuit circuit;
    int m_column = 0;
};
MpgResult derive_mpg(const CostAtlas& atlas);

}  // namespace revlab::synth
