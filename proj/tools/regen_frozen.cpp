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

// Re-derives every constant that is frozen into the library source — the
// level-trigger cell's permutation and complement column, and the minimal
// primitive realizations of the width-3 gates — and prints them in the
// form the source files use, so drift is caught by diffing this output.
//
// The conjugated-swap and select-modify gates need seven primitives, one
// past the atlas bound, so their witnesses come from a dedicated
// meet-in-the-middle pass: every state reachable in at most three
// primitives is tabulated with its lexicographically first word, and the
// final four primitives are peeled off the target with inverse primitives
// (still exact integer arithmetic). Absence from the cost-6 atlas plus a
// verified 7-primitive word pins the exact minimum at 7.

#include <cstdint>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "revlab/gates.hpp"
#include "revlab/quantum.hpp"
#include "revlab/synth.hpp"

namespace {

using revlab::gates::Permutation;
using revlab::quantum::Primitive;
using revlab::quantum::PrimKind;
using revlab::quantum::QuantumCircuit;
using revlab::synth::CostAtlas;
using revlab::synth::GMat;

std::string helper_call(const Primitive& p) {
    switch (p.kind) {
        case PrimKind::X:
            return "X(" + std::to_string(p.target) + ")";
        case PrimKind::CX:
            return "CX(" + std::to_string(p.control) + ", " +
                   std::to_string(p.target) + ")";
        case PrimKind::CV:
            return "CV(" + std::to_string(p.control) + ", " +
                   std::to_string(p.target) + ")";
        case PrimKind::CVDG:
            return "CVDG(" + std::to_string(p.control) + ", " +
                   std::to_string(p.target) + ")";
    }
    return "?";
}

void print_circuit(const std::string& gate, const QuantumCircuit& c) {
    std::cout << "    // cost " << c.cost() << "\n";
    std::cout << "    add(\"" << gate << "\", " << c.width << ", {";
    for (size_t i = 0; i < c.prims.size(); ++i) {
        std::cout << (i ? ", " : "") << helper_call(c.prims[i]);
    }
    std::cout << "});\n";
}

struct FpHash {
    size_t operator()(const std::pair<uint64_t, uint64_t>& f) const {
        return size_t(f.first ^ (f.second * 0x9e3779b97f4a7c15ull));
    }
};

Primitive inverse(const Primitive& p) {
    Primitive q = p;
    if (p.kind == PrimKind::CV) {
        q.kind = PrimKind::CVDG;
    } else if (p.kind == PrimKind::CVDG) {
        q.kind = PrimKind::CV;
    }
    return q;
}

// Lexicographically first 7-primitive word realising `target` up to a
// global phase. Meet-in-the-middle: prefix states of cost <= 3 carry their
// lex-first words; suffixes of length 4 are unwound from the target. A
// shorter realization would surface as a cheap prefix, so the caller's
// atlas-absence check plus this search certifies the minimum exactly.
std::vector<int> seven_primitive_word(const Permutation& target,
                                      const std::vector<Primitive>& prims) {
    const int n = int(prims.size());

    std::unordered_map<std::pair<uint64_t, uint64_t>, std::vector<int>, FpHash>
        prefix;
    std::vector<GMat> frontier{GMat::identity(3)};
    std::vector<std::vector<int>> frontier_words{{}};
    prefix.emplace(frontier[0].fingerprint(), frontier_words[0]);
    for (int level = 1; level <= 3; ++level) {
        std::vector<GMat> next;
        std::vector<std::vector<int>> next_words;
        for (size_t s = 0; s < frontier.size(); ++s) {
            for (int pi = 0; pi < n; ++pi) {
                GMat m = frontier[s];
                m.apply_left(prims[pi]);
                auto fp = m.fingerprint();
                if (prefix.count(fp)) continue;
                std::vector<int> word = frontier_words[s];
                word.push_back(pi);
                prefix.emplace(fp, word);
                next.push_back(std::move(m));
                next_words.push_back(std::move(word));
            }
        }
        frontier = std::move(next);
        frontier_words = std::move(next_words);
    }

    std::vector<int> best;
    const GMat target_mat = GMat::from_permutation(target);
    for (int w6 = 0; w6 < n; ++w6) {
        GMat g3 = target_mat;
        g3.apply_left(inverse(prims[w6]));
        for (int w5 = 0; w5 < n; ++w5) {
            GMat g2 = g3;
            g2.apply_left(inverse(prims[w5]));
            for (int w4 = 0; w4 < n; ++w4) {
                GMat g1 = g2;
                g1.apply_left(inverse(prims[w4]));
                for (int w3 = 0; w3 < n; ++w3) {
                    GMat g0 = g1;
                    g0.apply_left(inverse(prims[w3]));
                    auto it = prefix.find(g0.fingerprint());
                    if (it == prefix.end()) continue;
                    if (it->second.size() != 3) {
                        throw std::logic_error(
                            "witness search found a word shorter than 7");
                    }
                    std::vector<int> word = it->second;
                    word.insert(word.end(), {w3, w4, w5, w6});
                    if (best.empty() || word < best) best = std::move(word);
                }
            }
        }
    }
    if (best.empty()) {
        throw std::logic_error("no 7-primitive word found");
    }

    GMat check = GMat::identity(3);
    for (int pi : best) check.apply_left(prims[pi]);
    auto perm = check.as_permutation();
    if (!perm || perm->map() != target.map()) {
        throw std::logic_error("witness word fails verification");
    }
    return best;
}

}  // namespace

int main() {
    using namespace revlab;

    std::cerr << "building width-3 atlas (max cost 6)...\n";
    auto atlas = synth::CostAtlas::build(
        3, 6, [](int level, size_t states) {
            std::cerr << "  cost " << level << ": " << states
                      << " new states\n";
        });
    std::map<int, size_t> by_cost;
    for (const auto& [key, rec] : atlas.records()) ++by_cost[rec.cost];
    std::cerr << "atlas permutations by cost:";
    for (const auto& [cost, count] : by_cost) {
        std::cerr << " " << cost << ":" << count;
    }
    std::cerr << " (total " << atlas.size() << ")\n";

    auto mpg = synth::derive_mpg(atlas);
    std::cout << "// gates.cpp constants\n";
    std::cout << "constexpr uint8_t kMpgMap[8] = {";
    const auto& map = mpg.perm.map();
    for (size_t i = 0; i < map.size(); ++i) {
        std::cout << (i ? ", " : "") << int(map[i]);
    }
    std::cout << "};\n";
    std::cout << "constexpr int kMpgComplementColumn = " << mpg.m_column
              << ";\n\n";

    std::cout << "// registry.cpp minimal circuits\n";
    const auto prims = synth::enumerate_primitives(3);
    for (const std::string gate : {"DFG", "TG", "FRG", "PG", "SAM"}) {
        auto found =
            synth::min_cost_synthesis(gates::builtin_gate(gate).perm, atlas);
        if (found) {
            print_circuit(gate, *found);
            continue;
        }
        std::cerr << gate << ": not in the cost-" << atlas.max_cost()
                  << " atlas; extending the search one primitive\n";
        auto word = seven_primitive_word(gates::builtin_gate(gate).perm, prims);
        print_circuit(gate, synth::circuit_from_indices(3, word));
    }
    print_circuit("MPG", mpg.circuit);
    return 0;
}
