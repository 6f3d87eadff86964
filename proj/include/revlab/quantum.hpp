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

#include <complex>
#include <string>
#include <vector>

#include "revlab/gates.hpp"

namespace revlab::quantum {

// Elementary operations every decomposition is billed in. V is the square
// root of X ((1+i)/2 I + (1-i)/2 X); VDG is its inverse. CV / CVDG apply
// them under a control line, CX is the controlled NOT, X the plain NOT.
enum class PrimKind { X, CX, CV, CVDG };

std::string prim_kind_name(PrimKind k);

struct Primitive {
    PrimKind kind;
    int target = 0;
    int control = -1;  // -1 for X

    bool operator==(const Primitive& o) const = default;
};

std::string prim_str(const Primitive& p);  // e.g. "CV(0->2)" or "X(1)"

// A width-`width` circuit as an ordered primitive list (applied left to
// right). Cost is the primitive count; depth packs primitives into layers
// where two primitives sharing no line may run side by side.
struct QuantumCircuit {
    int width = 0;
    std::vector<Primitive> prims;

    int cost() const { return int(prims.size()); }
};

int logical_depth(const QuantumCircuit& c);

// Dense unitary on 2^width basis states. Basis index bit layout matches
// gates::BitVector: line 0 is the most significant bit of the index.
class Unitary {
  public:
    explicit Unitary(int width);  // identity
    int width() const { return width_; }
    size_t dim() const { return dim_; }
    std::complex<double>& at(size_t row, size_t col) { return m_[row * dim_ + col]; }
    const std::complex<double>& at(size_t row, size_t col) const {
        return m_[row * dim_ + col];
    }

    // this := prim * this (apply prim after the existing product).
    void apply_left(const Primitive& p);

    bool is_unitary(double tol = 1e-12) const;

  private:
    int width_;
    size_t dim_;
    std::vector<std::complex<double>> m_;
};

Unitary circuit_unitary(const QuantumCircuit& c);

// True iff U equals the 0/1 matrix of `perm` up to one global phase:
// column j must be a unit entry at row perm(j) and the phase must be the
// same for every column (|entry| within tol of 1, off entries within tol
// of 0).
bool equals_permutation(const Unitary& u, const gates::Permutation& perm,
                        double tol = 1e-9);

// Statevector route: simulate |code> through the circuit and check the
// result is a basis state matching perm(code), for every code.
bool simulates_permutation(const QuantumCircuit& c,
                           const gates::Permutation& perm, double tol = 1e-9);

// Builtin decompositions for every builtin gate, in primitive form.
struct Decomposition {
    std::string gate;
    QuantumCircuit circuit;
};

const std::vector<Decomposition>& registry();
const QuantumCircuit& registered_decomposition(const std::string& gate);

struct RegistryCheck {
    std::string gate;
    bool matches = false;       // circuit realises the gate's permutation
    bool cost_matches = false;  // primitive count equals the cited cost
    int cost = 0;
    int depth = 0;
};

std::vector<RegistryCheck> verify_registry();

}  // namespace revlab::quantum
