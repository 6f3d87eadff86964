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

#include "revlab/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace revlab::quantum {

namespace {

using cplx = std::complex<double>;

constexpr cplx kVDiag{0.5, 0.5};   // (1+i)/2
constexpr cplx kVOff{0.5, -0.5};   // (1-i)/2

void check_prim(const Primitive& p, int width) {
    if (p.target < 0 || p.target >= width) {
        throw std::out_of_range("primitive target out of range");
    }
    if (p.kind == PrimKind::X) {
        if (p.control != -1) {
            throw std::invalid_argument("X takes no control line");
        }
        return;
    }
    if (p.control < 0 || p.control >= width || p.control == p.target) {
        throw std::out_of_range("primitive control out of range");
    }
}

// Mask with the bit for `line` set, in the MSB-first index layout.
size_t line_mask(int width, int line) {
    return size_t(1) << (width - 1 - line);
}

// Applies one primitive to a set of column vectors stored row-major as
// data[row * ncols + col]. Works for both the unitary (ncols = dim) and a
// single statevector (ncols = 1).
void apply_prim_rows(const Primitive& p, int width, cplx* data, size_t ncols) {
    size_t dim = size_t(1) << width;
    size_t tmask = line_mask(width, p.target);
    size_t cmask = p.kind == PrimKind::X ? 0 : line_mask(width, p.control);
    bool is_v = p.kind == PrimKind::CV || p.kind == PrimKind::CVDG;
    cplx a = p.kind == PrimKind::CVDG ? std::conj(kVDiag) : kVDiag;
    cplx b = p.kind == PrimKind::CVDG ? std::conj(kVOff) : kVOff;

    for (size_t r0 = 0; r0 < dim; ++r0) {
        if (r0 & tmask) continue;              // visit each pair once
        if ((r0 & cmask) != cmask) continue;   // control must be set
        size_t r1 = r0 | tmask;
        cplx* row0 = data + r0 * ncols;
        cplx* row1 = data + r1 * ncols;
        for (size_t c = 0; c < ncols; ++c) {
            cplx x0 = row0[c], x1 = row1[c];
            if (is_v) {
                row0[c] = a * x0 + b * x1;
                row1[c] = b * x0 + a * x1;
            } else {
                row0[c] = x1;
                row1[c] = x0;
            }
        }
    }
}

}  // namespace

std::string prim_kind_name(PrimKind k) {
    switch (k) {
        case PrimKind::X: return "X";
        case PrimKind::CX: return "CX";
        case PrimKind::CV: return "CV";
        case PrimKind::CVDG: return "CVDG";
    }
    throw std::invalid_argument("bad primitive kind");
}

std::string prim_str(const Primitive& p) {
    if (p.kind == PrimKind::X) {
        return "X(" + std::to_string(p.target) + ")";
    }
    return prim_kind_name(p.kind) + "(" + std::to_string(p.control) + "->" +
           std::to_string(p.target) + ")";
}

int logical_depth(const QuantumCircuit& c) {
    std::vector<int> frontier(c.width, 0);
    int depth = 0;
    for (const auto& p : c.prims) {
        check_prim(p, c.width);
        int layer = frontier[p.target];
        if (p.kind != PrimKind::X) layer = std::max(layer, frontier[p.control]);
        ++layer;
        frontier[p.target] = layer;
        if (p.kind != PrimKind::X) frontier[p.control] = layer;
        depth = std::max(depth, layer);
    }
    return depth;
}

Unitary::Unitary(int width) : width_(width), dim_(size_t(1) << width) {
    if (width < 1 || width > 6) {
        throw std::invalid_argument("unitary width must be in 1..6");
    }
    m_.assign(dim_ * dim_, cplx{0.0, 0.0});
    for (size_t i = 0; i < dim_; ++i) at(i, i) = 1.0;
}

void Unitary::apply_left(const Primitive& p) {
    check_prim(p, width_);
    apply_prim_rows(p, width_, m_.data(), dim_);
}

bool Unitary::is_unitary(double tol) const {
    for (size_t i = 0; i < dim_; ++i) {
        for (size_t j = 0; j < dim_; ++j) {
            cplx dot{0.0, 0.0};
            for (size_t k = 0; k < dim_; ++k) {
                dot += at(k, i) * std::conj(at(k, j));
            }
            cplx expect = i == j ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            if (std::abs(dot - expect) > tol) return false;
        }
    }
    return true;
}

Unitary circuit_unitary(const QuantumCircuit& c) {
    Unitary u(c.width);
    for (const auto& p : c.prims) u.apply_left(p);
    return u;
}

bool equals_permutation(const Unitary& u, const gates::Permutation& perm,
                        double tol) {
    if (u.width() != perm.width()) return false;
    size_t dim = u.dim();
    cplx phase = u.at(perm.apply(0u), 0);
    if (std::abs(std::abs(phase) - 1.0) > tol) return false;
    for (size_t col = 0; col < dim; ++col) {
        size_t hit = perm.apply(unsigned(col));
        for (size_t row = 0; row < dim; ++row) {
            cplx expect = row == hit ? phase : cplx{0.0, 0.0};
            if (std::abs(u.at(row, col) - expect) > tol) return false;
        }
    }
    return true;
}

bool simulates_permutation(const QuantumCircuit& c,
                           const gates::Permutation& perm, double tol) {
    if (c.width != perm.width()) return false;
    size_t dim = size_t(1) << c.width;
    std::vector<cplx> state(dim);
    for (size_t code = 0; code < dim; ++code) {
        std::fill(state.begin(), state.end(), cplx{0.0, 0.0});
        state[code] = 1.0;
        for (const auto& p : c.prims) {
            check_prim(p, c.width);
            apply_prim_rows(p, c.width, state.data(), 1);
        }
        size_t hit = perm.apply(unsigned(code));
        for (size_t row = 0; row < dim; ++row) {
            double want = row == hit ? 1.0 : 0.0;
            if (std::abs(std::abs(state[row]) - want) > tol) return false;
        }
    }
    return true;
}

const QuantumCircuit& registered_decomposition(const std::string& gate) {
    for (const auto& d : registry()) {
        if (d.gate == gate) return d.circuit;
    }
    throw std::out_of_range("no registered decomposition for gate: " + gate);
}

std::vector<RegistryCheck> verify_registry() {
    std::vector<RegistryCheck> out;
    for (const auto& d : registry()) {
        const auto& def = gates::builtin_gate(d.gate);
        RegistryCheck chk;
        chk.gate = d.gate;
        chk.cost = d.circuit.cost();
        chk.depth = logical_depth(d.circuit);
        Unitary u = circuit_unitary(d.circuit);
        chk.matches = d.circuit.width == def.width &&
                      equals_permutation(u, def.perm) &&
                      simulates_permutation(d.circuit, def.perm);
        chk.cost_matches = def.claimed_cost && chk.cost == *def.claimed_cost;
        out.push_back(chk);
    }
    return out;
}

}  // namespace revlab::quantum
