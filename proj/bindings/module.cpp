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

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "revlab/claims.hpp"
#include "revlab/gates.hpp"
#include "revlab/netlist.hpp"
#include "revlab/quantum.hpp"
#include "revlab/seq.hpp"
#include "revlab/synth.hpp"

namespace py = pybind11;

namespace {

using namespace revlab;

std::vector<int> py_apply_gate(const std::string& name,
                               const std::vector<int>& bits) {
    const auto& def = gates::builtin_gate(name);
    if (int(bits.size()) != def.width) {
        throw std::invalid_argument(name + " takes " +
                                    std::to_string(def.width) + " bits");
    }
    auto out = def.perm.apply(gates::BitVector::from_bits(bits));
    return out.bits();
}

// Rows of (input bits, output bits) in input-code order.
std::vector<std::pair<std::vector<int>, std::vector<int>>> py_gate_table(
    const std::string& name) {
    const auto& def = gates::builtin_gate(name);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> rows;
    for (unsigned code = 0; code < (1u << def.width); ++code) {
        gates::BitVector in(def.width, code);
        rows.emplace_back(in.bits(), def.perm.apply(in).bits());
    }
    return rows;
}

const synth::CostAtlas& shared_atlas() {
    static const synth::CostAtlas atlas = [] {
        if (const char* env = std::getenv("REVLAB_ATLAS"); env && *env) {
            return synth::CostAtlas::load_file(env);
        }
        return synth::CostAtlas::build(3, 5);
    }();
    return atlas;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "reversible-logic workbench core";

    py::register_exception<netlist::ParseError>(m, "ParseError",
                                                PyExc_ValueError);
    py::register_exception<seq::OscillationError>(m, "OscillationError",
                                                  PyExc_RuntimeError);

    m.def("gate_names", &gates::builtin_gate_names,
          "Builtin gate names, fixed order.");
    m.def("gate_width",
          [](const std::string& name) { return gates::builtin_gate(name).width; });
    m.def("cited_gate_cost",
          [](const std::string& name) {
              return gates::builtin_gate(name).claimed_cost;
          },
          "The cost figure the reference gives for the gate.");
    m.def("apply_gate", &py_apply_gate, py::arg("name"), py::arg("bits"),
          "Apply a builtin gate to a bit list (line 0 first).");
    m.def("gate_table", &py_gate_table, py::arg("name"),
          "Truth table as (input bits, output bits) rows.");

    m.def(
        "verify_registry",
        [] {
            std::vector<std::map<std::string, py::object>> rows;
            for (const auto& rc : quantum::verify_registry()) {
                std::map<std::string, py::object> row;
                row["gate"] = py::cast(rc.gate);
                row["matches"] = py::cast(rc.matches);
                row["cost_matches"] = py::cast(rc.cost_matches);
                row["cost"] = py::cast(rc.cost);
                row["depth"] = py::cast(rc.depth);
                rows.push_back(std::move(row));
            }
            return rows;
        },
        "Check every registered primitive circuit against its gate.");
    m.def(
        "registered_circuit",
        [](const std::string& gate) {
            std::vector<std::string> prims;
            for (const auto& p : quantum::registered_decomposition(gate).prims) {
                prims.push_back(quantum::prim_str(p));
            }
            return prims;
        },
        "Primitive realization of a builtin gate, as strings.");

    m.def(
        "min_cost",
        [](const std::string& gate) {
            auto found = synth::min_cost_synthesis(
                gates::builtin_gate(gate).perm, shared_atlas());
            return found ? py::cast(found->cost()) : py::none().cast<py::object>();
        },
        "Exhaustively-searched minimal primitive count for a width-<=3 gate.");

    m.def(
        "analyze_netlist",
        [](const std::string& text) {
            auto n = netlist::parse_netlist(text);
            netlist::validate(n);
            auto met = netlist::metrics(n);
            std::map<std::string, int> out;
            out["width"] = met.width;
            out["gate_count"] = met.gate_count;
            out["quantum_cost"] = met.quantum_cost;
            out["delay"] = met.delay;
            out["logical_depth"] = met.logical_depth;
            out["garbage"] = met.garbage;
            return out;
        },
        "Parse, validate and measure a netlist given as text.");

    m.def("design_ids", &seq::design_ids, "Builtin storage design ids.");
    m.def(
        "design_netlist",
        [](const std::string& id) { return seq::design_source(id); },
        "Canonical netlist text for a builtin storage design.");
    m.def(
        "verify_design",
        [](const std::string& id) {
            std::vector<std::map<std::string, py::object>> rows;
            for (const auto& row :
                 seq::verify_characteristic(seq::builtin_design(id))) {
                std::map<std::string, py::object> r;
                r["inputs"] = py::cast(row.inputs);
                r["q"] = py::cast(row.q);
                r["expected"] = py::cast(row.expected);
                r["got"] = py::cast(row.got);
                r["pass"] = py::cast(row.pass);
                rows.push_back(std::move(r));
            }
            return rows;
        },
        "Characteristic-equation check rows for one design.");
    m.def(
        "excite_design",
        [](const std::string& id, const netlist::InputMap& inputs,
           int q) {
            const auto& spec = seq::builtin_design(id);
            auto res = seq::excite(spec, inputs, seq::seeded_state(spec, q));
            std::map<std::string, int> out;
            out["Q"] = seq::output_value(spec.net, res.line_values, "Q");
            out["QBAR"] = seq::output_value(spec.net, res.line_values, "QBAR");
            out["stored"] = seq::stored_bit(spec, res.state);
            return out;
        },
        py::arg("id"), py::arg("inputs"), py::arg("q"),
        "Apply one excitation to a design holding bit q.");

    m.def("improvement_percent", &claims::improvement_percent,
          py::arg("existing"), py::arg("proposed"));
    m.def(
        "claims",
        [] {
            std::vector<std::map<std::string, py::object>> rows;
            for (const auto& r : claims::claims_ledger(shared_atlas())) {
                std::map<std::string, py::object> row;
                row["subject"] = py::cast(r.subject);
                row["metric"] = py::cast(r.metric);
                row["text_claim"] = r.text_claim ? py::cast(*r.text_claim)
                                                 : py::none().cast<py::object>();
                row["table_claim"] = r.table_claim
                                         ? py::cast(*r.table_claim)
                                         : py::none().cast<py::object>();
                row["achieved"] = py::cast(r.achieved);
                row["verdict"] = py::cast(r.verdict);
                rows.push_back(std::move(row));
            }
            return rows;
        },
        "Reference figures versus measured ones.");
}
