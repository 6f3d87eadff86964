# Copyright 2026 The Revlab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Reversible-logic workbench: gates, primitive costs, storage designs."""

from revlab._core import (
    OscillationError,
    ParseError,
    analyze_netlist,
    apply_gate,
    cited_gate_cost,
    claims,
    design_ids,
    design_netlist,
    excite_design,
    gate_names,
    gate_table,
    gate_width,
    improvement_percent,
    min_cost,
    registered_circuit,
    verify_design,
    verify_registry,
)

__all__ = [
    "OscillationError",
    "ParseError",
    "analyze_netlist",
    "apply_gate",
    "cited_gate_cost",
    "claims",
    "design_ids",
    "design_netlist",
    "excite_design",
    "gate_names",
    "gate_table",
    "gate_width",
    "improvement_percent",
    "min_cost",
    "registered_circuit",
    "verify_design",
    "verify_registry",
]
