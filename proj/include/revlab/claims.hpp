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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "revlab/synth.hpp"

namespace revlab::claims {

// One reference figure checked against what this implementation measures.
// The reference publication sometimes states a figure twice (prose and
// summary table) with different values; both slots are kept so a verdict
// can say which one the measurement agrees with.
struct ClaimRecord {
    std::string subject;  // "gate:NOT" or a design id such as "ms_jk"
    std::string metric;   // "quantum_cost", "delay", "garbage", ...
    std::optional<int> text_claim;
    std::optional<int> table_claim;
    int achieved = 0;
    std::string verdict;  // match | text-matches | table-matches | mismatch
};

// Every reference figure, measured live: gate costs against the atlas and
// the registered circuits, the published output-equation discrepancies,
// then cost / delay / garbage for each storage design.
std::vector<ClaimRecord> claims_ledger(const synth::CostAtlas& atlas);

// Percentage saved going from `existing` to `proposed`, rounded to the
// nearest integer with exact halves rounded toward zero (the convention
// the reference comparison tables follow).
int improvement_percent(int existing, int proposed);

struct ImprovementRow {
    std::string label;     // design and compared row, e.g. "sr vs [14]"
    std::string metric;    // "quantum_cost", "delay" or "garbage"
    int existing = 0;
    int proposed = 0;
    int printed = 0;   // percentage the reference tables print
    int computed = 0;  // improvement_percent(existing, proposed)
    bool matches = false;
};

// The reference comparison tables, recomputed row by row.
std::vector<ImprovementRow> improvement_rows();

std::string verdict_for(std::optional<int> text_claim,
                        std::optional<int> table_claim, int achieved);

void print_claims_text(const std::vector<ClaimRecord>& records, std::ostream& out);
std::string claims_json(const std::vector<ClaimRecord>& records);
void print_improvements_text(const std::vector<ImprovementRow>& rows,
                             std::ostream& out);

}  // namespace revlab::claims
