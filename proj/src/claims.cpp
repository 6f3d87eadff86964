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

#include "revlab/claims.hpp"

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "revlab/seq.hpp"

namespace revlab::claims {

namespace {

int achieved_gate_cost(const synth::CostAtlas& atlas, const std::string& name) {
    const auto& def = gates::builtin_gate(name);
    if (def.width == 3) {
        if (auto found = synth::min_cost_synthesis(def.perm, atlas)) {
            return found->cost();
        }
    }
    // Narrow gates, and the gates whose minimum lies past the atlas bound,
    // are costed by their registered circuits. Those circuits are frozen at
    // the exhaustively certified minimum (atlas absence bounds from below,
    // the registered word from above), so this is still the exact figure.
    return quantum::registered_decomposition(name).cost();
}

// The reference text also prints a closed form for the three-line cell's
// middle output that disagrees with its own truth table. These measure the
// printed algebra: P = A', Q = A'B xor A'C, R = A'C xor AB.
int printed_formula_code(unsigned a, unsigned b, unsigned c) {
    unsigned p = 1u - a;
    unsigned q = ((1u - a) & b) ^ ((1u - a) & c);
    unsigned r = ((1u - a) & c) ^ (a & b);
    return int(p << 2 | q << 1 | r);
}

struct DesignClaim {
    const char* id;
    // text = figure in the running text, table = figure in the summary
    // table; one entry where the two disagree.
    int cost_text, cost_table;
    int delay_text, delay_table;
    int garbage_text, garbage_table;
};

// Cited figures for the eight storage designs.
constexpr DesignClaim kDesignClaims[] = {
    {"sr", 5, 5, 5, 5, 1, 1},
    {"gated_sr", 10, 11, 10, 11, 2, 2},
    {"ms_sr", 14, 15, 14, 15, 4, 4},
    {"jk", 5, 5, 5, 5, 1, 1},
    {"gated_jk", 10, 10, 10, 10, 2, 2},
    {"ms_jk", 15, 15, 15, 15, 4, 4},
    {"gated_d", 6, 6, 6, 6, 1, 1},
    {"ms_d", 11, 11, 11, 11, 3, 3},
};

ClaimRecord make_record(std::string subject, std::string metric,
                        std::optional<int> text_claim,
                        std::optional<int> table_claim, int achieved) {
    ClaimRecord r;
    r.subject = std::move(subject);
    r.metric = std::move(metric);
    r.text_claim = text_claim;
    r.table_claim = table_claim;
    r.achieved = achieved;
    r.verdict = verdict_for(r.text_claim, r.table_claim, r.achieved);
    return r;
}

}  // namespace

std::string verdict_for(std::optional<int> text_claim,
                        std::optional<int> table_claim, int achieved) {
    if (text_claim && table_claim && *text_claim != *table_claim) {
        if (achieved == *text_claim) return "text-matches";
        if (achieved == *table_claim) return "table-matches";
        return "mismatch";
    }
    std::optional<int> claim = text_claim ? text_claim : table_claim;
    if (!claim) return "unclaimed";
    return achieved == *claim ? "match" : "mismatch";
}

std::vector<ClaimRecord> claims_ledger(const synth::CostAtlas& atlas) {
    std::vector<ClaimRecord> out;

    // Gate costs. Cited figures: the inverter and the two-line copy gate
    // are unit cost; the double copy gate costs 2; the three-line
    // swap-and-control cells cost 5, 5 and 4; the new cell is cited at 4;
    // the level-trigger cell's cost is implied (4) by the latch totals.
    struct GateClaim {
        const char* name;
        std::optional<int> text;
        std::optional<int> table;
    };
    const GateClaim gate_claims[] = {
        {"NOT", 1, std::nullopt},  {"FG", 1, std::nullopt},
        {"DFG", 2, std::nullopt},  {"TG", 5, std::nullopt},
        {"FRG", 5, std::nullopt},  {"PG", 4, std::nullopt},
        {"SAM", 4, std::nullopt},  {"MPG", std::nullopt, 4},
    };
    for (const auto& gc : gate_claims) {
        out.push_back(make_record("gate:" + std::string(gc.name),
                                  "quantum_cost", gc.text, gc.table,
                                  achieved_gate_cost(atlas, gc.name)));
    }

    // The printed closed form for SAM's middle output versus its truth
    // table: the cited algebra should be a bijection agreeing on all 8
    // rows; measure what it actually does.
    {
        const auto& sam = gates::builtin_gate("SAM").perm;
        int matching = 0;
        bool seen[8] = {};
        bool bijective = true;
        for (unsigned code = 0; code < 8; ++code) {
            int got = printed_formula_code(code >> 2 & 1u, code >> 1 & 1u,
                                           code & 1u);
            if (got == int(sam.apply(gates::BitVector(3, code)).code())) {
                ++matching;
            }
            if (seen[got]) bijective = false;
            seen[got] = true;
        }
        out.push_back(make_record("gate:SAM", "printed_formula_bijective", 1,
                                  std::nullopt, bijective ? 1 : 0));
        out.push_back(make_record("gate:SAM", "printed_formula_rows_matching_table",
                                  8, std::nullopt, matching));
    }

    for (const auto& dc : kDesignClaims) {
        const auto& spec = seq::builtin_design(dc.id);
        auto m = netlist::metrics(spec.net);
        out.push_back(make_record(dc.id, "quantum_cost", dc.cost_text,
                                  dc.cost_table, m.quantum_cost));
        out.push_back(make_record(dc.id, "delay", dc.delay_text, dc.delay_table,
                                  m.delay));
        out.push_back(make_record(dc.id, "garbage", dc.garbage_text,
                                  dc.garbage_table, m.garbage));
    }
    return out;
}

int improvement_percent(int existing, int proposed) {
    if (existing <= 0) throw std::invalid_argument("existing figure must be > 0");
    int num = 100 * (existing - proposed);
    int q = num / existing;  // truncates toward zero
    int rem = num % existing;
    if (std::abs(rem) * 2 > std::abs(existing)) q += num >= 0 ? 1 : -1;
    return q;
}

std::vector<ImprovementRow> improvement_rows() {
    struct ComparedRow {
        const char* design;
        const char* versus;
        int cost_exist, delay_exist, garbage_exist;
        int cost_prop, delay_prop, garbage_prop;
        int cost_printed, delay_printed, garbage_printed;
    };
    // Existing / proposed figures and the printed percentages, one entry
    // per compared design. Proposed figures follow the running text where
    // text and summary table disagree, because the printed percentages
    // only reproduce from the text figures.
    const ComparedRow compared[] = {
        {"sr", "[14]", 10, 10, 2, 5, 5, 1, 50, 50, 50},
        {"sr", "[15]", 8, 8, 2, 5, 5, 1, 37, 37, 50},
        {"gated_sr", "[15]", 17, 17, 3, 10, 10, 2, 41, 41, 33},
        {"ms_sr", "[15]", 22, 22, 4, 14, 14, 4, 36, 36, 0},
        {"jk", "[15]", 13, 13, 3, 5, 5, 1, 62, 62, 67},
        {"jk", "[16]", 12, 12, 3, 5, 5, 1, 58, 58, 67},
        {"gated_jk", "[17]", 16, 16, 3, 10, 10, 2, 37, 37, 33},
        {"gated_jk", "[15]", 13, 13, 3, 10, 10, 2, 23, 23, 33},
        {"ms_jk", "[17]", 24, 23, 5, 15, 15, 4, 37, 37, 20},
        {"ms_jk", "[15]", 19, 19, 4, 15, 15, 4, 21, 21, 0},
        {"gated_d", "[15]", 7, 7, 2, 6, 6, 1, 14, 14, 50},
        {"gated_d", "[16]", 7, 7, 2, 6, 6, 1, 14, 14, 50},
        // The last comparison table keys its rows by the cited figures;
        // one bracket label there is off by one, so rows here are named
        // by the design the figures belong to.
        {"ms_d", "[18]", 14, 14, 3, 11, 11, 3, 21, 21, 0},
        {"ms_d", "[15]", 13, 13, 3, 11, 11, 3, 15, 15, 0},
    };
    std::vector<ImprovementRow> rows;
    auto push = [&rows](const ComparedRow& c, const char* metric, int exist,
                        int prop, int printed) {
        ImprovementRow r;
        r.label = std::string(c.design) + " vs " + c.versus;
        r.metric = metric;
        r.existing = exist;
        r.proposed = prop;
        r.printed = printed;
        r.computed = improvement_percent(exist, prop);
        r.matches = r.computed == r.printed;
        rows.push_back(std::move(r));
    };
    for (const auto& c : compared) {
        push(c, "quantum_cost", c.cost_exist, c.cost_prop, c.cost_printed);
        push(c, "delay", c.delay_exist, c.delay_prop, c.delay_printed);
        push(c, "garbage", c.garbage_exist, c.garbage_prop, c.garbage_printed);
    }
    return rows;
}

void print_claims_text(const std::vector<ClaimRecord>& records,
                       std::ostream& out) {
    auto cell = [](std::optional<int> v) {
        return v ? std::to_string(*v) : std::string("-");
    };
    out << std::left << std::setw(10) << "subject" << std::setw(36) << "metric"
        << std::setw(6) << "text" << std::setw(7) << "table" << std::setw(10)
        << "achieved" << "verdict\n";
    int mismatches = 0;
    for (const auto& r : records) {
        out << std::left << std::setw(10) << r.subject << std::setw(36)
            << r.metric << std::setw(6) << cell(r.text_claim) << std::setw(7)
            << cell(r.table_claim) << std::setw(10) << r.achieved << r.verdict
            << "\n";
        if (r.verdict == "mismatch") ++mismatches;
    }
    out << records.size() << " records, " << mismatches << " mismatch"
        << (mismatches == 1 ? "" : "es") << "\n";
}

std::string claims_json(const std::vector<ClaimRecord>& records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json o;
        o["subject"] = r.subject;
        o["metric"] = r.metric;
        if (r.text_claim) {
            o["text_claim"] = *r.text_claim;
        } else {
            o["text_claim"] = nullptr;
        }
        if (r.table_claim) {
            o["table_claim"] = *r.table_claim;
        } else {
            o["table_claim"] = nullptr;
        }
        o["achieved"] = r.achieved;
        o["verdict"] = r.verdict;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

void print_improvements_text(const std::vector<ImprovementRow>& rows,
                             std::ostream& out) {
    out << std::left << std::setw(16) << "comparison" << std::setw(14)
        << "metric" << std::right << std::setw(9) << "existing" << std::setw(9)
        << "proposed" << std::setw(9) << "printed" << std::setw(9) << "computed"
        << "  agree\n";
    int off = 0;
    for (const auto& r : rows) {
        out << std::left << std::setw(16) << r.label << std::setw(14)
            << r.metric << std::right << std::setw(9) << r.existing
            << std::setw(9) << r.proposed << std::setw(9) << r.printed
            << std::setw(9) << r.computed << "  "
            << (r.matches ? "yes" : "NO") << "\n";
        if (!r.matches) ++off;
    }
    out << rows.size() << " rows, " << off << " disagree"
        << (off == 1 ? "s" : "") << " with the printed figure\n";
}

}  // namespace revlab::claims
