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

#include "revlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "revlab/claims.hpp"
#include "revlab/gates.hpp"
#include "revlab/netlist.hpp"
#include "revlab/quantum.hpp"
#include "revlab/seq.hpp"
#include "revlab/synth.hpp"

namespace revlab::cli {

namespace {

const char kUsage[] =
    "usage: revlab <command> [args]\n"
    "\n"
    "  gates list                     builtin gates with widths and cited costs\n"
    "  gates table NAME               truth table, one row per input code\n"
    "  gates check NAME               bijectivity / balance report\n"
    "  qc verify [NAME]               check registered circuits against the gates\n"
    "  qc synth NAME|--perm FILE      minimal primitive realization\n"
    "       [--max-cost N] [--atlas FILE]\n"
    "  qc atlas --width W --max-cost N [--out FILE]\n"
    "                                 exhaustive minimal-cost table\n"
    "  analyze FILE                   netlist metrics (cost, delay, garbage)\n"
    "  sim FILE --stimulus FILE       settle a netlist through input steps\n"
    "  ff verify ID|all               storage designs vs their equations\n"
    "  report claims [--json] [--subject S] [--metric M] [--atlas FILE]\n"
    "                                 cited figures vs measured ones\n"
    "  report improvements            cited percentages, recomputed\n";

struct Flags {
    std::vector<std::string> positional;
    std::map<std::string, std::string> named;
    std::set<std::string> bare;  // flags given without a value
};

// Splits args into positionals and --flag [value] pairs. `value_flags`
// lists the flags that consume the next argument.
std::optional<Flags> parse_flags(const std::vector<std::string>& args,
                                 size_t start,
                                 const std::set<std::string>& value_flags,
                                 const std::set<std::string>& bare_flags,
                                 std::ostream& err) {
    Flags f;
    for (size_t i = start; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a.rfind("--", 0) == 0) {
            if (bare_flags.count(a)) {
                f.bare.insert(a);
            } else if (value_flags.count(a)) {
                if (i + 1 >= args.size()) {
                    err << "revlab: " << a << " needs a value\n";
                    return std::nullopt;
                }
                f.named[a] = args[++i];
            } else {
                err << "revlab: unknown flag " << a << "\n";
                return std::nullopt;
            }
        } else {
            f.positional.push_back(a);
        }
    }
    return f;
}

std::optional<int> parse_int(const std::string& s) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) return std::nullopt;
        return v;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// --atlas flag, then REVLAB_ATLAS, then an in-process build.
synth::CostAtlas resolve_atlas(const std::map<std::string, std::string>& named,
                               int max_cost, std::ostream& err) {
    auto it = named.find("--atlas");
    if (it != named.end()) return synth::CostAtlas::load_file(it->second);
    if (const char* env = std::getenv("REVLAB_ATLAS"); env && *env) {
        return synth::CostAtlas::load_file(env);
    }
    err << "note: building the width-3 atlas in process (max cost " << max_cost
        << "); pass --atlas or set REVLAB_ATLAS to reuse a saved one\n";
    return synth::CostAtlas::build(3, max_cost);
}

std::string cost_cell(const std::optional<int>& cost) {
    return cost ? std::to_string(*cost) : std::string("(implied)");
}

int cmd_gates(const std::vector<std::string>& args, std::ostream& out,
              std::ostream& err) {
    if (args.size() < 2) {
        err << kUsage;
        return kExitUsage;
    }
    const std::string& verb = args[1];
    if (verb == "list") {
        for (const auto& name : gates::builtin_gate_names()) {
            const auto& def = gates::builtin_gate(name);
            out << std::left << std::setw(5) << def.name << " width "
                << def.width << "  cited cost " << cost_cell(def.claimed_cost)
                << "\n";
        }
        return kExitOk;
    }
    if (args.size() != 3) {
        err << kUsage;
        return kExitUsage;
    }
    if (!gates::is_builtin_gate(args[2])) {
        err << "revlab: unknown gate '" << args[2] << "'\n";
        return kExitFailed;
    }
    const auto& def = gates::builtin_gate(args[2]);
    if (verb == "table") {
        for (const auto& p : def.input_ports) out << p << " ";
        out << "|";
        for (const auto& p : def.output_ports) out << " " << p;
        out << "\n";
        size_t size = size_t(1) << def.width;
        for (unsigned code = 0; code < size; ++code) {
            gates::BitVector in(def.width, code);
            auto o = def.perm.apply(in);
            for (int b = 0; b < def.width; ++b) out << in.bit(b) << " ";
            out << "|";
            for (int b = 0; b < def.width; ++b) out << " " << o.bit(b);
            out << "\n";
        }
        return kExitOk;
    }
    if (verb == "check") {
        bool balanced = def.perm.is_balanced();
        out << def.name << ": bijective yes (verified permutation), "
            << (balanced ? "balanced yes" : "balanced no") << ", width "
            << def.width << "\n";
        return kExitOk;
    }
    err << kUsage;
    return kExitUsage;
}

int cmd_qc_verify(const std::vector<std::string>& args, std::ostream& out,
                  std::ostream& err) {
    std::optional<std::string> only;
    if (args.size() == 3) {
        only = args[2];
        if (!gates::is_builtin_gate(*only)) {
            err << "revlab: unknown gate '" << *only << "'\n";
            return kExitFailed;
        }
    } else if (args.size() > 3) {
        err << kUsage;
        return kExitUsage;
    }
    int checked = 0, good = 0;
    for (const auto& rc : quantum::verify_registry()) {
        if (only && rc.gate != *only) continue;
        ++checked;
        const auto& def = gates::builtin_gate(rc.gate);
        out << std::left << std::setw(5) << rc.gate
            << (rc.matches ? " circuit matches " : " CIRCUIT DIFFERS ")
            << "(cost " << rc.cost << ", depth " << rc.depth << ", cited "
            << cost_cell(def.claimed_cost)
            << (rc.cost_matches ? "" : " <- differs") << ")\n";
        if (rc.matches) ++good;
    }
    out << good << "/" << checked << " registered circuits verified\n";
    return good == checked && checked > 0 ? kExitOk : kExitFailed;
}

std::optional<gates::Permutation> perm_from_file(const std::string& path,
                                                 std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "revlab: cannot open '" << path << "'\n";
        return std::nullopt;
    }
    std::vector<unsigned> codes;
    long long v = 0;
    while (in >> v) codes.push_back(unsigned(v));
    if (!in.eof()) {
        err << "revlab: '" << path << "' must hold whitespace-separated "
            << "output codes\n";
        return std::nullopt;
    }
    int width = 0;
    while ((size_t(1) << width) < codes.size()) ++width;
    if (codes.empty() || (size_t(1) << width) != codes.size()) {
        err << "revlab: expected a power-of-two number of codes, got "
            << codes.size() << "\n";
        return std::nullopt;
    }
    if (!gates::is_bijective(codes)) {
        err << "revlab: the map in '" << path << "' is not a bijection\n";
        return std::nullopt;
    }
    return gates::Permutation(width,
                              std::vector<uint8_t>(codes.begin(), codes.end()));
}

int cmd_qc_synth(const Flags& f, std::ostream& out, std::ostream& err) {
    int max_cost = synth::CostAtlas::kMaxCost - 1;
    if (auto it = f.named.find("--max-cost"); it != f.named.end()) {
        auto v = parse_int(it->second);
        if (!v || *v < 0 || *v > synth::CostAtlas::kMaxCost) {
            err << "revlab: --max-cost must be between 0 and "
                << synth::CostAtlas::kMaxCost << "\n";
            return kExitUsage;
        }
        max_cost = *v;
    }
    std::optional<gates::Permutation> perm;
    std::string subject;
    if (auto it = f.named.find("--perm"); it != f.named.end()) {
        if (f.positional.size() != 2) {
            err << kUsage;
            return kExitUsage;
        }
        perm = perm_from_file(it->second, err);
        if (!perm) return kExitFailed;
        subject = it->second;
    } else {
        if (f.positional.size() != 3) {
            err << kUsage;
            return kExitUsage;
        }
        subject = f.positional[2];
        if (!gates::is_builtin_gate(subject)) {
            err << "revlab: unknown gate '" << subject << "'\n";
            return kExitFailed;
        }
        perm = gates::builtin_gate(subject).perm;
    }
    if (perm->width() > synth::CostAtlas::kMaxWidth) {
        err << "revlab: exhaustive synthesis covers widths up to "
            << synth::CostAtlas::kMaxWidth << "\n";
        return kExitFailed;
    }
    auto atlas = resolve_atlas(f.named, max_cost, err);
    auto found = synth::min_cost_synthesis(*perm, atlas);
    if (!found) {
        out << subject << ": no realization within cost " << atlas.max_cost()
            << "\n";
        return kExitFailed;
    }
    out << subject << ": minimum cost " << found->cost() << "\n";
    for (const auto& p : found->prims) out << "  " << quantum::prim_str(p) << "\n";
    return kExitOk;
}

int cmd_qc_atlas(const Flags& f, std::ostream& out, std::ostream& err) {
    auto get = [&](const char* flag) -> std::optional<int> {
        auto it = f.named.find(flag);
        if (it == f.named.end()) return std::nullopt;
        return parse_int(it->second);
    };
    auto width = get("--width");
    auto max_cost = get("--max-cost");
    if (!width || !max_cost) {
        err << "revlab: qc atlas needs --width and --max-cost\n";
        return kExitUsage;
    }
    auto atlas = synth::CostAtlas::build(*width, *max_cost);
    if (auto it = f.named.find("--out"); it != f.named.end()) {
        atlas.save_file(it->second);
        out << "wrote " << it->second << "\n";
    }
    size_t counts[synth::CostAtlas::kMaxCost + 1] = {};
    for (const auto& [key, rec] : atlas.records()) {
        (void)key;
        ++counts[size_t(rec.cost)];
    }
    out << "width " << *width << ", max cost " << *max_cost << ": "
        << atlas.records().size() << " permutations reached\n";
    for (int c = 0; c <= *max_cost; ++c) {
        out << "  cost " << c << ": " << counts[size_t(c)] << "\n";
    }
    return kExitOk;
}

int cmd_analyze(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    if (args.size() != 2) {
        err << kUsage;
        return kExitUsage;
    }
    auto n = netlist::parse_netlist_file(args[1]);
    netlist::validate(n);
    auto m = netlist::metrics(n);
    out << "width " << m.width << "\n";
    out << "gates " << m.gate_count;
    if (m.gate_count > 0) {
        out << " (";
        for (size_t i = 0; i < n.gates.size(); ++i) {
            out << (i ? " " : "") << n.gates[i].gate;
        }
        out << ")";
    }
    out << "\n";
    out << "quantum cost " << m.quantum_cost << "\n";
    out << "delay (serial) " << m.delay << "\n";
    out << "logical depth " << m.logical_depth << "\n";
    out << "garbage " << m.garbage << "\n";
    out << "inputs:";
    for (const auto& l : n.input_labels()) out << " " << l;
    out << "\n";
    out << "outputs:";
    for (const auto& o : n.outputs) out << " " << o.label;
    out << "\n";
    out << "feedback arcs: " << n.feedbacks.size() << "\n";
    return kExitOk;
}

int cmd_sim(const Flags& f, std::ostream& out, std::ostream& err) {
    auto it = f.named.find("--stimulus");
    if (f.positional.size() != 2 || it == f.named.end()) {
        err << kUsage;
        return kExitUsage;
    }
    auto n = netlist::parse_netlist_file(f.positional[1]);
    netlist::validate(n);
    std::ifstream stim(it->second);
    if (!stim) {
        err << "revlab: cannot open '" << it->second << "'\n";
        return kExitFailed;
    }
    auto state = seq::initial_state(n);
    std::string line;
    int stepno = 0;
    while (std::getline(stim, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        netlist::InputMap inputs;
        std::string tok;
        while (ls >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 >= tok.size()) {
                err << "revlab: bad stimulus token '" << tok
                    << "' (want LABEL=0|1)\n";
                return kExitFailed;
            }
            auto bit = parse_int(tok.substr(eq + 1));
            if (!bit || (*bit != 0 && *bit != 1)) {
                err << "revlab: bad stimulus token '" << tok
                    << "' (want LABEL=0|1)\n";
                return kExitFailed;
            }
            inputs[tok.substr(0, eq)] = *bit;
        }
        if (inputs.empty()) continue;  // blank or comment-only line
        ++stepno;
        auto res = seq::settle(n, inputs, state);
        state = res.state;
        out << "step " << stepno << ":";
        for (const auto& [label, v] : inputs) out << " " << label << "=" << v;
        out << " ->";
        for (const auto& o : n.outputs) {
            out << " " << o.label << "=" << res.line_values[size_t(o.line)];
        }
        out << "  (settled in " << res.iterations << ")\n";
    }
    return kExitOk;
}

int verify_one_design(const seq::LatchSpec& spec, std::ostream& out) {
    auto rows = verify_characteristic(spec);
    out << spec.display_name << " (" << spec.id << "): " << spec.equation
        << "\n";
    if (!spec.printed_equation.empty()) {
        out << "  equation as cited: " << spec.printed_equation
            << " (normalized above)\n";
    }
    if (!spec.legal_text.empty()) {
        out << "  input rule: " << spec.legal_text << "\n";
    }
    int good = 0;
    for (const auto& row : rows) {
        out << " ";
        for (const auto& [label, v] : row.inputs) {
            out << " " << label << "=" << v;
        }
        out << " q=" << row.q << " -> " << row.got << " expected "
            << row.expected << (row.pass ? "  pass" : "  FAIL") << "\n";
        if (row.pass) ++good;
    }
    out << "  " << good << "/" << rows.size() << " rows pass\n";
    return good == int(rows.size()) ? kExitOk : kExitFailed;
}

int cmd_ff(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
    if (args.size() != 3 || args[1] != "verify") {
        err << kUsage;
        return kExitUsage;
    }
    if (args[2] == "all") {
        int good = 0;
        const auto& designs = seq::builtin_designs();
        for (const auto& spec : designs) {
            if (verify_one_design(spec, out) == kExitOk) ++good;
            out << "\n";
        }
        out << good << "/" << designs.size() << " designs verified\n";
        return good == int(designs.size()) ? kExitOk : kExitFailed;
    }
    try {
        const auto& spec = seq::builtin_design(args[2]);
        return verify_one_design(spec, out);
    } catch (const std::out_of_range&) {
        err << "revlab: unknown design '" << args[2] << "' (see: ";
        for (const auto& id : seq::design_ids()) err << id << " ";
        err << "all)\n";
        return kExitFailed;
    }
}

int cmd_report(const Flags& f, std::ostream& out, std::ostream& err) {
    if (f.positional.size() != 2) {
        err << kUsage;
        return kExitUsage;
    }
    const std::string& what = f.positional[1];
    if (what == "improvements") {
        claims::print_improvements_text(claims::improvement_rows(), out);
        return kExitOk;
    }
    if (what != "claims") {
        err << kUsage;
        return kExitUsage;
    }
    auto atlas = resolve_atlas(f.named, 5, err);
    auto records = claims::claims_ledger(atlas);
    if (auto it = f.named.find("--subject"); it != f.named.end()) {
        std::erase_if(records, [&](const claims::ClaimRecord& r) {
            return r.subject != it->second;
        });
    }
    if (auto it = f.named.find("--metric"); it != f.named.end()) {
        std::erase_if(records, [&](const claims::ClaimRecord& r) {
            return r.metric != it->second;
        });
    }
    if (records.empty()) {
        out << "no records\n";
        return kExitOk;
    }
    if (f.bare.count("--json")) {
        out << claims::claims_json(records);
    } else {
        claims::print_claims_text(records, out);
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    if (args.empty()) {
        err << kUsage;
        return kExitUsage;
    }
    const std::string& cmd = args[0];
    if (cmd == "--help" || cmd == "help") {
        out << kUsage;
        return kExitOk;
    }
    try {
        if (cmd == "gates") return cmd_gates(args, out, err);
        if (cmd == "qc") {
            if (args.size() < 2) {
                err << kUsage;
                return kExitUsage;
            }
            if (args[1] == "verify") return cmd_qc_verify(args, out, err);
            if (args[1] == "synth") {
                auto f = parse_flags(args, 0,
                                     {"--perm", "--max-cost", "--atlas"}, {},
                                     err);
                if (!f) return kExitUsage;
                return cmd_qc_synth(*f, out, err);
            }
            if (args[1] == "atlas") {
                auto f = parse_flags(args, 0,
                                     {"--width", "--max-cost", "--out"}, {},
                                     err);
                if (!f) return kExitUsage;
                return cmd_qc_atlas(*f, out, err);
            }
            err << kUsage;
            return kExitUsage;
        }
        if (cmd == "analyze") return cmd_analyze(args, out, err);
        if (cmd == "sim") {
            auto f = parse_flags(args, 0, {"--stimulus"}, {}, err);
            if (!f) return kExitUsage;
            return cmd_sim(*f, out, err);
        }
        if (cmd == "ff") return cmd_ff(args, out, err);
        if (cmd == "report") {
            auto f = parse_flags(args, 0,
                                 {"--subject", "--metric", "--atlas"},
                                 {"--json"}, err);
            if (!f) return kExitUsage;
            return cmd_report(*f, out, err);
        }
    } catch (const netlist::ParseError& e) {
        err << "revlab: parse error: " << e.what() << "\n";
        return kExitFailed;
    } catch (const seq::OscillationError& e) {
        err << "revlab: oscillation: " << e.what() << "\n";
        return kExitFailed;
    } catch (const std::exception& e) {
        err << "revlab: " << e.what() << "\n";
        return kExitFailed;
    }
    err << kUsage;
    return kExitUsage;
}

}  // namespace revlab::cli
