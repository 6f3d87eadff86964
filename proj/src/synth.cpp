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

#include "revlab/synth.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace revlab::synth {

namespace {

using gates::Permutation;
using quantum::Primitive;
using quantum::PrimKind;
using quantum::QuantumCircuit;

void check_build_bounds(int width, int max_cost) {
    if (width < 1 || width > CostAtlas::kMaxWidth) {
        throw std::invalid_argument("atlas width must be in 1.." +
                                    std::to_string(CostAtlas::kMaxWidth));
    }
    if (max_cost < 0 || max_cost > CostAtlas::kMaxCost) {
        throw std::invalid_argument("atlas max_cost must be in 0.." +
                                    std::to_string(CostAtlas::kMaxCost));
    }
}

}  // namespace

GMat GMat::identity(int width) {
    if (width < 1 || width > CostAtlas::kMaxWidth) {
        throw std::invalid_argument("GMat width must be in 1.." +
                                    std::to_string(CostAtlas::kMaxWidth));
    }
    GMat m;
    m.width_ = width;
    m.dim_ = 1 << width;
    for (int i = 0; i < m.dim_; ++i) m.re_[i * m.dim_ + i] = 1;
    return m;
}

GMat GMat::from_permutation(const Permutation& p) {
    GMat m = identity(p.width());
    const auto& map = p.map();
    for (int c = 0; c < m.dim_; ++c) {
        m.re_[c * m.dim_ + c] = 0;
        m.re_[int(map[c]) * m.dim_ + c] = 1;
    }
    return m;
}

void GMat::normalize() {
    while (e_ > 0) {
        bool all_even = true;
        for (int i = 0; i < dim_ * dim_ && all_even; ++i) {
            all_even = (re_[i] & 1) == 0 && (im_[i] & 1) == 0;
        }
        if (!all_even) break;
        for (int i = 0; i < dim_ * dim_; ++i) {
            re_[i] = int16_t(re_[i] / 2);
            im_[i] = int16_t(im_[i] / 2);
        }
        --e_;
    }
}

void GMat::apply_left(const Primitive& p) {
    int tshift = width_ - 1 - p.target;
    int tmask = 1 << tshift;
    int cmask = 0;
    if (p.kind != PrimKind::X) {
        cmask = 1 << (width_ - 1 - p.control);
    }
    bool is_v = p.kind == PrimKind::CV || p.kind == PrimKind::CVDG;

    if (is_v) {
        // V mixes the pair with (1+i)/2 and (1-i)/2; scale everything by 2
        // first so the mixed rows stay integral.
        for (int i = 0; i < dim_ * dim_; ++i) {
            re_[i] = int16_t(re_[i] * 2);
            im_[i] = int16_t(im_[i] * 2);
        }
        ++e_;
    }
    for (int r0 = 0; r0 < dim_; ++r0) {
        if (r0 & tmask) continue;
        if ((r0 & cmask) != cmask) continue;
        int r1 = r0 | tmask;
        for (int c = 0; c < dim_; ++c) {
            int32_t ar = re_[r0 * dim_ + c], ai = im_[r0 * dim_ + c];
            int32_t br = re_[r1 * dim_ + c], bi = im_[r1 * dim_ + c];
            if (!is_v) {
                re_[r0 * dim_ + c] = int16_t(br);
                im_[r0 * dim_ + c] = int16_t(bi);
                re_[r1 * dim_ + c] = int16_t(ar);
                im_[r1 * dim_ + c] = int16_t(ai);
                continue;
            }
            // Entries were pre-doubled, so mix with (1+-i)/2 exactly:
            // (1+i)/2 * (x+yi) = ((x-y) + (x+y)i) / 2, and the halving pairs
            // across the two rows. new0 = (a*(1+i) + b*(1-i))/2, new1 =
            // (a*(1-i) + b*(1+i))/2 for CV; conjugate coefficients for CVDG.
            int32_t p0r, p0i, p1r, p1i;
            if (p.kind == PrimKind::CV) {
                p0r = (ar - ai) + (br + bi);
                p0i = (ar + ai) + (bi - br);
                p1r = (ar + ai) + (br - bi);
                p1i = (ai - ar) + (br + bi);
            } else {
                p0r = (ar + ai) + (br - bi);
                p0i = (ai - ar) + (br + bi);
                p1r = (ar - ai) + (br + bi);
                p1i = (ar + ai) + (bi - br);
            }
            re_[r0 * dim_ + c] = int16_t(p0r / 2);
            im_[r0 * dim_ + c] = int16_t(p0i / 2);
            re_[r1 * dim_ + c] = int16_t(p1r / 2);
            im_[r1 * dim_ + c] = int16_t(p1i / 2);
        }
    }
    if (is_v) normalize();
}

std::optional<Permutation> GMat::as_permutation() const {
    int64_t want = 1;
    for (int k = 0; k < e_; ++k) want *= 4;
    int32_t zr = 0, zi = 0;
    bool have_z = false;
    std::vector<uint8_t> map(dim_, 0);
    std::vector<bool> row_used(dim_, false);
    for (int c = 0; c < dim_; ++c) {
        int hit = -1;
        for (int r = 0; r < dim_; ++r) {
            int32_t a = re_[r * dim_ + c], b = im_[r * dim_ + c];
            if (a == 0 && b == 0) continue;
            if (hit >= 0) return std::nullopt;  // two nonzeros in a column
            hit = r;
            if (!have_z) {
                zr = a;
                zi = b;
                have_z = true;
                if (int64_t(a) * a + int64_t(b) * b != want) return std::nullopt;
            } else if (a != zr || b != zi) {
                return std::nullopt;  // phase differs between columns
            }
        }
        if (hit < 0 || row_used[hit]) return std::nullopt;
        row_used[hit] = true;
        map[c] = uint8_t(hit);
    }
    return Permutation(width_, std::move(map));
}

std::pair<uint64_t, uint64_t> GMat::fingerprint() const {
    // Rotate the global phase away: multiply by the conjugate of the first
    // nonzero entry, then strip common factors of two against the (doubled)
    // scale so phase-equal matrices canonicalise identically.
    int32_t g_re[64], g_im[64];
    int n = dim_ * dim_;
    int32_t zr = 1, zi = 0;
    for (int i = 0; i < n; ++i) {
        if (re_[i] != 0 || im_[i] != 0) {
            zr = re_[i];
            zi = im_[i];
            break;
        }
    }
    for (int i = 0; i < n; ++i) {
        int32_t a = re_[i], b = im_[i];
        g_re[i] = a * zr + b * zi;
        g_im[i] = b * zr - a * zi;
    }
    int f = 2 * e_;
    bool reduced = true;
    while (f > 0 && reduced) {
        for (int i = 0; i < n; ++i) {
            if ((g_re[i] & 1) != 0 || (g_im[i] & 1) != 0) {
                reduced = false;
                break;
            }
        }
        if (!reduced) break;
        for (int i = 0; i < n; ++i) {
            g_re[i] /= 2;
            g_im[i] /= 2;
        }
        --f;
    }

    uint64_t h1 = 0xcbf29ce484222325ull;
    uint64_t h2 = 0x9e3779b97f4a7c15ull;
    auto mix = [&](int64_t v) {
        uint64_t u = uint64_t(v);
        h1 = (h1 ^ u) * 0x100000001b3ull;
        h2 = (h2 + u) * 0xff51afd7ed558ccdull;
        h2 ^= h2 >> 33;
    };
    mix(width_);
    mix(f);
    for (int i = 0; i < n; ++i) {
        mix(g_re[i]);
        mix(g_im[i]);
    }
    return {h1, h2};
}

std::vector<Primitive> enumerate_primitives(int width) {
    if (width < 1 || width > CostAtlas::kMaxWidth) {
        throw std::invalid_argument("primitive alphabet width must be in 1.." +
                                    std::to_string(CostAtlas::kMaxWidth));
    }
    std::vector<Primitive> out;
    for (int t = 0; t < width; ++t) out.push_back({PrimKind::X, t, -1});
    for (PrimKind k : {PrimKind::CX, PrimKind::CV, PrimKind::CVDG}) {
        for (int c = 0; c < width; ++c) {
            for (int t = 0; t < width; ++t) {
                if (t != c) out.push_back({k, t, c});
            }
        }
    }
    return out;
}

uint64_t CostAtlas::pack_key(const std::vector<uint8_t>& codes) {
    if (codes.size() > 8) {
        throw std::invalid_argument("permutation too wide to key");
    }
    uint64_t key = 0;
    for (uint8_t c : codes) key = key << 8 | c;
    return key;
}

namespace {

struct FpHash {
    size_t operator()(const std::pair<uint64_t, uint64_t>& f) const {
        return size_t(f.first ^ (f.second * 0x9e3779b97f4a7c15ull));
    }
};

struct BfsNode {
    int32_t parent;
    int16_t prim;
    GMat mat;
};

}  // namespace

CostAtlas CostAtlas::build(int width, int max_cost, Progress progress) {
    check_build_bounds(width, max_cost);
    CostAtlas atlas(width, max_cost);
    const auto prims = enumerate_primitives(width);

    std::vector<std::vector<BfsNode>> levels(size_t(max_cost) + 1);
    std::unordered_set<std::pair<uint64_t, uint64_t>, FpHash> visited;

    GMat id = GMat::identity(width);
    levels[0].push_back({-1, -1, id});
    visited.insert(id.fingerprint());

    auto record = [&](const Permutation& perm, int cost, int level,
                      int32_t parent, int prim_index) {
        uint64_t key = pack_key(perm.map());
        if (atlas.records_.count(key)) return;
        AtlasRecord rec;
        rec.perm_codes = perm.map();
        rec.cost = cost;
        if (cost > 0) {
            // Walk the parent chain for the prefix, then the new primitive.
            std::vector<int> rev{prim_index};
            int32_t at = parent;
            for (int lv = level - 1; lv > 0; --lv) {
                rev.push_back(levels[lv][at].prim);
                at = levels[lv][at].parent;
            }
            rec.prim_indices.assign(rev.rbegin(), rev.rend());
        }
        atlas.records_.emplace(key, std::move(rec));
    };

    record(Permutation::identity(width), 0, 0, -1, -1);
    if (progress) progress(0, 1);

    for (int level = 1; level <= max_cost; ++level) {
        bool last = level == max_cost;
        size_t generated = 0;
        for (int32_t ni = 0; ni < int32_t(levels[level - 1].size()); ++ni) {
            for (int pi = 0; pi < int(prims.size()); ++pi) {
                GMat m = levels[level - 1][ni].mat;
                m.apply_left(prims[pi]);
                if (!last) {
                    if (!visited.insert(m.fingerprint()).second) continue;
                    ++generated;
                } else {
                    ++generated;
                }
                if (auto perm = m.as_permutation()) {
                    record(*perm, level, level, ni, pi);
                }
                if (!last) {
                    levels[level].push_back({ni, int16_t(pi), std::move(m)});
                }
            }
        }
        if (progress) progress(level, generated);
    }
    return atlas;
}

std::optional<AtlasRecord> CostAtlas::lookup(const Permutation& p) const {
    if (p.width() != width_) {
        throw std::invalid_argument("atlas lookup width mismatch");
    }
    auto it = records_.find(pack_key(p.map()));
    if (it == records_.end()) return std::nullopt;
    return it->second;
}

void CostAtlas::save(std::ostream& out) const {
    out << "revlab-atlas v1\n";
    out << "width " << width_ << "\n";
    out << "max_cost " << max_cost_ << "\n";
    out << "entries " << records_.size() << "\n";
    for (const auto& [key, rec] : records_) {
        out << "perm";
        for (uint8_t c : rec.perm_codes) out << ' ' << int(c);
        out << " cost " << rec.cost << " prims";
        for (int i : rec.prim_indices) out << ' ' << i;
        out << "\n";
    }
}

void CostAtlas::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write atlas file: " + path);
    save(out);
}

namespace {

std::string next_token(std::istringstream& in, const std::string& what,
                       size_t line_no) {
    std::string tok;
    if (!(in >> tok)) {
        throw std::runtime_error("atlas line " + std::to_string(line_no) +
                                 ": missing " + what);
    }
    return tok;
}

int expect_int(std::istringstream& in, const std::string& what, size_t line_no) {
    std::string tok = next_token(in, what, line_no);
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("atlas line " + std::to_string(line_no) +
                                 ": bad " + what + " '" + tok + "'");
    }
}

void expect_keyword(std::istringstream& in, const std::string& kw,
                    size_t line_no) {
    std::string tok = next_token(in, "keyword '" + kw + "'", line_no);
    if (tok != kw) {
        throw std::runtime_error("atlas line " + std::to_string(line_no) +
                                 ": expected '" + kw + "', got '" + tok + "'");
    }
}

}  // namespace

CostAtlas CostAtlas::load(std::istream& in) {
    std::string line;
    size_t line_no = 0;
    auto read_line = [&]() -> std::istringstream {
        if (!std::getline(in, line)) {
            throw std::runtime_error("atlas: unexpected end of file at line " +
                                     std::to_string(line_no + 1));
        }
        ++line_no;
        return std::istringstream(line);
    };

    {
        auto ls = read_line();
        std::string magic, version;
        ls >> magic >> version;
        if (magic != "revlab-atlas" || version != "v1") {
            throw std::runtime_error("atlas: bad header '" + line + "'");
        }
    }
    auto ls_width = read_line();
    expect_keyword(ls_width, "width", line_no);
    int width = expect_int(ls_width, "width", line_no);
    auto ls_cost = read_line();
    expect_keyword(ls_cost, "max_cost", line_no);
    int max_cost = expect_int(ls_cost, "max_cost", line_no);
    check_build_bounds(width, max_cost);
    auto ls_entries = read_line();
    expect_keyword(ls_entries, "entries", line_no);
    int entries = expect_int(ls_entries, "entry count", line_no);
    if (entries < 0) throw std::runtime_error("atlas: negative entry count");

    CostAtlas atlas(width, max_cost);
    size_t n = size_t(1) << width;
    const auto prims = enumerate_primitives(width);
    for (int k = 0; k < entries; ++k) {
        auto ls = read_line();
        expect_keyword(ls, "perm", line_no);
        std::vector<uint8_t> codes;
        for (size_t i = 0; i < n; ++i) {
            int c = expect_int(ls, "permutation code", line_no);
            if (c < 0 || size_t(c) >= n) {
                throw std::runtime_error("atlas line " + std::to_string(line_no) +
                                         ": code out of range");
            }
            codes.push_back(uint8_t(c));
        }
        expect_keyword(ls, "cost", line_no);
        int cost = expect_int(ls, "cost", line_no);
        expect_keyword(ls, "prims", line_no);
        std::vector<int> prim_indices;
        int idx;
        while (ls >> idx) {
            if (idx < 0 || size_t(idx) >= prims.size()) {
                throw std::runtime_error("atlas line " + std::to_string(line_no) +
                                         ": primitive index out of range");
            }
            prim_indices.push_back(idx);
        }
        if (cost < 0 || cost > max_cost || int(prim_indices.size()) != cost) {
            throw std::runtime_error("atlas line " + std::to_string(line_no) +
                                     ": cost does not match witness length");
        }
        Permutation perm(width, codes);  // throws if not a bijection
        QuantumCircuit circuit = circuit_from_indices(width, prim_indices);
        if (!quantum::simulates_permutation(circuit, perm)) {
            throw std::runtime_error("atlas line " + std::to_string(line_no) +
                                     ": witness does not realise permutation");
        }
        uint64_t key = pack_key(codes);
        if (atlas.records_.count(key)) {
            throw std::runtime_error("atlas line " + std::to_string(line_no) +
                                     ": duplicate permutation");
        }
        atlas.records_.emplace(key,
                               AtlasRecord{std::move(codes), cost,
                                           std::move(prim_indices)});
    }
    return atlas;
}

CostAtlas CostAtlas::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read atlas file: " + path);
    return load(in);
}

QuantumCircuit circuit_from_indices(int width,
                                    const std::vector<int>& prim_indices) {
    const auto prims = enumerate_primitives(width);
    QuantumCircuit c;
    c.width = width;
    for (int i : prim_indices) {
        if (i < 0 || size_t(i) >= prims.size()) {
            throw std::out_of_range("primitive index out of range");
        }
        c.prims.push_back(prims[size_t(i)]);
    }
    return c;
}

std::optional<QuantumCircuit> min_cost_synthesis(const Permutation& perm,
                                                 const CostAtlas& atlas) {
    auto rec = atlas.lookup(perm);
    if (!rec) return std::nullopt;
    return circuit_from_indices(atlas.width(), rec->prim_indices);
}

std::vector<Permutation> satisfying_perms(
    int width, const std::vector<ColumnConstraint>& constraints) {
    if (width < 1 || width > CostAtlas::kMaxWidth) {
        throw std::invalid_argument("constraint search width must be in 1.." +
                                    std::to_string(CostAtlas::kMaxWidth));
    }
    int n = 1 << width;
    for (const auto& c : constraints) {
        if (c.row < 0 || c.row >= n) {
            throw std::invalid_argument("constraint row out of range");
        }
        if (c.column < 0 || c.column >= width) {
            throw std::invalid_argument("constraint column out of range");
        }
        if (c.value != 0 && c.value != 1) {
            throw std::invalid_argument("constraint value must be 0 or 1");
        }
    }
    std::vector<uint8_t> table(static_cast<size_t>(n));
    std::iota(table.begin(), table.end(), uint8_t(0));
    std::vector<Permutation> out;
    do {
        bool ok = true;
        for (const auto& c : constraints) {
            int bit = table[size_t(c.row)] >> (width - 1 - c.column) & 1;
            if (bit != c.value) {
                ok = false;
                break;
            }
        }
        if (ok) out.emplace_back(width, table);
    } while (std::next_permutation(table.begin(), table.end()));
    return out;
}

std::optional<ConstrainedResult> constrained_synthesis(
    const CostAtlas& atlas, const std::vector<ColumnConstraint>& constraints) {
    std::optional<ConstrainedResult> best;
    int best_cost = 0;
    for (const auto& perm : satisfying_perms(atlas.width(), constraints)) {
        auto rec = atlas.lookup(perm);
        if (!rec) continue;
        if (!best || rec->cost < best_cost) {
            best_cost = rec->cost;
            best = ConstrainedResult{
                perm, circuit_from_indices(atlas.width(), rec->prim_indices)};
        }
    }
    return best;
}

MpgResult derive_mpg(const CostAtlas& atlas) {
    if (atlas.width() != 3) {
        throw std::invalid_argument("MPG derivation needs a width-3 atlas");
    }
    // Lines are (A,B,C) = (state, reset, set); rows are input codes with A
    // as the most significant bit. The next-state column (line 2) must read
    // C OR (NOT B AND A) wherever B AND C = 0; the complement column must
    // read NOT next-state on the four rows where the state holds.
    const std::vector<ColumnConstraint> next_state = {
        {0b000, 2, 0}, {0b001, 2, 1}, {0b010, 2, 0},
        {0b100, 2, 1}, {0b101, 2, 1}, {0b110, 2, 0},
    };
    std::optional<MpgResult> best;
    int best_cost = 0;
    for (int m = 0; m < 2; ++m) {
        auto constraints = next_state;
        constraints.push_back({0b000, m, 1});
        constraints.push_back({0b010, m, 1});
        constraints.push_back({0b100, m, 0});
        constraints.push_back({0b101, m, 0});
        auto found = constrained_synthesis(atlas, constraints);
        if (!found) continue;
        int cost = found->circuit.cost();
        bool better = !best || cost < best_cost ||
                      (cost == best_cost && found->perm.map() < best->perm.map());
        if (better) {
            best_cost = cost;
            best = MpgResult{found->perm, found->circuit, m};
        }
    }
    if (!best) {
        throw std::runtime_error(
            "no latch-compatible width-3 permutation is reachable within the "
            "atlas bound");
    }
    return *best;
}

}  // namespace revlab::synth
