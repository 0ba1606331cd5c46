// Copyright 2026 The qconv authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qconv/code.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace qconv::codes {

using gf2::BinaryMatrix;

namespace {

void validate_css(const CssCode& code) {
    BinaryMatrix prod = gf2::multiply(code.hx, gf2::transpose(code.hz));
    if (!gf2::is_zero(prod)) throw std::invalid_argument("CSS condition hx.hz^T = 0 violated");
}

int compute_k(const CssCode& code) {
    return code.n - int(gf2::rank(code.hx)) - int(gf2::rank(code.hz));
}

}  // namespace

CssCode build_rotated_surface_code(int d) {
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("rotated surface code needs odd d >= 3");

    auto data_index = [d](int r, int c) { return r * d + c; };
    auto in_grid = [d](int r, int c) { return r >= 0 && r < d && c >= 0 && c < d; };

    // Faces of the (d+1)x(d+1) lattice. Checkerboard color 1 = X, 0 = Z;
    // top/bottom boundaries carry the X half-faces, left/right the Z ones.
    auto face_present = [d](int pr, int pc) {
        bool x_type = (pr + pc) % 2 == 1;
        bool top_bottom = pr == 0 || pr == d;
        bool left_right = pc == 0 || pc == d;
        if (top_bottom && left_right) return false;
        if (top_bottom) return x_type && pc >= 1 && pc <= d - 1;
        if (left_right) return !x_type && pr >= 1 && pr <= d - 1;
        return true;
    };

    std::vector<std::vector<size_t>> x_rows, z_rows;
    std::vector<GridLayout::CheckPos> x_pos, z_pos;
    for (int pr = 0; pr <= d; pr++) {
        for (int pc = 0; pc <= d; pc++) {
            if (!face_present(pr, pc)) continue;
            std::vector<size_t> supp;
            for (int dr : {-1, 0})
                for (int dc : {-1, 0})
                    if (in_grid(pr + dr, pc + dc)) supp.push_back(data_index(pr + dr, pc + dc));
            if ((pr + pc) % 2 == 1) {
                x_rows.push_back(supp);
                x_pos.push_back({pr, pc, CheckType::X});
            } else {
                z_rows.push_back(supp);
                z_pos.push_back({pr, pc, CheckType::Z});
            }
        }
    }

    CssCode code;
    code.n = d * d;
    code.d = d;
    code.hx = BinaryMatrix::from_rows(code.n, x_rows);
    code.hz = BinaryMatrix::from_rows(code.n, z_rows);
    GridLayout layout;
    layout.d = d;
    layout.check_position = x_pos;
    layout.check_position.insert(layout.check_position.end(), z_pos.begin(), z_pos.end());
    code.layout = layout;

    validate_css(code);
    code.k = compute_k(code);
    compute_logical_operators(code);
    return code;
}

CssCode build_bb_code(int l, int m, const std::vector<std::pair<int, int>>& a_monomials,
                      const std::vector<std::pair<int, int>>& b_monomials) {
    if (l < 1 || m < 1) throw std::invalid_argument("bb code needs l, m >= 1");
    if (a_monomials.empty() || b_monomials.empty())
        throw std::invalid_argument("bb code needs nonempty monomial lists");

    auto reduce = [l, m](std::vector<std::pair<int, int>> mono) {
        for (auto& [i, j] : mono) {
            i = ((i % l) + l) % l;
            j = ((j % m) + m) % m;
        }
        std::set<std::pair<int, int>> distinct(mono.begin(), mono.end());
        if (distinct.size() != mono.size())
            throw std::invalid_argument("bb code monomials collide mod (l, m)");
        return mono;
    };
    auto a_mono = reduce(a_monomials);
    auto b_mono = reduce(b_monomials);

    int lm = l * m;
    auto idx = [l, m](int i, int j) { return (((i % l) + l) % l) * m + ((j % m) + m) % m; };

    // A[r] has support at columns r + a; hx = [A | B], hz = [B^T | A^T].
    std::vector<std::vector<size_t>> x_rows(lm), z_rows(lm);
    for (int i = 0; i < l; i++) {
        for (int j = 0; j < m; j++) {
            int r = i * m + j;
            for (auto [ai, aj] : a_mono) x_rows[r].push_back(idx(i + ai, j + aj));
            for (auto [bi, bj] : b_mono) x_rows[r].push_back(lm + idx(i + bi, j + bj));
            for (auto [bi, bj] : b_mono) z_rows[r].push_back(idx(i - bi, j - bj));
            for (auto [ai, aj] : a_mono) z_rows[r].push_back(lm + idx(i - ai, j - aj));
        }
    }

    CssCode code;
    code.n = 2 * lm;
    code.hx = BinaryMatrix::from_rows(code.n, x_rows);
    code.hz = BinaryMatrix::from_rows(code.n, z_rows);

    TorusLayout layout;
    layout.l = l;
    layout.m = m;
    layout.a_monomials = a_mono;
    layout.b_monomials = b_mono;
    layout.check_position.resize(2 * lm);
    layout.data_position.resize(2 * lm);
    for (int t = 0; t < 2; t++) {
        for (int i = 0; i < l; i++) {
            for (int j = 0; j < m; j++) {
                layout.check_position[t * lm + i * m + j] = {i, j, t == 0 ? CheckType::X : CheckType::Z};
                layout.data_position[t * lm + i * m + j] = {i, j, t};
            }
        }
    }
    code.layout = layout;

    validate_css(code);
    code.k = compute_k(code);
    compute_logical_operators(code);
    return code;
}

CssCode build_preset(const std::string& name) {
    CssCode code;
    if (name.rfind("surface", 0) == 0) {
        int d = std::stoi(name.substr(7));
        code = build_rotated_surface_code(d);
    } else if (name == "bb72") {
        code = build_bb_code(6, 6, {{3, 0}, {0, 1}, {0, 2}}, {{0, 3}, {1, 0}, {2, 0}});
        code.d = 6;
    } else if (name == "bb144") {
        code = build_bb_code(12, 6, {{3, 0}, {0, 1}, {0, 2}}, {{0, 3}, {1, 0}, {2, 0}});
        code.d = 12;
    } else if (name == "bb288") {
        code = build_bb_code(12, 12, {{3, 0}, {0, 2}, {0, 7}}, {{0, 3}, {1, 0}, {2, 0}});
        code.d = 18;
    } else {
        throw std::invalid_argument("unknown code preset: " + name);
    }
    code.preset = name;
    return code;
}

std::vector<std::string> preset_names() {
    return {"surface3", "surface5", "surface7", "bb72", "bb144", "bb288"};
}

namespace {

// Independent representatives of ker(checks_same) modulo rowspace(stabs),
// with deterministic lowest-index pivoting throughout.
BinaryMatrix quotient_basis(const BinaryMatrix& kernel_of, const BinaryMatrix& modulo, int n) {
    BinaryMatrix ker = gf2::nullspace(kernel_of);
    BinaryMatrix stab_rref = modulo;
    std::vector<size_t> stab_pivots = gf2::row_reduce(stab_rref);

    std::vector<std::vector<gf2::Word>> picked_rows;
    BinaryMatrix picked_rref(0, n);
    std::vector<size_t> picked_pivots;

    for (size_t i = 0; i < ker.rows; i++) {
        std::vector<gf2::Word> v(ker.row(i), ker.row(i) + ker.words_per_row);
        gf2::reduce_against(v, stab_rref, stab_pivots);
        std::vector<gf2::Word> reduced = v;
        gf2::reduce_against(reduced, picked_rref, picked_pivots);
        if (gf2::bv_weight(reduced) == 0) continue;
        picked_rows.push_back(v);
        // Maintain an RREF copy of the picked set for independence tests.
        BinaryMatrix next(picked_rows.size(), n);
        for (size_t r = 0; r < picked_rows.size(); r++)
            std::copy(picked_rows[r].begin(), picked_rows[r].end(), next.row(r));
        picked_rref = next;
        picked_pivots = gf2::row_reduce(picked_rref);
    }

    BinaryMatrix out(picked_rows.size(), n);
    for (size_t r = 0; r < picked_rows.size(); r++)
        std::copy(picked_rows[r].begin(), picked_rows[r].end(), out.row(r));
    return out;
}

// Replace each row by the minimum-weight element of row + rowspace(stabs).
// Gray-code sweep over stabilizer combinations; first minimum wins.
void reduce_to_min_weight(BinaryMatrix& logicals, const BinaryMatrix& stabs) {
    BinaryMatrix rref = stabs;
    std::vector<size_t> pivots = gf2::row_reduce(rref);
    size_t r = pivots.size();
    if (r > 20) return;  // enumeration infeasible; keep basis as-is

    for (size_t row = 0; row < logicals.rows; row++) {
        std::vector<gf2::Word> cur(logicals.row(row), logicals.row(row) + logicals.words_per_row);
        std::vector<gf2::Word> best = cur;
        size_t best_w = gf2::bv_weight(best);
        uint64_t prev_gray = 0;
        for (uint64_t x = 1; x < (uint64_t(1) << r); x++) {
            uint64_t gray = x ^ (x >> 1);
            int bit = std::countr_zero(gray ^ prev_gray);
            prev_gray = gray;
            const uint64_t* srow = rref.row(bit);
            for (size_t w = 0; w < rref.words_per_row; w++) cur[w] ^= srow[w];
            size_t wgt = gf2::bv_weight(cur);
            if (wgt < best_w) {
                best_w = wgt;
                best = cur;
            }
        }
        std::copy(best.begin(), best.end(), logicals.row(row));
    }
}

}  // namespace

void compute_logical_operators(CssCode& code) {
    int n = code.n;
    BinaryMatrix lx = quotient_basis(code.hz, code.hx, n);
    BinaryMatrix lz = quotient_basis(code.hx, code.hz, n);
    if (int(lx.rows) != code.k || int(lz.rows) != code.k)
        throw std::logic_error("logical basis size does not match k");

    if (code.k > 0) {
        if (n <= 32) {
            reduce_to_min_weight(lx, code.hx);
            reduce_to_min_weight(lz, code.hz);
        }
        // Pair so that lx . lz^T = I.
        BinaryMatrix pairing = gf2::multiply(lx, gf2::transpose(lz));
        BinaryMatrix fix = gf2::transpose(gf2::invert(pairing));
        lz = gf2::multiply(fix, lz);
    }
    code.logicals_x = lx;
    code.logicals_z = lz;
}

int minimum_logical_weight(const BinaryMatrix& stabilizers, const BinaryMatrix& logicals) {
    BinaryMatrix rref = stabilizers;
    std::vector<size_t> pivots = gf2::row_reduce(rref);
    size_t r = pivots.size();
    if (r > 24) throw std::invalid_argument("minimum_logical_weight: stabilizer rank too large");
    size_t k = logicals.rows;
    if (k > 12) throw std::invalid_argument("minimum_logical_weight: too many logicals");

    size_t best = SIZE_MAX;
    for (uint64_t lc = 1; lc < (uint64_t(1) << k); lc++) {
        std::vector<gf2::Word> base = gf2::make_bitvec(logicals.cols);
        for (size_t i = 0; i < k; i++) {
            if ((lc >> i) & 1) {
                const uint64_t* lrow = logicals.row(i);
                for (size_t w = 0; w < base.size(); w++) base[w] ^= lrow[w];
            }
        }
        std::vector<gf2::Word> cur = base;
        best = std::min(best, gf2::bv_weight(cur));
        uint64_t prev_gray = 0;
        for (uint64_t x = 1; x < (uint64_t(1) << r); x++) {
            uint64_t gray = x ^ (x >> 1);
            int bit = std::countr_zero(gray ^ prev_gray);
            prev_gray = gray;
            const uint64_t* srow = rref.row(bit);
            for (size_t w = 0; w < cur.size(); w++) cur[w] ^= srow[w];
            best = std::min(best, gf2::bv_weight(cur));
        }
    }
    return int(best);
}

// -------------------------------------------------------------------------
// Relation index

namespace {

RelationIndex surface_relations(const CssCode& code, ConvGraph graph, const std::vector<int>& dts) {
    const GridLayout& g = code.grid();
    int d = g.d;
    int side = d + 1;
    int cells = side * side;
    auto cell = [side](int pr, int pc) { return pr * side + pc; };

    RelationIndex index;
    for (int dt : dts) {
        if (graph == ConvGraph::check_to_check) {
            index.src_sites = index.dst_sites = cells;
            for (int dr = -1; dr <= 1; dr++) {
                for (int dc = -1; dc <= 1; dc++) {
                    Relation rel;
                    rel.dt = dt;
                    rel.label = "dr=" + std::to_string(dr) + ",dc=" + std::to_string(dc) +
                                ",dt=" + std::to_string(dt);
                    rel.src.assign(cells, -1);
                    for (int pr = 0; pr < side; pr++)
                        for (int pc = 0; pc < side; pc++) {
                            int sr = pr + dr, sc = pc + dc;
                            if (sr >= 0 && sr < side && sc >= 0 && sc < side)
                                rel.src[cell(pr, pc)] = cell(sr, sc);
                        }
                    index.relations.push_back(std::move(rel));
                }
            }
        } else if (graph == ConvGraph::check_to_data) {
            index.src_sites = cells;
            index.dst_sites = d * d;
            // Data qubit (r, c) is covered by the faces (r+or, c+oc), or/oc in {0,1}.
            for (int orr = 0; orr <= 1; orr++) {
                for (int oc = 0; oc <= 1; oc++) {
                    Relation rel;
                    rel.dt = dt;
                    rel.label = "or=" + std::to_string(orr) + ",oc=" + std::to_string(oc) +
                                ",dt=" + std::to_string(dt);
                    rel.src.assign(d * d, -1);
                    for (int r = 0; r < d; r++)
                        for (int c = 0; c < d; c++) rel.src[r * d + c] = cell(r + orr, c + oc);
                    index.relations.push_back(std::move(rel));
                }
            }
        } else {  // data_to_check
            index.src_sites = d * d;
            index.dst_sites = cells;
            for (int orr = 0; orr <= 1; orr++) {
                for (int oc = 0; oc <= 1; oc++) {
                    Relation rel;
                    rel.dt = dt;
                    rel.label = "or=" + std::to_string(orr) + ",oc=" + std::to_string(oc) +
                                ",dt=" + std::to_string(dt);
                    rel.src.assign(cells, -1);
                    for (int pr = 0; pr < side; pr++)
                        for (int pc = 0; pc < side; pc++) {
                            int r = pr - orr, c = pc - oc;
                            if (r >= 0 && r < d && c >= 0 && c < d) rel.src[cell(pr, pc)] = r * d + c;
                        }
                    index.relations.push_back(std::move(rel));
                }
            }
        }
    }
    return index;
}

// Offset multiset of each check's data neighbors, keyed by (sublattice, dx, dy).
std::multiset<std::tuple<int, int, int>> check_offsets(const CssCode& code, const TorusLayout& t, int check) {
    std::multiset<std::tuple<int, int, int>> out;
    const BinaryMatrix& h = check < code.num_x_checks() ? code.hx : code.hz;
    int row = check < code.num_x_checks() ? check : check - code.num_x_checks();
    auto pos = t.check_position[check];
    for (size_t q : h.row_support(row)) {
        auto dp = t.data_position[q];
        int dx = ((dp.x - pos.x) % t.l + t.l) % t.l;
        int dy = ((dp.y - pos.y) % t.m + t.m) % t.m;
        out.insert({dp.sublattice, dx, dy});
    }
    return out;
}

void verify_torus_translation_symmetry(const CssCode& code) {
    const TorusLayout& t = code.torus();
    auto ref_x = check_offsets(code, t, 0);
    auto ref_z = check_offsets(code, t, code.num_x_checks());
    for (int c = 0; c < code.num_checks(); c++) {
        auto ref = code.check_type(c) == CheckType::X ? ref_x : ref_z;
        if (check_offsets(code, t, c) != ref)
            throw std::invalid_argument("translation symmetry violated: neighbor offsets differ");
    }
}

RelationIndex bb_relations(const CssCode& code, ConvGraph graph, const std::vector<int>& dts) {
    verify_torus_translation_symmetry(code);
    const TorusLayout& t = code.torus();
    int l = t.l, m = t.m, lm = l * m;
    auto site = [l, m](int i, int j) { return ((i % l + l) % l) * m + (j % m + m) % m; };

    RelationIndex index;
    index.src_sites = index.dst_sites = 2 * lm;

    if (graph == ConvGraph::check_to_data || graph == ConvGraph::data_to_check) {
        // One relation per (polynomial, monomial): the class covers its
        // left-sublattice realization (via A or B) and the transposed
        // right-sublattice realization, so each node sees one edge per class.
        for (int dt : dts) {
            auto add = [&](char poly, int mono_idx, std::pair<int, int> e) {
                Relation rel;
                rel.dt = dt;
                rel.label = std::string(1, poly) + std::to_string(mono_idx) + ",dt=" + std::to_string(dt);
                rel.src.assign(2 * lm, -1);
                for (int i = 0; i < l; i++) {
                    for (int j = 0; j < m; j++) {
                        int s = i * m + j;
                        if (graph == ConvGraph::check_to_data) {
                            if (poly == 'A') {
                                rel.src[s] = site(i - e.first, j - e.second);            // left <- X
                                rel.src[lm + s] = lm + site(i + e.first, j + e.second);  // right <- Z
                            } else {
                                rel.src[s] = lm + site(i + e.first, j + e.second);  // left <- Z
                                rel.src[lm + s] = site(i - e.first, j - e.second);  // right <- X
                            }
                        } else {
                            if (poly == 'A') {
                                rel.src[s] = site(i + e.first, j + e.second);            // X <- left
                                rel.src[lm + s] = lm + site(i - e.first, j - e.second);  // Z <- right
                            } else {
                                rel.src[s] = lm + site(i + e.first, j + e.second);  // X <- right
                                rel.src[lm + s] = site(i - e.first, j - e.second);  // Z <- left
                            }
                        }
                    }
                }
                index.relations.push_back(std::move(rel));
            };
            for (size_t a = 0; a < t.a_monomials.size(); a++) add('A', int(a), t.a_monomials[a]);
            for (size_t b = 0; b < t.b_monomials.size(); b++) add('B', int(b), t.b_monomials[b]);
        }
        return index;
    }

    // check_to_check: same-type classes are differences within A (shared data
    // on the left block) or within B (right block), plus the self offset;
    // cross-type classes are the sums A + B.
    std::set<std::pair<int, int>> same{{0, 0}}, cross;
    auto norm = [l, m](int dx, int dy) {
        return std::make_pair((dx % l + l) % l, (dy % m + m) % m);
    };
    for (auto [ai, aj] : t.a_monomials)
        for (auto [ai2, aj2] : t.a_monomials)
            if (std::make_pair(ai, aj) != std::make_pair(ai2, aj2)) same.insert(norm(ai - ai2, aj - aj2));
    for (auto [bi, bj] : t.b_monomials)
        for (auto [bi2, bj2] : t.b_monomials)
            if (std::make_pair(bi, bj) != std::make_pair(bi2, bj2)) same.insert(norm(bi - bi2, bj - bj2));
    for (auto [ai, aj] : t.a_monomials)
        for (auto [bi, bj] : t.b_monomials) cross.insert(norm(ai + bi, aj + bj));

    for (int dt : dts) {
        for (auto [dx, dy] : same) {
            Relation rel;
            rel.dt = dt;
            rel.label = "same(" + std::to_string(dx) + "," + std::to_string(dy) + "),dt=" + std::to_string(dt);
            rel.src.assign(2 * lm, -1);
            for (int i = 0; i < l; i++)
                for (int j = 0; j < m; j++) {
                    int s = i * m + j;
                    rel.src[s] = site(i + dx, j + dy);
                    rel.src[lm + s] = lm + site(i + dx, j + dy);
                }
            index.relations.push_back(std::move(rel));
        }
        for (auto [dx, dy] : cross) {
            Relation rel;
            rel.dt = dt;
            rel.label = "cross(" + std::to_string(dx) + "," + std::to_string(dy) + "),dt=" + std::to_string(dt);
            rel.src.assign(2 * lm, -1);
            for (int i = 0; i < l; i++)
                for (int j = 0; j < m; j++) {
                    int s = i * m + j;
                    rel.src[s] = lm + site(i + dx, j + dy);  // X <- Z at +delta
                    rel.src[lm + s] = site(i - dx, j - dy);  // Z <- X at -delta
                }
            index.relations.push_back(std::move(rel));
        }
    }
    return index;
}

}  // namespace

RelationIndex relation_index(const CssCode& code, ConvGraph graph, const std::vector<int>& temporal_offsets) {
    if (temporal_offsets.empty()) throw std::invalid_argument("relation_index: no temporal offsets");
    if (code.is_torus()) return bb_relations(code, graph, temporal_offsets);
    return surface_relations(code, graph, temporal_offsets);
}

int num_cells(const CssCode& code) {
    if (code.is_torus()) return 2 * code.torus().l * code.torus().m;
    return (code.grid().d + 1) * (code.grid().d + 1);
}

int num_data_sites(const CssCode& code) {
    if (code.is_torus()) return 2 * code.torus().l * code.torus().m;
    return code.grid().d * code.grid().d;
}

std::vector<int32_t> cell_of_check(const CssCode& code) {
    std::vector<int32_t> out(code.num_checks());
    if (code.is_torus()) {
        const TorusLayout& t = code.torus();
        int lm = t.l * t.m;
        for (int c = 0; c < code.num_checks(); c++) {
            auto p = t.check_position[c];
            out[c] = (p.type == CheckType::X ? 0 : lm) + p.x * t.m + p.y;
        }
    } else {
        const GridLayout& g = code.grid();
        for (int c = 0; c < code.num_checks(); c++) {
            auto p = g.check_position[c];
            out[c] = p.row * (g.d + 1) + p.col;
        }
    }
    return out;
}

std::vector<int32_t> data_site_of_qubit(const CssCode& code) {
    std::vector<int32_t> out(code.n);
    for (int q = 0; q < code.n; q++) out[q] = q;
    return out;
}

// -------------------------------------------------------------------------
// JSON serialization

std::string code_to_json(const CssCode& code) {
    nlohmann::json j;
    j["preset"] = code.preset;
    j["n"] = code.n;
    j["k"] = code.k;
    j["d"] = code.d;
    auto rows = [](const BinaryMatrix& m) {
        std::vector<std::vector<size_t>> out;
        for (size_t r = 0; r < m.rows; r++) out.push_back(m.row_support(r));
        return out;
    };
    j["hx"] = rows(code.hx);
    j["hz"] = rows(code.hz);
    j["logicals_x"] = rows(code.logicals_x);
    j["logicals_z"] = rows(code.logicals_z);
    if (code.is_torus()) {
        const TorusLayout& t = code.torus();
        nlohmann::json layout;
        layout["kind"] = "torus";
        layout["l"] = t.l;
        layout["m"] = t.m;
        layout["a_monomials"] = t.a_monomials;
        layout["b_monomials"] = t.b_monomials;
        nlohmann::json cp = nlohmann::json::array();
        for (auto& p : t.check_position)
            cp.push_back({{"x", p.x}, {"y", p.y}, {"type", p.type == CheckType::X ? "X" : "Z"}});
        layout["check_position"] = cp;
        nlohmann::json dp = nlohmann::json::array();
        for (auto& p : t.data_position) dp.push_back({{"x", p.x}, {"y", p.y}, {"sublattice", p.sublattice}});
        layout["data_position"] = dp;
        j["layout"] = layout;
    } else {
        const GridLayout& g = code.grid();
        nlohmann::json layout;
        layout["kind"] = "grid";
        layout["d"] = g.d;
        nlohmann::json cp = nlohmann::json::array();
        for (auto& p : g.check_position)
            cp.push_back({{"row", p.row}, {"col", p.col}, {"type", p.type == CheckType::X ? "X" : "Z"}});
        layout["check_position"] = cp;
        j["layout"] = layout;
    }
    return j.dump();
}

CssCode code_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CssCode code;
    code.preset = j.value("preset", "");
    code.n = j.at("n").get<int>();
    code.k = j.at("k").get<int>();
    code.d = j.value("d", 0);
    auto mat = [&](const char* key) {
        std::vector<std::vector<size_t>> rows = j.at(key).get<std::vector<std::vector<size_t>>>();
        return BinaryMatrix::from_rows(size_t(code.n), rows);
    };
    code.hx = mat("hx");
    code.hz = mat("hz");
    code.logicals_x = mat("logicals_x");
    code.logicals_z = mat("logicals_z");
    const nlohmann::json& layout = j.at("layout");
    if (layout.at("kind") == "torus") {
        TorusLayout t;
        t.l = layout.at("l").get<int>();
        t.m = layout.at("m").get<int>();
        t.a_monomials = layout.at("a_monomials").get<std::vector<std::pair<int, int>>>();
        t.b_monomials = layout.at("b_monomials").get<std::vector<std::pair<int, int>>>();
        for (auto& p : layout.at("check_position"))
            t.check_position.push_back(
                {p.at("x").get<int>(), p.at("y").get<int>(),
                 p.at("type").get<std::string>() == "X" ? CheckType::X : CheckType::Z});
        for (auto& p : layout.at("data_position"))
            t.data_position.push_back(
                {p.at("x").get<int>(), p.at("y").get<int>(), p.at("sublattice").get<int>()});
        code.layout = t;
    } else {
        GridLayout g;
        g.d = layout.at("d").get<int>();
        for (auto& p : layout.at("check_position"))
            g.check_position.push_back(
                {p.at("row").get<int>(), p.at("col").get<int>(),
                 p.at("type").get<std::string>() == "X" ? CheckType::X : CheckType::Z});
        code.layout = g;
    }
    if (!gf2::is_zero(gf2::multiply(code.hx, gf2::transpose(code.hz))))
        throw std::invalid_argument("code JSON violates hx.hz^T = 0");
    return code;
}

}  // namespace qconv::codes
