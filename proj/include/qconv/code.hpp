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

#ifndef QCONV_CODE_HPP
#define QCONV_CODE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qconv/gf2.hpp"

namespace qconv::codes {

enum class CheckType : uint8_t { X = 0, Z = 1 };

/// Rotated surface code layout. Check cells live on the (d+1) x (d+1) face
/// grid; data qubit (r, c) has index r*d + c.
struct GridLayout {
    int d = 0;
    struct CheckPos {
        int row, col;
        CheckType type;
    };
    std::vector<CheckPos> check_position;  // indexed by global check id
};

/// Bivariate bicycle layout on the torus Z_l x Z_m. Check (type, x, y) has
/// cell index type*l*m + x*m + y; data qubit (sublattice, x, y) likewise.
struct TorusLayout {
    int l = 0, m = 0;
    struct CheckPos {
        int x, y;
        CheckType type;
    };
    struct DataPos {
        int x, y;
        int sublattice;  // 0 = left block, 1 = right block
    };
    std::vector<CheckPos> check_position;
    std::vector<DataPos> data_position;
    std::vector<std::pair<int, int>> a_monomials;  // exponents (i, j) of x^i y^j
    std::vector<std::pair<int, int>> b_monomials;
};

using Layout = std::variant<GridLayout, TorusLayout>;

struct CssCode {
    int n = 0;  // physical qubits
    int k = 0;  // logical qubits
    int d = 0;  // known distance; 0 = unknown
    gf2::BinaryMatrix hx;  // X checks (rows) x n
    gf2::BinaryMatrix hz;  // Z checks (rows) x n
    gf2::BinaryMatrix logicals_x;  // k x n
    gf2::BinaryMatrix logicals_z;  // k x n
    Layout layout;
    std::string preset;

    int num_x_checks() const { return int(hx.rows); }
    int num_z_checks() const { return int(hz.rows); }
    int num_checks() const { return int(hx.rows + hz.rows); }
    // Global check ids: X checks first, then Z checks.
    CheckType check_type(int check) const {
        return check < num_x_checks() ? CheckType::X : CheckType::Z;
    }
    bool is_torus() const { return std::holds_alternative<TorusLayout>(layout); }
    const TorusLayout& torus() const { return std::get<TorusLayout>(layout); }
    const GridLayout& grid() const { return std::get<GridLayout>(layout); }
};

/// Standard rotated surface code of odd distance d >= 3. n = d^2, k = 1.
CssCode build_rotated_surface_code(int d);

/// Bivariate bicycle code on Z_l x Z_m with hx = [A | B], hz = [B^T | A^T]
/// where A, B are sums of monomial shift matrices. Throws if the polynomials
/// are inconsistent (hx.hz^T != 0).
CssCode build_bb_code(int l, int m, const std::vector<std::pair<int, int>>& a_monomials,
                      const std::vector<std::pair<int, int>>& b_monomials);

/// Named presets: surface3, surface5, ..., bb72, bb144, bb288.
CssCode build_preset(const std::string& name);
std::vector<std::string> preset_names();

/// Deterministic paired logical operators: k X-logicals and k Z-logicals with
/// pairing matrix logicals_x . logicals_z^T = I. For n <= 32 each logical is
/// additionally reduced to minimum weight within its stabilizer coset.
void compute_logical_operators(CssCode& code);

/// Minimum weight over the nonzero elements of rowspace(stab + logicals),
/// excluding pure stabilizers. Brute force; feasible for small codes only.
int minimum_logical_weight(const gf2::BinaryMatrix& stabilizers, const gf2::BinaryMatrix& logicals);

std::string code_to_json(const CssCode& code);
CssCode code_from_json(const std::string& text);

// -------------------------------------------------------------------------
// Relation index: edge classes of the convolution graphs.

enum class ConvGraph { check_to_check, check_to_data, data_to_check };

/// One edge class. `src` maps every destination site to its source site for
/// this relation (-1 where the edge leaves the lattice and zero padding
/// applies). `dt` is the temporal offset of the source relative to the
/// destination.
struct Relation {
    int dt = 0;
    std::string label;
    std::vector<int32_t> src;
};

struct RelationIndex {
    int src_sites = 0;
    int dst_sites = 0;
    std::vector<Relation> relations;
    /// Kernel size K as used by the cost models: relation classes per node.
    int kernel_size() const { return int(relations.size()); }
};

/// Enumerate the distinct relations of a convolution graph over the code's
/// layout, one set of spatial classes per temporal offset. Throws if the
/// layout breaks translation symmetry (same-type checks with different
/// neighbor-offset multisets).
RelationIndex relation_index(const CssCode& code, ConvGraph graph, const std::vector<int>& temporal_offsets);

/// Site bookkeeping shared by the network and the samplers.
int num_cells(const CssCode& code);                 // check-side lattice cells per round
int num_data_sites(const CssCode& code);            // data-side lattice cells
std::vector<int32_t> cell_of_check(const CssCode& code);  // global check id -> cell
std::vector<int32_t> data_site_of_qubit(const CssCode& code);

}  // namespace qconv::codes

#endif
