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

#ifndef QCONV_GF2_HPP
#define QCONV_GF2_HPP

#include <cstdint>
#include <vector>

namespace qconv::gf2 {

/// Dense matrix over GF(2), bit-packed row-major into 64-bit words.
struct BinaryMatrix {
    size_t rows = 0;
    size_t cols = 0;
    size_t words_per_row = 0;
    std::vector<uint64_t> bits;

    BinaryMatrix() = default;
    BinaryMatrix(size_t r, size_t c)
        : rows(r), cols(c), words_per_row((c + 63) / 64), bits(r * words_per_row, 0) {}

    bool get(size_t r, size_t c) const {
        return (bits[r * words_per_row + c / 64] >> (c % 64)) & 1u;
    }
    void set(size_t r, size_t c, bool v) {
        uint64_t& w = bits[r * words_per_row + c / 64];
        uint64_t mask = uint64_t(1) << (c % 64);
        w = v ? (w | mask) : (w & ~mask);
    }
    void flip(size_t r, size_t c) { bits[r * words_per_row + c / 64] ^= uint64_t(1) << (c % 64); }

    const uint64_t* row(size_t r) const { return bits.data() + r * words_per_row; }
    uint64_t* row(size_t r) { return bits.data() + r * words_per_row; }

    // row(dst) ^= row(src)
    void xor_row(size_t dst, size_t src) {
        uint64_t* d = row(dst);
        const uint64_t* s = row(src);
        for (size_t w = 0; w < words_per_row; w++) d[w] ^= s[w];
    }

    size_t row_weight(size_t r) const;
    bool row_is_zero(size_t r) const;

    bool operator==(const BinaryMatrix& other) const = default;

    /// Column indices of the ones in a row, ascending.
    std::vector<size_t> row_support(size_t r) const;

    static BinaryMatrix from_rows(size_t cols, const std::vector<std::vector<size_t>>& supports);
};

/// Bit vector helpers used by row-times-matrix products.
using Word = uint64_t;
std::vector<Word> make_bitvec(size_t nbits);
inline bool bv_get(const std::vector<Word>& v, size_t i) { return (v[i / 64] >> (i % 64)) & 1u; }
inline void bv_flip(std::vector<Word>& v, size_t i) { v[i / 64] ^= uint64_t(1) << (i % 64); }
inline void bv_set(std::vector<Word>& v, size_t i, bool b) {
    uint64_t mask = uint64_t(1) << (i % 64);
    v[i / 64] = b ? (v[i / 64] | mask) : (v[i / 64] & ~mask);
}
size_t bv_weight(const std::vector<Word>& v);

/// Parity of <matrix row r, packed vector>, vector length = cols.
bool row_dot(const BinaryMatrix& m, size_t r, const std::vector<Word>& vec);

/// y = M . x over GF(2); x has m.cols bits, result has m.rows bits.
std::vector<Word> mat_vec(const BinaryMatrix& m, const std::vector<Word>& x);

BinaryMatrix transpose(const BinaryMatrix& m);

/// C = A . B over GF(2). Requires a.cols == b.rows.
BinaryMatrix multiply(const BinaryMatrix& a, const BinaryMatrix& b);

bool is_zero(const BinaryMatrix& m);

size_t rank(BinaryMatrix m);

/// Basis of the right null space {x : M x = 0}, one row per basis vector.
BinaryMatrix nullspace(const BinaryMatrix& m);

/// Row-reduce (RREF with lowest-index pivoting). Returns pivot columns.
std::vector<size_t> row_reduce(BinaryMatrix& m);

/// Reduce `v` (length = basis.cols) against an RREF basis with the given
/// pivot columns; afterwards v is the canonical coset representative.
void reduce_against(std::vector<Word>& v, const BinaryMatrix& rref, const std::vector<size_t>& pivots);

/// Inverse of a square invertible matrix; throws std::invalid_argument otherwise.
BinaryMatrix invert(const BinaryMatrix& m);

}  // namespace qconv::gf2

#endif
