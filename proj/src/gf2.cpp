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

#include "qconv/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace qconv::gf2 {

size_t BinaryMatrix::row_weight(size_t r) const {
    size_t w = 0;
    const uint64_t* p = row(r);
    for (size_t i = 0; i < words_per_row; i++) w += std::popcount(p[i]);
    return w;
}

bool BinaryMatrix::row_is_zero(size_t r) const {
    const uint64_t* p = row(r);
    for (size_t i = 0; i < words_per_row; i++)
        if (p[i]) return false;
    return true;
}

std::vector<size_t> BinaryMatrix::row_support(size_t r) const {
    std::vector<size_t> out;
    for (size_t c = 0; c < cols; c++)
        if (get(r, c)) out.push_back(c);
    return out;
}

BinaryMatrix BinaryMatrix::from_rows(size_t cols, const std::vector<std::vector<size_t>>& supports) {
    BinaryMatrix m(supports.size(), cols);
    for (size_t r = 0; r < supports.size(); r++)
        for (size_t c : supports[r]) m.set(r, c, true);
    return m;
}

std::vector<Word> make_bitvec(size_t nbits) { return std::vector<Word>((nbits + 63) / 64, 0); }

size_t bv_weight(const std::vector<Word>& v) {
    size_t w = 0;
    for (uint64_t x : v) w += std::popcount(x);
    return w;
}

bool row_dot(const BinaryMatrix& m, size_t r, const std::vector<Word>& vec) {
    uint64_t acc = 0;
    const uint64_t* p = m.row(r);
    for (size_t w = 0; w < m.words_per_row; w++) acc ^= p[w] & vec[w];
    return std::popcount(acc) & 1u;
}

std::vector<Word> mat_vec(const BinaryMatrix& m, const std::vector<Word>& x) {
    std::vector<Word> y = make_bitvec(m.rows);
    for (size_t r = 0; r < m.rows; r++)
        if (row_dot(m, r, x)) bv_flip(y, r);
    return y;
}

BinaryMatrix transpose(const BinaryMatrix& m) {
    BinaryMatrix t(m.cols, m.rows);
    for (size_t r = 0; r < m.rows; r++)
        for (size_t c = 0; c < m.cols; c++)
            if (m.get(r, c)) t.set(c, r, true);
    return t;
}

BinaryMatrix multiply(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("gf2::multiply: dimension mismatch");
    BinaryMatrix c(a.rows, b.cols);
    for (size_t r = 0; r < a.rows; r++) {
        uint64_t* out = c.row(r);
        for (size_t k = 0; k < a.cols; k++) {
            if (!a.get(r, k)) continue;
            const uint64_t* brow = b.row(k);
            for (size_t w = 0; w < b.words_per_row; w++) out[w] ^= brow[w];
        }
    }
    return c;
}

bool is_zero(const BinaryMatrix& m) {
    for (uint64_t w : m.bits)
        if (w) return false;
    return true;
}

std::vector<size_t> row_reduce(BinaryMatrix& m) {
    std::vector<size_t> pivots;
    size_t next_row = 0;
    for (size_t c = 0; c < m.cols && next_row < m.rows; c++) {
        size_t pivot = next_row;
        while (pivot < m.rows && !m.get(pivot, c)) pivot++;
        if (pivot == m.rows) continue;
        if (pivot != next_row) {
            for (size_t w = 0; w < m.words_per_row; w++)
                std::swap(m.row(next_row)[w], m.row(pivot)[w]);
        }
        for (size_t r = 0; r < m.rows; r++)
            if (r != next_row && m.get(r, c)) m.xor_row(r, next_row);
        pivots.push_back(c);
        next_row++;
    }
    return pivots;
}

size_t rank(BinaryMatrix m) { return row_reduce(m).size(); }

BinaryMatrix nullspace(const BinaryMatrix& m) {
    BinaryMatrix r = m;
    std::vector<size_t> pivots = row_reduce(r);
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t c : pivots) is_pivot[c] = true;

    // One basis vector per free column: x_free = 1, pivot entries solve Mx = 0.
    std::vector<std::vector<size_t>> basis;
    for (size_t c = 0; c < m.cols; c++) {
        if (is_pivot[c]) continue;
        std::vector<size_t> supp{c};
        for (size_t i = 0; i < pivots.size(); i++)
            if (r.get(i, c)) supp.push_back(pivots[i]);
        basis.push_back(std::move(supp));
    }
    return BinaryMatrix::from_rows(m.cols, basis);
}

void reduce_against(std::vector<Word>& v, const BinaryMatrix& rref, const std::vector<size_t>& pivots) {
    for (size_t i = 0; i < pivots.size(); i++) {
        if (bv_get(v, pivots[i])) {
            const uint64_t* row = rref.row(i);
            for (size_t w = 0; w < rref.words_per_row; w++) v[w] ^= row[w];
        }
    }
}

BinaryMatrix invert(const BinaryMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("gf2::invert: not square");
    size_t n = m.rows;
    // Augment [M | I] and reduce.
    BinaryMatrix aug(n, 2 * n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++)
            if (m.get(r, c)) aug.set(r, c, true);
        aug.set(r, n + r, true);
    }
    std::vector<size_t> pivots;
    size_t next_row = 0;
    for (size_t c = 0; c < n && next_row < n; c++) {
        size_t pivot = next_row;
        while (pivot < n && !aug.get(pivot, c)) pivot++;
        if (pivot == n) continue;
        if (pivot != next_row)
            for (size_t w = 0; w < aug.words_per_row; w++)
                std::swap(aug.row(next_row)[w], aug.row(pivot)[w]);
        for (size_t r = 0; r < n; r++)
            if (r != next_row && aug.get(r, c)) aug.xor_row(r, next_row);
        pivots.push_back(c);
        next_row++;
    }
    if (pivots.size() != n) throw std::invalid_argument("gf2::invert: singular matrix");
    BinaryMatrix inv(n, n);
    for (size_t r = 0; r < n; r++)
        for (size_t c = 0; c < n; c++)
            if (aug.get(r, n + c)) inv.set(r, c, true);
    return inv;
}

}  // namespace qconv::gf2
