// Copyright 2026 beliefdec Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "beliefdec/gf2.h"

#include <bit>
#include <stdexcept>

namespace beliefdec {

void BitVec::xor_with(const BitVec &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVec size mismatch in xor_with");
    }
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] ^= other.words_[w];
    }
}

void BitVec::clear() {
    std::fill(words_.begin(), words_.end(), 0);
}

size_t BitVec::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVec::any() const {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

bool BitVec::and_parity(const BitVec &a, const BitVec &b) {
    if (a.num_bits_ != b.num_bits_) {
        throw std::invalid_argument("BitVec size mismatch in and_parity");
    }
    uint64_t acc = 0;
    for (size_t w = 0; w < a.words_.size(); w++) {
        acc ^= a.words_[w] & b.words_[w];
    }
    return std::popcount(acc) & 1;
}

std::string BitVec::str() const {
    std::string s(num_bits_, '0');
    for (size_t i = 0; i < num_bits_; i++) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

BinaryMatrix BinaryMatrix::identity(size_t n) {
    BinaryMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<BitVec> &rows, size_t cols) {
    BinaryMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("from_rows: row length mismatch");
        }
        for (size_t w = 0; w < m.words_per_row_; w++) {
            m.bits_[r * m.words_per_row_ + w] = rows[r].words()[w];
        }
    }
    return m;
}

void BinaryMatrix::xor_row_into(size_t src, size_t dst) {
    uint64_t *s = &bits_[src * words_per_row_];
    uint64_t *d = &bits_[dst * words_per_row_];
    for (size_t w = 0; w < words_per_row_; w++) {
        d[w] ^= s[w];
    }
}

BitVec BinaryMatrix::row(size_t r) const {
    BitVec v(cols_);
    for (size_t w = 0; w < words_per_row_; w++) {
        v.words()[w] = bits_[r * words_per_row_ + w];
    }
    return v;
}

BitVec BinaryMatrix::mul_vec(const BitVec &v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("mul_vec: dimension mismatch");
    }
    BitVec out(rows_);
    for (size_t r = 0; r < rows_; r++) {
        uint64_t acc = 0;
        const uint64_t *rw = &bits_[r * words_per_row_];
        for (size_t w = 0; w < words_per_row_; w++) {
            acc ^= rw[w] & v.words()[w];
        }
        out.set(r, std::popcount(acc) & 1);
    }
    return out;
}

namespace {

// Row echelon form in place. Returns pivot columns in elimination order.
std::vector<size_t> eliminate(BinaryMatrix &m) {
    std::vector<size_t> pivot_cols;
    size_t pivot_row = 0;
    for (size_t c = 0; c < m.cols() && pivot_row < m.rows(); c++) {
        size_t sel = SIZE_MAX;
        for (size_t r = pivot_row; r < m.rows(); r++) {
            if (m.get(r, c)) {
                sel = r;
                break;
            }
        }
        if (sel == SIZE_MAX) {
            continue;
        }
        if (sel != pivot_row) {
            // swap rows via three XORs to stay word-level
            m.xor_row_into(sel, pivot_row);
            m.xor_row_into(pivot_row, sel);
            m.xor_row_into(sel, pivot_row);
        }
        for (size_t r = 0; r < m.rows(); r++) {
            if (r != pivot_row && m.get(r, c)) {
                m.xor_row_into(pivot_row, r);
            }
        }
        pivot_cols.push_back(c);
        pivot_row++;
    }
    return pivot_cols;
}

}  // namespace

size_t BinaryMatrix::rank() const {
    BinaryMatrix copy = *this;
    return eliminate(copy).size();
}

std::vector<BitVec> BinaryMatrix::kernel_basis() const {
    BinaryMatrix reduced = *this;
    std::vector<size_t> pivot_cols = eliminate(reduced);

    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivot_cols) {
        is_pivot[c] = true;
    }

    std::vector<BitVec> basis;
    for (size_t free_col = 0; free_col < cols_; free_col++) {
        if (is_pivot[free_col]) {
            continue;
        }
        BitVec v(cols_);
        v.set(free_col, true);
        // Reduced form: pivot row i has its pivot at pivot_cols[i] and the
        // only other ones sit in free columns.
        for (size_t i = 0; i < pivot_cols.size(); i++) {
            if (reduced.get(i, free_col)) {
                v.set(pivot_cols[i], true);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace beliefdec
