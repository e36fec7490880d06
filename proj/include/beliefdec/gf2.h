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

#ifndef BELIEFDEC_GF2_H
#define BELIEFDEC_GF2_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace beliefdec {

/// Dense bit vector over GF(2), packed into 64-bit words.
class BitVec {
   public:
    BitVec() : num_bits_(0) {}
    explicit BitVec(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {}

    size_t size() const {
        return num_bits_;
    }
    bool get(size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(size_t i, bool value) {
        uint64_t mask = uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void toggle(size_t i) {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }

    void xor_with(const BitVec &other);
    void clear();

    size_t popcount() const;
    bool any() const;
    bool is_zero() const {
        return !any();
    }

    /// Parity of the AND of two vectors; the workhorse of symplectic products.
    static bool and_parity(const BitVec &a, const BitVec &b);

    bool operator==(const BitVec &other) const {
        return num_bits_ == other.num_bits_ && words_ == other.words_;
    }
    bool operator!=(const BitVec &other) const {
        return !(*this == other);
    }

    const std::vector<uint64_t> &words() const {
        return words_;
    }
    std::vector<uint64_t> &words() {
        return words_;
    }

    std::string str() const;

   private:
    size_t num_bits_;
    std::vector<uint64_t> words_;
};

/// Dense GF(2) matrix with bit-packed row-major storage. Row operations are
/// word-level XORs, which keeps Gaussian elimination fast on the ~10^4-column
/// check matrices that show up in large-lattice distance scans.
class BinaryMatrix {
   public:
    BinaryMatrix() : rows_(0), cols_(0), words_per_row_(0) {}
    BinaryMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64), bits_(rows * words_per_row_, 0) {}

    static BinaryMatrix identity(size_t n);
    static BinaryMatrix from_rows(const std::vector<BitVec> &rows, size_t cols);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }

    bool get(size_t r, size_t c) const {
        return (bits_[r * words_per_row_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(size_t r, size_t c, bool value) {
        uint64_t mask = uint64_t{1} << (c & 63);
        size_t idx = r * words_per_row_ + (c >> 6);
        if (value)
            bits_[idx] |= mask;
        else
            bits_[idx] &= ~mask;
    }

    void xor_row_into(size_t src, size_t dst);
    BitVec row(size_t r) const;

    /// Matrix-vector product over GF(2).
    BitVec mul_vec(const BitVec &v) const;

    size_t rank() const;

    /// Basis of {v : Hv = 0}. Basis size is always cols() - rank().
    std::vector<BitVec> kernel_basis() const;

   private:
    size_t rows_, cols_, words_per_row_;
    std::vector<uint64_t> bits_;
};

}  // namespace beliefdec

#endif
