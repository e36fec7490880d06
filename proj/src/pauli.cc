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

#include "beliefdec/pauli.h"

#include <bit>
#include <stdexcept>

namespace beliefdec {

PauliString PauliString::from_str(const std::string &s) {
    size_t k = 0;
    uint8_t phase = 0;
    if (k < s.size() && (s[k] == '+' || s[k] == '-')) {
        if (s[k] == '-') {
            phase += 2;
        }
        k++;
    }
    if (k < s.size() && s[k] == 'i') {
        phase += 1;
        k++;
    }
    PauliString p(s.size() - k);
    p.phase_ = phase & 3;
    for (size_t q = 0; k < s.size(); k++, q++) {
        p.set_pauli(q, s[k]);
    }
    return p;
}

PauliString PauliString::single(size_t n, size_t qubit, char pauli) {
    PauliString p(n);
    p.set_pauli(qubit, pauli);
    return p;
}

char PauliString::pauli_at(size_t q) const {
    bool x = x_.get(q), z = z_.get(q);
    if (x && z) {
        return 'Y';
    }
    if (x) {
        return 'X';
    }
    if (z) {
        return 'Z';
    }
    return 'I';
}

void PauliString::set_pauli(size_t q, char pauli) {
    // Remove any existing Y's phase unit before rewriting the qubit.
    if (x_.get(q) && z_.get(q)) {
        phase_ = (phase_ + 3) & 3;
    }
    switch (pauli) {
        case 'I':
        case '_':
            x_.set(q, false);
            z_.set(q, false);
            break;
        case 'X':
            x_.set(q, true);
            z_.set(q, false);
            break;
        case 'Z':
            x_.set(q, false);
            z_.set(q, true);
            break;
        case 'Y':
            x_.set(q, true);
            z_.set(q, true);
            phase_ = (phase_ + 1) & 3;
            break;
        default:
            throw std::invalid_argument(std::string("unknown Pauli letter: ") + pauli);
    }
}

size_t PauliString::weight() const {
    size_t total = 0;
    for (size_t w = 0; w < x_.words().size(); w++) {
        uint64_t occupied = x_.words()[w] | z_.words()[w];
        total += std::popcount(occupied);
    }
    return total;
}

bool PauliString::commutes_with(const PauliString &other) const {
    if (n_ != other.n_) {
        throw std::invalid_argument("commutes_with: qubit count mismatch");
    }
    bool sym = BitVec::and_parity(x_, other.z_) ^ BitVec::and_parity(z_, other.x_);
    return !sym;
}

PauliString PauliString::operator*(const PauliString &other) const {
    if (n_ != other.n_) {
        throw std::invalid_argument("PauliString product: qubit count mismatch");
    }
    PauliString out(n_);
    out.x_ = x_;
    out.z_ = z_;
    out.x_.xor_with(other.x_);
    out.z_.xor_with(other.z_);
    // Reordering Z^z1 past X^x2 costs (-1)^{|z1 & x2|}.
    uint8_t reorder = BitVec::and_parity(z_, other.x_) ? 2 : 0;
    out.phase_ = (phase_ + other.phase_ + reorder) & 3;
    return out;
}

void PauliString::conjugate_by(size_t q, CliffordTag tag) {
    bool x = x_.get(q), z = z_.get(q);
    switch (tag) {
        case CliffordTag::I:
            return;
        case CliffordTag::H:
            // X <-> Z; the XZ word picks up a sign (HYH = -Y).
            x_.set(q, z);
            z_.set(q, x);
            if (x && z) {
                phase_ = (phase_ + 2) & 3;
            }
            return;
        case CliffordTag::A:
            // X -> X, Z -> -Y, Y -> Z. In XZ-word form:
            // (0,1) -> i^3 (1,1);  (1,1) -> i^3 (0,1);  (1,0) fixed.
            if (!x && z) {
                x_.set(q, true);
                phase_ = (phase_ + 3) & 3;
            } else if (x && z) {
                x_.set(q, false);
                phase_ = (phase_ + 3) & 3;
            }
            return;
    }
}

bool PauliString::is_hermitian_involution() const {
    // (i^k X^x Z^z)^2 = i^{2k} (-1)^{|x & z|} I, so P^2 = +I (and P = P^dag)
    // exactly when k + |x & z| is even.
    bool neg = BitVec::and_parity(x_, z_);
    return ((phase_ + (neg ? 1 : 0)) & 1) == 0;
}

std::string PauliString::str() const {
    // Phase is displayed relative to literal Paulis, so convert the stored
    // XZ-word exponent by adding one i per Y.
    size_t y_count = 0;
    for (size_t w = 0; w < x_.words().size(); w++) {
        y_count += std::popcount(x_.words()[w] & z_.words()[w]);
    }
    uint8_t disp = (phase_ + 4 - (y_count & 3)) & 3;
    std::string s;
    switch (disp) {
        case 0:
            s = "+";
            break;
        case 1:
            s = "i";
            break;
        case 2:
            s = "-";
            break;
        case 3:
            s = "-i";
            break;
    }
    for (size_t q = 0; q < n_; q++) {
        s += pauli_at(q);
    }
    return s;
}

}  // namespace beliefdec
