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

#ifndef BELIEFDEC_PAULI_H
#define BELIEFDEC_PAULI_H

#include <cstdint>
#include <string>

#include "beliefdec/gf2.h"

namespace beliefdec {

/// Single-qubit Clifford tags used for boundary deformation. `A` is HSH,
/// which exchanges Y and Z the way H exchanges X and Z.
enum class CliffordTag : uint8_t { I = 0, H = 1, A = 2 };

/// n-qubit Pauli operator stored as paired X/Z bit-vectors plus a phase.
///
/// The represented operator is i^phase_exponent * prod_q X_q^{x[q]} Z_q^{z[q]},
/// so a literal Y on one qubit is (x=1, z=1) with one unit of i absorbed into
/// the exponent. Decoding paths only ever look at the bits; the phase is kept
/// so validation code can distinguish S from -S.
class PauliString {
   public:
    PauliString() : n_(0), phase_(0) {}
    explicit PauliString(size_t n) : n_(n), x_(n), z_(n), phase_(0) {}

    /// Parse e.g. "XIZY" or "-XX" or "iY_Z" ('_' and 'I' both mean identity).
    static PauliString from_str(const std::string &s);
    static PauliString single(size_t n, size_t qubit, char pauli);

    size_t num_qubits() const {
        return n_;
    }
    const BitVec &x_bits() const {
        return x_;
    }
    const BitVec &z_bits() const {
        return z_;
    }
    BitVec &x_bits() {
        return x_;
    }
    BitVec &z_bits() {
        return z_;
    }

    /// Exponent k of the global phase i^k, k in {0,1,2,3}.
    uint8_t phase_exponent() const {
        return phase_;
    }
    void set_phase_exponent(uint8_t k) {
        phase_ = k & 3;
    }

    char pauli_at(size_t q) const;
    void set_pauli(size_t q, char pauli);

    size_t weight() const;
    bool is_identity_bits() const {
        return x_.is_zero() && z_.is_zero();
    }

    bool commutes_with(const PauliString &other) const;

    PauliString operator*(const PauliString &other) const;

    /// Conjugate qubit q by H or A (no-op for I). Tracks the exact sign.
    void conjugate_by(size_t q, CliffordTag tag);

    /// True when the operator squares to +I and has a real +-1 phase, which
    /// every stabilizer generator must.
    bool is_hermitian_involution() const;

    bool operator==(const PauliString &other) const {
        return n_ == other.n_ && phase_ == other.phase_ && x_ == other.x_ && z_ == other.z_;
    }
    bool same_bits(const PauliString &other) const {
        return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
    }

    std::string str() const;

   private:
    size_t n_;
    BitVec x_, z_;
    uint8_t phase_;
};

}  // namespace beliefdec

#endif
