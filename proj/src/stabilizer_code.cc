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

#include "beliefdec/stabilizer_code.h"

#include <bit>
#include <stdexcept>
#include <string>

namespace beliefdec {

std::vector<const PauliString *> StabilizerCode::all_logicals() const {
    std::vector<const PauliString *> out;
    for (const auto &l : logical_x) {
        out.push_back(&l);
    }
    for (const auto &l : logical_z) {
        out.push_back(&l);
    }
    for (const auto &l : logical_y) {
        out.push_back(&l);
    }
    return out;
}

void StabilizerCode::validate() const {
    for (size_t i = 0; i < stabilizers.size(); i++) {
        const auto &s = stabilizers[i];
        if (s.num_qubits() != n) {
            throw std::logic_error("stabilizer " + std::to_string(i) + " has wrong qubit count");
        }
        if (!s.is_hermitian_involution()) {
            throw std::logic_error("stabilizer " + std::to_string(i) + " does not square to +I");
        }
        if (s.is_identity_bits() && s.phase_exponent() == 2) {
            throw std::logic_error("stabilizer group contains -I");
        }
        for (size_t j = i + 1; j < stabilizers.size(); j++) {
            if (!s.commutes_with(stabilizers[j])) {
                throw std::logic_error(
                    "stabilizers " + std::to_string(i) + " and " + std::to_string(j) + " anticommute");
            }
        }
    }
    auto logicals = all_logicals();
    for (size_t i = 0; i < logicals.size(); i++) {
        for (size_t j = 0; j < stabilizers.size(); j++) {
            if (!logicals[i]->commutes_with(stabilizers[j])) {
                throw std::logic_error(
                    "logical " + std::to_string(i) + " anticommutes with stabilizer " + std::to_string(j));
            }
        }
    }
    if (logical_x.size() != logical_z.size()) {
        throw std::logic_error("mismatched logical_x / logical_z counts");
    }
    for (size_t k = 0; k < logical_x.size(); k++) {
        if (logical_x[k].commutes_with(logical_z[k])) {
            throw std::logic_error("paired logicals " + std::to_string(k) + " commute");
        }
        if (k < logical_y.size()) {
            if (logical_y[k].commutes_with(logical_x[k]) || logical_y[k].commutes_with(logical_z[k])) {
                throw std::logic_error("logical Y " + std::to_string(k) + " fails anticommutation");
            }
        }
    }
}

BinaryMatrix StabilizerCode::x_component_matrix() const {
    std::vector<BitVec> rows;
    rows.reserve(stabilizers.size());
    for (const auto &s : stabilizers) {
        rows.push_back(s.x_bits());
    }
    return BinaryMatrix::from_rows(rows, n);
}

BinaryMatrix StabilizerCode::z_component_matrix() const {
    std::vector<BitVec> rows;
    rows.reserve(stabilizers.size());
    for (const auto &s : stabilizers) {
        rows.push_back(s.z_bits());
    }
    return BinaryMatrix::from_rows(rows, n);
}

namespace {

// Enumerates all nonzero GF(2) combinations of `basis` by Gray code, calling
// visit(combo, weight) for each.
template <typename F>
void enumerate_combinations(const std::vector<BitVec> &basis, size_t num_bits, F visit) {
    size_t k = basis.size();
    if (k > kMaxEnumerationBits) {
        throw CapacityError(
            "kernel dimension " + std::to_string(k) + " exceeds exhaustive enumeration bound 2^" +
            std::to_string(kMaxEnumerationBits));
    }
    BitVec combo(num_bits);
    uint64_t prev = 0;
    for (uint64_t i = 1; i < (uint64_t{1} << k); i++) {
        uint64_t gray = i ^ (i >> 1);
        uint64_t flipped = gray ^ prev;
        prev = gray;
        int bit = std::countr_zero(flipped);
        combo.xor_with(basis[bit]);
        visit(combo);
    }
}

}  // namespace

ZTypeDistanceResult z_type_distance(const StabilizerCode &code) {
    BinaryMatrix h = code.x_component_matrix();
    std::vector<BitVec> basis = h.kernel_basis();
    auto logicals = code.all_logicals();

    ZTypeDistanceResult result;
    result.distance = SIZE_MAX;
    enumerate_combinations(basis, code.n, [&](const BitVec &v) {
        // Z^v anticommutes with logical L iff |v & L.x| is odd.
        bool is_logical = false;
        for (const PauliString *l : logicals) {
            if (BitVec::and_parity(v, l->x_bits())) {
                is_logical = true;
                break;
            }
        }
        if (is_logical) {
            result.logicals.push_back(v);
            result.distance = std::min(result.distance, v.popcount());
        } else {
            result.z_stabilizer_count++;
        }
    });
    if (result.distance == SIZE_MAX) {
        result.distance = 0;
    }
    return result;
}

size_t min_logical_weight(const StabilizerCode &code, PauliType type) {
    auto logicals = code.all_logicals();

    if (type == PauliType::Any) {
        // Full centralizer search over [x|z] symplectic vectors.
        std::vector<BitVec> rows;
        for (const auto &s : code.stabilizers) {
            BitVec row(2 * code.n);
            for (size_t q = 0; q < code.n; q++) {
                if (s.z_bits().get(q)) {
                    row.set(q, true);
                }
                if (s.x_bits().get(q)) {
                    row.set(code.n + q, true);
                }
            }
            rows.push_back(std::move(row));
        }
        BinaryMatrix m = BinaryMatrix::from_rows(rows, 2 * code.n);
        std::vector<BitVec> basis = m.kernel_basis();
        size_t best = SIZE_MAX;
        enumerate_combinations(basis, 2 * code.n, [&](const BitVec &v) {
            bool is_logical = false;
            for (const PauliString *l : logicals) {
                bool par = false;
                for (size_t q = 0; q < code.n; q++) {
                    par ^= (v.get(q) && l->z_bits().get(q)) ^ (v.get(code.n + q) && l->x_bits().get(q));
                }
                if (par) {
                    is_logical = true;
                    break;
                }
            }
            if (is_logical) {
                size_t w = 0;
                for (size_t q = 0; q < code.n; q++) {
                    if (v.get(q) || v.get(code.n + q)) {
                        w++;
                    }
                }
                best = std::min(best, w);
            }
        });
        if (best == SIZE_MAX) {
            throw std::logic_error("no logical operator found in centralizer search");
        }
        return best;
    }

    // Pure-type search. Candidates P^v commute with stabilizer s iff the
    // type-dependent component of s has even overlap with v.
    std::vector<BitVec> rows;
    for (const auto &s : code.stabilizers) {
        BitVec row(code.n);
        for (size_t q = 0; q < code.n; q++) {
            bool bit = false;
            switch (type) {
                case PauliType::X:
                    bit = s.z_bits().get(q);
                    break;
                case PauliType::Z:
                    bit = s.x_bits().get(q);
                    break;
                case PauliType::Y:
                    bit = s.x_bits().get(q) ^ s.z_bits().get(q);
                    break;
                default:
                    break;
            }
            row.set(q, bit);
        }
        rows.push_back(std::move(row));
    }
    BinaryMatrix m = BinaryMatrix::from_rows(rows, code.n);
    std::vector<BitVec> basis = m.kernel_basis();

    size_t best = SIZE_MAX;
    enumerate_combinations(basis, code.n, [&](const BitVec &v) {
        bool is_logical = false;
        for (const PauliString *l : logicals) {
            bool par = false;
            switch (type) {
                case PauliType::X:
                    par = BitVec::and_parity(v, l->z_bits());
                    break;
                case PauliType::Z:
                    par = BitVec::and_parity(v, l->x_bits());
                    break;
                case PauliType::Y: {
                    BitVec mixed = l->x_bits();
                    mixed.xor_with(l->z_bits());
                    par = BitVec::and_parity(v, mixed);
                    break;
                }
                default:
                    break;
            }
            if (par) {
                is_logical = true;
                break;
            }
        }
        if (is_logical) {
            best = std::min(best, v.popcount());
        }
    });
    if (best == SIZE_MAX) {
        throw std::logic_error("no logical operator of requested type exists");
    }
    return best;
}

}  // namespace beliefdec
