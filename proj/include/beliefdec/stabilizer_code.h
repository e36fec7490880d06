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

#ifndef BELIEFDEC_STABILIZER_CODE_H
#define BELIEFDEC_STABILIZER_CODE_H

#include <stdexcept>
#include <utility>
#include <vector>

#include "beliefdec/pauli.h"

namespace beliefdec {

/// Raised when an exhaustive search would exceed the enumeration bound.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Combinations searched exhaustively are capped at 2^20; the codes we scan
/// have kernel dimension 1-2, so hitting this means something is wrong and
/// the failure should be loud rather than silently truncated.
constexpr size_t kMaxEnumerationBits = 20;

struct StabilizerCode {
    size_t n = 0;
    std::vector<PauliString> stabilizers;
    // One entry per logical qubit. logical_y may be empty for codes where a
    // native Y representative is not tracked.
    std::vector<PauliString> logical_x;
    std::vector<PauliString> logical_z;
    std::vector<PauliString> logical_y;
    std::vector<std::pair<int, int>> coordinates;

    /// All logical representatives that are tracked, flattened.
    std::vector<const PauliString *> all_logicals() const;

    /// Checks pairwise stabilizer commutation, logical/stabilizer
    /// commutation, anticommutation of paired logicals, hermiticity, and
    /// that no stabilizer is -I. Throws std::logic_error on violation.
    void validate() const;

    /// Row r = x-bits of stabilizer r (qubit carries X or Y). A Z error on
    /// qubit q anticommutes with stabilizer s exactly when this bit is set.
    BinaryMatrix x_component_matrix() const;
    BinaryMatrix z_component_matrix() const;
};

enum class PauliType { X, Y, Z, Any };

struct ZTypeDistanceResult {
    size_t distance = 0;
    std::vector<BitVec> logicals;       // supports of all Z-type logical operators found
    size_t z_stabilizer_count = 0;      // Z-type elements of the stabilizer group
};

/// Enumerates ker(H) for H the X/Y-component check matrix, classifying every
/// nonzero combination as a Z-type stabilizer (commutes with all logicals)
/// or a Z-type logical, and returns the minimum weight over the logicals.
ZTypeDistanceResult z_type_distance(const StabilizerCode &code);

/// Code distance restricted to one Pauli type, by exhaustive coset search.
/// Only intended for validation at small sizes; throws CapacityError when
/// the enumeration would exceed 2^20 combinations.
size_t min_logical_weight(const StabilizerCode &code, PauliType type);

}  // namespace beliefdec

#endif
