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

#ifndef BELIEFDEC_LAYOUT_H
#define BELIEFDEC_LAYOUT_H

#include <array>
#include <string>
#include <vector>

#include "beliefdec/stabilizer_code.h"

namespace beliefdec {

enum class CodeFamily { css, xy, xy_deformed };

std::string family_name(CodeFamily family);
CodeFamily family_from_name(const std::string &name);

/// One ancilla-measured stabilizer: its species letter and the data qubit
/// coupled in each of the four schedule slots (-1 where a boundary
/// stabilizer has no gate).
struct StabilizerDescriptor {
    char species;                      // 'X', 'Z' (CSS) or 'X', 'Y' (XY)
    std::array<int32_t, 4> slot_data;  // data qubit index per slot, -1 = none
    std::pair<int, int> ancilla_coord;

    size_t weight() const {
        size_t w = 0;
        for (int32_t q : slot_data) {
            if (q >= 0) {
                w++;
            }
        }
        return w;
    }
};

/// Per-data-qubit single-qubit Clifford conjugation applied to the code.
struct DeformationMap {
    std::vector<CliffordTag> tags;

    bool empty() const {
        for (CliffordTag t : tags) {
            if (t != CliffordTag::I) {
                return false;
            }
        }
        return true;
    }
    size_t tagged_count() const {
        size_t c = 0;
        for (CliffordTag t : tags) {
            if (t != CliffordTag::I) {
                c++;
            }
        }
        return c;
    }
};

/// Rotated-layout surface code: data qubits at even-even coordinates,
/// ancillas at odd-odd plaquette centers. The lattice has dz columns and dx
/// rows of data qubits, so the X logical is a weight-dx vertical chain and
/// the Z logical a weight-dz horizontal chain.
struct SurfaceCodeLayout {
    CodeFamily family;
    int dx, dz;  // for XY variants dx == dz == L

    std::vector<std::pair<int, int>> data_coords;
    std::vector<StabilizerDescriptor> stabilizers;
    DeformationMap deformation;  // identity tags unless family == xy_deformed

    size_t num_data() const {
        return data_coords.size();
    }
    size_t num_stabilizers() const {
        return stabilizers.size();
    }
    size_t total_qubits() const {
        return num_data() + num_stabilizers();
    }

    /// Builds the abstract code (deformation tags applied).
    StabilizerCode to_stabilizer_code() const;

    std::string to_json() const;
};

SurfaceCodeLayout build_css(int dx, int dz);
SurfaceCodeLayout build_xy(int L);
SurfaceCodeLayout build_xy_deformed(int L);

/// Flat list of two-qubit gates grouped by schedule slot.
struct ScheduledGate {
    int slot;
    int stab_index;
    int32_t data;     // data qubit index
    enum class Kind { cx_anc_ctrl, cy_anc_ctrl, cx_data_ctrl } kind;
};

/// Expands the per-stabilizer slot table into an ordered gate plan and
/// verifies that the per-slot gate sets are vertex-disjoint.
std::vector<ScheduledGate> build_schedule(const SurfaceCodeLayout &layout);

}  // namespace beliefdec

#endif
