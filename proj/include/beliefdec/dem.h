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

#ifndef BELIEFDEC_DEM_H
#define BELIEFDEC_DEM_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "beliefdec/circuit.h"

namespace beliefdec {

struct UndetectableLogicalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DecompositionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One independent error mechanism of the circuit-level Tanner graph: the
/// merged probability that an odd number of its underlying circuit faults
/// occur, together with the detectors and observables they flip.
struct ErrorMechanism {
    double probability = 0.0;
    std::vector<uint32_t> detectors;  // sorted, size 1..4
    uint64_t observables = 0;         // bit mask over observable indices

    struct Part {
        std::vector<uint32_t> detectors;  // size 1 or 2
        uint64_t observables = 0;
    };
    // Present for hyperedges (3 or 4 detectors) after decomposition: one or
    // two graphlike parts whose detector sets partition this mechanism's.
    std::vector<Part> decomposition;

    // Provenance of one contributing circuit fault, for cross-checks.
    int32_t first_channel = -1;
    int32_t first_outcome = -1;

    bool is_graphlike() const {
        return detectors.size() <= 2;
    }
};

struct DetectorErrorModel {
    size_t num_detectors = 0;
    size_t num_observables = 0;
    std::vector<ErrorMechanism> mechanisms;  // canonical order: by detector set, then mask
};

/// Enumerates every noise-site outcome, propagates it to its detector and
/// observable flips, and merges indistinguishable mechanisms. Mechanisms
/// flipping an observable but no detector are a fatal model error;
/// mechanisms flipping nothing are dropped, as are merged probabilities
/// below 1e-15.
DetectorErrorModel build_dem(const Circuit &circuit);

/// Gives every 3- or 4-detector mechanism a decomposition into parts that
/// already exist as graphlike mechanisms. Deterministic: candidate
/// partitions are tried in lexicographic order of the partner chosen for
/// the smallest detector. Throws DecompositionError when no candidate is
/// available.
DetectorErrorModel decompose_hyperedges(DetectorErrorModel dem);

/// Text form, one `error(p) D.. [^ D.. ] L..` line per mechanism in
/// canonical order.
std::string serialize_dem(const DetectorErrorModel &dem);
DetectorErrorModel parse_dem(const std::string &text);

}  // namespace beliefdec

#endif
