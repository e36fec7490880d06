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

#ifndef BELIEFDEC_CIRCUIT_H
#define BELIEFDEC_CIRCUIT_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "beliefdec/layout.h"

namespace beliefdec {

/// Biased circuit-level noise. `p` is the base error strength and `eta >= 1`
/// the ratio of Z-type error probability to all other error probability.
struct NoiseModel {
    double p;
    double eta;
};

/// Total error probability of the two-qubit channel, (1/5 + 4/(5 eta)) p.
/// Thresholds are quoted in these units; p itself equals p_CX only at eta=1.
double cnot_infidelity(double p, double eta);
double p_from_cnot_infidelity(double p_cx, double eta);

enum class Inst : uint8_t { prep_x, prep_y, prep_z, cx, cy, meas_x, meas_y, meas_z, idle };

struct Instruction {
    Inst kind;
    uint32_t q0 = 0;  // control for cx/cy
    uint32_t q1 = 0;  // target for cx/cy
    int32_t channel = -1;
    int32_t meas_index = -1;
};

/// Pauli on one or two qubits, 2 bits per qubit: bit0 = X part, bit1 = Z part.
using PauliCode = uint8_t;  // 0=I, 1=X, 2=Z, 3=Y

struct ChannelOutcome {
    PauliCode pauli0 = 0;
    PauliCode pauli1 = 0;
    double prob = 0.0;
};

/// A categorical Pauli channel attached to one instruction. Outcomes are
/// disjoint; the identity absorbs the remaining probability mass.
struct NoiseChannel {
    enum class Kind : uint8_t { pauli1, pauli2, meas_flip };
    Kind kind;
    uint32_t q0 = 0, q1 = 0;
    int32_t meas_index = -1;  // for meas_flip
    std::vector<ChannelOutcome> outcomes;
    std::vector<double> cumulative;

    double total_probability() const {
        return cumulative.empty() ? 0.0 : cumulative.back();
    }
    void finalize();  // builds cumulative, checks mass <= 1
};

struct Circuit {
    size_t num_qubits = 0;
    size_t num_data = 0;  // qubits [0, num_data) are data, the rest ancillas
    std::vector<std::vector<Instruction>> steps;
    std::vector<bool> step_noisy;
    std::vector<CliffordTag> qubit_tags;  // boundary-deformation tags, identity by default
    std::vector<NoiseChannel> channels;   // empty until attach_noise
    std::vector<std::vector<uint32_t>> detectors;    // measurement-index sets
    std::vector<std::vector<uint32_t>> observables;  // measurement-index sets
    std::vector<std::array<int, 3>> detector_coords;  // (x, y, round) for debugging
    size_t num_measurements = 0;

    bool has_noise() const {
        return !channels.empty();
    }

    /// Enforces one-instruction-per-qubit-per-timestep and index sanity.
    void validate() const;

    /// Human-readable listing of timesteps, noise sites, detectors and
    /// observables. The line grammar is documented in the README.
    std::string to_text() const;
};

/// Memory experiment: prepare data qubits, run `rounds` noisy syndrome
/// cycles, measure data transversally. With noisy_spam=false the noisy
/// rounds are bracketed by noiseless rounds and the data preparation and
/// measurement are themselves noiseless.
///
/// basis 'X' or 'Z' for CSS codes; 'X' or 'Y' for the XY variants.
Circuit build_memory_experiment(const SurfaceCodeLayout &layout, int rounds, char basis, bool noisy_spam);

/// Returns a copy of the circuit with the Appendix-style biased channels
/// attached to every instruction in the noisy timesteps. The input circuit
/// must be noiseless.
Circuit attach_noise(const Circuit &circuit, const NoiseModel &model);

}  // namespace beliefdec

#endif
