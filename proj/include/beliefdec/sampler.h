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

#ifndef BELIEFDEC_SAMPLER_H
#define BELIEFDEC_SAMPLER_H

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "beliefdec/circuit.h"

namespace beliefdec {

/// Counter-style 64-bit generator: cheap to seed per shot, so every shot owns
/// an independent substream and sampling is reproducible under any
/// parallel schedule.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t s) : state(s) {}
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() {
        return double(next() >> 11) * 0x1.0p-53;
    }
    static uint64_t stream_seed(uint64_t seed, uint64_t shot_index) {
        SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ULL * (shot_index + 1)));
        g.next();
        return g.next();
    }
};

struct ShotBatch {
    uint64_t shots = 0;
    size_t num_detectors = 0;
    size_t num_observables = 0;
    uint64_t rng_seed = 0;
    size_t det_words_per_shot = 0;
    size_t obs_words_per_shot = 0;
    std::vector<uint64_t> detector_bits;    // shots x det_words_per_shot
    std::vector<uint64_t> observable_bits;  // shots x obs_words_per_shot

    bool detector(uint64_t shot, size_t d) const {
        return (detector_bits[shot * det_words_per_shot + (d >> 6)] >> (d & 63)) & 1;
    }
    bool observable(uint64_t shot, size_t o) const {
        return (observable_bits[shot * obs_words_per_shot + (o >> 6)] >> (o & 63)) & 1;
    }

    /// Row-packed bits, ceil(bits/8) bytes per shot, LSB-first within a byte.
    void write_b8(const std::string &path, bool observables_instead = false) const;
    void write_csv(const std::string &path) const;
};

/// Pauli-frame simulator for one circuit. Reusable scratch state; one
/// instance per thread.
class FrameSampler {
   public:
    explicit FrameSampler(const Circuit &circuit);

    size_t det_words() const {
        return det_words_;
    }
    size_t obs_words() const {
        return obs_words_;
    }

    /// Samples one shot into packed detector/observable words.
    void run_shot(uint64_t seed, uint64_t shot_index, uint64_t *det_out, uint64_t *obs_out);

    /// Deterministically propagates the given channel outcomes (and nothing
    /// else) through the circuit. Used for fault-injection tests and
    /// cross-checks against the detector error model.
    void run_injected(
        const std::vector<std::pair<uint32_t, uint32_t>> &faults, uint64_t *det_out, uint64_t *obs_out);

   private:
    void execute(SplitMix64 *rng, const std::vector<std::pair<uint32_t, uint32_t>> *faults, uint64_t *det_out,
                 uint64_t *obs_out);
    void apply_pauli(uint32_t q, PauliCode p) {
        x_frame_[q >> 6] ^= uint64_t(p & 1) << (q & 63);
        z_frame_[q >> 6] ^= uint64_t(p >> 1) << (q & 63);
    }
    bool frame_x(uint32_t q) const {
        return (x_frame_[q >> 6] >> (q & 63)) & 1;
    }
    bool frame_z(uint32_t q) const {
        return (z_frame_[q >> 6] >> (q & 63)) & 1;
    }

    const Circuit &circuit_;
    size_t det_words_, obs_words_;
    std::vector<uint64_t> x_frame_, z_frame_;
    // Detector/observable ids touched by each measurement index.
    std::vector<std::vector<uint32_t>> meas_to_dets_;
    std::vector<std::vector<uint32_t>> meas_to_obs_;
};

ShotBatch sample(const Circuit &circuit, uint64_t shots, uint64_t seed);

}  // namespace beliefdec

#endif
