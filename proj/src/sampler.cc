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

#include "beliefdec/sampler.h"

#include <cstring>
#include <fstream>
#include <stdexcept>

namespace beliefdec {

FrameSampler::FrameSampler(const Circuit &circuit)
    : circuit_(circuit),
      det_words_((circuit.detectors.size() + 63) / 64),
      obs_words_((circuit.observables.size() + 63) / 64),
      x_frame_((circuit.num_qubits + 63) / 64, 0),
      z_frame_((circuit.num_qubits + 63) / 64, 0),
      meas_to_dets_(circuit.num_measurements),
      meas_to_obs_(circuit.num_measurements) {
    for (size_t d = 0; d < circuit.detectors.size(); d++) {
        for (uint32_t m : circuit.detectors[d]) {
            meas_to_dets_[m].push_back(uint32_t(d));
        }
    }
    for (size_t o = 0; o < circuit.observables.size(); o++) {
        for (uint32_t m : circuit.observables[o]) {
            meas_to_obs_[m].push_back(uint32_t(o));
        }
    }
}

void FrameSampler::run_shot(uint64_t seed, uint64_t shot_index, uint64_t *det_out, uint64_t *obs_out) {
    SplitMix64 rng(SplitMix64::stream_seed(seed, shot_index));
    execute(&rng, nullptr, det_out, obs_out);
}

void FrameSampler::run_injected(
    const std::vector<std::pair<uint32_t, uint32_t>> &faults, uint64_t *det_out, uint64_t *obs_out) {
    execute(nullptr, &faults, det_out, obs_out);
}

void FrameSampler::execute(SplitMix64 *rng, const std::vector<std::pair<uint32_t, uint32_t>> *faults,
                           uint64_t *det_out, uint64_t *obs_out) {
    std::fill(x_frame_.begin(), x_frame_.end(), 0);
    std::fill(z_frame_.begin(), z_frame_.end(), 0);
    std::memset(det_out, 0, det_words_ * sizeof(uint64_t));
    std::memset(obs_out, 0, obs_words_ * sizeof(uint64_t));

    // Draws a channel outcome: categorical sample when running randomly, or
    // the forced outcome when this channel is in the injected fault list.
    auto channel_outcome = [&](int32_t channel) -> int {
        if (channel < 0) {
            return -1;
        }
        if (faults != nullptr) {
            for (const auto &f : *faults) {
                if (f.first == uint32_t(channel)) {
                    return int(f.second);
                }
            }
            return -1;
        }
        const auto &ch = circuit_.channels[channel];
        double u = rng->uniform();
        if (u >= ch.total_probability()) {
            return -1;
        }
        for (size_t i = 0; i < ch.cumulative.size(); i++) {
            if (u < ch.cumulative[i]) {
                return int(i);
            }
        }
        return -1;
    };

    for (size_t t = 0; t < circuit_.steps.size(); t++) {
        for (const auto &inst : circuit_.steps[t]) {
            switch (inst.kind) {
                case Inst::prep_x:
                case Inst::prep_y:
                case Inst::prep_z: {
                    // Fresh state: the incoming frame on this qubit is gone.
                    uint64_t mask = ~(uint64_t{1} << (inst.q0 & 63));
                    x_frame_[inst.q0 >> 6] &= mask;
                    z_frame_[inst.q0 >> 6] &= mask;
                    int o = channel_outcome(inst.channel);
                    if (o >= 0) {
                        apply_pauli(inst.q0, circuit_.channels[inst.channel].outcomes[o].pauli0);
                    }
                    break;
                }
                case Inst::cx: {
                    bool xc = frame_x(inst.q0), zt = frame_z(inst.q1);
                    if (xc) {
                        x_frame_[inst.q1 >> 6] ^= uint64_t{1} << (inst.q1 & 63);
                    }
                    if (zt) {
                        z_frame_[inst.q0 >> 6] ^= uint64_t{1} << (inst.q0 & 63);
                    }
                    int o = channel_outcome(inst.channel);
                    if (o >= 0) {
                        const auto &oc = circuit_.channels[inst.channel].outcomes[o];
                        apply_pauli(inst.q0, oc.pauli0);
                        apply_pauli(inst.q1, oc.pauli1);
                    }
                    break;
                }
                case Inst::cy: {
                    // X_c -> X_c Y_t, Z_t -> Z_c Z_t, X_t -> Z_c X_t, Y_t -> Y_t.
                    bool xc = frame_x(inst.q0);
                    bool xt = frame_x(inst.q1), zt = frame_z(inst.q1);
                    if (xc) {
                        x_frame_[inst.q1 >> 6] ^= uint64_t{1} << (inst.q1 & 63);
                        z_frame_[inst.q1 >> 6] ^= uint64_t{1} << (inst.q1 & 63);
                    }
                    if (xt ^ zt) {
                        z_frame_[inst.q0 >> 6] ^= uint64_t{1} << (inst.q0 & 63);
                    }
                    int o = channel_outcome(inst.channel);
                    if (o >= 0) {
                        const auto &oc = circuit_.channels[inst.channel].outcomes[o];
                        apply_pauli(inst.q0, oc.pauli0);
                        apply_pauli(inst.q1, oc.pauli1);
                    }
                    break;
                }
                case Inst::meas_x:
                case Inst::meas_y:
                case Inst::meas_z: {
                    bool flip;
                    if (inst.kind == Inst::meas_x) {
                        flip = frame_z(inst.q0);
                    } else if (inst.kind == Inst::meas_z) {
                        flip = frame_x(inst.q0);
                    } else {
                        flip = frame_x(inst.q0) ^ frame_z(inst.q0);
                    }
                    int o = channel_outcome(inst.channel);
                    if (o >= 0) {
                        flip = !flip;  // classical record flip
                    }
                    if (flip) {
                        for (uint32_t d : meas_to_dets_[inst.meas_index]) {
                            det_out[d >> 6] ^= uint64_t{1} << (d & 63);
                        }
                        for (uint32_t ob : meas_to_obs_[inst.meas_index]) {
                            obs_out[ob >> 6] ^= uint64_t{1} << (ob & 63);
                        }
                    }
                    break;
                }
                case Inst::idle: {
                    int o = channel_outcome(inst.channel);
                    if (o >= 0) {
                        apply_pauli(inst.q0, circuit_.channels[inst.channel].outcomes[o].pauli0);
                    }
                    break;
                }
            }
        }
    }
}

ShotBatch sample(const Circuit &circuit, uint64_t shots, uint64_t seed) {
    FrameSampler sampler(circuit);
    ShotBatch batch;
    batch.shots = shots;
    batch.num_detectors = circuit.detectors.size();
    batch.num_observables = circuit.observables.size();
    batch.rng_seed = seed;
    batch.det_words_per_shot = sampler.det_words();
    batch.obs_words_per_shot = sampler.obs_words();
    batch.detector_bits.assign(shots * batch.det_words_per_shot, 0);
    batch.observable_bits.assign(shots * batch.obs_words_per_shot, 0);
    for (uint64_t s = 0; s < shots; s++) {
        sampler.run_shot(seed, s, &batch.detector_bits[s * batch.det_words_per_shot],
                         &batch.observable_bits[s * batch.obs_words_per_shot]);
    }
    return batch;
}

void ShotBatch::write_b8(const std::string &path, bool observables_instead) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    size_t nbits = observables_instead ? num_observables : num_detectors;
    size_t words = observables_instead ? obs_words_per_shot : det_words_per_shot;
    const std::vector<uint64_t> &bits = observables_instead ? observable_bits : detector_bits;
    size_t bytes_per_shot = (nbits + 7) / 8;
    std::vector<uint8_t> row(bytes_per_shot);
    for (uint64_t s = 0; s < shots; s++) {
        for (size_t b = 0; b < bytes_per_shot; b++) {
            row[b] = uint8_t(bits[s * words + (b >> 3)] >> (8 * (b & 7)));
        }
        f.write(reinterpret_cast<const char *>(row.data()), std::streamsize(row.size()));
    }
}

void ShotBatch::write_csv(const std::string &path) const {
    std::ofstream f(path);
    if (!f) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    f << "shot";
    for (size_t d = 0; d < num_detectors; d++) {
        f << ",D" << d;
    }
    for (size_t o = 0; o < num_observables; o++) {
        f << ",L" << o;
    }
    f << "\n";
    for (uint64_t s = 0; s < shots; s++) {
        f << s;
        for (size_t d = 0; d < num_detectors; d++) {
            f << "," << (detector(s, d) ? 1 : 0);
        }
        for (size_t o = 0; o < num_observables; o++) {
            f << "," << (observable(s, o) ? 1 : 0);
        }
        f << "\n";
    }
}

}  // namespace beliefdec
