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

#include "beliefdec/circuit.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace beliefdec {

double cnot_infidelity(double p, double eta) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("cnot_infidelity: p must lie in [0, 1]");
    }
    if (!(eta >= 1.0)) {
        throw std::invalid_argument("cnot_infidelity: eta must be >= 1");
    }
    return (0.2 + 0.8 / eta) * p;
}

double p_from_cnot_infidelity(double p_cx, double eta) {
    if (!(eta >= 1.0)) {
        throw std::invalid_argument("p_from_cnot_infidelity: eta must be >= 1");
    }
    return p_cx / (0.2 + 0.8 / eta);
}

void NoiseChannel::finalize() {
    cumulative.clear();
    double acc = 0.0;
    for (const auto &o : outcomes) {
        if (o.prob < 0.0) {
            throw std::invalid_argument("negative outcome probability");
        }
        acc += o.prob;
        cumulative.push_back(acc);
    }
    if (acc > 1.0 + 1e-12) {
        throw std::invalid_argument("channel probability mass exceeds 1");
    }
}

void Circuit::validate() const {
    if (steps.size() != step_noisy.size()) {
        throw std::logic_error("steps/step_noisy size mismatch");
    }
    std::vector<uint32_t> last_step_used(num_qubits, UINT32_MAX);
    size_t meas_seen = 0;
    for (size_t t = 0; t < steps.size(); t++) {
        for (const auto &inst : steps[t]) {
            uint32_t qs[2] = {inst.q0, inst.q1};
            size_t nq = (inst.kind == Inst::cx || inst.kind == Inst::cy) ? 2 : 1;
            for (size_t k = 0; k < nq; k++) {
                if (qs[k] >= num_qubits) {
                    throw std::logic_error("instruction qubit out of range");
                }
                if (last_step_used[qs[k]] == t) {
                    throw std::logic_error(
                        "qubit " + std::to_string(qs[k]) + " used twice in timestep " + std::to_string(t));
                }
                last_step_used[qs[k]] = uint32_t(t);
            }
            if (inst.meas_index >= 0) {
                if (size_t(inst.meas_index) != meas_seen) {
                    throw std::logic_error("measurement indices not dense and ordered");
                }
                meas_seen++;
            }
        }
    }
    if (meas_seen != num_measurements) {
        throw std::logic_error("num_measurements does not match instruction stream");
    }
    for (const auto &d : detectors) {
        if (d.empty()) {
            throw std::logic_error("empty detector definition");
        }
        for (uint32_t m : d) {
            if (m >= num_measurements) {
                throw std::logic_error("detector references missing measurement");
            }
        }
    }
    for (const auto &o : observables) {
        for (uint32_t m : o) {
            if (m >= num_measurements) {
                throw std::logic_error("observable references missing measurement");
            }
        }
    }
}

namespace {

char basis_of(Inst kind) {
    switch (kind) {
        case Inst::prep_x:
        case Inst::meas_x:
            return 'X';
        case Inst::prep_y:
        case Inst::meas_y:
            return 'Y';
        case Inst::prep_z:
        case Inst::meas_z:
            return 'Z';
        default:
            return '?';
    }
}

Inst prep_inst(char basis) {
    switch (basis) {
        case 'X':
            return Inst::prep_x;
        case 'Y':
            return Inst::prep_y;
        case 'Z':
            return Inst::prep_z;
    }
    throw std::invalid_argument(std::string("bad basis: ") + basis);
}

Inst meas_inst(char basis) {
    switch (basis) {
        case 'X':
            return Inst::meas_x;
        case 'Y':
            return Inst::meas_y;
        case 'Z':
            return Inst::meas_z;
    }
    throw std::invalid_argument(std::string("bad basis: ") + basis);
}

}  // namespace

Circuit build_memory_experiment(const SurfaceCodeLayout &layout, int rounds, char basis, bool noisy_spam) {
    if (rounds < 1) {
        throw std::invalid_argument("rounds must be >= 1");
    }
    bool css = layout.family == CodeFamily::css;
    if (css && basis != 'X' && basis != 'Z') {
        throw std::invalid_argument("CSS memory basis must be X or Z");
    }
    if (!css && basis != 'X' && basis != 'Y') {
        throw std::invalid_argument("XY memory basis must be X or Y");
    }

    const size_t n = layout.num_data();
    const size_t S = layout.num_stabilizers();
    auto plan = build_schedule(layout);

    Circuit c;
    c.num_qubits = n + S;
    c.num_data = n;
    c.qubit_tags.assign(c.num_qubits, CliffordTag::I);
    for (size_t q = 0; q < n; q++) {
        c.qubit_tags[q] = layout.deformation.tags[q];
    }

    auto add_step = [&](bool noisy) -> std::vector<Instruction> & {
        c.steps.emplace_back();
        c.step_noisy.push_back(noisy);
        return c.steps.back();
    };
    auto add_meas = [&](std::vector<Instruction> &step, Inst kind, uint32_t q) -> uint32_t {
        Instruction inst;
        inst.kind = kind;
        inst.q0 = q;
        inst.meas_index = int32_t(c.num_measurements++);
        step.push_back(inst);
        return uint32_t(inst.meas_index);
    };

    // Ancilla preparation/measurement basis per stabilizer species: X and Y
    // stabilizers use a |+> ancilla measured in X; CSS Z stabilizers use a
    // |0> ancilla measured in Z.
    auto anc_prep = [&](size_t s) { return layout.stabilizers[s].species == 'Z' ? Inst::prep_z : Inst::prep_x; };
    auto anc_meas = [&](size_t s) { return layout.stabilizers[s].species == 'Z' ? Inst::meas_z : Inst::meas_x; };

    // One syndrome-extraction round: ancilla prep, four gate slots, ancilla
    // measurement. Data qubits idle through the measurement step; they also
    // idle through the preparation step when the previous timestep was not a
    // noisy ancilla measurement (otherwise that idle channel already covers
    // the contiguous measure+re-prepare window, since preparation and
    // measurement each last half a step).
    std::vector<std::vector<uint32_t>> round_meas;  // [sim_round][stab] -> meas index
    auto run_round = [&](bool noisy, bool prep_window_idles) {
        auto &prep_step = add_step(noisy);
        for (size_t s = 0; s < S; s++) {
            prep_step.push_back({anc_prep(s), uint32_t(n + s)});
        }
        if (noisy && prep_window_idles) {
            for (size_t q = 0; q < n; q++) {
                prep_step.push_back({Inst::idle, uint32_t(q)});
            }
        }
        for (int slot = 0; slot < 4; slot++) {
            auto &step = add_step(noisy);
            std::vector<bool> busy(c.num_qubits, false);
            for (const auto &g : plan) {
                if (g.slot != slot) {
                    continue;
                }
                uint32_t anc = uint32_t(n + g.stab_index);
                Instruction inst;
                inst.kind = g.kind == ScheduledGate::Kind::cy_anc_ctrl ? Inst::cy : Inst::cx;
                if (g.kind == ScheduledGate::Kind::cx_data_ctrl) {
                    inst.q0 = uint32_t(g.data);
                    inst.q1 = anc;
                } else {
                    inst.q0 = anc;
                    inst.q1 = uint32_t(g.data);
                }
                busy[inst.q0] = busy[inst.q1] = true;
                step.push_back(inst);
            }
            if (noisy) {
                for (uint32_t q = 0; q < c.num_qubits; q++) {
                    if (!busy[q]) {
                        step.push_back({Inst::idle, q});
                    }
                }
            }
        }
        auto &meas_step = add_step(noisy);
        std::vector<uint32_t> meas(S);
        for (size_t s = 0; s < S; s++) {
            meas[s] = add_meas(meas_step, anc_meas(s), uint32_t(n + s));
        }
        if (noisy) {
            for (size_t q = 0; q < n; q++) {
                meas_step.push_back({Inst::idle, uint32_t(q)});
            }
        }
        round_meas.push_back(std::move(meas));
    };

    // Data preparation.
    auto &prep_step = add_step(noisy_spam);
    for (size_t q = 0; q < n; q++) {
        prep_step.push_back({prep_inst(basis), uint32_t(q)});
    }

    if (!noisy_spam) {
        run_round(false, false);
    }
    for (int t = 0; t < rounds; t++) {
        // The first noisy round is the only one not preceded by a noisy
        // ancilla measurement step, so only it carries prep-window idles.
        run_round(true, t == 0);
    }
    if (!noisy_spam) {
        run_round(false, false);
    }

    // Data measurement.
    auto &data_meas_step = add_step(noisy_spam);
    std::vector<uint32_t> data_meas(n);
    for (size_t q = 0; q < n; q++) {
        data_meas[q] = add_meas(data_meas_step, meas_inst(basis), uint32_t(q));
    }

    // Detectors.
    auto compatible = [&](size_t s) { return layout.stabilizers[s].species == basis; };
    size_t num_sim_rounds = round_meas.size();
    if (!noisy_spam) {
        // Bracketed by noiseless rounds: every consecutive pair is a
        // detector. Anchors on the noiseless first round and comparisons
        // against the noiseless final data measurement can never fire, so
        // they are omitted.
        for (size_t t = 1; t < num_sim_rounds; t++) {
            for (size_t s = 0; s < S; s++) {
                c.detectors.push_back({round_meas[t - 1][s], round_meas[t][s]});
                c.detector_coords.push_back(
                    {layout.stabilizers[s].ancilla_coord.first, layout.stabilizers[s].ancilla_coord.second, int(t)});
            }
        }
    } else {
        for (size_t s = 0; s < S; s++) {
            if (compatible(s)) {
                c.detectors.push_back({round_meas[0][s]});
                c.detector_coords.push_back(
                    {layout.stabilizers[s].ancilla_coord.first, layout.stabilizers[s].ancilla_coord.second, 0});
            }
        }
        for (size_t t = 1; t < num_sim_rounds; t++) {
            for (size_t s = 0; s < S; s++) {
                c.detectors.push_back({round_meas[t - 1][s], round_meas[t][s]});
                c.detector_coords.push_back(
                    {layout.stabilizers[s].ancilla_coord.first, layout.stabilizers[s].ancilla_coord.second, int(t)});
            }
        }
        // Final round: compare each compatible stabilizer reconstructed from
        // the data measurements against its last ancilla measurement.
        for (size_t s = 0; s < S; s++) {
            if (!compatible(s)) {
                continue;
            }
            std::vector<uint32_t> det;
            for (int32_t q : layout.stabilizers[s].slot_data) {
                if (q >= 0) {
                    det.push_back(data_meas[size_t(q)]);
                }
            }
            det.push_back(round_meas[num_sim_rounds - 1][s]);
            c.detectors.push_back(std::move(det));
            c.detector_coords.push_back(
                {layout.stabilizers[s].ancilla_coord.first, layout.stabilizers[s].ancilla_coord.second,
                 int(num_sim_rounds)});
        }
    }

    // Observable: the logical operator reconstructed from data measurements.
    // Basis X uses the west column; Z and Y use the north row.
    const int W = layout.dz, H = layout.dx;
    std::vector<uint32_t> obs;
    if (basis == 'X') {
        for (int r = 0; r < H; r++) {
            obs.push_back(data_meas[size_t(r) * W]);
        }
    } else {
        for (int cidx = 0; cidx < W; cidx++) {
            obs.push_back(data_meas[size_t(cidx)]);
        }
    }
    c.observables.push_back(std::move(obs));

    c.validate();
    return c;
}

namespace {

PauliCode conjugate_code(PauliCode p, CliffordTag tag) {
    // H swaps X (1) and Z (2); A swaps Z (2) and Y (3). Signs are irrelevant
    // for channels.
    if (tag == CliffordTag::H) {
        if (p == 1) {
            return 2;
        }
        if (p == 2) {
            return 1;
        }
    } else if (tag == CliffordTag::A) {
        if (p == 2) {
            return 3;
        }
        if (p == 3) {
            return 2;
        }
    }
    return p;
}

}  // namespace

Circuit attach_noise(const Circuit &circuit, const NoiseModel &model) {
    if (circuit.has_noise()) {
        throw std::invalid_argument("attach_noise requires a noiseless circuit");
    }
    if (!(model.p >= 0.0 && model.p <= 1.0) || !(model.eta >= 1.0)) {
        throw std::invalid_argument("noise model requires p in [0,1] and eta >= 1");
    }
    const double p = model.p, eta = model.eta;
    Circuit out = circuit;

    auto add_channel = [&](NoiseChannel ch) -> int32_t {
        ch.finalize();
        out.channels.push_back(std::move(ch));
        return int32_t(out.channels.size() - 1);
    };

    // Physical preparation/measurement basis of a qubit: the instruction
    // basis conjugated by the qubit's deformation tag. X- and Y-basis SPAM
    // flips at 2p/3, Z-basis at 2p/(3 eta).
    auto spam_rate = [&](char instruction_basis, CliffordTag tag) {
        char phys = instruction_basis;
        if (tag == CliffordTag::H) {
            phys = phys == 'X' ? 'Z' : (phys == 'Z' ? 'X' : 'Y');
        } else if (tag == CliffordTag::A) {
            phys = phys == 'Z' ? 'Y' : (phys == 'Y' ? 'Z' : 'X');
        }
        return phys == 'Z' ? 2.0 * p / (3.0 * eta) : 2.0 * p / 3.0;
    };

    for (size_t t = 0; t < out.steps.size(); t++) {
        if (!out.step_noisy[t]) {
            continue;
        }
        for (auto &inst : out.steps[t]) {
            switch (inst.kind) {
                case Inst::prep_x:
                case Inst::prep_y:
                case Inst::prep_z: {
                    NoiseChannel ch;
                    ch.kind = NoiseChannel::Kind::pauli1;
                    ch.q0 = inst.q0;
                    // A flip of the prepared state, expressed as the Pauli
                    // that anticommutes with the preparation basis.
                    PauliCode flip = basis_of(inst.kind) == 'Z' ? 1 : 2;
                    ch.outcomes.push_back({flip, 0, spam_rate(basis_of(inst.kind), out.qubit_tags[inst.q0])});
                    inst.channel = add_channel(std::move(ch));
                    break;
                }
                case Inst::meas_x:
                case Inst::meas_y:
                case Inst::meas_z: {
                    NoiseChannel ch;
                    ch.kind = NoiseChannel::Kind::meas_flip;
                    ch.q0 = inst.q0;
                    ch.meas_index = inst.meas_index;
                    ch.outcomes.push_back({0, 0, spam_rate(basis_of(inst.kind), out.qubit_tags[inst.q0])});
                    inst.channel = add_channel(std::move(ch));
                    break;
                }
                case Inst::idle: {
                    NoiseChannel ch;
                    ch.kind = NoiseChannel::Kind::pauli1;
                    ch.q0 = inst.q0;
                    CliffordTag tag = out.qubit_tags[inst.q0];
                    ch.outcomes.push_back({conjugate_code(2, tag), 0, p / 3.0});        // Z
                    ch.outcomes.push_back({conjugate_code(1, tag), 0, p / (3.0 * eta)});  // X
                    ch.outcomes.push_back({conjugate_code(3, tag), 0, p / (3.0 * eta)});  // Y
                    inst.channel = add_channel(std::move(ch));
                    break;
                }
                case Inst::cx:
                case Inst::cy: {
                    NoiseChannel ch;
                    ch.kind = NoiseChannel::Kind::pauli2;
                    ch.q0 = inst.q0;
                    ch.q1 = inst.q1;
                    CliffordTag tag0 = out.qubit_tags[inst.q0];
                    CliffordTag tag1 = out.qubit_tags[inst.q1];
                    for (PauliCode a = 0; a < 4; a++) {
                        for (PauliCode b = 0; b < 4; b++) {
                            if (a == 0 && b == 0) {
                                continue;
                            }
                            // ZZ, ZI, IZ at p/15 each; the other twelve at
                            // p/(15 eta).
                            bool z_type = (a == 0 || a == 2) && (b == 0 || b == 2);
                            double prob = z_type ? p / 15.0 : p / (15.0 * eta);
                            ch.outcomes.push_back({conjugate_code(a, tag0), conjugate_code(b, tag1), prob});
                        }
                    }
                    inst.channel = add_channel(std::move(ch));
                    break;
                }
            }
        }
    }
    return out;
}

std::string Circuit::to_text() const {
    std::ostringstream os;
    os << "qubits " << num_qubits << " data " << num_data << "\n";
    auto pauli_name = [](PauliCode c) { return "IXZY"[c]; };
    for (size_t t = 0; t < steps.size(); t++) {
        os << "step " << t << (step_noisy[t] ? "" : " noiseless") << "\n";
        for (const auto &inst : steps[t]) {
            os << "  ";
            switch (inst.kind) {
                case Inst::prep_x:
                    os << "prep_x " << inst.q0;
                    break;
                case Inst::prep_y:
                    os << "prep_y " << inst.q0;
                    break;
                case Inst::prep_z:
                    os << "prep_z " << inst.q0;
                    break;
                case Inst::meas_x:
                    os << "meas_x " << inst.q0 << " -> m" << inst.meas_index;
                    break;
                case Inst::meas_y:
                    os << "meas_y " << inst.q0 << " -> m" << inst.meas_index;
                    break;
                case Inst::meas_z:
                    os << "meas_z " << inst.q0 << " -> m" << inst.meas_index;
                    break;
                case Inst::cx:
                    os << "cx " << inst.q0 << " " << inst.q1;
                    break;
                case Inst::cy:
                    os << "cy " << inst.q0 << " " << inst.q1;
                    break;
                case Inst::idle:
                    os << "idle " << inst.q0;
                    break;
            }
            if (inst.channel >= 0) {
                const auto &ch = channels[inst.channel];
                os << " !";
                for (const auto &o : ch.outcomes) {
                    os << " ";
                    if (ch.kind == NoiseChannel::Kind::meas_flip) {
                        os << "flip";
                    } else {
                        os << pauli_name(o.pauli0);
                        if (ch.kind == NoiseChannel::Kind::pauli2) {
                            os << pauli_name(o.pauli1);
                        }
                    }
                    os << "=" << o.prob;
                }
            }
            os << "\n";
        }
    }
    for (size_t d = 0; d < detectors.size(); d++) {
        os << "detector D" << d << " =";
        for (uint32_t m : detectors[d]) {
            os << " m" << m;
        }
        if (d < detector_coords.size()) {
            os << "  # coord (" << detector_coords[d][0] << ", " << detector_coords[d][1] << ", "
               << detector_coords[d][2] << ")";
        }
        os << "\n";
    }
    for (size_t o = 0; o < observables.size(); o++) {
        os << "observable L" << o << " =";
        for (uint32_t m : observables[o]) {
            os << " m" << m;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace beliefdec
