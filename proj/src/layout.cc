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

#include "beliefdec/layout.h"

#include <stdexcept>

#include "json.hpp"

namespace beliefdec {

std::string family_name(CodeFamily family) {
    switch (family) {
        case CodeFamily::css:
            return "css";
        case CodeFamily::xy:
            return "xy";
        case CodeFamily::xy_deformed:
            return "xy-deformed";
    }
    return "?";
}

CodeFamily family_from_name(const std::string &name) {
    if (name == "css") {
        return CodeFamily::css;
    }
    if (name == "xy") {
        return CodeFamily::xy;
    }
    if (name == "xy-deformed" || name == "xy_deformed") {
        return CodeFamily::xy_deformed;
    }
    throw std::invalid_argument("unknown code family: " + name);
}

namespace {

// Slot assignment for the four corners of a plaquette. Species 'X' sweeps
// its corners in a zigzag (NW, NE, SW, SE); the other species uses the
// mirrored order (NW, SW, NE, SE) so that ancilla hook errors land
// perpendicular to the logical they could otherwise shortcut. The d=3
// circuit-level distance test pins this choice down.
constexpr int kSlotOfCornerX[4] = {0, 1, 2, 3};  // NW, NE, SW, SE
constexpr int kSlotOfCornerB[4] = {0, 2, 1, 3};  // NW, NE, SW, SE

SurfaceCodeLayout build_rotated(CodeFamily family, int dx, int dz) {
    if (dx < 3 || dz < 3 || dx % 2 == 0 || dz % 2 == 0) {
        throw std::invalid_argument(
            "lattice dimensions must be odd and >= 3, got (" + std::to_string(dx) + ", " + std::to_string(dz) + ")");
    }
    const int W = dz;  // columns: the Z logical runs horizontally
    const int H = dx;  // rows: the X logical runs vertically
    const char species_b = (family == CodeFamily::css) ? 'Z' : 'Y';

    SurfaceCodeLayout layout;
    layout.family = family;
    layout.dx = dx;
    layout.dz = dz;
    layout.data_coords.reserve(size_t(W) * H);
    for (int r = 0; r < H; r++) {
        for (int c = 0; c < W; c++) {
            layout.data_coords.emplace_back(2 * c, 2 * r);
        }
    }
    auto data_index = [&](int c, int r) -> int32_t {
        if (c < 0 || c >= W || r < 0 || r >= H) {
            return -1;
        }
        return int32_t(r) * W + c;
    };

    // Plaquette centers live at (2c+1, 2r+1) for c in [-1, W-1], r in [-1, H-1].
    for (int r = -1; r < H; r++) {
        for (int c = -1; c < W; c++) {
            bool species_x = ((c + r) % 2 + 2) % 2 == 0;
            bool interior = c >= 0 && c < W - 1 && r >= 0 && r < H - 1;
            if (!interior) {
                bool north = r == -1 && c >= 0 && c < W - 1;
                bool south = r == H - 1 && c >= 0 && c < W - 1;
                bool west = c == -1 && r >= 0 && r < H - 1;
                bool east = c == W - 1 && r >= 0 && r < H - 1;
                // X boundary plaquettes sit north/south, the other species
                // west/east; everything else (corners included) is absent.
                if (!((north || south) && species_x) && !((west || east) && !species_x)) {
                    continue;
                }
            }
            StabilizerDescriptor desc;
            desc.species = species_x ? 'X' : species_b;
            desc.ancilla_coord = {2 * c + 1, 2 * r + 1};
            desc.slot_data = {-1, -1, -1, -1};
            const int32_t corner_qubits[4] = {
                data_index(c, r),          // NW
                data_index(c + 1, r),      // NE
                data_index(c, r + 1),      // SW
                data_index(c + 1, r + 1),  // SE
            };
            const int *slot_of_corner = species_x ? kSlotOfCornerX : kSlotOfCornerB;
            for (int corner = 0; corner < 4; corner++) {
                if (corner_qubits[corner] >= 0) {
                    desc.slot_data[slot_of_corner[corner]] = corner_qubits[corner];
                }
            }
            layout.stabilizers.push_back(desc);
        }
    }

    if (layout.num_stabilizers() != size_t(W) * H - 1) {
        throw std::logic_error("rotated layout produced wrong stabilizer count");
    }
    layout.deformation.tags.assign(layout.num_data(), CliffordTag::I);
    build_schedule(layout);  // throws on slot conflicts
    return layout;
}

}  // namespace

SurfaceCodeLayout build_css(int dx, int dz) {
    return build_rotated(CodeFamily::css, dx, dz);
}

SurfaceCodeLayout build_xy(int L) {
    return build_rotated(CodeFamily::xy, L, L);
}

SurfaceCodeLayout build_xy_deformed(int L) {
    SurfaceCodeLayout layout = build_rotated(CodeFamily::xy, L, L);
    layout.family = CodeFamily::xy_deformed;
    // Tag one qubit of every two-qubit boundary stabilizer: H on Y-stabilizer
    // support, A = HSH on X-stabilizer support. Which of the two qubits is
    // tagged does not matter up to stabilizer multiplication; we take the
    // lexicographically smaller coordinate.
    for (const auto &desc : layout.stabilizers) {
        if (desc.weight() != 2) {
            continue;
        }
        int32_t chosen = -1;
        std::pair<int, int> best_coord;
        for (int32_t q : desc.slot_data) {
            if (q < 0) {
                continue;
            }
            if (chosen < 0 || layout.data_coords[q] < best_coord) {
                chosen = q;
                best_coord = layout.data_coords[q];
            }
        }
        CliffordTag tag = desc.species == 'Y' ? CliffordTag::H : CliffordTag::A;
        if (layout.deformation.tags[chosen] != CliffordTag::I) {
            throw std::logic_error("deformation tried to tag a qubit twice");
        }
        layout.deformation.tags[chosen] = tag;
    }
    return layout;
}

StabilizerCode SurfaceCodeLayout::to_stabilizer_code() const {
    StabilizerCode code;
    code.n = num_data();
    code.coordinates = data_coords;

    for (const auto &desc : stabilizers) {
        PauliString s(code.n);
        for (int32_t q : desc.slot_data) {
            if (q >= 0) {
                s.set_pauli(size_t(q), desc.species);
            }
        }
        code.stabilizers.push_back(std::move(s));
    }

    const int W = dz, H = dx;
    PauliString lx(code.n);
    for (int r = 0; r < H; r++) {
        lx.set_pauli(size_t(r) * W, 'X');  // west column
    }
    code.logical_x.push_back(std::move(lx));

    if (family == CodeFamily::css) {
        PauliString lz(code.n);
        for (int c = 0; c < W; c++) {
            lz.set_pauli(size_t(c), 'Z');  // north row
        }
        code.logical_z.push_back(std::move(lz));
    } else {
        PauliString ly(code.n);
        for (int c = 0; c < W; c++) {
            ly.set_pauli(size_t(c), 'Y');
        }
        code.logical_y.push_back(std::move(ly));
        PauliString lz(code.n);
        for (size_t q = 0; q < code.n; q++) {
            lz.set_pauli(q, 'Z');
        }
        code.logical_z.push_back(std::move(lz));
    }

    if (!deformation.empty()) {
        auto apply = [&](PauliString &p) {
            for (size_t q = 0; q < code.n; q++) {
                p.conjugate_by(q, deformation.tags[q]);
            }
        };
        for (auto &s : code.stabilizers) {
            apply(s);
        }
        for (auto &l : code.logical_x) {
            apply(l);
        }
        for (auto &l : code.logical_z) {
            apply(l);
        }
        for (auto &l : code.logical_y) {
            apply(l);
        }
    }
    return code;
}

std::vector<ScheduledGate> build_schedule(const SurfaceCodeLayout &layout) {
    std::vector<ScheduledGate> plan;
    for (int slot = 0; slot < 4; slot++) {
        std::vector<bool> busy(layout.total_qubits(), false);
        for (size_t s = 0; s < layout.stabilizers.size(); s++) {
            const auto &desc = layout.stabilizers[s];
            int32_t data = desc.slot_data[slot];
            if (data < 0) {
                continue;
            }
            ScheduledGate g;
            g.slot = slot;
            g.stab_index = int(s);
            g.data = data;
            if (desc.species == 'X') {
                g.kind = ScheduledGate::Kind::cx_anc_ctrl;
            } else if (desc.species == 'Y') {
                g.kind = ScheduledGate::Kind::cy_anc_ctrl;
            } else {
                g.kind = ScheduledGate::Kind::cx_data_ctrl;
            }
            size_t anc = layout.num_data() + s;
            if (busy[data] || busy[anc]) {
                throw std::logic_error("schedule slot conflict at slot " + std::to_string(slot));
            }
            busy[data] = busy[anc] = true;
            plan.push_back(g);
        }
    }
    return plan;
}

std::string SurfaceCodeLayout::to_json() const {
    nlohmann::json j;
    j["family"] = family_name(family);
    j["dx"] = dx;
    j["dz"] = dz;
    j["num_data"] = num_data();
    j["num_stabilizers"] = num_stabilizers();
    j["total_qubits"] = total_qubits();
    auto coords = nlohmann::json::array();
    for (auto &c : data_coords) {
        coords.push_back({c.first, c.second});
    }
    j["data_coords"] = coords;
    auto stabs = nlohmann::json::array();
    for (const auto &desc : stabilizers) {
        nlohmann::json s;
        s["species"] = std::string(1, desc.species);
        s["ancilla_coord"] = {desc.ancilla_coord.first, desc.ancilla_coord.second};
        s["slot_data"] = desc.slot_data;
        stabs.push_back(s);
    }
    j["stabilizers"] = stabs;
    if (!deformation.empty()) {
        auto tags = nlohmann::json::array();
        for (CliffordTag t : deformation.tags) {
            tags.push_back(t == CliffordTag::I ? "I" : (t == CliffordTag::H ? "H" : "A"));
        }
        j["deformation"] = tags;
    }
    return j.dump(2);
}

}  // namespace beliefdec
