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

#include "beliefdec/dem.h"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <unordered_map>

#include "beliefdec/sampler.h"

namespace beliefdec {

namespace {

struct SignatureHash {
    size_t operator()(const std::pair<std::vector<uint32_t>, uint64_t> &key) const {
        uint64_t h = 0x9e3779b97f4a7c15ULL ^ key.second;
        for (uint32_t d : key.first) {
            h ^= (h << 13);
            h += d + 0x2545f4914f6cdd1dULL;
            h ^= (h >> 29);
        }
        return size_t(h * 0xbf58476d1ce4e5b9ULL);
    }
};

constexpr double kDropThreshold = 1e-15;

}  // namespace

DetectorErrorModel build_dem(const Circuit &circuit) {
    if (!circuit.has_noise()) {
        throw std::invalid_argument("build_dem requires a circuit with noise attached");
    }
    DetectorErrorModel dem;
    dem.num_detectors = circuit.detectors.size();
    dem.num_observables = circuit.observables.size();
    if (dem.num_observables > 64) {
        throw std::invalid_argument("at most 64 observables supported");
    }

    FrameSampler sampler(circuit);
    std::vector<uint64_t> det(sampler.det_words());
    std::vector<uint64_t> obs(sampler.obs_words());

    using Key = std::pair<std::vector<uint32_t>, uint64_t>;
    std::unordered_map<Key, size_t, SignatureHash> index;
    std::vector<ErrorMechanism> mechs;

    std::vector<std::pair<uint32_t, uint32_t>> fault(1);
    for (uint32_t ch = 0; ch < circuit.channels.size(); ch++) {
        for (uint32_t o = 0; o < circuit.channels[ch].outcomes.size(); o++) {
            double p = circuit.channels[ch].outcomes[o].prob;
            fault[0] = {ch, o};
            sampler.run_injected(fault, det.data(), obs.data());

            std::vector<uint32_t> dets;
            for (size_t d = 0; d < dem.num_detectors; d++) {
                if ((det[d >> 6] >> (d & 63)) & 1) {
                    dets.push_back(uint32_t(d));
                }
            }
            uint64_t mask = obs.empty() ? 0 : obs[0];
            if (dets.empty()) {
                if (mask != 0) {
                    throw UndetectableLogicalError(
                        "noise site (channel " + std::to_string(ch) + ", outcome " + std::to_string(o) +
                        ") flips an observable but no detector");
                }
                continue;
            }
            if (dets.size() > 4) {
                throw std::runtime_error(
                    "mechanism flips " + std::to_string(dets.size()) + " detectors; supported families stay <= 4");
            }
            Key key{dets, mask};
            auto it = index.find(key);
            if (it == index.end()) {
                ErrorMechanism m;
                m.probability = p;
                m.detectors = std::move(key.first);
                m.observables = mask;
                m.first_channel = int32_t(ch);
                m.first_outcome = int32_t(o);
                index.emplace(Key{m.detectors, mask}, mechs.size());
                mechs.push_back(std::move(m));
            } else {
                // Probability that an odd number of the merged faults occur.
                double q = mechs[it->second].probability;
                mechs[it->second].probability = q * (1.0 - p) + p * (1.0 - q);
            }
        }
    }

    for (auto &m : mechs) {
        if (m.probability >= kDropThreshold) {
            dem.mechanisms.push_back(std::move(m));
        }
    }
    std::sort(dem.mechanisms.begin(), dem.mechanisms.end(), [](const ErrorMechanism &a, const ErrorMechanism &b) {
        if (a.detectors != b.detectors) {
            return a.detectors < b.detectors;
        }
        return a.observables < b.observables;
    });
    return dem;
}

DetectorErrorModel decompose_hyperedges(DetectorErrorModel dem) {
    // Representative graphlike mechanism per detector set (highest
    // probability wins; ties broken by smaller mask).
    std::unordered_map<std::pair<std::vector<uint32_t>, uint64_t>, size_t, SignatureHash> reps;
    auto rep_key = [](const std::vector<uint32_t> &dets) {
        return std::pair<std::vector<uint32_t>, uint64_t>{dets, 0};
    };
    for (size_t i = 0; i < dem.mechanisms.size(); i++) {
        const auto &m = dem.mechanisms[i];
        if (!m.is_graphlike()) {
            continue;
        }
        auto key = rep_key(m.detectors);
        auto it = reps.find(key);
        if (it == reps.end()) {
            reps.emplace(key, i);
        } else {
            const auto &cur = dem.mechanisms[it->second];
            if (m.probability > cur.probability ||
                (m.probability == cur.probability && m.observables < cur.observables)) {
                it->second = i;
            }
        }
    }

    auto find_rep = [&](std::vector<uint32_t> dets) -> const ErrorMechanism * {
        auto it = reps.find(rep_key(dets));
        return it == reps.end() ? nullptr : &dem.mechanisms[it->second];
    };

    for (auto &m : dem.mechanisms) {
        if (m.is_graphlike()) {
            continue;
        }
        const auto &d = m.detectors;
        // Candidate partitions in lexicographic order of the partner(s)
        // assigned to the smallest detector.
        std::vector<std::vector<std::vector<uint32_t>>> candidates;
        if (d.size() == 4) {
            candidates = {
                {{d[0], d[1]}, {d[2], d[3]}},
                {{d[0], d[2]}, {d[1], d[3]}},
                {{d[0], d[3]}, {d[1], d[2]}},
            };
        } else {
            candidates = {
                {{d[0], d[1]}, {d[2]}},
                {{d[0], d[2]}, {d[1]}},
                {{d[0]}, {d[1], d[2]}},
            };
        }
        bool done = false;
        for (const auto &cand : candidates) {
            const ErrorMechanism *r0 = find_rep(cand[0]);
            const ErrorMechanism *r1 = find_rep(cand[1]);
            if (r0 == nullptr || r1 == nullptr) {
                continue;
            }
            ErrorMechanism::Part p0{cand[0], r0->observables};
            ErrorMechanism::Part p1{cand[1], r1->observables};
            // The part holding the smallest detector absorbs whatever part
            // of the hyperedge's mask the representatives do not account
            // for, so the parts always XOR to the hyperedge's mask.
            uint64_t remainder = m.observables ^ p0.observables ^ p1.observables;
            if (cand[0][0] == d[0]) {
                p0.observables ^= remainder;
            } else {
                p1.observables ^= remainder;
            }
            m.decomposition = {std::move(p0), std::move(p1)};
            done = true;
            break;
        }
        if (!done) {
            std::string ds;
            for (uint32_t x : d) {
                ds += " D" + std::to_string(x);
            }
            throw DecompositionError("no valid decomposition for mechanism" + ds);
        }
    }
    return dem;
}

namespace {

std::string format_prob(double p) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", p);
    return buf;
}

void append_part(std::ostringstream &os, const std::vector<uint32_t> &dets, uint64_t mask) {
    for (uint32_t d : dets) {
        os << " D" << d;
    }
    for (int b = 0; b < 64; b++) {
        if ((mask >> b) & 1) {
            os << " L" << b;
        }
    }
}

}  // namespace

std::string serialize_dem(const DetectorErrorModel &dem) {
    std::ostringstream os;
    os << "num_detectors " << dem.num_detectors << "\n";
    os << "num_observables " << dem.num_observables << "\n";
    for (const auto &m : dem.mechanisms) {
        os << "error(" << format_prob(m.probability) << ")";
        if (m.decomposition.empty()) {
            append_part(os, m.detectors, m.observables);
        } else {
            for (size_t i = 0; i < m.decomposition.size(); i++) {
                if (i > 0) {
                    os << " ^";
                }
                append_part(os, m.decomposition[i].detectors, m.decomposition[i].observables);
            }
        }
        os << "\n";
    }
    return os.str();
}

DetectorErrorModel parse_dem(const std::string &text) {
    DetectorErrorModel dem;
    std::istringstream is(text);
    std::string line;
    size_t line_no = 0;
    auto fail = [&](const std::string &msg) {
        throw std::runtime_error("dem parse error at line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(is, line)) {
        line_no++;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "num_detectors") {
            ls >> dem.num_detectors;
            continue;
        }
        if (head == "num_observables") {
            ls >> dem.num_observables;
            continue;
        }
        if (head.rfind("error(", 0) != 0) {
            fail("expected error(...) line, got '" + head + "'");
        }
        // The probability may contain no spaces: error(0.125)
        size_t close = head.find(')');
        if (close == std::string::npos) {
            fail("missing ')'");
        }
        double p = 0;
        try {
            p = std::stod(head.substr(6, close - 6));
        } catch (const std::exception &) {
            fail("bad probability");
        }
        ErrorMechanism m;
        m.probability = p;
        std::vector<ErrorMechanism::Part> parts(1);
        std::string tok;
        while (ls >> tok) {
            if (tok == "^") {
                parts.emplace_back();
            } else if (tok[0] == 'D') {
                parts.back().detectors.push_back(uint32_t(std::stoul(tok.substr(1))));
            } else if (tok[0] == 'L') {
                parts.back().observables ^= uint64_t{1} << std::stoul(tok.substr(1));
            } else {
                fail("unexpected token '" + tok + "'");
            }
        }
        for (const auto &part : parts) {
            for (uint32_t d : part.detectors) {
                m.detectors.push_back(d);
            }
            m.observables ^= part.observables;
        }
        std::sort(m.detectors.begin(), m.detectors.end());
        if (std::adjacent_find(m.detectors.begin(), m.detectors.end()) != m.detectors.end()) {
            fail("duplicate detector within mechanism");
        }
        if (m.detectors.empty()) {
            fail("mechanism with no detectors");
        }
        if (parts.size() > 1) {
            for (auto &part : parts) {
                std::sort(part.detectors.begin(), part.detectors.end());
                if (part.detectors.size() > 2) {
                    fail("decomposition part with more than two detectors");
                }
            }
            m.decomposition = std::move(parts);
        }
        dem.mechanisms.push_back(std::move(m));
        for (uint32_t d : dem.mechanisms.back().detectors) {
            dem.num_detectors = std::max(dem.num_detectors, size_t(d) + 1);
        }
    }
    std::sort(dem.mechanisms.begin(), dem.mechanisms.end(), [](const ErrorMechanism &a, const ErrorMechanism &b) {
        if (a.detectors != b.detectors) {
            return a.detectors < b.detectors;
        }
        return a.observables < b.observables;
    });
    return dem;
}

}  // namespace beliefdec
