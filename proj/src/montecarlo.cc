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

#include "beliefdec/montecarlo.h"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

namespace beliefdec {

SurfaceCodeLayout build_layout(CodeFamily family, int dx, int dz) {
    switch (family) {
        case CodeFamily::css:
            return build_css(dx, dz);
        case CodeFamily::xy:
            if (dx != dz) {
                throw std::invalid_argument("XY codes use a square lattice");
            }
            return build_xy(dx);
        case CodeFamily::xy_deformed:
            if (dx != dz) {
                throw std::invalid_argument("XY codes use a square lattice");
            }
            return build_xy_deformed(dx);
    }
    throw std::invalid_argument("bad code family");
}

std::string PointSpec::key() const {
    std::ostringstream os;
    os << family_name(family) << ":" << dx << "x" << dz << ":" << decoder_name(decoder) << ":p=" << p
       << ":eta=" << eta << ":r=" << rounds << ":basis=" << basis << ":spam=" << (noisy_spam ? "noisy" : "perfect")
       << ":shots=" << shots << ":seed=" << seed << ":bpi=" << bp.max_iter
       << ":bpv=" << (bp.variant == BPConfig::Variant::sum_product ? "sp" : "ms");
    return os.str();
}

double MonteCarloPoint::std_error() const {
    double f = failure_rate();
    return spec.shots ? std::sqrt(f * (1.0 - f) / double(spec.shots)) : 0.0;
}

std::pair<double, double> MonteCarloPoint::wilson_interval(double z) const {
    double n = double(spec.shots);
    if (n == 0) {
        return {0.0, 1.0};
    }
    double f = failure_rate();
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (f + z2 / (2 * n)) / denom;
    double half = z / denom * std::sqrt(f * (1.0 - f) / n + z2 / (4 * n * n));
    return {center - half, center + half};
}

std::string MonteCarloPoint::to_json() const {
    nlohmann::json j;
    j["family"] = family_name(spec.family);
    j["dx"] = spec.dx;
    j["dz"] = spec.dz;
    j["decoder"] = decoder_name(spec.decoder);
    j["p"] = spec.p;
    j["eta"] = spec.eta;
    j["p_cx"] = spec.p_cx();
    j["rounds"] = spec.rounds;
    j["basis"] = std::string(1, spec.basis);
    j["spam"] = spec.noisy_spam ? "noisy" : "perfect";
    j["shots"] = spec.shots;
    j["seed"] = spec.seed;
    j["bp_iters"] = spec.bp.max_iter;
    j["bp_variant"] = spec.bp.variant == BPConfig::Variant::sum_product ? "sum-product" : "min-sum";
    j["failures"] = failures;
    j["seconds"] = seconds;
    return j.dump();
}

MonteCarloPoint MonteCarloPoint::from_json(const std::string &line) {
    nlohmann::json j = nlohmann::json::parse(line);
    MonteCarloPoint pt;
    pt.spec.family = family_from_name(j.at("family").get<std::string>());
    pt.spec.dx = j.at("dx").get<int>();
    pt.spec.dz = j.at("dz").get<int>();
    pt.spec.decoder = decoder_from_name(j.at("decoder").get<std::string>());
    pt.spec.p = j.at("p").get<double>();
    pt.spec.eta = j.at("eta").get<double>();
    pt.spec.rounds = j.at("rounds").get<int>();
    pt.spec.basis = j.at("basis").get<std::string>()[0];
    pt.spec.noisy_spam = j.at("spam").get<std::string>() == "noisy";
    pt.spec.shots = j.at("shots").get<uint64_t>();
    pt.spec.seed = j.at("seed").get<uint64_t>();
    if (j.contains("bp_iters")) {
        pt.spec.bp.max_iter = j.at("bp_iters").get<int>();
    }
    if (j.contains("bp_variant") && j.at("bp_variant").get<std::string>() == "min-sum") {
        pt.spec.bp.variant = BPConfig::Variant::min_sum;
    }
    pt.failures = j.at("failures").get<uint64_t>();
    if (j.contains("seconds")) {
        pt.seconds = j.at("seconds").get<double>();
    }
    return pt;
}

MonteCarloPoint run_point(const PointSpec &spec, int num_threads) {
    auto start = std::chrono::steady_clock::now();
    SurfaceCodeLayout layout = build_layout(spec.family, spec.dx, spec.dz);
    Circuit circuit = build_memory_experiment(layout, spec.rounds, spec.basis, spec.noisy_spam);
    Circuit noisy = attach_noise(circuit, NoiseModel{spec.p, spec.eta});
    DetectorErrorModel dem = decompose_hyperedges(build_dem(noisy));

    if (num_threads < 1) {
        num_threads = 1;
    }
    num_threads = int(std::min<uint64_t>(uint64_t(num_threads), std::max<uint64_t>(1, spec.shots)));

    std::vector<uint64_t> failures_per_thread(num_threads, 0);
    auto worker = [&](int tid) {
        FrameSampler sampler(noisy);
        Decoder decoder(dem, spec.decoder, spec.bp);
        std::vector<uint64_t> det(sampler.det_words());
        std::vector<uint64_t> obs(sampler.obs_words());
        std::vector<uint8_t> syndrome(dem.num_detectors);
        uint64_t local = 0;
        for (uint64_t s = tid; s < spec.shots; s += uint64_t(num_threads)) {
            sampler.run_shot(spec.seed, s, det.data(), obs.data());
            for (size_t d = 0; d < dem.num_detectors; d++) {
                syndrome[d] = (det[d >> 6] >> (d & 63)) & 1;
            }
            DecodeOutcome outcome = decoder.decode(syndrome);
            uint64_t actual = obs.empty() ? 0 : obs[0];
            if (outcome.observable_mask != actual) {
                local++;
            }
        }
        failures_per_thread[tid] = local;
    };

    if (num_threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < num_threads; t++) {
            threads.emplace_back(worker, t);
        }
        for (auto &t : threads) {
            t.join();
        }
    }

    MonteCarloPoint pt;
    pt.spec = spec;
    for (uint64_t f : failures_per_thread) {
        pt.failures += f;
    }
    pt.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return pt;
}

std::vector<MonteCarloPoint> run_points(const std::vector<PointSpec> &grid, const std::string &checkpoint_path,
                                        int num_threads,
                                        const std::function<void(const MonteCarloPoint &)> &progress) {
    std::unordered_map<std::string, MonteCarloPoint> done;
    if (!checkpoint_path.empty()) {
        std::ifstream in(checkpoint_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) {
                continue;
            }
            MonteCarloPoint pt = MonteCarloPoint::from_json(line);
            done[pt.spec.key()] = pt;
        }
    }

    std::vector<MonteCarloPoint> results;
    for (const auto &spec : grid) {
        auto it = done.find(spec.key());
        if (it != done.end()) {
            results.push_back(it->second);
            continue;
        }
        MonteCarloPoint pt = run_point(spec, num_threads);
        if (!checkpoint_path.empty()) {
            std::ofstream out(checkpoint_path, std::ios::app);
            out << pt.to_json() << "\n";
        }
        if (progress) {
            progress(pt);
        }
        results.push_back(std::move(pt));
    }
    return results;
}

}  // namespace beliefdec
