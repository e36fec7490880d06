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

#ifndef BELIEFDEC_MONTECARLO_H
#define BELIEFDEC_MONTECARLO_H

#include <functional>
#include <string>

#include "beliefdec/belief.h"
#include "beliefdec/sampler.h"

namespace beliefdec {

struct PointSpec {
    CodeFamily family = CodeFamily::css;
    int dx = 3, dz = 3;  // equal for the XY variants
    DecoderKind decoder = DecoderKind::mwpm;
    double p = 0.001;
    double eta = 1.0;
    int rounds = 3;
    char basis = 'X';
    bool noisy_spam = false;
    uint64_t shots = 1000;
    uint64_t seed = 0;
    BPConfig bp;

    double p_cx() const {
        return cnot_infidelity(p, eta);
    }
    /// Identity used for checkpoint resume.
    std::string key() const;
};

struct MonteCarloPoint {
    PointSpec spec;
    uint64_t failures = 0;
    double seconds = 0.0;

    double failure_rate() const {
        return spec.shots ? double(failures) / double(spec.shots) : 0.0;
    }
    double std_error() const;
    /// Wilson score interval at z standard deviations.
    std::pair<double, double> wilson_interval(double z = 1.0) const;

    std::string to_json() const;
    static MonteCarloPoint from_json(const std::string &line);
};

/// Builds the circuit, DEM and decoder for the spec and counts
/// observable-prediction mismatches over `shots` sampled shots. Shots are
/// split across `num_threads` workers, each with its own sampler, decoder
/// and RNG substreams; failure counts are order-independent, so results are
/// bit-identical for any thread count.
MonteCarloPoint run_point(const PointSpec &spec, int num_threads = 1);

/// Runs all points, skipping those already present in the JSON-lines
/// checkpoint file and appending each finished point to it. Pass an empty
/// path to disable checkpointing.
std::vector<MonteCarloPoint> run_points(const std::vector<PointSpec> &grid, const std::string &checkpoint_path,
                                        int num_threads = 1,
                                        const std::function<void(const MonteCarloPoint &)> &progress = {});

SurfaceCodeLayout build_layout(CodeFamily family, int dx, int dz);

}  // namespace beliefdec

#endif
