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

#include "beliefdec/analysis.h"

#include <cmath>

namespace beliefdec {

SpamRatio spam_ratio(CodeFamily family, int L, DecoderKind decoder, double p, double eta, int rounds,
                     uint64_t shots, uint64_t seed, int num_threads) {
    PointSpec spec;
    spec.family = family;
    spec.dx = spec.dz = L;
    spec.decoder = decoder;
    spec.p = p;
    spec.eta = eta;
    spec.rounds = rounds;
    spec.shots = shots;
    spec.seed = seed;

    SpamRatio out;
    spec.noisy_spam = true;
    out.with_spam = run_point(spec, num_threads);
    spec.noisy_spam = false;
    spec.seed = seed + 1;  // independent stream for the reference run
    out.memory_only = run_point(spec, num_threads);

    if (out.memory_only.failures == 0) {
        throw UndefinedRatioError(
            "memory-only run produced zero failures out of " + std::to_string(shots) +
            " shots (SPAM run: " + std::to_string(out.with_spam.failures) + "); the ratio is undefined");
    }
    double f1 = out.with_spam.failure_rate();
    double f2 = out.memory_only.failure_rate();
    out.ratio = f1 / f2;
    if (out.with_spam.failures > 0) {
        double r1 = out.with_spam.std_error() / f1;
        double r2 = out.memory_only.std_error() / f2;
        out.sigma = out.ratio * std::sqrt(r1 * r1 + r2 * r2);
    } else {
        out.sigma = out.memory_only.std_error() / f2 / f2 / double(shots);
    }
    return out;
}

std::vector<ZDistanceRow> z_distance_scan(CodeFamily family, int L_max) {
    if (family != CodeFamily::xy && family != CodeFamily::xy_deformed) {
        throw std::invalid_argument("z_distance_scan applies to the XY code families");
    }
    std::vector<ZDistanceRow> rows;
    for (int L = 3; L <= L_max; L += 2) {
        SurfaceCodeLayout layout = build_layout(family, L, L);
        StabilizerCode code = layout.to_stabilizer_code();
        BinaryMatrix h = code.x_component_matrix();
        ZTypeDistanceResult res = z_type_distance(code);
        ZDistanceRow row;
        row.L = L;
        row.n = code.n;
        row.d_z = res.distance;
        row.ratio = double(res.distance) / double(code.n);
        row.kernel_dim = code.n - h.rank();
        row.z_logical_count = res.logicals.size();
        row.z_stabilizer_count = res.z_stabilizer_count;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace beliefdec
