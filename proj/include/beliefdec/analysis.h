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

#ifndef BELIEFDEC_ANALYSIS_H
#define BELIEFDEC_ANALYSIS_H

#include "beliefdec/montecarlo.h"

namespace beliefdec {

struct UndefinedRatioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpamRatio {
    MonteCarloPoint with_spam;     // noisy logical state preparation and measurement
    MonteCarloPoint memory_only;   // noiseless boundary rounds
    double ratio = 0.0;
    double sigma = 0.0;  // binomial error propagation
};

/// Ratio of logical error rates with and without logical SPAM noise.
/// Throws UndefinedRatioError when the denominator has zero failures.
SpamRatio spam_ratio(CodeFamily family, int L, DecoderKind decoder, double p, double eta, int rounds,
                     uint64_t shots, uint64_t seed, int num_threads = 1);

struct ZDistanceRow {
    int L = 0;
    size_t n = 0;
    size_t d_z = 0;
    double ratio = 0.0;  // d_z / n
    size_t kernel_dim = 0;
    size_t z_logical_count = 0;
    size_t z_stabilizer_count = 0;
};

/// Z-distance of the (deformed) XY code for every odd L <= L_max, via
/// kernel enumeration of the X/Y-component check matrix.
std::vector<ZDistanceRow> z_distance_scan(CodeFamily family, int L_max);

}  // namespace beliefdec

#endif
