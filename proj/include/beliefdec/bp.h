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

#ifndef BELIEFDEC_BP_H
#define BELIEFDEC_BP_H

#include <cstdint>
#include <vector>

#include "beliefdec/dem.h"

namespace beliefdec {

/// log((1-p)/p). Requires p in (0, 1).
double llr(double p);

/// Bipartite Tanner graph: one variable node per error mechanism, one check
/// node per detector. Flattened CSR adjacency in both directions, sharing
/// edge ids (edge ids are variable-major).
struct TannerGraph {
    size_t num_vars = 0;
    size_t num_checks = 0;
    std::vector<double> prior_prob;  // per variable
    std::vector<double> prior_llr;

    std::vector<uint32_t> var_begin;     // size num_vars + 1
    std::vector<uint32_t> edge_check;    // check of edge e (var-major edge ids)
    std::vector<uint32_t> check_begin;   // size num_checks + 1
    std::vector<uint32_t> check_edges;   // edge ids grouped by check
    std::vector<uint32_t> edge_var;      // variable of edge e

    size_t num_edges() const {
        return edge_check.size();
    }
};

TannerGraph make_tanner_graph(const DetectorErrorModel &dem);

struct BPConfig {
    int max_iter = 30;
    enum class Variant { sum_product, min_sum } variant = Variant::sum_product;
    double min_sum_scale = 1.0;
    double llr_clamp = 50.0;
    // Production decoding stops at the first iteration whose hard decisions
    // reproduce the syndrome. Oracle tests disable this so the posteriors
    // settle to the exact tree marginals.
    bool stop_on_convergence = true;
};

struct BPResult {
    std::vector<double> posteriors;       // p_BP per variable
    std::vector<double> llrs;             // pseudoposterior LLR q_i
    std::vector<uint8_t> hard_decisions;  // x[i] = 1 iff q_i <= 0
    bool converged = false;
    int iterations_used = 0;
};

/// Reusable message buffers; keep one per thread.
struct BPScratch {
    std::vector<double> mu;        // variable -> check
    std::vector<double> m;         // check -> variable
    std::vector<double> work;      // prefix/suffix products
    std::vector<double> q;
    std::vector<uint8_t> x;
};

/// Flooding-schedule sum-product (or min-sum) over the Tanner graph,
/// conditioned on the syndrome. Non-convergence is a normal, flagged
/// outcome, not an error.
BPResult run_bp(const TannerGraph &graph, const std::vector<uint8_t> &syndrome, const BPConfig &config);
void run_bp(const TannerGraph &graph, const std::vector<uint8_t> &syndrome, const BPConfig &config,
            BPScratch &scratch, BPResult &result);

}  // namespace beliefdec

#endif
