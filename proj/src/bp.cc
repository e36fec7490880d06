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

#include "beliefdec/bp.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace beliefdec {

double llr(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("llr requires p in (0, 1)");
    }
    return std::log((1.0 - p) / p);
}

TannerGraph make_tanner_graph(const DetectorErrorModel &dem) {
    TannerGraph g;
    g.num_vars = dem.mechanisms.size();
    g.num_checks = dem.num_detectors;
    g.prior_prob.resize(g.num_vars);
    g.prior_llr.resize(g.num_vars);
    g.var_begin.assign(g.num_vars + 1, 0);

    size_t num_edges = 0;
    for (size_t v = 0; v < g.num_vars; v++) {
        double p = std::clamp(dem.mechanisms[v].probability, 1e-15, 1.0 - 1e-15);
        g.prior_prob[v] = p;
        g.prior_llr[v] = llr(p);
        g.var_begin[v] = uint32_t(num_edges);
        num_edges += dem.mechanisms[v].detectors.size();
    }
    g.var_begin[g.num_vars] = uint32_t(num_edges);

    g.edge_check.resize(num_edges);
    g.edge_var.resize(num_edges);
    std::vector<uint32_t> check_degree(g.num_checks, 0);
    for (size_t v = 0, e = 0; v < g.num_vars; v++) {
        for (uint32_t d : dem.mechanisms[v].detectors) {
            g.edge_check[e] = d;
            g.edge_var[e] = uint32_t(v);
            check_degree[d]++;
            e++;
        }
    }
    g.check_begin.assign(g.num_checks + 1, 0);
    for (size_t c = 0; c < g.num_checks; c++) {
        g.check_begin[c + 1] = g.check_begin[c] + check_degree[c];
    }
    g.check_edges.resize(num_edges);
    std::vector<uint32_t> fill(g.check_begin.begin(), g.check_begin.end() - 1);
    for (uint32_t e = 0; e < num_edges; e++) {
        g.check_edges[fill[g.edge_check[e]]++] = e;
    }
    return g;
}

BPResult run_bp(const TannerGraph &graph, const std::vector<uint8_t> &syndrome, const BPConfig &config) {
    BPScratch scratch;
    BPResult result;
    run_bp(graph, syndrome, config, scratch, result);
    return result;
}

void run_bp(const TannerGraph &graph, const std::vector<uint8_t> &syndrome, const BPConfig &config,
            BPScratch &scratch, BPResult &result) {
    if (syndrome.size() != graph.num_checks) {
        throw std::invalid_argument("syndrome length must equal check-node count");
    }
    if (config.max_iter < 1) {
        throw std::invalid_argument("max_iter must be >= 1");
    }
    const size_t E = graph.num_edges();
    const double clamp = config.llr_clamp;
    auto clamped = [clamp](double v) { return std::clamp(v, -clamp, clamp); };

    scratch.mu.resize(E);
    scratch.m.assign(E, 0.0);
    scratch.work.resize(E + 1);
    scratch.q.resize(graph.num_vars);
    scratch.x.assign(graph.num_vars, 0);

    for (size_t v = 0; v < graph.num_vars; v++) {
        double lam = clamped(graph.prior_llr[v]);
        for (uint32_t e = graph.var_begin[v]; e < graph.var_begin[v + 1]; e++) {
            scratch.mu[e] = lam;
        }
    }

    result.converged = false;
    result.iterations_used = 0;

    for (int iter = 1; iter <= config.max_iter; iter++) {
        result.iterations_used = iter;

        // Horizontal step: check -> variable messages, excluding the
        // recipient via prefix/suffix combination (no division, so zero
        // messages are harmless).
        for (size_t c = 0; c < graph.num_checks; c++) {
            uint32_t begin = graph.check_begin[c], end = graph.check_begin[c + 1];
            uint32_t deg = end - begin;
            if (deg == 0) {
                continue;
            }
            double sign_syndrome = syndrome[c] ? -1.0 : 1.0;
            if (config.variant == BPConfig::Variant::sum_product) {
                // work[k] = product of tanh(mu/2) over the first k edges.
                double *prefix = scratch.work.data();
                prefix[0] = 1.0;
                for (uint32_t k = 0; k < deg; k++) {
                    prefix[k + 1] = prefix[k] * std::tanh(scratch.mu[graph.check_edges[begin + k]] * 0.5);
                }
                double suffix = 1.0;
                for (uint32_t k = deg; k-- > 0;) {
                    uint32_t e = graph.check_edges[begin + k];
                    double t = std::tanh(scratch.mu[e] * 0.5);
                    double excl = prefix[k] * suffix;
                    scratch.m[e] = clamped(sign_syndrome * 2.0 * std::atanh(excl));
                    suffix *= t;
                }
            } else {
                double total_sign = sign_syndrome;
                double min1 = HUGE_VAL, min2 = HUGE_VAL;
                uint32_t argmin = 0;
                for (uint32_t k = 0; k < deg; k++) {
                    double mu = scratch.mu[graph.check_edges[begin + k]];
                    if (mu < 0) {
                        total_sign = -total_sign;
                    }
                    double a = std::fabs(mu);
                    if (a < min1) {
                        min2 = min1;
                        min1 = a;
                        argmin = k;
                    } else if (a < min2) {
                        min2 = a;
                    }
                }
                for (uint32_t k = 0; k < deg; k++) {
                    uint32_t e = graph.check_edges[begin + k];
                    double mu = scratch.mu[e];
                    double sign = (mu < 0 ? -total_sign : total_sign);
                    double mag = (k == argmin) ? min2 : min1;
                    if (deg == 1) {
                        mag = clamp;  // no other opinions: fully confident
                    }
                    scratch.m[e] = clamped(sign * config.min_sum_scale * mag);
                }
            }
        }

        // Pseudoposteriors and hard decisions.
        for (size_t v = 0; v < graph.num_vars; v++) {
            double q = graph.prior_llr[v];
            for (uint32_t e = graph.var_begin[v]; e < graph.var_begin[v + 1]; e++) {
                q += scratch.m[e];
            }
            scratch.q[v] = q;
            scratch.x[v] = q <= 0.0 ? 1 : 0;
        }

        // Convergence: H x == syndrome.
        bool ok = true;
        for (size_t c = 0; c < graph.num_checks && ok; c++) {
            uint8_t parity = 0;
            for (uint32_t k = graph.check_begin[c]; k < graph.check_begin[c + 1]; k++) {
                parity ^= scratch.x[graph.edge_var[graph.check_edges[k]]];
            }
            ok = parity == syndrome[c];
        }
        result.converged = ok;
        if (ok && config.stop_on_convergence) {
            break;
        }
        if (iter == config.max_iter) {
            break;
        }

        // Vertical step: variable -> check messages for the next iteration.
        for (size_t v = 0; v < graph.num_vars; v++) {
            double q = scratch.q[v];
            for (uint32_t e = graph.var_begin[v]; e < graph.var_begin[v + 1]; e++) {
                scratch.mu[e] = clamped(q - scratch.m[e]);
            }
        }
    }

    result.llrs.resize(graph.num_vars);
    result.posteriors.resize(graph.num_vars);
    result.hard_decisions = scratch.x;
    for (size_t v = 0; v < graph.num_vars; v++) {
        double q = clamped(scratch.q[v]);
        result.llrs[v] = q;
        result.posteriors[v] = 1.0 / (1.0 + std::exp(q));
    }
}

}  // namespace beliefdec
