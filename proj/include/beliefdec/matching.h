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

#ifndef BELIEFDEC_MATCHING_H
#define BELIEFDEC_MATCHING_H

#include <cstdint>
#include <limits>
#include <vector>

#include "beliefdec/dem.h"

namespace beliefdec {

struct InfeasibleSyndromeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MatchingEdge {
    int32_t u = -1;  // detector index
    int32_t v = -1;  // detector index, or -1 for the virtual boundary
    double probability = 0.0;
    double weight = 0.0;  // -log(p_w)
    uint64_t obs_mask = 0;
    int32_t mechanism = -1;  // source mechanism in the DEM

    bool is_boundary() const {
        return v < 0;
    }
};

/// Weighted graph over detectors plus one virtual boundary node (index
/// num_detectors in the adjacency). Parallel edges are pre-merged keeping
/// the minimum weight.
struct MatchingGraph {
    size_t num_detectors = 0;
    std::vector<MatchingEdge> edges;

    // Hyperedge mechanisms whose decomposition contains each edge; their BP
    // posteriors are added to the edge's own when reweighting.
    std::vector<std::vector<uint32_t>> hyper_sources;

    // CSR adjacency over nodes 0..num_detectors (boundary last).
    std::vector<uint32_t> adj_begin;
    std::vector<uint32_t> adj_edges;

    size_t boundary_node() const {
        return num_detectors;
    }
    void build_adjacency();
};

/// Edges from the graphlike mechanisms of a decomposed DEM, with initial
/// weights -log(p_prior).
MatchingGraph build_matching_graph(const DetectorErrorModel &dem);

/// p_adj(e) = p_BP(e) + sum of hyperedge posteriors decomposing through e;
/// p_w = min(p_adj, 1); w = -log(p_w). `posteriors` is indexed by DEM
/// mechanism.
void reweighted_weights(const MatchingGraph &graph, const std::vector<double> &posteriors,
                        std::vector<double> &weights_out);

/// Copying variant of the above, returning a graph with updated
/// probabilities and weights.
MatchingGraph reweight(const MatchingGraph &graph, const std::vector<double> &posteriors);

struct DecodeOutcome {
    uint64_t observable_mask = 0;
    std::vector<uint32_t> correction_edges;       // matching-graph edge ids
    std::vector<uint32_t> correction_mechanisms;  // DEM mechanism ids (BP fast path)
    bool bp_converged = false;
    double matched_weight = 0.0;
    uint64_t clusters_grown = 0;
};

/// Exact minimum-weight perfect matching via per-defect Dijkstra, a complete
/// graph over defects with per-defect boundary images, and an exact blossom
/// matching core. Scratch state is thread-local, so concurrent calls from
/// different threads are safe.
DecodeOutcome mwpm_decode(const MatchingGraph &graph, const std::vector<double> &weights,
                          const std::vector<uint8_t> &syndrome);
DecodeOutcome mwpm_decode(const MatchingGraph &graph, const std::vector<uint8_t> &syndrome);

/// True when the correction's boundary (XOR of edge endpoints, boundary
/// excluded) equals the syndrome; used by tests and debug checks.
bool correction_matches_syndrome(const MatchingGraph &graph, const DecodeOutcome &outcome,
                                 const std::vector<uint8_t> &syndrome);

std::vector<uint32_t> syndrome_defects(const std::vector<uint8_t> &syndrome);

}  // namespace beliefdec

#endif
