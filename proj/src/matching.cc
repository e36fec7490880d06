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

#include "beliefdec/matching.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/maximum_weighted_matching.hpp>

namespace beliefdec {

void MatchingGraph::build_adjacency() {
    size_t num_nodes = num_detectors + 1;
    adj_begin.assign(num_nodes + 1, 0);
    std::vector<uint32_t> degree(num_nodes, 0);
    for (const auto &e : edges) {
        degree[e.u]++;
        degree[e.v < 0 ? num_detectors : size_t(e.v)]++;
    }
    for (size_t i = 0; i < num_nodes; i++) {
        adj_begin[i + 1] = adj_begin[i] + degree[i];
    }
    adj_edges.resize(adj_begin[num_nodes]);
    std::vector<uint32_t> fill(adj_begin.begin(), adj_begin.end() - 1);
    for (uint32_t ei = 0; ei < edges.size(); ei++) {
        const auto &e = edges[ei];
        adj_edges[fill[e.u]++] = ei;
        adj_edges[fill[e.v < 0 ? num_detectors : size_t(e.v)]++] = ei;
    }
}

MatchingGraph build_matching_graph(const DetectorErrorModel &dem) {
    MatchingGraph g;
    g.num_detectors = dem.num_detectors;

    // Graphlike mechanisms become edges; parallel edges keep the minimum
    // weight (highest probability).
    std::map<std::pair<int32_t, int32_t>, uint32_t> by_endpoints;
    for (uint32_t m = 0; m < dem.mechanisms.size(); m++) {
        const auto &mech = dem.mechanisms[m];
        if (!mech.is_graphlike()) {
            continue;
        }
        MatchingEdge e;
        e.u = int32_t(mech.detectors[0]);
        e.v = mech.detectors.size() == 2 ? int32_t(mech.detectors[1]) : -1;
        e.probability = mech.probability;
        e.weight = -std::log(mech.probability);
        e.obs_mask = mech.observables;
        e.mechanism = int32_t(m);
        auto key = std::make_pair(e.u, e.v);
        auto it = by_endpoints.find(key);
        if (it == by_endpoints.end()) {
            by_endpoints.emplace(key, uint32_t(g.edges.size()));
            g.edges.push_back(e);
        } else if (e.weight < g.edges[it->second].weight) {
            g.edges[it->second] = e;
        }
    }

    // Hyperedge posteriors flow onto the edges named in their decomposition.
    g.hyper_sources.assign(g.edges.size(), {});
    for (uint32_t m = 0; m < dem.mechanisms.size(); m++) {
        const auto &mech = dem.mechanisms[m];
        if (mech.is_graphlike()) {
            continue;
        }
        if (mech.decomposition.empty()) {
            throw std::invalid_argument("build_matching_graph requires a decomposed DEM");
        }
        for (const auto &part : mech.decomposition) {
            int32_t u = int32_t(part.detectors[0]);
            int32_t v = part.detectors.size() == 2 ? int32_t(part.detectors[1]) : -1;
            auto it = by_endpoints.find(std::make_pair(u, v));
            if (it == by_endpoints.end()) {
                throw DecompositionError("decomposition part does not correspond to any edge");
            }
            g.hyper_sources[it->second].push_back(m);
        }
    }

    g.build_adjacency();
    return g;
}

void reweighted_weights(const MatchingGraph &graph, const std::vector<double> &posteriors,
                        std::vector<double> &weights_out) {
    weights_out.resize(graph.edges.size());
    for (size_t ei = 0; ei < graph.edges.size(); ei++) {
        const auto &e = graph.edges[ei];
        double p_adj = posteriors[e.mechanism];
        for (uint32_t h : graph.hyper_sources[ei]) {
            p_adj += posteriors[h];
        }
        double p_w = std::clamp(p_adj, 1e-300, 1.0);
        weights_out[ei] = -std::log(p_w);
    }
}

MatchingGraph reweight(const MatchingGraph &graph, const std::vector<double> &posteriors) {
    MatchingGraph out = graph;
    std::vector<double> w;
    reweighted_weights(graph, posteriors, w);
    for (size_t ei = 0; ei < out.edges.size(); ei++) {
        out.edges[ei].weight = w[ei];
        double p_adj = posteriors[out.edges[ei].mechanism];
        for (uint32_t h : graph.hyper_sources[ei]) {
            p_adj += posteriors[h];
        }
        out.edges[ei].probability = std::min(p_adj, 1.0);
    }
    return out;
}

std::vector<uint32_t> syndrome_defects(const std::vector<uint8_t> &syndrome) {
    std::vector<uint32_t> defects;
    for (size_t d = 0; d < syndrome.size(); d++) {
        if (syndrome[d]) {
            defects.push_back(uint32_t(d));
        }
    }
    return defects;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct DijkstraState {
    std::vector<double> dist;
    std::vector<int32_t> pred;
    std::vector<uint32_t> epoch;
    std::vector<uint32_t> target_epoch;
    uint32_t cur_epoch = 0;

    void ensure(size_t num_nodes) {
        if (dist.size() != num_nodes) {
            dist.assign(num_nodes, kInf);
            pred.assign(num_nodes, -1);
            epoch.assign(num_nodes, 0);
            target_epoch.assign(num_nodes, 0);
            cur_epoch = 0;
        }
    }
    void touch(uint32_t node) {
        if (epoch[node] != cur_epoch) {
            epoch[node] = cur_epoch;
            dist[node] = kInf;
            pred[node] = -1;
        }
    }
    double settled_dist(uint32_t node) const {
        return epoch[node] == cur_epoch ? dist[node] : kInf;
    }
};

thread_local DijkstraState tl_dijkstra;

// Dijkstra from `source`, stopping once all `targets` are settled.
void run_dijkstra(const MatchingGraph &graph, const std::vector<double> &weights, uint32_t source,
                  const std::vector<uint32_t> &targets, DijkstraState &s) {
    const size_t num_nodes = graph.num_detectors + 1;
    s.ensure(num_nodes);
    s.cur_epoch++;
    size_t remaining = 0;
    for (uint32_t t : targets) {
        if (s.target_epoch[t] != s.cur_epoch) {
            s.target_epoch[t] = s.cur_epoch;
            remaining++;
        }
    }

    std::priority_queue<std::pair<double, uint32_t>, std::vector<std::pair<double, uint32_t>>, std::greater<>> pq;
    s.touch(source);
    s.dist[source] = 0.0;
    pq.push({0.0, source});
    while (!pq.empty() && remaining > 0) {
        auto [d, node] = pq.top();
        pq.pop();
        if (d > s.settled_dist(node)) {
            continue;
        }
        if (s.target_epoch[node] == s.cur_epoch) {
            s.target_epoch[node] = s.cur_epoch - 1;
            remaining--;
        }
        for (uint32_t k = graph.adj_begin[node]; k < graph.adj_begin[node + 1]; k++) {
            uint32_t ei = graph.adj_edges[k];
            const auto &e = graph.edges[ei];
            uint32_t other = uint32_t(e.u) == node ? (e.v < 0 ? uint32_t(graph.num_detectors) : uint32_t(e.v))
                                                   : uint32_t(e.u);
            s.touch(other);
            double nd = d + weights[ei];
            if (nd < s.dist[other]) {
                s.dist[other] = nd;
                s.pred[other] = int32_t(ei);
                pq.push({nd, other});
            }
        }
    }
}

}  // namespace

DecodeOutcome mwpm_decode(const MatchingGraph &graph, const std::vector<double> &weights,
                          const std::vector<uint8_t> &syndrome) {
    if (syndrome.size() != graph.num_detectors) {
        throw std::invalid_argument("syndrome length must equal detector count");
    }
    DecodeOutcome outcome;
    std::vector<uint32_t> defects = syndrome_defects(syndrome);
    const size_t m = defects.size();
    if (m == 0) {
        return outcome;
    }
    const uint32_t boundary = uint32_t(graph.boundary_node());
    DijkstraState &ds = tl_dijkstra;

    // Re-runs Dijkstra from one defect and walks the predecessor chain back
    // from `to_node`, accumulating the correction.
    auto run_and_trace = [&](uint32_t from_defect, uint32_t to_node) {
        run_dijkstra(graph, weights, from_defect, {to_node}, ds);
        if (ds.settled_dist(to_node) == kInf) {
            throw InfeasibleSyndromeError("no path between matched nodes");
        }
        uint32_t node = to_node;
        while (node != from_defect) {
            int32_t ei = ds.pred[node];
            if (ei < 0 || ds.epoch[node] != ds.cur_epoch) {
                throw std::logic_error("path reconstruction failed");
            }
            outcome.correction_edges.push_back(uint32_t(ei));
            outcome.observable_mask ^= graph.edges[ei].obs_mask;
            outcome.matched_weight += weights[ei];
            const auto &e = graph.edges[ei];
            uint32_t u = uint32_t(e.u), v = e.v < 0 ? boundary : uint32_t(e.v);
            node = node == u ? v : u;
        }
    };

    if (m == 1) {
        run_and_trace(defects[0], boundary);
        return outcome;
    }

    // Distances from every defect to every other defect and the boundary.
    std::vector<uint32_t> targets = defects;
    targets.push_back(boundary);
    std::vector<double> pair_dist(m * m, kInf);
    std::vector<double> boundary_dist(m, kInf);
    for (size_t i = 0; i < m; i++) {
        run_dijkstra(graph, weights, defects[i], targets, ds);
        for (size_t j = 0; j < m; j++) {
            pair_dist[i * m + j] = ds.settled_dist(defects[j]);
        }
        boundary_dist[i] = ds.settled_dist(boundary);
    }

    if (m == 2) {
        double direct = pair_dist[1];
        double via_boundary = boundary_dist[0] + boundary_dist[1];
        if (direct == kInf && via_boundary == kInf) {
            throw InfeasibleSyndromeError("defect pair cannot be matched");
        }
        if (direct <= via_boundary) {
            run_and_trace(defects[0], defects[1]);
        } else {
            run_and_trace(defects[0], boundary);
            run_and_trace(defects[1], boundary);
        }
        return outcome;
    }

    // Complete graph over defects plus one boundary image per defect; the
    // images are pairwise connected at full weight C (i.e. cost zero after
    // the max-weight transform), so any subset of defects may fall back to
    // the boundary. Exact blossom matching on integer-scaled weights.
    using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                         boost::property<boost::edge_weight_t, long long>>;
    const size_t V = 2 * m;
    double max_finite = 1e-9;
    for (size_t i = 0; i < m; i++) {
        for (size_t j = i + 1; j < m; j++) {
            double d = pair_dist[i * m + j];
            if (d < kInf) {
                max_finite = std::max(max_finite, d);
            }
        }
        if (boundary_dist[i] < kInf) {
            max_finite = std::max(max_finite, boundary_dist[i]);
        }
    }
    const double scale = double(int64_t{1} << 42) / max_finite;
    auto to_int = [&](double w) { return (long long)std::llround(w * scale); };
    const long long C = to_int(max_finite) * (long long)V + 1;

    BGraph bg(V);
    for (size_t i = 0; i < m; i++) {
        for (size_t j = i + 1; j < m; j++) {
            double d = pair_dist[i * m + j];
            if (d < kInf) {
                boost::add_edge(i, j, C - to_int(d), bg);
            }
            boost::add_edge(m + i, m + j, C, bg);
        }
        if (boundary_dist[i] < kInf) {
            boost::add_edge(i, m + i, C - to_int(boundary_dist[i]), bg);
        }
    }
    std::vector<boost::graph_traits<BGraph>::vertex_descriptor> mate(V);
    boost::maximum_weighted_matching(bg, &mate[0]);

    for (size_t i = 0; i < m; i++) {
        auto mi = mate[i];
        if (mi == boost::graph_traits<BGraph>::null_vertex()) {
            throw InfeasibleSyndromeError("matching left a defect unmatched");
        }
        if (mi < i) {
            continue;  // recorded from the other endpoint
        }
        if (mi < m) {
            run_and_trace(defects[i], defects[mi]);
        } else if (mi == m + i) {
            run_and_trace(defects[i], boundary);
        } else {
            throw std::logic_error("defect matched to a foreign boundary image");
        }
    }
    return outcome;
}

DecodeOutcome mwpm_decode(const MatchingGraph &graph, const std::vector<uint8_t> &syndrome) {
    std::vector<double> weights(graph.edges.size());
    for (size_t ei = 0; ei < graph.edges.size(); ei++) {
        weights[ei] = graph.edges[ei].weight;
    }
    return mwpm_decode(graph, weights, syndrome);
}

bool correction_matches_syndrome(const MatchingGraph &graph, const DecodeOutcome &outcome,
                                 const std::vector<uint8_t> &syndrome) {
    std::vector<uint8_t> parity(graph.num_detectors, 0);
    for (uint32_t ei : outcome.correction_edges) {
        const auto &e = graph.edges[ei];
        parity[e.u] ^= 1;
        if (e.v >= 0) {
            parity[e.v] ^= 1;
        }
    }
    return parity == syndrome;
}

}  // namespace beliefdec
