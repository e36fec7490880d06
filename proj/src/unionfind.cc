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

#include "beliefdec/unionfind.h"

#include <algorithm>
#include <cmath>

namespace beliefdec {

namespace {

// Discretization: the minimum positive weight maps to 8 so one unit of
// growth is an eighth of the cheapest edge; weights cap at 2^16.
constexpr int32_t kMinWeightUnits = 8;
constexpr int32_t kWeightCap = 1 << 16;

// Split-edge node ids: [0, D) detectors, D the boundary, D+1+e the middle of
// edge e. Half-edge ids: 2e (u side) and 2e+1 (v side).
struct UfState {
    uint32_t num_nodes = 0;
    std::vector<uint32_t> parent;
    std::vector<uint32_t> epoch_node;
    // Root-indexed cluster data.
    std::vector<uint32_t> size;
    std::vector<uint32_t> min_node;
    std::vector<uint8_t> parity;
    std::vector<uint8_t> on_boundary;
    std::vector<uint8_t> grew_this_round;
    // Frontier of each cluster: singly-linked list of half-edge ids.
    std::vector<int32_t> list_head, list_tail;
    std::vector<int32_t> half_next;
    std::vector<int32_t> half_weight;
    std::vector<int32_t> half_grown;
    std::vector<uint32_t> epoch_half;
    std::vector<int32_t> touches;
    uint32_t epoch = 0;

    void ensure(uint32_t nodes, uint32_t halves) {
        if (parent.size() < nodes) {
            parent.resize(nodes);
            epoch_node.resize(nodes, 0);
            size.resize(nodes);
            min_node.resize(nodes);
            parity.resize(nodes);
            on_boundary.resize(nodes);
            grew_this_round.resize(nodes);
            list_head.resize(nodes);
            list_tail.resize(nodes);
        }
        if (half_next.size() < halves) {
            half_next.resize(halves);
            half_weight.resize(halves);
            half_grown.resize(halves);
            epoch_half.resize(halves, 0);
            touches.resize(halves);
        }
        num_nodes = nodes;
    }

    void touch_node(uint32_t x) {
        if (epoch_node[x] != epoch) {
            epoch_node[x] = epoch;
            parent[x] = x;
            size[x] = 1;
            min_node[x] = x;
            parity[x] = 0;
            on_boundary[x] = 0;
            grew_this_round[x] = 0;
            list_head[x] = list_tail[x] = -1;
        }
    }
    void touch_half(uint32_t h) {
        if (epoch_half[h] != epoch) {
            epoch_half[h] = epoch;
            half_grown[h] = 0;
            half_next[h] = -1;
            touches[h] = 0;
        }
    }
    uint32_t find(uint32_t x) {
        touch_node(x);
        uint32_t r = x;
        while (parent[r] != r) {
            r = parent[r];
        }
        while (parent[x] != r) {
            uint32_t nxt = parent[x];
            parent[x] = r;
            x = nxt;
        }
        return r;
    }
    void push_half(uint32_t root, uint32_t h) {
        touch_half(h);
        half_next[h] = -1;
        if (list_tail[root] < 0) {
            list_head[root] = list_tail[root] = int32_t(h);
        } else {
            half_next[list_tail[root]] = int32_t(h);
            list_tail[root] = int32_t(h);
        }
    }
    // Union by size; returns the surviving root.
    uint32_t unite(uint32_t a, uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return a;
        }
        if (size[a] < size[b]) {
            std::swap(a, b);
        }
        parent[b] = a;
        size[a] += size[b];
        min_node[a] = std::min(min_node[a], min_node[b]);
        parity[a] ^= parity[b];
        on_boundary[a] |= on_boundary[b];
        grew_this_round[a] |= grew_this_round[b];
        if (list_head[b] >= 0) {
            if (list_tail[a] < 0) {
                list_head[a] = list_head[b];
                list_tail[a] = list_tail[b];
            } else {
                half_next[list_tail[a]] = list_head[b];
                list_tail[a] = list_tail[b];
            }
        }
        return a;
    }
};

thread_local UfState tl_uf;

}  // namespace

DecodeOutcome uf_decode(const MatchingGraph &graph, const std::vector<double> &weights,
                        const std::vector<uint8_t> &syndrome) {
    if (syndrome.size() != graph.num_detectors) {
        throw std::invalid_argument("syndrome length must equal detector count");
    }
    DecodeOutcome outcome;
    std::vector<uint32_t> defects = syndrome_defects(syndrome);
    if (defects.empty()) {
        return outcome;
    }

    const uint32_t D = uint32_t(graph.num_detectors);
    const uint32_t boundary = D;
    const uint32_t E = uint32_t(graph.edges.size());
    const uint32_t num_nodes = D + 1 + E;
    UfState &uf = tl_uf;
    uf.ensure(num_nodes, 2 * E);
    uf.epoch++;

    auto mid_of = [&](uint32_t e) { return D + 1 + e; };
    auto half_nodes = [&](uint32_t h) -> std::pair<uint32_t, uint32_t> {
        uint32_t e = h >> 1;
        const auto &edge = graph.edges[e];
        uint32_t endpoint = (h & 1) ? (edge.v < 0 ? boundary : uint32_t(edge.v)) : uint32_t(edge.u);
        return {endpoint, mid_of(e)};
    };

    // Integer weights: zero-weight edges are fully grown from the start and
    // their endpoints pre-fused.
    double min_positive = 0.0;
    for (uint32_t e = 0; e < E; e++) {
        double w = weights[e];
        if (w > 1e-12 && (min_positive == 0.0 || w < min_positive)) {
            min_positive = w;
        }
    }
    double scale = min_positive > 0.0 ? double(kMinWeightUnits) / min_positive : 1.0;
    std::vector<int32_t> weight_units(E);
    for (uint32_t e = 0; e < E; e++) {
        double w = weights[e];
        int32_t wi =
            w <= 1e-12 ? 0 : int32_t(std::min<double>(kWeightCap, std::max<double>(1.0, double(std::llround(w * scale)))));
        weight_units[e] = wi;
        uf.touch_half(2 * e);
        uf.touch_half(2 * e + 1);
        uf.half_weight[2 * e] = (wi + 1) / 2;
        uf.half_weight[2 * e + 1] = wi / 2;
    }

    auto half_complete = [&](uint32_t h) {
        uf.touch_half(h);
        return uf.half_grown[h] >= uf.half_weight[h];
    };
    auto edge_in_erasure = [&](uint32_t e) { return half_complete(2 * e) && half_complete(2 * e + 1); };

    // Completed halves fuse their endpoints; when the far endpoint is a mid
    // node joining a cluster for the first time, the partner half becomes
    // part of the frontier.
    auto complete_half = [&](uint32_t h) {
        auto [endpoint, mid] = half_nodes(h);
        bool mid_fresh = uf.epoch_node[mid] != uf.epoch;
        uint32_t root = uf.unite(endpoint, mid);
        if (mid_fresh) {
            uf.push_half(root, h ^ 1);
        }
    };

    // Pre-fuse zero-weight edges (they are free to traverse by definition).
    for (uint32_t e = 0; e < E; e++) {
        if (uf.half_weight[2 * e] == 0) {
            complete_half(2 * e);
        }
        if (uf.half_weight[2 * e + 1] == 0) {
            complete_half(2 * e + 1);
        }
    }

    uf.touch_node(boundary);
    uf.on_boundary[uf.find(boundary)] = 1;

    // Seed clusters at defects; their frontier is every incident half.
    std::vector<uint32_t> tracked_roots;
    for (uint32_t d : defects) {
        uint32_t root = uf.find(d);
        uf.parity[root] ^= 1;
        tracked_roots.push_back(root);
    }
    for (uint32_t d : defects) {
        uint32_t root = uf.find(d);
        for (uint32_t k = graph.adj_begin[d]; k < graph.adj_begin[d + 1]; k++) {
            uint32_t e = graph.adj_edges[k];
            uint32_t h = 2 * e + (uint32_t(graph.edges[e].u) == d ? 0 : 1);
            uf.push_half(root, h);
        }
    }

    std::vector<uint32_t> active;
    std::vector<uint32_t> snapshot;                        // frontier halves of all active clusters
    std::vector<std::pair<uint32_t, uint32_t>> snap_range;  // per active cluster: [begin, end) in snapshot
    while (true) {
        // Active odd clusters, smaller before larger.
        active.clear();
        std::sort(tracked_roots.begin(), tracked_roots.end());
        tracked_roots.erase(std::unique(tracked_roots.begin(), tracked_roots.end()), tracked_roots.end());
        for (size_t i = 0; i < tracked_roots.size(); i++) {
            uint32_t r = uf.find(tracked_roots[i]);
            tracked_roots[i] = r;
            if (uf.parity[r] && !uf.on_boundary[r]) {
                active.push_back(r);
            }
        }
        std::sort(active.begin(), active.end());
        active.erase(std::unique(active.begin(), active.end()), active.end());
        if (active.empty()) {
            break;
        }
        std::sort(active.begin(), active.end(), [&](uint32_t a, uint32_t b) {
            if (uf.size[a] != uf.size[b]) {
                return uf.size[a] < uf.size[b];
            }
            return uf.min_node[a] < uf.min_node[b];
        });

        // Scan frontiers once: prune stale halves, snapshot the live ones,
        // and count how many clusters grow each half this round.
        snapshot.clear();
        snap_range.clear();
        for (uint32_t r : active) {
            uint32_t begin = uint32_t(snapshot.size());
            int32_t prev = -1;
            int32_t h = uf.list_head[r];
            while (h >= 0) {
                int32_t next = uf.half_next[h];
                auto [a, b] = half_nodes(uint32_t(h));
                if (half_complete(uint32_t(h)) || uf.find(a) == uf.find(b)) {
                    // internal or already complete: drop from the frontier
                    if (prev < 0) {
                        uf.list_head[r] = next;
                    } else {
                        uf.half_next[prev] = next;
                    }
                    if (next < 0) {
                        uf.list_tail[r] = prev;
                    }
                } else {
                    uf.touches[h]++;
                    snapshot.push_back(uint32_t(h));
                    prev = h;
                }
                h = next;
            }
            snap_range.emplace_back(begin, uint32_t(snapshot.size()));
        }
        if (snapshot.empty()) {
            throw InfeasibleSyndromeError("odd cluster has no room to grow");
        }

        // Fast-forward uneventful unit rounds: the first completion happens
        // after ceil(remaining/touches) rounds, so everything before that is
        // plain accumulation.
        int64_t min_units = INT64_MAX;
        for (uint32_t h : snapshot) {
            int64_t remaining = uf.half_weight[h] - uf.half_grown[h];
            int64_t units = (remaining + uf.touches[h] - 1) / uf.touches[h];
            min_units = std::min(min_units, units);
        }
        int64_t bulk = min_units - 1;
        if (bulk > 0) {
            for (uint32_t h : snapshot) {
                if (uf.touches[h] > 0) {
                    uf.half_grown[h] += int32_t(bulk) * uf.touches[h];
                    uf.touches[h] = -uf.touches[h];  // visit once
                }
            }
            for (uint32_t h : snapshot) {
                uf.touches[h] = 0;
            }
            outcome.clusters_grown += uint64_t(bulk);
        } else {
            for (uint32_t h : snapshot) {
                uf.touches[h] = 0;
            }
        }

        // One exact unit round with immediate fusion. A cluster skips its
        // turn if an earlier fusion this round made it even, absorbed it
        // into a cluster that already grew, or attached it to the boundary.
        outcome.clusters_grown += 1;
        for (uint32_t r : active) {
            uf.grew_this_round[uf.find(r)] = 0;
        }
        for (size_t ci = 0; ci < active.size(); ci++) {
            uint32_t root = uf.find(active[ci]);
            if (!uf.parity[root] || uf.on_boundary[root] || uf.grew_this_round[root]) {
                continue;
            }
            uf.grew_this_round[root] = 1;
            for (uint32_t k = snap_range[ci].first; k < snap_range[ci].second; k++) {
                uint32_t h = snapshot[k];
                auto [a, b] = half_nodes(h);
                if (half_complete(h) || uf.find(a) == uf.find(b)) {
                    continue;
                }
                uf.half_grown[h]++;
                if (half_complete(h)) {
                    complete_half(h);
                    tracked_roots.push_back(uf.find(a));
                }
            }
        }
    }

    // Peeling: spanning tree (not minimum-weight) of the fully grown edges
    // within each defect cluster, leaves peeled first; boundary-rooted trees
    // absorb the leftover defect.
    std::vector<uint8_t> defect_flag(graph.num_detectors, 0);
    for (uint32_t d : defects) {
        defect_flag[d] = 1;
    }
    std::vector<int32_t> visit_pred(graph.num_detectors + 1, -2);  // -2 unvisited, -1 root
    std::vector<uint32_t> order;
    for (uint32_t d : defects) {
        uint32_t root = uf.find(d);
        if (visit_pred[d] != -2) {
            continue;
        }
        uint32_t start = uf.on_boundary[root] ? boundary : d;
        order.clear();
        visit_pred[start] = -1;
        order.push_back(start);
        for (size_t qi = 0; qi < order.size(); qi++) {
            uint32_t node = order[qi];
            for (uint32_t k = graph.adj_begin[node]; k < graph.adj_begin[node + 1]; k++) {
                uint32_t e = graph.adj_edges[k];
                if (!edge_in_erasure(e)) {
                    continue;
                }
                const auto &edge = graph.edges[e];
                uint32_t other = uint32_t(edge.u) == node ? (edge.v < 0 ? boundary : uint32_t(edge.v))
                                                          : uint32_t(edge.u);
                if (visit_pred[other] != -2) {
                    continue;
                }
                visit_pred[other] = int32_t(e);
                order.push_back(other);
            }
        }
        for (size_t qi = order.size(); qi-- > 1;) {
            uint32_t node = order[qi];
            if (node == boundary || !defect_flag[node]) {
                continue;
            }
            int32_t e = visit_pred[node];
            const auto &edge = graph.edges[e];
            uint32_t parent_node = uint32_t(edge.u) == node ? (edge.v < 0 ? boundary : uint32_t(edge.v))
                                                            : uint32_t(edge.u);
            outcome.correction_edges.push_back(uint32_t(e));
            outcome.observable_mask ^= edge.obs_mask;
            outcome.matched_weight += weights[e];
            defect_flag[node] = 0;
            if (parent_node != boundary) {
                defect_flag[parent_node] ^= 1;
            }
        }
    }
    for (uint32_t d = 0; d < graph.num_detectors; d++) {
        if (defect_flag[d]) {
            throw std::logic_error("peeling left an unmatched defect");
        }
    }
    return outcome;
}

DecodeOutcome uf_decode(const MatchingGraph &graph, const std::vector<uint8_t> &syndrome) {
    std::vector<double> weights(graph.edges.size());
    for (size_t ei = 0; ei < graph.edges.size(); ei++) {
        weights[ei] = graph.edges[ei].weight;
    }
    return uf_decode(graph, weights, syndrome);
}

}  // namespace beliefdec
