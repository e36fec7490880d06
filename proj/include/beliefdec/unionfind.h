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

#ifndef BELIEFDEC_UNIONFIND_H
#define BELIEFDEC_UNIONFIND_H

#include "beliefdec/matching.h"

namespace beliefdec {

/// Weighted union-find on the split-edge graph: an extra node mid-edge with
/// each half carrying half the discretized weight. Growth rounds advance the
/// boundary half-edges of odd clusters by one unit, smaller clusters first,
/// fusing (and updating parity) the moment an edge is fully grown;
/// boundary-touching clusters count as even. The correction is extracted by
/// peeling a spanning tree of the fully-grown edges.
DecodeOutcome uf_decode(const MatchingGraph &graph, const std::vector<double> &weights,
                        const std::vector<uint8_t> &syndrome);
DecodeOutcome uf_decode(const MatchingGraph &graph, const std::vector<uint8_t> &syndrome);

}  // namespace beliefdec

#endif
