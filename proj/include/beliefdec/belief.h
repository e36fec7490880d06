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

#ifndef BELIEFDEC_BELIEF_H
#define BELIEFDEC_BELIEF_H

#include "beliefdec/bp.h"
#include "beliefdec/matching.h"
#include "beliefdec/unionfind.h"

namespace beliefdec {

enum class DecoderKind { mwpm, uf, belief_matching, belief_find };

std::string decoder_name(DecoderKind kind);
DecoderKind decoder_from_name(const std::string &name);

struct BeliefConfig {
    enum class Matcher { mwpm, uf } matcher = Matcher::mwpm;
    BPConfig bp;
};

/// Two-stage decoder: BP posterior estimation over the circuit-level Tanner
/// graph; on convergence the hard decisions are returned directly, otherwise
/// the matching graph is reweighted from the posteriors and handed to MWPM
/// (belief-matching) or weighted union-find (belief-find).
///
/// One instance per thread: decode() reuses internal buffers.
class Decoder {
   public:
    /// The DEM must be decomposed and must outlive the decoder.
    Decoder(const DetectorErrorModel &dem, DecoderKind kind, BPConfig bp = {});

    DecodeOutcome decode(const std::vector<uint8_t> &syndrome);

    const MatchingGraph &graph() const {
        return graph_;
    }
    const TannerGraph &tanner() const {
        return tanner_;
    }
    DecoderKind kind() const {
        return kind_;
    }

   private:
    DecoderKind kind_;
    BPConfig bp_config_;
    std::vector<uint64_t> mech_obs_;
    TannerGraph tanner_;
    MatchingGraph graph_;
    std::vector<double> prior_weights_;
    std::vector<double> weights_;
    BPScratch bp_scratch_;
    BPResult bp_result_;
};

/// One-shot convenience wrapper around Decoder for the BP-composed decoders.
DecodeOutcome belief_decode(const DetectorErrorModel &dem, const std::vector<uint8_t> &syndrome,
                            BeliefConfig config);

}  // namespace beliefdec

#endif
