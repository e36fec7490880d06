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

#include "beliefdec/belief.h"

namespace beliefdec {

std::string decoder_name(DecoderKind kind) {
    switch (kind) {
        case DecoderKind::mwpm:
            return "mwpm";
        case DecoderKind::uf:
            return "uf";
        case DecoderKind::belief_matching:
            return "belief-matching";
        case DecoderKind::belief_find:
            return "belief-find";
    }
    return "?";
}

DecoderKind decoder_from_name(const std::string &name) {
    if (name == "mwpm") {
        return DecoderKind::mwpm;
    }
    if (name == "uf") {
        return DecoderKind::uf;
    }
    if (name == "belief-matching" || name == "belief_matching" || name == "bm") {
        return DecoderKind::belief_matching;
    }
    if (name == "belief-find" || name == "belief_find" || name == "bf") {
        return DecoderKind::belief_find;
    }
    throw std::invalid_argument("unknown decoder: " + name);
}

Decoder::Decoder(const DetectorErrorModel &dem, DecoderKind kind, BPConfig bp)
    : kind_(kind), bp_config_(bp), graph_(build_matching_graph(dem)) {
    mech_obs_.reserve(dem.mechanisms.size());
    for (const auto &m : dem.mechanisms) {
        mech_obs_.push_back(m.observables);
    }
    if (kind_ == DecoderKind::belief_matching || kind_ == DecoderKind::belief_find) {
        tanner_ = make_tanner_graph(dem);
    }
    prior_weights_.resize(graph_.edges.size());
    for (size_t ei = 0; ei < graph_.edges.size(); ei++) {
        prior_weights_[ei] = graph_.edges[ei].weight;
    }
}

DecodeOutcome Decoder::decode(const std::vector<uint8_t> &syndrome) {
    switch (kind_) {
        case DecoderKind::mwpm:
            return mwpm_decode(graph_, prior_weights_, syndrome);
        case DecoderKind::uf:
            return uf_decode(graph_, prior_weights_, syndrome);
        default:
            break;
    }

    DecodeOutcome outcome;
    bool any = false;
    for (uint8_t s : syndrome) {
        any |= s != 0;
    }
    if (!any) {
        return outcome;  // nothing flipped: empty correction, no matcher run
    }

    run_bp(tanner_, syndrome, bp_config_, bp_scratch_, bp_result_);
    if (bp_result_.converged) {
        outcome.bp_converged = true;
        for (uint32_t v = 0; v < bp_result_.hard_decisions.size(); v++) {
            if (bp_result_.hard_decisions[v]) {
                outcome.correction_mechanisms.push_back(v);
                outcome.observable_mask ^= mech_obs_[v];
            }
        }
        return outcome;
    }

    reweighted_weights(graph_, bp_result_.posteriors, weights_);
    if (kind_ == DecoderKind::belief_matching) {
        outcome = mwpm_decode(graph_, weights_, syndrome);
    } else {
        outcome = uf_decode(graph_, weights_, syndrome);
    }
    outcome.bp_converged = false;
    return outcome;
}

DecodeOutcome belief_decode(const DetectorErrorModel &dem, const std::vector<uint8_t> &syndrome,
                            BeliefConfig config) {
    DecoderKind kind =
        config.matcher == BeliefConfig::Matcher::mwpm ? DecoderKind::belief_matching : DecoderKind::belief_find;
    Decoder decoder(dem, kind, config.bp);
    return decoder.decode(syndrome);
}

}  // namespace beliefdec
