// Copyright 2026 The voicefeat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VOICEFEAT_PROSODY_HPP
#define VOICEFEAT_PROSODY_HPP

#include <optional>
#include <vector>

#include "voicefeat/common.hpp"
#include "voicefeat/pitch.hpp"

namespace vf {

struct ProsodyFeatures {
  double delta_f0_hz = 0.0;  // frame F0 minus utterance median voiced F0
  double delta_e_db = 0.0;   // frame energy (dB) minus utterance median
};

/// Per-frame deviations from utterance-level medians. Energy is the L2
/// energy of the unwindowed slice, in dB, so the measure is gain-invariant.
/// Zero-energy frames yield nullopt (dropped downstream).
std::vector<std::optional<ProsodyFeatures>> prosody_features(
    const std::vector<AnalysisFrame>& frames, const PitchTrack& pitch);

}  // namespace vf

#endif  // VOICEFEAT_PROSODY_HPP
