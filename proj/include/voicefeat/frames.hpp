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

#ifndef VOICEFEAT_FRAMES_HPP
#define VOICEFEAT_FRAMES_HPP

#include <vector>

#include "voicefeat/common.hpp"
#include "voicefeat/pitch.hpp"

namespace vf {

/// One Blackman-windowed frame per GCI whose full support lies inside the
/// buffer and inside a voiced region. FixedLength30ms frames have length
/// odd(0.030 * sample_rate); TwoPitchPeriods frames odd(2 * sample_rate / f0).
/// Frames whose support crosses an unvoiced hop are dropped, not padded.
std::vector<AnalysisFrame> extract_frames(const AudioBuffer& buf,
                                          const GciSequence& gcis,
                                          const PitchTrack& pitch,
                                          FrameKind kind);

}  // namespace vf

#endif  // VOICEFEAT_FRAMES_HPP
