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

#ifndef VOICEFEAT_PITCH_HPP
#define VOICEFEAT_PITCH_HPP

#include <cstddef>
#include <vector>

#include "voicefeat/common.hpp"

namespace vf {

/// Per-hop F0 estimates and voicing decisions. f0[k] == 0 exactly where
/// voiced[k] is false.
struct PitchTrack {
  int hop_size = 0;  // samples
  std::vector<double> f0;
  std::vector<bool> voiced;
  double f0_median_voiced = 0.0;

  std::size_t hop_of_sample(std::size_t sample) const {
    if (hop_size <= 0 || f0.empty()) return 0;
    std::size_t h = sample / static_cast<std::size_t>(hop_size);
    return h < f0.size() ? h : f0.size() - 1;
  }
  bool voiced_at(std::size_t sample) const {
    if (f0.empty()) return false;
    return voiced[hop_of_sample(sample)];
  }
  double f0_at(std::size_t sample) const {
    if (f0.empty()) return 0.0;
    return f0[hop_of_sample(sample)];
  }
  bool any_voiced() const {
    for (bool v : voiced)
      if (v) return true;
    return false;
  }
};

/// Strictly increasing glottal closure instants (sample indices).
struct GciSequence {
  std::vector<std::size_t> instants;
};

struct PitchParams {
  double f0_min_hz = 60.0;
  double f0_max_hz = 400.0;
  double voicing_threshold = 0.45;  // on the normalized autocorrelation peak
  double window_s = 0.040;
  double hop_s = 0.010;
};

/// Normalized-autocorrelation pitch tracking with a 10 ms hop and a 40 ms
/// window; octave errors suppressed by a length-5 median filter over voiced
/// runs. Amplitude-invariant.
PitchTrack track_pitch(const AudioBuffer& buf, const PitchParams& params = {});

/// One GCI per pitch period in voiced regions, placed at the strongest
/// negative peak of the linear-prediction residual.
GciSequence detect_gci(const AudioBuffer& buf, const PitchTrack& pitch);

}  // namespace vf

#endif  // VOICEFEAT_PITCH_HPP
