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

#include "voicefeat/frames.hpp"

#include <cmath>

#include "voicefeat/dsp.hpp"

namespace vf {

std::vector<AnalysisFrame> extract_frames(const AudioBuffer& buf,
                                          const GciSequence& gcis,
                                          const PitchTrack& pitch,
                                          FrameKind kind) {
  std::vector<AnalysisFrame> frames;
  const std::size_t n = buf.samples.size();
  const double sr = buf.sample_rate;

  for (std::size_t gci : gcis.instants) {
    if (gci >= n) continue;
    const double f0 = pitch.f0_at(gci);

    std::size_t length;
    if (kind == FrameKind::FixedLength30ms) {
      length = odd_length(0.030 * sr);
    } else {
      if (f0 <= 0.0) continue;
      length = odd_length(2.0 * sr / f0);
    }
    const std::size_t half = length / 2;
    if (gci < half || gci + half >= n) continue;  // support exceeds buffer

    const std::size_t start = gci - half;
    bool all_voiced = true;
    if (pitch.hop_size > 0) {
      const auto hop = static_cast<std::size_t>(pitch.hop_size);
      for (std::size_t h = start / hop; h <= (gci + half) / hop; ++h) {
        if (h >= pitch.voiced.size() || !pitch.voiced[h]) {
          all_voiced = false;
          break;
        }
      }
    }
    if (!all_voiced) continue;

    AnalysisFrame frame;
    frame.center_gci = gci;
    frame.kind = kind;
    frame.f0_hz = f0;
    frame.raw.assign(buf.samples.begin() + start,
                     buf.samples.begin() + start + length);
    const std::vector<double> w = blackman_window(length);
    frame.samples.resize(length);
    for (std::size_t i = 0; i < length; ++i) {
      frame.samples[i] = frame.raw[i] * w[i];
    }
    frames.push_back(std::move(frame));
  }
  return frames;
}

}  // namespace vf
