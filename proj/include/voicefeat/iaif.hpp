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

#ifndef VOICEFEAT_IAIF_HPP
#define VOICEFEAT_IAIF_HPP

#include <cstddef>
#include <vector>

#include "voicefeat/common.hpp"
#include "voicefeat/pitch.hpp"

namespace vf {

/// Two-period, GCI-centered, Blackman-windowed glottal flow derivative
/// estimate.
struct GlottalSourceFrame {
  std::vector<double> samples;
  std::size_t center_gci = 0;
  double f0_hz = 0.0;
  double energy = 0.0;  // L2 norm
};

struct IaifResult {
  std::vector<GlottalSourceFrame> frames;
  /// Full-length glottal flow derivative estimate (zero outside voiced
  /// regions); kept for dumps and plots.
  std::vector<double> source;
  int skipped = 0;  // GCIs dropped because LP failed or support fell outside
};

/// Iterative adaptive inverse filtering over each voiced segment:
///   1. order-1 LP of the signal, inverse-filter (glottal tilt estimate)
///   2. vocal-tract LP of order p_vt, inverse-filter + integrate
///   3. refined glottal LP of order 4, inverse-filter + integrate
///   4. final vocal-tract LP of order p_vt, inverse-filter
/// The step-4 output is the flow derivative; two-period frames are cut
/// after the whole segment has been filtered.
/// p_vt <= 0 selects sample_rate/1000 + 2.
IaifResult iaif_analyze(const AudioBuffer& buf, const GciSequence& gcis,
                        const PitchTrack& pitch, int p_vt = 0);

}  // namespace vf

#endif  // VOICEFEAT_IAIF_HPP
