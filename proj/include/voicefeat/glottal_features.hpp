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

#ifndef VOICEFEAT_GLOTTAL_FEATURES_HPP
#define VOICEFEAT_GLOTTAL_FEATURES_HPP

#include "voicefeat/common.hpp"
#include "voicefeat/iaif.hpp"
#include "voicefeat/mel.hpp"
#include "voicefeat/speech_features.hpp"

namespace vf {

struct GlottalFormant {
  double fg_hz = 0.0;
  double bw_hz = 0.0;      // -3 dB width, linear interpolation between bins
  bool low_confidence = false;
};

/// Glottal formant frequency and bandwidth from the left (open-phase) part
/// of a two-period GCI-centered frame. The cut edge at the frame center gets
/// a half-Blackman taper; Fg is the largest spectral peak below 3*f0, with a
/// fallback to the global maximum below 1 kHz.
GlottalFormant glottal_formant(const GlottalSourceFrame& frame,
                               int sample_rate);

/// Minimum sample value within +-1 ms of the frame center after L2 energy
/// normalization. Throws DegenerateInput on a zero-energy frame.
double min_at_gci(const GlottalSourceFrame& frame, int sample_rate);

struct GlottalSpectral {
  SpectralBalances bal;
  double cog_hz = 0.0;
};

/// Spectral balances and center of gravity on the glottal frame; same
/// contracts as the speech-spectrum counterparts.
GlottalSpectral glottal_spectral_features(const GlottalSourceFrame& frame,
                                          const MelFilterbank& fb);

}  // namespace vf

#endif  // VOICEFEAT_GLOTTAL_FEATURES_HPP
