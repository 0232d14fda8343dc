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

#ifndef VOICEFEAT_SPEECH_FEATURES_HPP
#define VOICEFEAT_SPEECH_FEATURES_HPP

#include <span>
#include <vector>

#include "voicefeat/common.hpp"
#include "voicefeat/mel.hpp"

namespace vf {

/// Mel-weighted spectral energies: PE(i) = sum_k W_i(f_k) |X(k)|^2 over
/// [0, sample_rate/2]. All-zero frames give all-zero energies.
std::vector<double> perceptive_energies(std::span<const double> frame,
                                        const MelFilterbank& fb);

struct SpectralBalances {
  double bal1 = 0.0, bal2 = 0.0, bal3 = 0.0;
};

/// Energy fractions of mel bands 1-4, 5-12 and 13-24 (1-based, 24 filters).
/// Throws DegenerateInput on zero total energy.
SpectralBalances spectral_balances(std::span<const double> pe);

/// Power-weighted mean frequency over [0, sample_rate/2].
double spectral_centroid(std::span<const double> frame, int sample_rate);

/// Autocorrelation HNR: r = interpolated maximum of the normalized
/// autocorrelation near lag sample_rate/f0 (searched +-20%), computed on the
/// unwindowed slice so exact periodicity maps to r -> 1.
/// HNR = 10 log10(r / (1-r)), r clamped to [1e-6, 1 - 1e-6].
double hnr_db(std::span<const double> raw_frame, int sample_rate, double f0);

struct FmResult {
  double fm_hz = 0.0;
  bool low_confidence = false;
};

/// Maximum voiced frequency: harmonic k is detected when a local spectral
/// maximum within +-f0/4 of k*f0 lies within f0/8 of k*f0 and exceeds the
/// median magnitude in a +-3*f0 neighborhood by >= 8 dB; the scan stops
/// after 2 consecutive misses, Fm only advances over runs of consecutive
/// detections, and k = 1 always counts. When detections cover less than
/// half of the scanned candidates the result is flagged low-confidence and
/// falls back to f0.
FmResult max_voiced_frequency(std::span<const double> frame, int sample_rate,
                              double f0);

}  // namespace vf

#endif  // VOICEFEAT_SPEECH_FEATURES_HPP
