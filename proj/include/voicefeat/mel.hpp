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

#ifndef VOICEFEAT_MEL_HPP
#define VOICEFEAT_MEL_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "voicefeat/common.hpp"

namespace vf {

double hz_to_mel(double hz);
double mel_to_hz(double mel);

/// Triangular mel filterbank: n_filters unit-peak triangles with centers
/// equally spaced on the mel scale over [0, sample_rate/2] and edges at the
/// adjacent centers (50% overlap).
struct MelFilterbank {
  int n_filters = 0;
  int sample_rate = 0;
  std::size_t fft_size = 0;  // minimum FFT size used by callers
  std::vector<std::array<double, 3>> edges_hz;  // left, center, right

  static MelFilterbank make(int n_filters, int sample_rate,
                            std::size_t fft_size = 1024);

  /// Triangle weight of filter i at a frequency in Hz; in [0,1].
  double weight(int filter, double freq_hz) const;
};

}  // namespace vf

#endif  // VOICEFEAT_MEL_HPP
