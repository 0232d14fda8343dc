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

#include "voicefeat/mel.hpp"

#include <cmath>
#include <stdexcept>

namespace vf {

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double mel_to_hz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

MelFilterbank MelFilterbank::make(int n_filters, int sample_rate,
                                  std::size_t fft_size) {
  if (n_filters < 1 || sample_rate <= 0) {
    throw std::invalid_argument("MelFilterbank: bad parameters");
  }
  MelFilterbank fb;
  fb.n_filters = n_filters;
  fb.sample_rate = sample_rate;
  fb.fft_size = fft_size;

  const double mel_max = hz_to_mel(sample_rate / 2.0);
  // n_filters centers plus the two outer edges, equally spaced in mel
  std::vector<double> points(n_filters + 2);
  for (int i = 0; i < n_filters + 2; ++i) {
    points[i] = mel_to_hz(mel_max * i / (n_filters + 1));
  }
  fb.edges_hz.resize(n_filters);
  for (int i = 0; i < n_filters; ++i) {
    fb.edges_hz[i] = {points[i], points[i + 1], points[i + 2]};
  }
  return fb;
}

double MelFilterbank::weight(int filter, double freq_hz) const {
  const auto& [left, center, right] = edges_hz[filter];
  if (freq_hz <= left || freq_hz >= right) return 0.0;
  if (freq_hz <= center) return (freq_hz - left) / (center - left);
  return (right - freq_hz) / (right - center);
}

}  // namespace vf
