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

#ifndef VOICEFEAT_TESTS_TEST_UTIL_HPP
#define VOICEFEAT_TESTS_TEST_UTIL_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "voicefeat/common.hpp"

namespace testutil {

inline vf::AudioBuffer sine(double freq_hz, double amp, double duration_s,
                            int sample_rate, double phase = 0.0) {
  vf::AudioBuffer buf;
  buf.sample_rate = sample_rate;
  const auto n = static_cast<std::size_t>(duration_s * sample_rate);
  buf.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    buf.samples[i] =
        amp * std::sin(2.0 * std::numbers::pi * freq_hz * i / sample_rate +
                       phase);
  }
  return buf;
}

inline std::vector<double> white_noise(std::size_t n, uint32_t seed,
                                       double sigma = 1.0) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, sigma);
  std::vector<double> x(n);
  for (double& v : x) v = gauss(rng);
  return x;
}

inline double rms(const std::vector<double>& x) {
  double e = 0.0;
  for (double v : x) e += v * v;
  return std::sqrt(e / static_cast<double>(x.size()));
}

}  // namespace testutil

#endif  // VOICEFEAT_TESTS_TEST_UTIL_HPP
