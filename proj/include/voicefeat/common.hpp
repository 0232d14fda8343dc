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

#ifndef VOICEFEAT_COMMON_HPP
#define VOICEFEAT_COMMON_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace vf {

/// Unsupported or corrupt input file.
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input is mathematically degenerate for the requested analysis
/// (all-zero frame, singular autocorrelation, single-class dataset, ...).
struct DegenerateInput : std::runtime_error {
  explicit DegenerateInput(const std::string& msg) : std::runtime_error(msg) {}
};

/// Mono sample sequence plus its sample rate. Samples are nominally in [-1,1].
struct AudioBuffer {
  std::vector<double> samples;
  int sample_rate = 0;

  double duration_s() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate
                           : 0.0;
  }
};

enum class FrameKind {
  FixedLength30ms,   // speech-spectrum features
  TwoPitchPeriods,   // glottal-source features
};

/// One GCI-centered analysis frame. `samples` carries the Blackman-windowed
/// signal; `raw` keeps the unwindowed slice over the same support (needed for
/// energy and autocorrelation measures that must not see the window).
struct AnalysisFrame {
  std::vector<double> samples;
  std::vector<double> raw;
  std::size_t center_gci = 0;
  FrameKind kind = FrameKind::FixedLength30ms;
  double f0_hz = 0.0;

  double raw_energy() const {
    double e = 0.0;
    for (double v : raw) e += v * v;
    return e;
  }
};

}  // namespace vf

#endif  // VOICEFEAT_COMMON_HPP
