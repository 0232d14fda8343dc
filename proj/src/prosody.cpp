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

#include "voicefeat/prosody.hpp"

#include <cmath>

#include "voicefeat/dsp.hpp"

namespace vf {

std::vector<std::optional<ProsodyFeatures>> prosody_features(
    const std::vector<AnalysisFrame>& frames, const PitchTrack& pitch) {
  std::vector<std::optional<ProsodyFeatures>> out(frames.size());
  if (frames.empty()) return out;

  std::vector<double> energies_db;
  std::vector<double> f0_values;
  energies_db.reserve(frames.size());
  f0_values.reserve(frames.size());
  for (const AnalysisFrame& f : frames) {
    const double e = f.raw_energy();
    if (e > 0.0) energies_db.push_back(10.0 * std::log10(e));
    if (f.f0_hz > 0.0) f0_values.push_back(f.f0_hz);
  }
  if (energies_db.empty()) return out;
  const double e_median = median(energies_db);
  // median over the frames themselves so median(delta_f0) == 0 exactly;
  // falls back to the track-level median when frames carry no F0
  const double f0_median =
      f0_values.empty() ? pitch.f0_median_voiced : median(f0_values);

  for (std::size_t i = 0; i < frames.size(); ++i) {
    const double e = frames[i].raw_energy();
    if (e <= 0.0) continue;  // dropped, caller counts
    out[i] = ProsodyFeatures{frames[i].f0_hz - f0_median,
                             10.0 * std::log10(e) - e_median};
  }
  return out;
}

}  // namespace vf
