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

#ifndef VOICEFEAT_SYNTH_HPP
#define VOICEFEAT_SYNTH_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "voicefeat/common.hpp"
#include "voicefeat/pitch.hpp"

namespace vf {

/// Ground-truth vowel generator: Rosenberg-style glottal pulse train through
/// an all-pole vocal tract, with controllable closure sharpness, vibrato,
/// jitter and additive-noise HNR.
struct SynthSpec {
  double f0_hz = 100.0;
  double vibrato_depth_hz = 0.0;
  double vibrato_rate_hz = 5.0;
  double jitter_pct = 0.0;       // per-period uniform F0 perturbation, in %
  double open_quotient = 0.6;    // fraction of the period the glottis is open
  double closure_sharpness = 1.0;  // 1 = abrupt closure, 0 = smooth
  std::vector<std::pair<double, double>> tract_poles;  // (freq Hz, bw Hz)
  double hnr_db = std::numeric_limits<double>::infinity();
  double duration_s = 1.0;
  int sample_rate = 16000;
  uint32_t seed = 0;
};

struct SynthResult {
  AudioBuffer speech;
  AudioBuffer source;  // true glottal flow derivative
  GciSequence gcis;    // exact excitation instants (source minima)
};

SynthResult synth_vowel(const SynthSpec& spec);

struct CorpusFile {
  std::string path;
  std::string label;  // "normal" or "pathological"
  double true_f0 = 0.0;
  double hnr_target_db = 0.0;
  double sharpness = 0.0;
};

/// Seed-deterministic two-class corpus: "normal" = abrupt closure, high HNR,
/// low jitter; "pathological" = smooth closure, low HNR, strong jitter.
/// Writes WAV files plus manifest.csv into out_dir and returns the entries.
std::vector<CorpusFile> synth_corpus(const std::string& out_dir,
                                     int n_per_class, uint32_t seed);

}  // namespace vf

#endif  // VOICEFEAT_SYNTH_HPP
