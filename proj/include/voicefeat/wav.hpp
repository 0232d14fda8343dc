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

#ifndef VOICEFEAT_WAV_HPP
#define VOICEFEAT_WAV_HPP

#include <string>

#include "voicefeat/common.hpp"

namespace vf {

/// Read a RIFF/WAVE file (PCM 16-bit or IEEE float32, mono or first channel).
/// Samples are scaled to [-1,1] and normalized per file to max-abs = 1
/// (silent files stay all-zero). The original sample rate is preserved.
AudioBuffer load_audio(const std::string& path);

/// Same decode without the per-file amplitude normalization.
AudioBuffer load_audio_raw(const std::string& path);

/// Write mono PCM 16-bit WAV; samples are clipped to [-1,1].
void save_wav(const std::string& path, const AudioBuffer& buf);

}  // namespace vf

#endif  // VOICEFEAT_WAV_HPP
