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

#ifndef VOICEFEAT_COMMANDS_HPP
#define VOICEFEAT_COMMANDS_HPP

#include <string>

#include "voicefeat/pipeline.hpp"

namespace vf {

// Exit codes shared by the CLI and the batch drivers.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitIo = 3;

/// Run the full pipeline over a manifest CSV (audio_path,label[,...]) and
/// write the feature table. Unreadable files are skipped with a warning.
int cmd_extract(const std::string& manifest_path, const std::string& out_table,
                const std::string& config_path = "");

/// Histogram MI analysis of a feature table; writes <out_report> as JSON and
/// a sibling .csv matrix.
int cmd_analyze(const std::string& table_path, const std::string& out_report,
                int bins = 50);

/// Plot-data emitters: what in {pitch, gci, glottal, spectrum}.
int cmd_dump(const std::string& what, const std::string& audio_path,
             const std::string& out_path);

/// Generate the synthetic two-class corpus (WAVs + manifest.csv).
int cmd_synth(const std::string& out_dir, int n_per_class, uint32_t seed);

}  // namespace vf

#endif  // VOICEFEAT_COMMANDS_HPP
