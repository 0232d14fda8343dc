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

#ifndef VOICEFEAT_PIPELINE_HPP
#define VOICEFEAT_PIPELINE_HPP

#include <array>
#include <string>
#include <vector>

#include "voicefeat/common.hpp"
#include "voicefeat/infotheory.hpp"
#include "voicefeat/pitch.hpp"

namespace vf {

inline constexpr int kNumFeatures = 15;

/// Column order of the feature table.
const std::array<std::string, kNumFeatures>& feature_names();

struct PipelineConfig {
  int target_rate = 16000;
  double f0_min_hz = 60.0;
  double f0_max_hz = 400.0;
  double voicing_threshold = 0.45;
  int lp_order_vt = 0;  // 0 = sample_rate/1000 + 2
  int n_bins = 50;
};

/// Plain key=value config file; unknown keys are rejected.
PipelineConfig load_config(const std::string& path);

struct FeatureRow {
  std::size_t gci = 0;
  int frame_index = 0;
  std::array<double, kNumFeatures> values{};
};

struct FileFeatures {
  std::vector<FeatureRow> rows;
  int gci_count = 0;
  int dropped = 0;  // frames discarded for any failed or non-finite feature
};

/// Full per-file analysis: normalize, resample, pitch, GCI, IAIF, then all
/// 15 features per retained voiced frame.
FileFeatures extract_file_features(const AudioBuffer& raw,
                                   const PipelineConfig& config = {});

/// CSV round-trip of the feature table (header: file_id, frame_index, label,
/// then the 15 feature columns).
std::string feature_table_header();
std::string feature_row_csv(const std::string& file_id, const FeatureRow& row,
                            const std::string& label);
LabeledDataset read_feature_table(const std::string& path);

}  // namespace vf

#endif  // VOICEFEAT_PIPELINE_HPP
