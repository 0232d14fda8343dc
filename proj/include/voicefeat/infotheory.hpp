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

#ifndef VOICEFEAT_INFOTHEORY_HPP
#define VOICEFEAT_INFOTHEORY_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "voicefeat/common.hpp"

namespace vf {

/// Frame-level feature records with binary class labels (0/1).
struct LabeledDataset {
  std::vector<std::string> feature_names;
  std::vector<std::vector<double>> values;  // one row per record
  std::vector<int> labels;                  // 0 or 1
  std::array<std::string, 2> class_names = {"normophonic", "dysphonic"};

  std::size_t n_records() const { return labels.size(); }
  std::size_t n_features() const { return feature_names.size(); }
};

struct DiscretizedFeature {
  std::vector<int> bins;          // bin index per record, in [0, n_bins)
  std::vector<double> bin_edges;  // n_bins + 1 strictly increasing edges
  int n_bins = 0;
};

/// Equal-width bins spanning the [p1, p99] percentile range; values outside
/// are clamped to the extreme bins. All-identical values land in one bin.
DiscretizedFeature discretize(std::span<const double> values, int n_bins);

/// H(C) in bits from empirical class frequencies (0 log 0 := 0).
double class_entropy(std::span<const int> labels);
double class_entropy_from_counts(std::span<const std::size_t> counts);

/// Plug-in histogram estimate of I(X;C) in bits.
double mutual_information(const DiscretizedFeature& x,
                          std::span<const int> labels);

struct PairMi {
  double joint_bits = 0.0;       // I(Xi,Xj;C) from the 3-way histogram
  double redundancy_bits = 0.0;  // I(Xi;C) + I(Xj;C) - joint
  bool sparse_warning = false;   // occupied 3-way cells > N/5
};

PairMi pairwise_joint_mi(const DiscretizedFeature& xi,
                         const DiscretizedFeature& xj,
                         std::span<const int> labels);

/// Relative measures (each divided by H(C)) for every feature and feature
/// pair. joint_rel is symmetric with the intrinsic values on its diagonal.
struct MiReport {
  std::vector<std::string> feature_names;
  double class_entropy_bits = 0.0;
  std::array<std::size_t, 2> class_counts = {0, 0};
  std::array<std::string, 2> class_names;
  int n_bins = 0;
  std::vector<double> intrinsic_rel;
  std::vector<std::vector<double>> joint_rel;
  std::vector<std::vector<double>> redundancy_rel;
  bool any_sparse_warning = false;

  std::string to_json() const;
  /// Matrix CSV: diagonal = relative intrinsic information, top-right =
  /// relative joint information, bottom-left = relative redundancy;
  /// percentages rounded to one decimal.
  std::string to_csv_matrix() const;
};

/// Throws DegenerateInput when only one class is present (H(C) = 0).
MiReport build_report(const LabeledDataset& ds, int n_bins = 50);

}  // namespace vf

#endif  // VOICEFEAT_INFOTHEORY_HPP
