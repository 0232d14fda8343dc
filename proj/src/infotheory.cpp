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

#include "voicefeat/infotheory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>

#include "voicefeat/dsp.hpp"

#include "json.hpp"

namespace vf {

DiscretizedFeature discretize(std::span<const double> values, int n_bins) {
  if (n_bins < 2) throw std::invalid_argument("discretize: n_bins >= 2");
  if (values.empty()) throw std::invalid_argument("discretize: empty values");
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("discretize: non-finite value");
    }
  }
  std::vector<double> sorted(values.begin(), values.end());
  const double lo = percentile(sorted, 1.0);
  const double hi = percentile(std::move(sorted), 99.0);

  DiscretizedFeature out;
  out.n_bins = n_bins;
  out.bins.resize(values.size());
  out.bin_edges.resize(n_bins + 1);
  if (hi <= lo) {
    // constant (or near-constant) feature: one occupied bin
    for (int b = 0; b <= n_bins; ++b) out.bin_edges[b] = lo + b;
    std::fill(out.bins.begin(), out.bins.end(), 0);
    return out;
  }
  const double width = (hi - lo) / n_bins;
  for (int b = 0; b <= n_bins; ++b) out.bin_edges[b] = lo + b * width;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto b = static_cast<long long>(std::floor((values[i] - lo) / width));
    out.bins[i] = static_cast<int>(
        std::clamp<long long>(b, 0, n_bins - 1));  // clamp outliers
  }
  return out;
}

double class_entropy_from_counts(std::span<const std::size_t> counts) {
  std::size_t total = 0;
  for (std::size_t c : counts) total += c;
  if (total == 0) throw std::invalid_argument("class_entropy: no records");
  double h = 0.0;
  for (std::size_t c : counts) {
    if (c == 0) continue;  // 0 log 0 = 0
    const double p = static_cast<double>(c) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  return h;
}

double class_entropy(std::span<const int> labels) {
  std::array<std::size_t, 2> counts = {0, 0};
  for (int l : labels) ++counts[l != 0 ? 1 : 0];
  return class_entropy_from_counts(counts);
}

double mutual_information(const DiscretizedFeature& x,
                          std::span<const int> labels) {
  if (x.bins.size() != labels.size()) {
    throw std::invalid_argument("mutual_information: misaligned inputs");
  }
  const double n = static_cast<double>(labels.size());
  // joint counts over (bin, class); ordered map keeps summation deterministic
  std::map<std::pair<int, int>, double> joint;
  std::map<int, double> marginal_x;
  std::array<double, 2> marginal_c = {0.0, 0.0};
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int c = labels[i] != 0 ? 1 : 0;
    joint[{x.bins[i], c}] += 1.0;
    marginal_x[x.bins[i]] += 1.0;
    marginal_c[c] += 1.0;
  }
  double mi = 0.0;
  for (const auto& [cell, count] : joint) {
    const auto& [b, c] = cell;
    mi += count / n *
          std::log2(count * n / (marginal_x[b] * marginal_c[c]));
  }
  return mi;
}

PairMi pairwise_joint_mi(const DiscretizedFeature& xi,
                         const DiscretizedFeature& xj,
                         std::span<const int> labels) {
  if (xi.bins.size() != labels.size() || xj.bins.size() != labels.size()) {
    throw std::invalid_argument("pairwise_joint_mi: misaligned inputs");
  }
  const double n = static_cast<double>(labels.size());
  // sparse 3-way histogram over (bin_i, bin_j, class)
  std::map<std::tuple<int, int, int>, double> triple;
  std::map<std::pair<int, int>, double> pair_ij;
  std::array<double, 2> marginal_c = {0.0, 0.0};
  for (std::size_t r = 0; r < labels.size(); ++r) {
    const int c = labels[r] != 0 ? 1 : 0;
    triple[{xi.bins[r], xj.bins[r], c}] += 1.0;
    pair_ij[{xi.bins[r], xj.bins[r]}] += 1.0;
    marginal_c[c] += 1.0;
  }

  PairMi out;
  double joint = 0.0;
  for (const auto& [cell, count] : triple) {
    const auto& [bi, bj, c] = cell;
    joint += count / n *
             std::log2(count * n / (pair_ij[{bi, bj}] * marginal_c[c]));
  }
  out.joint_bits = joint;
  out.redundancy_bits =
      mutual_information(xi, labels) + mutual_information(xj, labels) - joint;
  out.sparse_warning = triple.size() * 5 > labels.size();
  return out;
}

MiReport build_report(const LabeledDataset& ds, int n_bins) {
  const std::size_t nf = ds.n_features();
  if (nf < 2) throw std::invalid_argument("build_report: need >= 2 features");
  if (ds.values.size() != ds.n_records()) {
    throw std::invalid_argument("build_report: values/labels mismatch");
  }

  MiReport report;
  report.feature_names = ds.feature_names;
  report.class_names = ds.class_names;
  report.n_bins = n_bins;
  for (int l : ds.labels) ++report.class_counts[l != 0 ? 1 : 0];
  if (report.class_counts[0] == 0 || report.class_counts[1] == 0) {
    throw DegenerateInput("build_report: only class '" +
                          ds.class_names[report.class_counts[0] == 0 ? 1 : 0] +
                          "' present; relative measures need both classes");
  }
  const double h = class_entropy(ds.labels);
  report.class_entropy_bits = h;

  std::vector<DiscretizedFeature> disc(nf);
  std::vector<double> column(ds.n_records());
  for (std::size_t f = 0; f < nf; ++f) {
    for (std::size_t r = 0; r < ds.n_records(); ++r) {
      column[r] = ds.values[r][f];
    }
    disc[f] = discretize(column, n_bins);
  }

  std::vector<double> intrinsic(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    intrinsic[f] = mutual_information(disc[f], ds.labels);
  }

  report.intrinsic_rel.resize(nf);
  report.joint_rel.assign(nf, std::vector<double>(nf, 0.0));
  report.redundancy_rel.assign(nf, std::vector<double>(nf, 0.0));
  for (std::size_t f = 0; f < nf; ++f) {
    report.intrinsic_rel[f] = intrinsic[f] / h;
    report.joint_rel[f][f] = intrinsic[f] / h;
    report.redundancy_rel[f][f] = intrinsic[f] / h;
  }
  for (std::size_t i = 0; i < nf; ++i) {
    for (std::size_t j = i + 1; j < nf; ++j) {
      const PairMi pm = pairwise_joint_mi(disc[i], disc[j], ds.labels);
      // the stored values must satisfy the identity exactly, evaluated along
      // the same floating-point path it was produced with
      if (pm.redundancy_bits != intrinsic[i] + intrinsic[j] - pm.joint_bits) {
        throw std::logic_error("build_report: joint/redundancy identity broke");
      }
      report.joint_rel[i][j] = report.joint_rel[j][i] = pm.joint_bits / h;
      report.redundancy_rel[i][j] = report.redundancy_rel[j][i] =
          pm.redundancy_bits / h;
      report.any_sparse_warning |= pm.sparse_warning;
    }
  }
  return report;
}

std::string MiReport::to_json() const {
  nlohmann::ordered_json j;
  j["class_names"] = class_names;
  j["class_counts"] = class_counts;
  j["class_entropy_bits"] = class_entropy_bits;
  j["n_bins"] = n_bins;
  j["feature_names"] = feature_names;
  j["relative_intrinsic"] = intrinsic_rel;
  j["relative_joint"] = joint_rel;
  j["relative_redundancy"] = redundancy_rel;
  j["sparse_warning"] = any_sparse_warning;
  return j.dump(2);
}

std::string MiReport::to_csv_matrix() const {
  std::ostringstream os;
  os << "feature";
  for (const std::string& name : feature_names) os << "," << name;
  os << "\n";
  char buf[32];
  const std::size_t nf = feature_names.size();
  for (std::size_t i = 0; i < nf; ++i) {
    os << feature_names[i];
    for (std::size_t j = 0; j < nf; ++j) {
      double v;
      if (i == j) {
        v = intrinsic_rel[i];
      } else if (j > i) {
        v = joint_rel[i][j];  // top-right
      } else {
        v = redundancy_rel[i][j];  // bottom-left
      }
      std::snprintf(buf, sizeof(buf), "%.1f", 100.0 * v);
      os << "," << buf;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace vf
