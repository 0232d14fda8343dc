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

#include "voicefeat/lp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace vf {

std::vector<double> lp_coefficients(std::span<const double> frame, int order) {
  if (order < 1) throw std::invalid_argument("lp_coefficients: order >= 1");
  if (frame.size() <= static_cast<std::size_t>(3 * order)) {
    throw std::invalid_argument(
        "lp_coefficients: frame length must exceed 3 * order");
  }
  const auto n = frame.size();
  std::vector<double> r(order + 1, 0.0);
  for (int lag = 0; lag <= order; ++lag) {
    double acc = 0.0;
    for (std::size_t i = lag; i < n; ++i) acc += frame[i] * frame[i - lag];
    r[lag] = acc;
  }
  if (r[0] <= 0.0) {
    throw DegenerateInput("lp_coefficients: zero-energy frame");
  }
  r[0] *= 1.0 + 1e-9;  // tiny ridge keeps Levinson stable near singularity

  std::vector<double> a(order + 1, 0.0);
  a[0] = 1.0;
  double err = r[0];
  for (int m = 1; m <= order; ++m) {
    double acc = r[m];
    for (int k = 1; k < m; ++k) acc += a[k] * r[m - k];
    const double reflection = -acc / err;
    std::vector<double> prev(a.begin(), a.begin() + m);
    a[m] = reflection;
    for (int k = 1; k < m; ++k) a[k] = prev[k] + reflection * prev[m - k];
    err *= 1.0 - reflection * reflection;
    if (err <= 0.0) {
      throw DegenerateInput("lp_coefficients: singular autocorrelation");
    }
  }
  return a;
}

std::vector<double> lp_residual(std::span<const double> x, int sample_rate,
                                int order) {
  const auto n = x.size();
  std::vector<double> e(n, 0.0);
  const auto win = static_cast<std::size_t>(std::lround(0.025 * sample_rate));
  const std::size_t hop = win / 2;
  if (n < win || hop == 0) return e;

  std::vector<double> hann(win);
  for (std::size_t i = 0; i < win; ++i) {
    hann[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / (win - 1));
  }

  std::vector<double> frame(win);
  for (std::size_t start = 0; start + win <= n + hop; start += hop) {
    const std::size_t s = std::min(start, n - win);
    for (std::size_t i = 0; i < win; ++i) frame[i] = x[s + i] * hann[i];
    std::vector<double> a;
    try {
      a = lp_coefficients(frame, order);
    } catch (const DegenerateInput&) {
      continue;  // silent stretch; residual stays zero there
    }
    // inverse-filter the central hop of this frame using real signal context
    const std::size_t c0 = s + hop / 2;
    const std::size_t c1 = std::min(c0 + hop, n);
    for (std::size_t m = (start == 0 ? 0 : c0); m < c1; ++m) {
      double acc = 0.0;
      const std::size_t kmax = std::min<std::size_t>(order, m);
      for (std::size_t k = 0; k <= kmax; ++k) acc += a[k] * x[m - k];
      e[m] = acc;
    }
    // tail beyond the last frame's central region
    if (s + win >= n) {
      for (std::size_t m = c1; m < n; ++m) {
        double acc = 0.0;
        const std::size_t kmax = std::min<std::size_t>(order, m);
        for (std::size_t k = 0; k <= kmax; ++k) acc += a[k] * x[m - k];
        e[m] = acc;
      }
      break;
    }
  }
  return e;
}

}  // namespace vf
