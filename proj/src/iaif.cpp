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

#include "voicefeat/iaif.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "voicefeat/dsp.hpp"
#include "voicefeat/lp.hpp"

namespace vf {

namespace {

constexpr double kIntegratorLeak = 0.99;
constexpr int kGlottalOrder = 4;

std::vector<double> lp_of_hann_windowed(std::span<const double> seg,
                                        int order) {
  std::vector<double> w(seg.size());
  for (std::size_t i = 0; i < seg.size(); ++i) {
    w[i] = seg[i] * (0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i /
                                          (seg.size() - 1)));
  }
  return lp_coefficients(w, order);
}

}  // namespace

IaifResult iaif_analyze(const AudioBuffer& buf, const GciSequence& gcis,
                        const PitchTrack& pitch, int p_vt) {
  IaifResult result;
  result.source.assign(buf.samples.size(), 0.0);
  if (gcis.instants.empty()) return result;
  if (p_vt <= 0) p_vt = static_cast<int>(buf.sample_rate / 1000.0) + 2;

  const double sr = buf.sample_rate;
  const auto hop = static_cast<std::size_t>(std::max(pitch.hop_size, 1));
  const std::size_t n = buf.samples.size();
  const std::size_t n_hops = pitch.f0.size();

  // voiced regions as [r0, r1) sample spans
  std::vector<std::pair<std::size_t, std::size_t>> regions;
  for (std::size_t h = 0; h < n_hops;) {
    if (!pitch.voiced[h]) {
      ++h;
      continue;
    }
    std::size_t h_end = h;
    while (h_end + 1 < n_hops && pitch.voiced[h_end + 1]) ++h_end;
    regions.emplace_back(h * hop, std::min((h_end + 1) * hop, n));
    h = h_end + 1;
  }
  if (regions.empty() && n_hops == 0) {
    regions.emplace_back(0, n);  // no pitch hops at all: treat whole buffer
  }

  for (const auto& [r0, r1] : regions) {
    const std::span<const double> seg(buf.samples.data() + r0, r1 - r0);
    std::vector<std::size_t> region_gcis;
    for (std::size_t g : gcis.instants) {
      if (g >= r0 && g < r1) region_gcis.push_back(g);
    }
    if (region_gcis.empty()) continue;
    if (seg.size() <= static_cast<std::size_t>(3 * p_vt)) {
      result.skipped += static_cast<int>(region_gcis.size());
      continue;
    }

    std::vector<double> flow_deriv;
    try {
      const std::vector<double> a_g1 = lp_of_hann_windowed(seg, 1);
      const std::vector<double> y1 = fir_filter(seg, a_g1);

      const std::vector<double> a_vt1 = lp_of_hann_windowed(y1, p_vt);
      const std::vector<double> y2 = fir_filter(seg, a_vt1);
      const std::vector<double> y3 = leaky_integrate(y2, kIntegratorLeak);

      const std::vector<double> a_g2 = lp_of_hann_windowed(y3, kGlottalOrder);
      const std::vector<double> y4 = fir_filter(seg, a_g2);
      const std::vector<double> y5 = leaky_integrate(y4, kIntegratorLeak);

      const std::vector<double> a_vt2 = lp_of_hann_windowed(y5, p_vt);
      flow_deriv = fir_filter(seg, a_vt2);
    } catch (const DegenerateInput&) {
      result.skipped += static_cast<int>(region_gcis.size());
      continue;
    }

    std::copy(flow_deriv.begin(), flow_deriv.end(),
              result.source.begin() + r0);

    for (std::size_t g : region_gcis) {
      const double f0 = pitch.f0_at(g);
      if (f0 <= 0.0 && n_hops > 0) {
        ++result.skipped;
        continue;
      }
      const double f0_use = f0 > 0.0 ? f0 : 100.0;
      const std::size_t length = odd_length(2.0 * sr / f0_use);
      const std::size_t half = length / 2;
      if (g < r0 + half || g + half >= r1) {
        ++result.skipped;
        continue;
      }
      GlottalSourceFrame frame;
      frame.center_gci = g;
      frame.f0_hz = f0_use;
      frame.samples.resize(length);
      const std::vector<double> w = blackman_window(length);
      const std::size_t local = g - r0 - half;
      double energy = 0.0;
      for (std::size_t i = 0; i < length; ++i) {
        frame.samples[i] = flow_deriv[local + i] * w[i];
        energy += frame.samples[i] * frame.samples[i];
      }
      frame.energy = std::sqrt(energy);
      if (frame.energy <= 0.0) {
        ++result.skipped;
        continue;
      }
      result.frames.push_back(std::move(frame));
    }
  }
  return result;
}

}  // namespace vf
