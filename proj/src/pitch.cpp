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

#include "voicefeat/pitch.hpp"

#include <algorithm>
#include <cmath>

#include "voicefeat/dsp.hpp"
#include "voicefeat/lp.hpp"

namespace vf {

namespace {

// Median over the voiced neighbors of hop k within a window of 5.
double voiced_median5(const std::vector<double>& f0,
                      const std::vector<bool>& voiced, std::size_t k) {
  std::vector<double> vals;
  const std::size_t lo = k >= 2 ? k - 2 : 0;
  const std::size_t hi = std::min(k + 2, f0.size() - 1);
  for (std::size_t i = lo; i <= hi; ++i) {
    if (voiced[i]) vals.push_back(f0[i]);
  }
  return vals.empty() ? f0[k] : median(std::move(vals));
}

}  // namespace

PitchTrack track_pitch(const AudioBuffer& buf, const PitchParams& params) {
  if (buf.sample_rate <= 0) {
    throw std::invalid_argument("track_pitch: invalid sample rate");
  }
  const double sr = buf.sample_rate;
  if (!(0.0 < params.f0_min_hz && params.f0_min_hz < params.f0_max_hz &&
        params.f0_max_hz < sr / 4.0)) {
    throw std::invalid_argument("track_pitch: bad F0 search range");
  }

  PitchTrack track;
  track.hop_size = static_cast<int>(std::lround(params.hop_s * sr));
  const auto win = static_cast<std::size_t>(std::lround(params.window_s * sr));
  const auto lag_min =
      static_cast<std::size_t>(std::floor(sr / params.f0_max_hz));
  const auto lag_max =
      static_cast<std::size_t>(std::ceil(sr / params.f0_min_hz));
  const std::size_t n = buf.samples.size();
  if (n < win + lag_max) return track;  // too short for one analysis window

  const std::size_t n_hops = (n - win - lag_max) / track.hop_size + 1;
  track.f0.assign(n_hops, 0.0);
  track.voiced.assign(n_hops, false);

  const double* x = buf.samples.data();
  for (std::size_t h = 0; h < n_hops; ++h) {
    const std::size_t s = h * track.hop_size;
    double e0 = 0.0;
    for (std::size_t i = 0; i < win; ++i) e0 += x[s + i] * x[s + i];
    if (e0 < 1e-30) continue;  // silence

    double best_r = -1.0;
    std::size_t best_lag = 0;
    std::vector<double> rvals(lag_max + 1, 0.0);
    for (std::size_t lag = lag_min; lag <= lag_max; ++lag) {
      double num = 0.0, e1 = 0.0;
      for (std::size_t i = 0; i < win; ++i) {
        num += x[s + i] * x[s + i + lag];
        e1 += x[s + i + lag] * x[s + i + lag];
      }
      const double r = e1 > 0.0 ? num / std::sqrt(e0 * e1) : 0.0;
      rvals[lag] = r;
      if (r > best_r) {
        best_r = r;
        best_lag = lag;
      }
    }
    if (best_r < params.voicing_threshold || best_lag == 0) continue;

    // octave guard: prefer the smallest lag whose peak is nearly as strong
    for (std::size_t lag = lag_min; lag < best_lag; ++lag) {
      if (rvals[lag] >= 0.9 * best_r &&
          rvals[lag] >= params.voicing_threshold && lag > lag_min &&
          rvals[lag] >= rvals[lag - 1] && rvals[lag] >= rvals[lag + 1]) {
        best_lag = lag;
        best_r = rvals[lag];
        break;
      }
    }

    double lag_ref = static_cast<double>(best_lag);
    if (best_lag > lag_min && best_lag < lag_max) {
      lag_ref += parabolic_offset(rvals[best_lag - 1], rvals[best_lag],
                                  rvals[best_lag + 1]);
    }
    const double f0 = sr / lag_ref;
    if (f0 < params.f0_min_hz || f0 > params.f0_max_hz) continue;
    track.f0[h] = f0;
    track.voiced[h] = true;
  }

  // octave-error suppression
  std::vector<double> smoothed = track.f0;
  for (std::size_t h = 0; h < n_hops; ++h) {
    if (track.voiced[h]) {
      smoothed[h] = voiced_median5(track.f0, track.voiced, h);
    }
  }
  track.f0 = std::move(smoothed);

  std::vector<double> voiced_f0;
  for (std::size_t h = 0; h < n_hops; ++h) {
    if (track.voiced[h]) voiced_f0.push_back(track.f0[h]);
  }
  if (!voiced_f0.empty()) {
    track.f0_median_voiced = median(std::move(voiced_f0));
  }
  return track;
}

GciSequence detect_gci(const AudioBuffer& buf, const PitchTrack& pitch) {
  GciSequence gcis;
  if (pitch.f0.empty() || !pitch.any_voiced()) return gcis;
  const double sr = buf.sample_rate;
  const int order = static_cast<int>(sr / 1000.0) + 2;
  const std::vector<double> residual =
      lp_residual(buf.samples, buf.sample_rate, order);
  // integrating the residual undoes the whitening of the source pulse, so
  // its minimum sits on the closure instant rather than a few samples off
  const std::vector<double> flow_deriv = leaky_integrate(residual, 0.99);
  const auto refine = static_cast<std::size_t>(std::lround(0.0005 * sr));
  auto snap = [&](std::size_t g) {
    const std::size_t lo = g > refine ? g - refine : 0;
    const std::size_t hi = std::min(g + refine, flow_deriv.size() - 1);
    std::size_t best = lo;
    for (std::size_t i = lo; i <= hi; ++i) {
      if (flow_deriv[i] < flow_deriv[best]) best = i;
    }
    return best;
  };

  // voiced regions as sample spans
  const auto hop = static_cast<std::size_t>(pitch.hop_size);
  std::size_t h = 0;
  const std::size_t n_hops = pitch.f0.size();
  const std::size_t n = buf.samples.size();
  while (h < n_hops) {
    if (!pitch.voiced[h]) {
      ++h;
      continue;
    }
    std::size_t h_end = h;
    while (h_end + 1 < n_hops && pitch.voiced[h_end + 1]) ++h_end;
    const std::size_t r0 = h * hop;
    const std::size_t r1 = std::min((h_end + 1) * hop, n);

    // seed at the strongest negative residual peak in the region
    std::size_t seed = r0;
    double seed_val = residual[r0];
    for (std::size_t i = r0; i < r1; ++i) {
      if (residual[i] < seed_val) {
        seed_val = residual[i];
        seed = i;
      }
    }
    std::vector<std::size_t> region{seed};

    auto period_at = [&](std::size_t s) {
      const double f0 = pitch.f0_at(s);
      return f0 > 0.0 ? sr / f0 : 0.0;
    };

    // march forward, one GCI per period
    for (std::size_t g = seed;;) {
      const double t = period_at(g);
      if (t <= 0.0) break;
      const auto w0 = g + static_cast<std::size_t>(std::lround(0.6 * t));
      const auto w1 = g + static_cast<std::size_t>(std::lround(1.4 * t));
      if (w0 >= r1) break;
      const std::size_t hi = std::min(w1, r1 - 1);
      std::size_t best = w0;
      for (std::size_t i = w0; i <= hi; ++i) {
        if (residual[i] < residual[best]) best = i;
      }
      region.push_back(best);
      g = best;
    }
    // and backward
    for (std::size_t g = seed;;) {
      const double t = period_at(g);
      if (t <= 0.0) break;
      const auto back_hi = static_cast<long long>(g) -
                           static_cast<long long>(std::lround(0.6 * t));
      const auto back_lo = static_cast<long long>(g) -
                           static_cast<long long>(std::lround(1.4 * t));
      if (back_hi < static_cast<long long>(r0)) break;
      const std::size_t lo =
          static_cast<std::size_t>(std::max(back_lo, static_cast<long long>(r0)));
      std::size_t best = lo;
      for (std::size_t i = lo; i <= static_cast<std::size_t>(back_hi); ++i) {
        if (residual[i] < residual[best]) best = i;
      }
      region.push_back(best);
      g = best;
    }

    for (std::size_t& g : region) g = snap(g);
    std::sort(region.begin(), region.end());
    region.erase(std::unique(region.begin(), region.end()), region.end());
    gcis.instants.insert(gcis.instants.end(), region.begin(), region.end());
    h = h_end + 1;
  }
  return gcis;
}

}  // namespace vf
