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

#include "voicefeat/glottal_features.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "voicefeat/dsp.hpp"

namespace vf {

namespace {

// Largest local maximum of mag in bins (0, limit_bin]; returns false when no
// interior local maximum exists.
bool largest_peak(const std::vector<double>& mag, std::size_t limit_bin,
                  std::size_t& peak_bin) {
  bool found = false;
  double best = 0.0;
  const std::size_t hi = std::min(limit_bin, mag.size() - 2);
  for (std::size_t b = 1; b <= hi; ++b) {
    if (mag[b] >= mag[b - 1] && mag[b] >= mag[b + 1] && mag[b] > best) {
      best = mag[b];
      peak_bin = b;
      found = true;
    }
  }
  return found && best > 0.0;
}

}  // namespace

GlottalFormant glottal_formant(const GlottalSourceFrame& frame,
                               int sample_rate) {
  const std::size_t len = frame.samples.size();
  if (len < 5) throw std::invalid_argument("glottal_formant: frame too short");
  const std::size_t center = len / 2;

  // left part: frame start through the GCI, with the cut edge faded out over
  // the final quarter by the descending half of a Blackman window
  std::vector<double> left(frame.samples.begin(),
                           frame.samples.begin() + center + 1);
  const std::size_t taper_len = std::max<std::size_t>(8, left.size() / 4);
  for (std::size_t i = 0; i < taper_len && i < left.size(); ++i) {
    const double x = 0.5 + 0.5 * (static_cast<double>(i) / (taper_len - 1));
    const double w = 0.42 - 0.5 * std::cos(2.0 * std::numbers::pi * x) +
                     0.08 * std::cos(4.0 * std::numbers::pi * x);
    left[left.size() - taper_len + i] *= w;
  }
  // cutting at the GCI minimum leaves net positive area; remove the mean so
  // the DC offset cannot mask the formant peak
  double mean = 0.0;
  for (double v : left) mean += v;
  mean /= static_cast<double>(left.size());
  for (double& v : left) v -= mean;

  const std::size_t nfft = next_pow2(std::max<std::size_t>(8 * left.size(), 2048));
  const std::vector<double> mag = magnitude_spectrum(left, nfft);
  const double df = static_cast<double>(sample_rate) / nfft;

  GlottalFormant out;
  const auto cap_bin = static_cast<std::size_t>(3.0 * frame.f0_hz / df);
  std::size_t peak_bin = 0;
  if (!largest_peak(mag, cap_bin, peak_bin)) {
    // no interior peak below 3 f0: fall back to the global maximum below
    // 1 kHz, which always exists for a nonzero left part
    const std::size_t fallback_bin = std::min<std::size_t>(
        static_cast<std::size_t>(1000.0 / df), mag.size() - 2);
    peak_bin = 1;
    for (std::size_t b = 1; b <= fallback_bin; ++b) {
      if (mag[b] > mag[peak_bin]) peak_bin = b;
    }
    if (mag[peak_bin] <= 0.0) {
      throw DegenerateInput("glottal_formant: zero left part");
    }
    out.low_confidence = true;
  }

  double bin_f = static_cast<double>(peak_bin);
  bin_f += parabolic_offset(mag[peak_bin - 1], mag[peak_bin],
                            mag[peak_bin + 1]);
  out.fg_hz = bin_f * df;

  // -3 dB (half-power) crossings around the peak, linearly interpolated
  const double thr = mag[peak_bin] / std::sqrt(2.0);
  double f_left = 0.0;
  for (std::size_t b = peak_bin; b-- > 0;) {
    if (mag[b] < thr) {
      const double frac = (thr - mag[b]) / (mag[b + 1] - mag[b]);
      f_left = (b + frac) * df;
      break;
    }
  }
  double f_right = (mag.size() - 1) * df;
  for (std::size_t b = peak_bin + 1; b < mag.size(); ++b) {
    if (mag[b] < thr) {
      const double frac = (mag[b - 1] - thr) / (mag[b - 1] - mag[b]);
      f_right = (b - 1 + frac) * df;
      break;
    }
  }
  out.bw_hz = f_right - f_left;
  return out;
}

double min_at_gci(const GlottalSourceFrame& frame, int sample_rate) {
  if (frame.samples.empty()) {
    throw std::invalid_argument("min_at_gci: empty frame");
  }
  double energy = 0.0;
  for (double v : frame.samples) energy += v * v;
  if (energy <= 0.0) throw DegenerateInput("min_at_gci: zero-energy frame");
  const double norm = std::sqrt(energy);

  const std::size_t center = frame.samples.size() / 2;
  const auto win = static_cast<std::size_t>(std::lround(0.001 * sample_rate));
  const std::size_t lo = center >= win ? center - win : 0;
  const std::size_t hi = std::min(center + win, frame.samples.size() - 1);
  double min_val = frame.samples[lo];
  for (std::size_t i = lo; i <= hi; ++i) {
    min_val = std::min(min_val, frame.samples[i]);
  }
  return min_val / norm;
}

GlottalSpectral glottal_spectral_features(const GlottalSourceFrame& frame,
                                          const MelFilterbank& fb) {
  GlottalSpectral out;
  const std::vector<double> pe = perceptive_energies(frame.samples, fb);
  out.bal = spectral_balances(pe);
  out.cog_hz = spectral_centroid(frame.samples, fb.sample_rate);
  return out;
}

}  // namespace vf
