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

#include "voicefeat/speech_features.hpp"

#include <algorithm>
#include <cmath>

#include "voicefeat/dsp.hpp"

namespace vf {

std::vector<double> perceptive_energies(std::span<const double> frame,
                                        const MelFilterbank& fb) {
  const std::size_t nfft =
      next_pow2(std::max(fb.fft_size, 2 * frame.size()));
  const std::vector<double> mag = magnitude_spectrum(frame, nfft);
  const double df = static_cast<double>(fb.sample_rate) / nfft;

  std::vector<double> pe(fb.n_filters, 0.0);
  for (std::size_t k = 0; k < mag.size(); ++k) {
    const double f = k * df;
    const double p = mag[k] * mag[k];
    if (p == 0.0) continue;
    for (int i = 0; i < fb.n_filters; ++i) {
      const double w = fb.weight(i, f);
      if (w > 0.0) pe[i] += w * p;
    }
  }
  return pe;
}

SpectralBalances spectral_balances(std::span<const double> pe) {
  if (pe.size() != 24) {
    throw std::invalid_argument("spectral_balances: expected 24 energies");
  }
  double s1 = 0.0, s2 = 0.0, s3 = 0.0;
  for (int i = 0; i < 4; ++i) s1 += pe[i];
  for (int i = 4; i < 12; ++i) s2 += pe[i];
  for (int i = 12; i < 24; ++i) s3 += pe[i];
  const double total = s1 + s2 + s3;
  if (total <= 0.0) {
    throw DegenerateInput("spectral_balances: zero total energy");
  }
  return {s1 / total, s2 / total, s3 / total};
}

double spectral_centroid(std::span<const double> frame, int sample_rate) {
  const std::size_t nfft = next_pow2(std::max<std::size_t>(2 * frame.size(), 64));
  const std::vector<double> mag = magnitude_spectrum(frame, nfft);
  const double df = static_cast<double>(sample_rate) / nfft;
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < mag.size(); ++k) {
    const double p = mag[k] * mag[k];
    num += k * df * p;
    den += p;
  }
  if (den <= 0.0) throw DegenerateInput("spectral_centroid: zero frame");
  return num / den;
}

double hnr_db(std::span<const double> raw_frame, int sample_rate, double f0) {
  if (f0 <= 0.0) throw std::invalid_argument("hnr_db: f0 must be positive");
  const double expected_lag = sample_rate / f0;
  const auto n = raw_frame.size();
  if (static_cast<double>(n) < 2.0 * expected_lag) {
    throw std::invalid_argument("hnr_db: frame shorter than two periods");
  }
  double energy = 0.0;
  for (double v : raw_frame) energy += v * v;
  if (energy <= 0.0) throw DegenerateInput("hnr_db: zero frame");

  const auto lag_lo = static_cast<std::size_t>(
      std::max(1.0, std::floor(0.8 * expected_lag)));
  const auto lag_hi = std::min<std::size_t>(
      static_cast<std::size_t>(std::ceil(1.2 * expected_lag)), n - 2);

  // normalized autocorrelation over matched supports
  std::vector<double> rvals(lag_hi + 2, -1.0);
  double best_r = -1.0;
  std::size_t best_lag = lag_lo;
  for (std::size_t lag = lag_lo; lag <= lag_hi + 1; ++lag) {
    double num = 0.0, e0 = 0.0, e1 = 0.0;
    for (std::size_t i = 0; i + lag < n; ++i) {
      num += raw_frame[i] * raw_frame[i + lag];
      e0 += raw_frame[i] * raw_frame[i];
      e1 += raw_frame[i + lag] * raw_frame[i + lag];
    }
    const double r = (e0 > 0.0 && e1 > 0.0) ? num / std::sqrt(e0 * e1) : 0.0;
    rvals[lag] = r;
    if (lag <= lag_hi && r > best_r) {
      best_r = r;
      best_lag = lag;
    }
  }
  double r = best_r;
  if (best_lag > lag_lo && rvals[best_lag + 1] > -1.0) {
    const double off = parabolic_offset(rvals[best_lag - 1], rvals[best_lag],
                                        rvals[best_lag + 1]);
    // parabola value at the refined vertex
    r = rvals[best_lag] -
        0.25 * (rvals[best_lag - 1] - rvals[best_lag + 1]) * off;
  }
  r = std::clamp(r, 1e-6, 1.0 - 1e-6);
  return 10.0 * std::log10(r / (1.0 - r));
}

FmResult max_voiced_frequency(std::span<const double> frame, int sample_rate,
                              double f0) {
  if (f0 <= 0.0) {
    throw std::invalid_argument("max_voiced_frequency: f0 must be positive");
  }
  const std::size_t nfft = next_pow2(std::max<std::size_t>(2 * frame.size(), 64));
  const std::vector<double> mag = magnitude_spectrum(frame, nfft);
  const double df = static_cast<double>(sample_rate) / nfft;
  const double nyquist = sample_rate / 2.0;

  auto bin_of = [&](double hz) {
    return static_cast<long long>(std::llround(hz / df));
  };
  auto clamp_bin = [&](long long b) {
    return static_cast<std::size_t>(
        std::clamp<long long>(b, 0, static_cast<long long>(mag.size()) - 1));
  };

  FmResult out;
  out.fm_hz = f0;
  int misses = 0;
  int scanned = 0;
  int genuine_count = 0;
  bool prev_genuine = true;
  for (int k = 1; k * f0 < nyquist && misses < 2; ++k) {
    ++scanned;
    const double target = k * f0;
    const std::size_t b0 = clamp_bin(bin_of(target - f0 / 4.0));
    const std::size_t b1 = clamp_bin(bin_of(target + f0 / 4.0));

    // largest local maximum inside the candidate band
    double peak = 0.0;
    std::size_t peak_bin = 0;
    bool have_peak = false;
    for (std::size_t b = std::max<std::size_t>(b0, 1);
         b <= std::min(b1, mag.size() - 2); ++b) {
      if (mag[b] >= mag[b - 1] && mag[b] >= mag[b + 1] && mag[b] > peak) {
        peak = mag[b];
        peak_bin = b;
        have_peak = true;
      }
    }

    // local noise floor: median magnitude over a +-3*f0 neighborhood
    const std::size_t n0 = clamp_bin(bin_of(target - 3.0 * f0));
    const std::size_t n1 = clamp_bin(bin_of(target + 3.0 * f0));
    std::vector<double> neigh(mag.begin() + n0, mag.begin() + n1 + 1);
    const double floor_mag = median(std::move(neigh));

    // a genuine harmonic clears an 8 dB margin over the local floor and
    // sits within f0/8 of its nominal position; noise peaks rarely do both
    const bool genuine =
        have_peak && floor_mag > 0.0 && peak >= floor_mag * 2.5118864 &&
        std::abs(static_cast<double>(peak_bin) * df - target) <= f0 / 8.0;
    const bool detected = (k == 1) || genuine;
    if (detected) {
      misses = 0;
      if (genuine) ++genuine_count;
      // Fm only advances when the previous candidate was also genuine, so
      // one stray noise peak past the band edge cannot drag it upward
      if ((k == 1 || prev_genuine) && have_peak) {
        double bin_f = static_cast<double>(peak_bin);
        bin_f += parabolic_offset(mag[peak_bin - 1], mag[peak_bin],
                                  mag[peak_bin + 1]);
        out.fm_hz = bin_f * df;
      } else if (k == 1) {
        out.fm_hz = target;  // forced fundamental without a clean peak
      }
    } else {
      ++misses;
    }
    prev_genuine = genuine;
  }
  out.low_confidence = genuine_count < 2 || 2 * genuine_count <= scanned;
  if (out.low_confidence) out.fm_hz = f0;
  return out;
}

}  // namespace vf
