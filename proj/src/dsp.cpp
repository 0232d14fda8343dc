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

#include "voicefeat/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace vf {

namespace {
constexpr double kPi = std::numbers::pi;

double sinc(double x) {
  if (std::abs(x) < 1e-12) return 1.0;
  return std::sin(kPi * x) / (kPi * x);
}

double blackman_at(double x) {
  // x in [0,1]
  return 0.42 - 0.5 * std::cos(2.0 * kPi * x) + 0.08 * std::cos(4.0 * kPi * x);
}
}  // namespace

std::vector<double> blackman_window(std::size_t length) {
  if (length < 3 || length % 2 == 0) {
    throw std::invalid_argument("blackman_window: length must be odd and >= 3");
  }
  std::vector<double> w(length);
  for (std::size_t i = 0; i < length; ++i) {
    w[i] = blackman_at(static_cast<double>(i) / (length - 1));
  }
  return w;
}

std::size_t odd_length(double x) {
  auto n = static_cast<long long>(std::llround(x));
  if (n < 1) n = 1;
  if (n % 2 == 0) n += 1;
  return static_cast<std::size_t>(n);
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void fft_inplace(std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("fft_inplace: size must be a power of two");
  }
  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * kPi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

std::vector<double> magnitude_spectrum(std::span<const double> x,
                                       std::size_t nfft) {
  nfft = next_pow2(std::max<std::size_t>(nfft, x.size()));
  std::vector<std::complex<double>> a(nfft, {0.0, 0.0});
  for (std::size_t i = 0; i < x.size(); ++i) a[i] = x[i];
  fft_inplace(a);
  std::vector<double> mag(nfft / 2 + 1);
  for (std::size_t k = 0; k < mag.size(); ++k) mag[k] = std::abs(a[k]);
  return mag;
}

AudioBuffer resample(const AudioBuffer& in, int target_rate) {
  if (target_rate <= 0) {
    throw std::invalid_argument("resample: target rate must be positive");
  }
  if (target_rate == in.sample_rate) return in;

  const double in_rate = in.sample_rate;
  const double min_rate = std::min<double>(in_rate, target_rate);
  // Cutoff at 90% of the smaller Nyquist; the remaining 10% is the
  // transition band, so choose the kernel length to finish the rolloff
  // before aliasing can fold in.
  const double cutoff = 0.45 * min_rate / in_rate;        // cycles/in-sample
  const double transition = 0.05 * min_rate / in_rate;
  const int half = static_cast<int>(std::ceil(2.75 / transition));

  const std::size_t in_len = in.samples.size();
  const std::size_t out_len = static_cast<std::size_t>(
      std::llround(static_cast<double>(in_len) * target_rate / in_rate));

  AudioBuffer out;
  out.sample_rate = target_rate;
  out.samples.resize(out_len, 0.0);
  const double step = in_rate / target_rate;
  for (std::size_t m = 0; m < out_len; ++m) {
    const double t = m * step;
    const auto k0 = static_cast<long long>(std::ceil(t - half));
    const auto k1 = static_cast<long long>(std::floor(t + half));
    double acc = 0.0;
    for (long long k = std::max<long long>(k0, 0);
         k <= std::min<long long>(k1, static_cast<long long>(in_len) - 1);
         ++k) {
      const double u = k - t;
      const double w = blackman_at(0.5 + 0.5 * u / half);
      acc += in.samples[static_cast<std::size_t>(k)] * 2.0 * cutoff *
             sinc(2.0 * cutoff * u) * w;
    }
    out.samples[m] = acc;
  }
  return out;
}

std::vector<double> leaky_integrate(std::span<const double> x, double coeff) {
  std::vector<double> y(x.size());
  double prev = 0.0;
  for (std::size_t n = 0; n < x.size(); ++n) {
    prev = x[n] + coeff * prev;
    y[n] = prev;
  }
  return y;
}

std::vector<double> fir_filter(std::span<const double> x,
                               std::span<const double> a) {
  std::vector<double> y(x.size(), 0.0);
  for (std::size_t n = 0; n < x.size(); ++n) {
    double acc = 0.0;
    const std::size_t kmax = std::min(a.size() - 1, n);
    for (std::size_t k = 0; k <= kmax; ++k) acc += a[k] * x[n - k];
    y[n] = acc;
  }
  return y;
}

double median(std::vector<double> v) {
  if (v.empty()) throw std::invalid_argument("median: empty input");
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double percentile(std::vector<double> v, double p) {
  if (v.empty()) throw std::invalid_argument("percentile: empty input");
  std::sort(v.begin(), v.end());
  const double idx = p / 100.0 * (v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(idx));
  const auto hi = static_cast<std::size_t>(std::ceil(idx));
  const double frac = idx - lo;
  return v[lo] * (1.0 - frac) + v[hi] * frac;
}

double parabolic_offset(double ym1, double y0, double yp1) {
  const double denom = ym1 - 2.0 * y0 + yp1;
  if (std::abs(denom) < 1e-30) return 0.0;
  const double off = 0.5 * (ym1 - yp1) / denom;
  return std::clamp(off, -1.0, 1.0);
}

}  // namespace vf
