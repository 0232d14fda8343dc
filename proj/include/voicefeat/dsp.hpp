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

#ifndef VOICEFEAT_DSP_HPP
#define VOICEFEAT_DSP_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "voicefeat/common.hpp"

namespace vf {

/// Classic Blackman window (a0=0.42, a1=0.5, a2=0.08). Length must be odd
/// and >= 3 so a center sample exists.
std::vector<double> blackman_window(std::size_t length);

/// Nearest odd integer >= round(x), used for frame lengths.
std::size_t odd_length(double x);

std::size_t next_pow2(std::size_t n);

/// In-place radix-2 complex FFT; a.size() must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& a);

/// |X(k)| for k = 0..nfft/2, zero-padding x to nfft (power of two).
std::vector<double> magnitude_spectrum(std::span<const double> x,
                                       std::size_t nfft);

/// Windowed-sinc resampling to target_rate. Identity rate is a bitwise
/// pass-through. Stopband of the Blackman-windowed kernel is ~74 dB.
AudioBuffer resample(const AudioBuffer& in, int target_rate);

/// y[n] = x[n] + coeff * y[n-1]
std::vector<double> leaky_integrate(std::span<const double> x,
                                    double coeff = 0.99);

/// FIR inverse filter: e[n] = sum_k a[k] * x[n-k], a[0] == 1, zeros before
/// the start of x. Output has the same length as x.
std::vector<double> fir_filter(std::span<const double> x,
                               std::span<const double> a);

double median(std::vector<double> v);  // by value: sorts a copy

/// Linear-interpolated percentile, p in [0,100].
double percentile(std::vector<double> v, double p);

/// Refine a discrete peak position by fitting a parabola through
/// (-1,ym1) (0,y0) (1,yp1); returns the vertex offset clamped to [-1,1].
double parabolic_offset(double ym1, double y0, double yp1);

}  // namespace vf

#endif  // VOICEFEAT_DSP_HPP
