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

#ifndef VOICEFEAT_LP_HPP
#define VOICEFEAT_LP_HPP

#include <span>
#include <vector>

#include "voicefeat/common.hpp"

namespace vf {

/// Autocorrelation-method linear prediction via Levinson-Durbin.
/// Returns the analysis filter A(z) = 1 + a1 z^-1 + ... + ap z^-p as
/// [1, a1, ..., ap]; the corresponding synthesis filter is minimum-phase.
/// Requires frame.size() > 3 * order; throws DegenerateInput on a singular
/// autocorrelation (e.g. an all-zero frame).
std::vector<double> lp_coefficients(std::span<const double> frame, int order);

/// LP residual of the whole signal, computed from 25 ms Hann-windowed
/// autocorrelation LP frames with 50% overlap. Regions where LP fails are
/// left at zero.
std::vector<double> lp_residual(std::span<const double> x, int sample_rate,
                                int order);

}  // namespace vf

#endif  // VOICEFEAT_LP_HPP
