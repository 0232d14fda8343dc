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

#include "voicefeat/synth.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>

#include "voicefeat/wav.hpp"

namespace vf {

namespace {

constexpr double kPi = std::numbers::pi;

// Flow derivative of a Rosenberg pulse over one period of t_samples.
// Opening phase: rising half-cosine flow; closing phase: cosine quarter-wave
// whose derivative reaches its negative extreme at closure.
void add_pulse(std::vector<double>& out, std::size_t start, double t_samples,
               double open_quotient, double sharpness, std::size_t& gci_index) {
  const double to = open_quotient * t_samples;           // open phase
  const double tn_frac = 0.45 - 0.35 * sharpness;        // closing fraction
  const double tn = std::max(1.5, tn_frac * to);
  const double tp = std::max(1.5, to - tn);

  const auto len = static_cast<std::size_t>(std::floor(tp + tn));
  double min_val = 0.0;
  std::size_t min_at = start;
  for (std::size_t i = 0; i <= len && start + i < out.size(); ++i) {
    const double t = static_cast<double>(i);
    double v;
    if (t < tp) {
      v = 0.5 * (kPi / tp) * std::sin(kPi * t / tp);
    } else {
      v = -(kPi / (2.0 * tn)) * std::sin(kPi * (t - tp) / (2.0 * tn));
    }
    out[start + i] += v;
    if (v < min_val) {
      min_val = v;
      min_at = start + i;
    }
  }
  gci_index = min_at;
}

std::vector<double> apply_tract(
    const std::vector<double>& x,
    const std::vector<std::pair<double, double>>& poles, int sample_rate) {
  std::vector<double> y = x;
  for (const auto& [freq, bw] : poles) {
    const double r = std::exp(-kPi * bw / sample_rate);
    if (!(r < 1.0) || freq <= 0.0 || freq >= sample_rate / 2.0) {
      throw std::invalid_argument("synth_vowel: unstable or invalid pole");
    }
    const double a1 = -2.0 * r * std::cos(2.0 * kPi * freq / sample_rate);
    const double a2 = r * r;
    double y1 = 0.0, y2 = 0.0;
    for (double& v : y) {
      const double out = v - a1 * y1 - a2 * y2;
      y2 = y1;
      y1 = out;
      v = out;
    }
  }
  return y;
}

}  // namespace

SynthResult synth_vowel(const SynthSpec& spec) {
  if (spec.duration_s <= 0.0 || spec.sample_rate <= 0) {
    throw std::invalid_argument("synth_vowel: bad duration or rate");
  }
  if (spec.f0_hz < 60.0 || spec.f0_hz > 400.0) {
    throw std::invalid_argument("synth_vowel: f0 outside [60, 400] Hz");
  }
  const double sr = spec.sample_rate;
  const auto n = static_cast<std::size_t>(std::lround(spec.duration_s * sr));

  std::mt19937 rng(spec.seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);

  SynthResult result;
  result.source.sample_rate = spec.sample_rate;
  result.source.samples.assign(n, 0.0);

  double pos = 0.0;
  while (true) {
    const double t_s = pos / sr;
    double f0 = spec.f0_hz +
                spec.vibrato_depth_hz *
                    std::sin(2.0 * kPi * spec.vibrato_rate_hz * t_s);
    if (spec.jitter_pct > 0.0) {
      f0 *= 1.0 + spec.jitter_pct / 100.0 * uni(rng);
    }
    const double period = sr / f0;
    if (pos + period >= static_cast<double>(n)) break;
    std::size_t gci = 0;
    add_pulse(result.source.samples, static_cast<std::size_t>(std::lround(pos)),
              period, spec.open_quotient, spec.closure_sharpness, gci);
    result.gcis.instants.push_back(gci);
    pos += period;
  }

  result.speech.sample_rate = spec.sample_rate;
  result.speech.samples =
      apply_tract(result.source.samples, spec.tract_poles, spec.sample_rate);

  if (std::isfinite(spec.hnr_db)) {
    double power = 0.0;
    for (double v : result.speech.samples) power += v * v;
    power /= static_cast<double>(n);
    const double noise_power = power / std::pow(10.0, spec.hnr_db / 10.0);
    const double sigma = std::sqrt(noise_power);
    std::normal_distribution<double> gauss(0.0, sigma);
    for (double& v : result.speech.samples) v += gauss(rng);
  }
  return result;
}

std::vector<CorpusFile> synth_corpus(const std::string& out_dir,
                                     int n_per_class, uint32_t seed) {
  if (n_per_class < 10) {
    throw std::invalid_argument("synth_corpus: n_per_class >= 10");
  }
  std::filesystem::create_directories(out_dir);
  std::mt19937 rng(seed);
  auto uni = [&](double lo, double hi) {
    return lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  };

  std::vector<CorpusFile> files;
  for (int cls = 0; cls < 2; ++cls) {
    const bool normal = cls == 0;
    for (int i = 0; i < n_per_class; ++i) {
      SynthSpec spec;
      spec.sample_rate = 16000;
      spec.duration_s = 1.0;
      spec.seed = static_cast<uint32_t>(rng());
      spec.f0_hz = uni(100.0, 200.0);
      spec.open_quotient = uni(0.5, 0.7);
      spec.tract_poles = {{uni(600.0, 800.0), uni(80.0, 120.0)},
                          {uni(1100.0, 1300.0), uni(90.0, 140.0)}};
      if (normal) {
        spec.closure_sharpness = uni(0.8, 1.0);
        spec.hnr_db = uni(25.0, 35.0);
        spec.jitter_pct = uni(0.0, 0.3);
      } else {
        spec.closure_sharpness = uni(0.0, 0.3);
        spec.hnr_db = uni(2.0, 12.0);
        spec.jitter_pct = uni(1.0, 3.0);
      }

      const SynthResult vowel = synth_vowel(spec);
      char name[64];
      std::snprintf(name, sizeof(name), "%s_%03d.wav",
                    normal ? "normal" : "pathological", i);
      const std::string path =
          (std::filesystem::path(out_dir) / name).string();

      AudioBuffer scaled = vowel.speech;
      double peak = 0.0;
      for (double v : scaled.samples) peak = std::max(peak, std::abs(v));
      if (peak > 0.0) {
        for (double& v : scaled.samples) v *= 0.9 / peak;
      }
      save_wav(path, scaled);
      files.push_back({path, normal ? "normal" : "pathological", spec.f0_hz,
                       spec.hnr_db, spec.closure_sharpness});
    }
  }

  std::ofstream manifest(std::filesystem::path(out_dir) / "manifest.csv");
  manifest << "path,label,true_f0,hnr_target,sharpness\n";
  char line[256];
  for (const CorpusFile& f : files) {
    std::snprintf(line, sizeof(line), "%s,%s,%.6g,%.6g,%.6g\n",
                  f.path.c_str(), f.label.c_str(), f.true_f0, f.hnr_target_db,
                  f.sharpness);
    manifest << line;
  }
  return files;
}

}  // namespace vf
