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

// End-to-end acceptance checks. Each numbered criterion prints exactly one
// PASS/FAIL line; the process exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mi_oracle.hpp"
#include "voicefeat/commands.hpp"
#include "voicefeat/dsp.hpp"
#include "voicefeat/frames.hpp"
#include "voicefeat/glottal_features.hpp"
#include "voicefeat/iaif.hpp"
#include "voicefeat/infotheory.hpp"
#include "voicefeat/pipeline.hpp"
#include "voicefeat/pitch.hpp"
#include "voicefeat/speech_features.hpp"
#include "voicefeat/synth.hpp"
#include "voicefeat/wav.hpp"

using namespace vf;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& what) {
  std::printf("criterion %2d: %s - %s\n", criterion, ok ? "PASS" : "FAIL",
              what.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

DiscretizedFeature wrap_bins(std::vector<int> bins, int n_bins) {
  DiscretizedFeature f;
  f.bins = std::move(bins);
  f.n_bins = n_bins;
  f.bin_edges.resize(n_bins + 1);
  for (int b = 0; b <= n_bins; ++b) f.bin_edges[b] = b;
  return f;
}

std::vector<double> blackman_frame(const std::vector<double>& x,
                                   std::size_t start, std::size_t len) {
  const std::vector<double> w = blackman_window(len);
  std::vector<double> frame(len);
  for (std::size_t i = 0; i < len; ++i) frame[i] = x[start + i] * w[i];
  return frame;
}

// 1. histogram estimators vs the independent dense-table oracle
void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(2026);
  bool ok = true;
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<std::size_t> n_dist(50, 1000);
    std::uniform_int_distribution<int> bin_dist(2, 8);
    const std::size_t n = n_dist(rng);
    const int ni = bin_dist(rng);
    const int nj = bin_dist(rng);
    std::vector<int> bi(n), bj(n), labels(n);
    std::uniform_int_distribution<int> di(0, ni - 1), dj(0, nj - 1), dc(0, 1);
    for (std::size_t r = 0; r < n; ++r) {
      labels[r] = dc(rng);
      bi[r] = di(rng);
      bj[r] = dc(rng) ? dj(rng) : labels[r] * (nj - 1);
    }
    labels[0] = 0;
    labels[1] = 1;

    std::vector<std::size_t> counts(2, 0);
    for (int l : labels) ++counts[l];
    ok &= std::abs(class_entropy(labels) -
                   mi_oracle::entropy_of_counts(counts)) < 1e-12;
    const DiscretizedFeature xi = wrap_bins(bi, ni);
    const DiscretizedFeature xj = wrap_bins(bj, nj);
    ok &= std::abs(mutual_information(xi, labels) -
                   mi_oracle::mi(bi, labels, ni)) < 1e-12;
    const PairMi pm = pairwise_joint_mi(xi, xj, labels);
    ok &= std::abs(pm.joint_bits -
                   mi_oracle::joint_mi(bi, bj, labels, ni, nj)) < 1e-12;
    ok &= std::abs(pm.redundancy_bits -
                   mi_oracle::redundancy(bi, bj, labels, ni, nj)) < 1e-12;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  ok &= secs < 10.0;
  report(1, ok, "MI estimators match the direct-summation oracle (1e-12)");
}

// 2. joint = Ii + Ij - redundancy with same-path floating point
void criterion_2() {
  std::mt19937 rng(5);
  bool ok = true;
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t n = 800;
    LabeledDataset ds;
    ds.feature_names = {"f0", "f1", "f2", "f3"};
    std::uniform_real_distribution<double> du(0.0, 1.0);
    for (std::size_t r = 0; r < n; ++r) {
      const int label = static_cast<int>(r % 2);
      ds.labels.push_back(label);
      ds.values.push_back({du(rng) + 0.3 * label, du(rng), du(rng) * label,
                           du(rng)});
    }
    const MiReport rep = build_report(ds, 16);  // throws on identity breach
    // re-derive the identity from the raw estimators as well
    std::vector<DiscretizedFeature> disc;
    for (std::size_t f = 0; f < 4; ++f) {
      std::vector<double> col(n);
      for (std::size_t r = 0; r < n; ++r) col[r] = ds.values[r][f];
      disc.push_back(discretize(col, 16));
    }
    for (std::size_t i = 0; i < 4; ++i) {
      const double ii = mutual_information(disc[i], ds.labels);
      for (std::size_t j = i + 1; j < 4; ++j) {
        const double ij = mutual_information(disc[j], ds.labels);
        const PairMi pm = pairwise_joint_mi(disc[i], disc[j], ds.labels);
        ok &= pm.redundancy_bits == ii + ij - pm.joint_bits;
      }
    }
    ok &= rep.joint_rel.size() == 4;
  }
  report(2, ok, "joint/redundancy identity holds exactly in every report");
}

// 3. synergy and redundancy sign conventions
void criterion_3() {
  std::vector<int> bi, bj, labels;
  for (int rep = 0; rep < 50; ++rep) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        bi.push_back(a);
        bj.push_back(b);
        labels.push_back(a ^ b);
      }
    }
  }
  const DiscretizedFeature xi = wrap_bins(bi, 2);
  const DiscretizedFeature xj = wrap_bins(bj, 2);
  const PairMi xorpair = pairwise_joint_mi(xi, xj, labels);
  bool ok = std::abs(class_entropy(labels) - 1.0) < 1e-12 &&
            std::abs(xorpair.joint_bits - 1.0) < 1e-12 &&
            std::abs(xorpair.redundancy_bits + 1.0) < 1e-12;

  std::mt19937 rng(9);
  std::vector<int> b(1000), l(1000);
  std::uniform_int_distribution<int> d6(0, 5), dc(0, 1);
  for (std::size_t r = 0; r < 1000; ++r) {
    l[r] = dc(rng);
    b[r] = dc(rng) ? d6(rng) : l[r];
  }
  const DiscretizedFeature x = wrap_bins(b, 6);
  const double intrinsic = mutual_information(x, l);
  const PairMi dup = pairwise_joint_mi(x, x, l);
  ok &= std::abs(dup.redundancy_bits - intrinsic) < 1e-12;
  report(3, ok, "xor pair is pure synergy; duplicate is pure redundancy");
}

// 4. class entropy for the 32000/107000 split
void criterion_4() {
  const std::vector<std::size_t> counts = {32000, 107000};
  const double h = class_entropy_from_counts(counts);
  // direct evaluation of the binary entropy gives 0.778387 bits
  const bool ok = std::abs(h - 0.778387349379) < 0.0001;
  char buf[96];
  std::snprintf(buf, sizeof(buf),
                "H(C) for a 32000/107000 split = %.6f bits", h);
  report(4, ok, buf);
}

// 5. spectral balances partition the energy
void criterion_5() {
  const MelFilterbank fb = MelFilterbank::make(24, 16000);
  std::mt19937 rng(11);
  std::normal_distribution<double> gauss(0.0, 0.5);
  const std::vector<double> w = blackman_window(481);
  bool ok = true;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> frame(481);
    for (std::size_t i = 0; i < frame.size(); ++i) frame[i] = gauss(rng) * w[i];
    const SpectralBalances b = spectral_balances(perceptive_energies(frame, fb));
    ok &= std::abs(b.bal1 + b.bal2 + b.bal3 - 1.0) < 1e-9;
  }
  const std::vector<double> uniform(24, 1.0);
  const SpectralBalances u = spectral_balances(uniform);
  ok &= u.bal1 == 4.0 / 24.0 && u.bal2 == 8.0 / 24.0 && u.bal3 == 12.0 / 24.0;
  report(5, ok, "balances sum to 1 on 1000 random frames; uniform case exact");
}

// 6. Fm at a constructed harmonic/noise boundary
void criterion_6() {
  const auto t0 = std::chrono::steady_clock::now();
  const int sr = 16000;
  const std::size_t frame_len = 1601;
  int hits = 0, total = 0;
  for (uint32_t seed = 0; seed < 10; ++seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const std::size_t n = 8192;
    std::vector<double> sig(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (int k = 1; k <= 20; ++k) {
        sig[i] += std::cos(2.0 * std::numbers::pi * 100.0 * k * i / sr);
      }
    }
    // white noise restricted to the band above 2 kHz
    std::vector<std::complex<double>> noise(n);
    for (auto& v : noise) v = {gauss(rng), 0.0};
    fft_inplace(noise);
    const std::size_t cut = static_cast<std::size_t>(2000.0 * n / sr);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t f = i <= n / 2 ? i : n - i;
      if (f < cut) noise[i] = 0.0;
    }
    for (auto& v : noise) v = std::conj(v);
    fft_inplace(noise);
    for (auto& v : noise) v = std::conj(v) / static_cast<double>(n);
    double ps = 0.0, pn = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      ps += sig[i] * sig[i];
      pn += noise[i].real() * noise[i].real();
    }
    const double scale = std::sqrt(ps / pn);  // 0 dB band-power ratio
    for (std::size_t i = 0; i < n; ++i) sig[i] += scale * noise[i].real();

    for (std::size_t start = 0; start + frame_len <= n; start += 655) {
      const FmResult fm =
          max_voiced_frequency(blackman_frame(sig, start, frame_len), sr, 100.0);
      ++total;
      if (!fm.low_confidence && std::abs(fm.fm_hz - 2000.0) <= 100.0) ++hits;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  const double rate = static_cast<double>(hits) / total;
  char buf[96];
  std::snprintf(buf, sizeof(buf),
                "Fm = 2000 +- 100 Hz on %.0f%% of %d noisy harmonic frames",
                100.0 * rate, total);
  report(6, rate >= 0.9 && secs < 30.0, buf);
}

// 7. spectral center of gravity on known tones
void criterion_7() {
  const int sr = 16000;
  const std::vector<double> w = blackman_window(481);
  auto tone_frame = [&](const std::vector<double>& freqs) {
    std::vector<double> frame(481, 0.0);
    for (std::size_t i = 0; i < frame.size(); ++i) {
      for (double f : freqs) {
        frame[i] += std::cos(2.0 * std::numbers::pi * f * i / sr);
      }
      frame[i] *= w[i];
    }
    return frame;
  };
  const double c1 = spectral_centroid(tone_frame({1000.0}), sr);
  const double c2 = spectral_centroid(tone_frame({1000.0, 3000.0}), sr);
  const bool ok = std::abs(c1 - 1000.0) <= 15.0 && std::abs(c2 - 2000.0) <= 30.0;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "CoG: 1 kHz tone -> %.1f, pair -> %.1f", c1,
                c2);
  report(7, ok, buf);
}

// 8. measured HNR ordering across synthesis targets
void criterion_8() {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> medians;
  for (double target : {inf, 20.0, 10.0, 0.0}) {
    SynthSpec spec;
    spec.f0_hz = 140.0;
    spec.tract_poles = {{700.0, 90.0}, {1200.0, 110.0}};
    spec.hnr_db = target;
    spec.seed = 77;
    const SynthResult v = synth_vowel(spec);
    const PitchTrack track = track_pitch(v.speech);
    const GciSequence gcis = detect_gci(v.speech, track);
    const std::vector<AnalysisFrame> frames =
        extract_frames(v.speech, gcis, track, FrameKind::FixedLength30ms);
    std::vector<double> hnrs;
    for (const AnalysisFrame& f : frames) {
      hnrs.push_back(hnr_db(f.raw, v.speech.sample_rate, f.f0_hz));
    }
    medians.push_back(hnrs.empty() ? -99.0 : median(std::move(hnrs)));
  }
  bool ok = medians.size() == 4;
  for (std::size_t i = 1; i < medians.size(); ++i) {
    ok &= medians[i] < medians[i - 1];
  }
  ok &= std::abs(medians[3]) <= 1.5;
  char buf[120];
  std::snprintf(buf, sizeof(buf),
                "median HNR at {inf,20,10,0} dB targets: %.1f %.1f %.1f %.1f",
                medians[0], medians[1], medians[2], medians[3]);
  report(8, ok, buf);
}

// 9. GCI accuracy against true excitation instants
void criterion_9() {
  bool ok = true;
  double worst = 1.0;
  for (double f0 : {80.0, 120.0, 200.0}) {
    SynthSpec spec;
    spec.f0_hz = f0;
    spec.tract_poles = {{700.0, 90.0}, {1200.0, 110.0}};
    const SynthResult v = synth_vowel(spec);
    const PitchTrack track = track_pitch(v.speech);
    const GciSequence gcis = detect_gci(v.speech, track);
    if (gcis.instants.empty()) {
      ok = false;
      continue;
    }
    std::size_t close = 0;
    for (std::size_t g : gcis.instants) {
      double best = 1e9;
      for (std::size_t t : v.gcis.instants) {
        best = std::min(best, std::abs(static_cast<double>(g) -
                                       static_cast<double>(t)));
      }
      if (best <= 4.0) ++close;  // 0.25 ms at 16 kHz
    }
    const double rate = static_cast<double>(close) / gcis.instants.size();
    worst = std::min(worst, rate);
    ok &= rate >= 0.95;
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf),
                "GCIs within 0.25 ms of truth (worst f0): %.1f%%",
                100.0 * worst);
  report(9, ok, buf);
}

// 10. IAIF estimate vs true glottal source
void criterion_10() {
  bool ok = true;
  double worst = 1.0;
  for (int formants : {1, 2}) {
    SynthSpec spec;
    spec.f0_hz = 120.0;
    spec.tract_poles = {{700.0, 90.0}};
    if (formants == 2) spec.tract_poles.push_back({1200.0, 110.0});
    const SynthResult v = synth_vowel(spec);
    const PitchTrack track = track_pitch(v.speech);
    const GciSequence gcis = detect_gci(v.speech, track);
    const IaifResult iaif = iaif_analyze(v.speech, gcis, track);
    if (iaif.frames.empty()) {
      ok = false;
      continue;
    }
    std::size_t good = 0;
    for (const GlottalSourceFrame& frame : iaif.frames) {
      const std::size_t half = frame.samples.size() / 2;
      const std::vector<double> w = blackman_window(frame.samples.size());
      double num = 0.0, ea = 0.0, eb = 0.0;
      for (std::size_t i = 0; i < frame.samples.size(); ++i) {
        const double t = v.source.samples[frame.center_gci - half + i] * w[i];
        num += frame.samples[i] * t;
        ea += frame.samples[i] * frame.samples[i];
        eb += t * t;
      }
      const double ncc =
          ea > 0.0 && eb > 0.0 ? num / std::sqrt(ea * eb) : 0.0;
      if (ncc >= 0.8) ++good;
    }
    const double rate = static_cast<double>(good) / iaif.frames.size();
    worst = std::min(worst, rate);
    ok &= rate >= 0.8;
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf),
                "frames with source NCC >= 0.8 (worst tract): %.1f%%",
                100.0 * worst);
  report(10, ok, buf);
}

// 11. minGCI separates abrupt from smooth closure
void criterion_11() {
  SynthSpec abrupt;
  abrupt.f0_hz = 120.0;
  abrupt.closure_sharpness = 1.0;
  SynthSpec smooth = abrupt;
  smooth.closure_sharpness = 0.0;
  const SynthResult va = synth_vowel(abrupt);
  const SynthResult vs = synth_vowel(smooth);
  const int sr = abrupt.sample_rate;
  const std::size_t len = odd_length(2.0 * sr / 120.0);
  const std::size_t half = len / 2;
  const std::vector<double> w = blackman_window(len);

  auto frame_at = [&](const SynthResult& v, std::size_t g) {
    GlottalSourceFrame frame;
    frame.f0_hz = 120.0;
    frame.center_gci = g;
    frame.samples.resize(len);
    for (std::size_t i = 0; i < len; ++i) {
      frame.samples[i] = v.source.samples[g - half + i] * w[i];
    }
    return frame;
  };

  std::size_t pairs = 0, deeper = 0;
  const std::size_t n =
      std::min(va.gcis.instants.size(), vs.gcis.instants.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t ga = va.gcis.instants[i];
    const std::size_t gs = vs.gcis.instants[i];
    if (ga < half || ga + half >= va.source.samples.size()) continue;
    if (gs < half || gs + half >= vs.source.samples.size()) continue;
    const double ma = min_at_gci(frame_at(va, ga), sr);
    const double ms = min_at_gci(frame_at(vs, gs), sr);
    ++pairs;
    if (std::abs(ma) > std::abs(ms)) ++deeper;
  }
  const double rate = pairs ? static_cast<double>(deeper) / pairs : 0.0;
  char buf[96];
  std::snprintf(buf, sizeof(buf),
                "|minGCI| abrupt > smooth on %.1f%% of %zu frame pairs",
                100.0 * rate, pairs);
  report(11, pairs > 50 && rate >= 0.95, buf);
}

// 12. full pipeline: synth -> extract -> analyze
void criterion_12() {
  const auto t0 = std::chrono::steady_clock::now();
  const fs::path dir = fs::temp_directory_path() / "voicefeat_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  bool ok = true;

  ok &= cmd_synth((dir / "corpus").string(), 50, 123) == kExitOk;
  const std::string manifest = (dir / "corpus" / "manifest.csv").string();
  const std::string table = (dir / "features.csv").string();
  ok &= cmd_extract(manifest, table, "") == kExitOk;
  const std::string report_path = (dir / "report.json").string();
  ok &= cmd_analyze(table, report_path, 50) == kExitOk;

  // rerun must be byte-identical
  const std::string table2 = (dir / "features2.csv").string();
  const std::string report2 = (dir / "report2.json").string();
  ok &= cmd_extract(manifest, table2, "") == kExitOk;
  ok &= cmd_analyze(table2, report2, 50) == kExitOk;
  auto slurp = [](const std::string& p) {
    std::ifstream is(p, std::ios::binary);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
  };
  ok &= !slurp(table).empty() && slurp(table) == slurp(table2);
  ok &= !slurp(report_path).empty() && slurp(report_path) == slurp(report2);

  // ranking sanity on the report itself
  std::string top_msg = "report missing";
  try {
    const LabeledDataset ds = read_feature_table(table);
    const MiReport rep = build_report(ds, 50);
    ok &= rep.feature_names.size() == 15;
    std::vector<std::size_t> order(rep.intrinsic_rel.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return rep.intrinsic_rel[a] > rep.intrinsic_rel[b];
    });
    bool hnr_top = false, mingci_top = false;
    std::string names;
    for (std::size_t i = 0; i < 5 && i < order.size(); ++i) {
      const std::string& name = rep.feature_names[order[i]];
      names += (i ? "," : "") + name;
      hnr_top |= name == "S_HNR";
      mingci_top |= name == "G_minGCI";
    }
    ok &= hnr_top && mingci_top;
    top_msg = "top-5: " + names;
  } catch (const std::exception& e) {
    ok = false;
    top_msg = e.what();
  }

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  ok &= secs < 300.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "end-to-end in %.0f s, deterministic; %s",
                secs, top_msg.c_str());
  report(12, ok, buf);
}

// 13. prosody deltas: vibrato depth and gain invariance
void criterion_13() {
  SynthSpec spec;
  spec.f0_hz = 150.0;
  spec.vibrato_depth_hz = 5.0;
  spec.vibrato_rate_hz = 4.0;
  spec.tract_poles = {{700.0, 90.0}};
  const SynthResult v = synth_vowel(spec);

  const FileFeatures a = extract_file_features(v.speech);
  AudioBuffer gained = v.speech;
  for (double& s : gained.samples) s *= 3.0;
  const FileFeatures b = extract_file_features(gained);

  bool ok = !a.rows.empty() && a.rows.size() == b.rows.size();
  double max_df0 = 0.0;
  for (const FeatureRow& row : a.rows) {
    max_df0 = std::max(max_df0, std::abs(row.values[13]));  // P_DeltaF0
  }
  ok &= std::abs(max_df0 - 5.0) <= 1.0;
  double worst_de = 0.0;
  for (std::size_t i = 0; ok && i < a.rows.size(); ++i) {
    worst_de = std::max(worst_de, std::abs(a.rows[i].values[14] -
                                           b.rows[i].values[14]));
  }
  ok &= worst_de <= 1e-9;
  char buf[120];
  std::snprintf(buf, sizeof(buf),
                "max |dF0| = %.2f Hz; gain x3 moves dE by at most %.2g dB",
                max_df0, worst_de);
  report(13, ok, buf);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  criterion_13();
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 13 criteria passed\n");
  return 0;
}
