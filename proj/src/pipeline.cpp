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

#include "voicefeat/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "voicefeat/dsp.hpp"
#include "voicefeat/frames.hpp"
#include "voicefeat/glottal_features.hpp"
#include "voicefeat/iaif.hpp"
#include "voicefeat/mel.hpp"
#include "voicefeat/prosody.hpp"
#include "voicefeat/speech_features.hpp"

namespace vf {

const std::array<std::string, kNumFeatures>& feature_names() {
  static const std::array<std::string, kNumFeatures> names = {
      "S_Bal1", "S_Bal2", "S_Bal3", "S_CoG",  "S_HNR",
      "S_Fm",   "G_Fg",   "G_Bw",   "G_minGCI", "G_Bal1",
      "G_Bal2", "G_Bal3", "G_CoG",  "P_DeltaF0", "P_DeltaE"};
  return names;
}

PipelineConfig load_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw FormatError("cannot open config: " + path);
  PipelineConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw FormatError("config line " + std::to_string(lineno) +
                        ": expected key=value");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "target_rate") cfg.target_rate = std::stoi(value);
      else if (key == "f0_min") cfg.f0_min_hz = std::stod(value);
      else if (key == "f0_max") cfg.f0_max_hz = std::stod(value);
      else if (key == "voicing_threshold") cfg.voicing_threshold = std::stod(value);
      else if (key == "lp_order_vt") cfg.lp_order_vt = std::stoi(value);
      else if (key == "bins") cfg.n_bins = std::stoi(value);
      else throw FormatError("config: unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw FormatError("config: bad value for '" + key + "'");
    }
  }
  return cfg;
}

FileFeatures extract_file_features(const AudioBuffer& raw,
                                   const PipelineConfig& config) {
  FileFeatures out;

  AudioBuffer buf = raw;
  double peak = 0.0;
  for (double v : buf.samples) peak = std::max(peak, std::abs(v));
  if (peak > 0.0) {
    for (double& v : buf.samples) v /= peak;
  }
  if (buf.sample_rate != config.target_rate) {
    buf = resample(buf, config.target_rate);
  }

  PitchParams pp;
  pp.f0_min_hz = config.f0_min_hz;
  pp.f0_max_hz = config.f0_max_hz;
  pp.voicing_threshold = config.voicing_threshold;
  const PitchTrack pitch = track_pitch(buf, pp);
  if (!pitch.any_voiced()) return out;

  const GciSequence gcis = detect_gci(buf, pitch);
  out.gci_count = static_cast<int>(gcis.instants.size());
  if (gcis.instants.empty()) return out;

  const std::vector<AnalysisFrame> speech_frames =
      extract_frames(buf, gcis, pitch, FrameKind::FixedLength30ms);
  const IaifResult iaif =
      iaif_analyze(buf, gcis, pitch, config.lp_order_vt);
  const std::vector<std::optional<ProsodyFeatures>> prosody =
      prosody_features(speech_frames, pitch);

  std::map<std::size_t, std::size_t> glottal_by_gci;
  for (std::size_t i = 0; i < iaif.frames.size(); ++i) {
    glottal_by_gci[iaif.frames[i].center_gci] = i;
  }

  const MelFilterbank fb = MelFilterbank::make(24, buf.sample_rate);

  for (std::size_t i = 0; i < speech_frames.size(); ++i) {
    const AnalysisFrame& frame = speech_frames[i];
    const auto git = glottal_by_gci.find(frame.center_gci);
    if (git == glottal_by_gci.end() || !prosody[i].has_value() ||
        frame.f0_hz <= 0.0) {
      ++out.dropped;
      continue;
    }
    const GlottalSourceFrame& gframe = iaif.frames[git->second];

    FeatureRow row;
    row.gci = frame.center_gci;
    row.frame_index = static_cast<int>(out.rows.size());
    try {
      const std::vector<double> pe = perceptive_energies(frame.samples, fb);
      const SpectralBalances bal = spectral_balances(pe);
      const GlottalFormant gf = glottal_formant(gframe, buf.sample_rate);
      const GlottalSpectral gs = glottal_spectral_features(gframe, fb);
      row.values = {bal.bal1,
                    bal.bal2,
                    bal.bal3,
                    spectral_centroid(frame.samples, buf.sample_rate),
                    hnr_db(frame.raw, buf.sample_rate, frame.f0_hz),
                    max_voiced_frequency(frame.samples, buf.sample_rate,
                                         frame.f0_hz)
                        .fm_hz,
                    gf.fg_hz,
                    gf.bw_hz,
                    min_at_gci(gframe, buf.sample_rate),
                    gs.bal.bal1,
                    gs.bal.bal2,
                    gs.bal.bal3,
                    gs.cog_hz,
                    prosody[i]->delta_f0_hz,
                    prosody[i]->delta_e_db};
    } catch (const DegenerateInput&) {
      ++out.dropped;
      continue;
    }
    bool finite = true;
    for (double v : row.values) finite &= std::isfinite(v);
    if (!finite) {
      ++out.dropped;
      continue;
    }
    out.rows.push_back(row);
  }
  return out;
}

std::string feature_table_header() {
  std::string header = "file_id,frame_index,label";
  for (const std::string& name : feature_names()) header += "," + name;
  return header + "\n";
}

std::string feature_row_csv(const std::string& file_id, const FeatureRow& row,
                            const std::string& label) {
  std::ostringstream os;
  os << file_id << "," << row.frame_index << "," << label;
  char buf[40];
  for (double v : row.values) {
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    os << "," << buf;
  }
  os << "\n";
  return os.str();
}

LabeledDataset read_feature_table(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw FormatError("cannot open feature table: " + path);
  std::string line;
  if (!std::getline(is, line)) throw FormatError("empty feature table");

  auto split = [](const std::string& s) {
    std::vector<std::string> fields;
    std::stringstream ss(s);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
  };
  const std::vector<std::string> header = split(line);
  if (header.size() != 3 + kNumFeatures || header[0] != "file_id") {
    throw FormatError("feature table: unexpected header");
  }

  LabeledDataset ds;
  ds.feature_names.assign(header.begin() + 3, header.end());
  std::map<std::string, int> label_ids;  // first label seen -> 0
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::vector<std::string> fields = split(line);
    if (fields.size() != 3 + kNumFeatures) {
      throw FormatError("feature table line " + std::to_string(lineno) +
                        ": wrong field count");
    }
    const std::string& label = fields[2];
    auto [it, inserted] = label_ids.try_emplace(
        label, static_cast<int>(label_ids.size()));
    if (label_ids.size() > 2) {
      throw FormatError("feature table: more than two class labels");
    }
    std::vector<double> values(kNumFeatures);
    for (int f = 0; f < kNumFeatures; ++f) {
      values[f] = std::stod(fields[3 + f]);
    }
    ds.values.push_back(std::move(values));
    ds.labels.push_back(it->second);
  }
  for (const auto& [label, id] : label_ids) ds.class_names[id] = label;
  if (label_ids.size() == 1) ds.class_names[1] = "";
  return ds;
}

}  // namespace vf
