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

#include "voicefeat/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "voicefeat/dsp.hpp"
#include "voicefeat/frames.hpp"
#include "voicefeat/glottal_features.hpp"
#include "voicefeat/iaif.hpp"
#include "voicefeat/infotheory.hpp"
#include "voicefeat/speech_features.hpp"
#include "voicefeat/synth.hpp"
#include "voicefeat/wav.hpp"

namespace vf {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

}  // namespace

int cmd_extract(const std::string& manifest_path, const std::string& out_table,
                const std::string& config_path) {
  PipelineConfig config;
  if (!config_path.empty()) config = load_config(config_path);

  std::ifstream manifest(manifest_path);
  if (!manifest) {
    std::cerr << "error: cannot open manifest " << manifest_path << "\n";
    return kExitIo;
  }
  std::vector<std::pair<std::string, std::string>> entries;  // path, label
  std::string line;
  bool first = true;
  while (std::getline(manifest, line)) {
    if (line.empty()) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() < 2) {
      std::cerr << "error: manifest line needs at least path,label\n";
      return kExitData;
    }
    if (first && (fields[0] == "path" || fields[0] == "audio_path")) {
      first = false;
      continue;  // header
    }
    first = false;
    entries.emplace_back(fields[0], fields[1]);
  }

  std::ostringstream table;
  table << feature_table_header();
  int warnings = 0;
  std::size_t total_rows = 0;
  for (const auto& [path, label] : entries) {
    AudioBuffer buf;
    try {
      buf = load_audio(path);
    } catch (const FormatError& e) {
      std::cerr << "warning: skipping " << path << ": " << e.what() << "\n";
      ++warnings;
      continue;
    }
    const FileFeatures ff = extract_file_features(buf, config);
    std::cout << path << ": " << ff.gci_count << " GCIs, " << ff.rows.size()
              << " frames retained, " << ff.dropped << " dropped\n";
    if (ff.rows.empty()) {
      std::cerr << "warning: " << path << " contributed no frames\n";
      ++warnings;
    }
    const std::string id = stem_of(path);
    for (const FeatureRow& row : ff.rows) {
      table << feature_row_csv(id, row, label);
      ++total_rows;
    }
  }

  if (total_rows == 0) {
    std::cerr << "error: no frames extracted from any file\n";
    return kExitData;
  }
  std::ofstream os(out_table, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot write " << out_table << "\n";
    return kExitIo;
  }
  os << table.str();
  std::cout << "wrote " << total_rows << " rows to " << out_table
            << (warnings ? " (with warnings)" : "") << "\n";
  return kExitOk;
}

int cmd_analyze(const std::string& table_path, const std::string& out_report,
                int bins) {
  LabeledDataset ds;
  try {
    ds = read_feature_table(table_path);
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }

  MiReport report;
  try {
    report = build_report(ds, bins);
  } catch (const DegenerateInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }

  std::ofstream js(out_report, std::ios::binary);
  if (!js) {
    std::cerr << "error: cannot write " << out_report << "\n";
    return kExitIo;
  }
  js << report.to_json() << "\n";

  std::filesystem::path csv_path(out_report);
  csv_path.replace_extension(".csv");
  std::ofstream cs(csv_path, std::ios::binary);
  if (!cs) {
    std::cerr << "error: cannot write " << csv_path.string() << "\n";
    return kExitIo;
  }
  cs << report.to_csv_matrix();
  std::cout << "wrote " << out_report << " and " << csv_path.string() << "\n";
  return kExitOk;
}

int cmd_dump(const std::string& what, const std::string& audio_path,
             const std::string& out_path) {
  if (what != "pitch" && what != "gci" && what != "glottal" &&
      what != "spectrum") {
    std::cerr << "error: unknown dump kind '" << what
              << "' (expected pitch|gci|glottal|spectrum)\n";
    return kExitUsage;
  }
  AudioBuffer buf;
  try {
    buf = load_audio(audio_path);
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  PipelineConfig config;
  if (buf.sample_rate != config.target_rate) {
    buf = resample(buf, config.target_rate);
  }
  const double sr = buf.sample_rate;

  std::ostringstream os;
  const PitchTrack pitch = track_pitch(buf);

  if (what == "pitch") {
    os << "hop_index,time_s,f0_hz,voiced\n";
    char line[96];
    for (std::size_t h = 0; h < pitch.f0.size(); ++h) {
      std::snprintf(line, sizeof(line), "%zu,%.4f,%.4f,%d\n", h,
                    h * pitch.hop_size / sr, pitch.f0[h],
                    pitch.voiced[h] ? 1 : 0);
      os << line;
    }
  } else if (what == "gci") {
    const GciSequence gcis = detect_gci(buf, pitch);
    os << "index,sample,time_s\n";
    char line[96];
    for (std::size_t i = 0; i < gcis.instants.size(); ++i) {
      std::snprintf(line, sizeof(line), "%zu,%zu,%.6f\n", i, gcis.instants[i],
                    gcis.instants[i] / sr);
      os << line;
    }
  } else if (what == "glottal") {
    const GciSequence gcis = detect_gci(buf, pitch);
    const IaifResult iaif = iaif_analyze(buf, gcis, pitch);
    os << "frame_index,t_ms,value,min_marker\n";
    char line[96];
    for (std::size_t i = 0; i < iaif.frames.size(); ++i) {
      const GlottalSourceFrame& frame = iaif.frames[i];
      const double norm = frame.energy > 0.0 ? frame.energy : 1.0;
      const std::size_t center = frame.samples.size() / 2;
      std::size_t min_idx = 0;
      for (std::size_t s = 1; s < frame.samples.size(); ++s) {
        if (frame.samples[s] < frame.samples[min_idx]) min_idx = s;
      }
      for (std::size_t s = 0; s < frame.samples.size(); ++s) {
        std::snprintf(line, sizeof(line), "%zu,%.4f,%.8f,%d\n", i,
                      (static_cast<double>(s) - static_cast<double>(center)) *
                          1000.0 / sr,
                      frame.samples[s] / norm, s == min_idx ? 1 : 0);
        os << line;
      }
    }
  } else {  // spectrum
    const GciSequence gcis = detect_gci(buf, pitch);
    const std::vector<AnalysisFrame> frames =
        extract_frames(buf, gcis, pitch, FrameKind::FixedLength30ms);
    if (frames.empty()) {
      std::cerr << "error: no voiced frames to dump\n";
      return kExitData;
    }
    const AnalysisFrame& frame = frames[frames.size() / 2];
    const std::size_t nfft = next_pow2(2 * frame.samples.size());
    const std::vector<double> mag = magnitude_spectrum(frame.samples, nfft);
    const double df = sr / nfft;
    const FmResult fm = max_voiced_frequency(frame.samples, buf.sample_rate,
                                             frame.f0_hz);
    os << "kind,freq_hz,value\n";
    char line[96];
    for (std::size_t k = 0; k < mag.size(); ++k) {
      std::snprintf(line, sizeof(line), "bin,%.2f,%.4f\n", k * df,
                    20.0 * std::log10(std::max(mag[k], 1e-12)));
      os << line;
    }
    for (int k = 1; k * frame.f0_hz <= fm.fm_hz + frame.f0_hz / 4.0; ++k) {
      std::snprintf(line, sizeof(line), "harmonic,%.2f,0\n", k * frame.f0_hz);
      os << line;
    }
    std::snprintf(line, sizeof(line), "fm,%.2f,0\n", fm.fm_hz);
    os << line;
  }

  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitIo;
  }
  out << os.str();
  return kExitOk;
}

int cmd_synth(const std::string& out_dir, int n_per_class, uint32_t seed) {
  try {
    const auto files = synth_corpus(out_dir, n_per_class, seed);
    std::cout << "wrote " << files.size() << " files + manifest.csv to "
              << out_dir << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace vf
