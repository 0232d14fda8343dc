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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "voicefeat/commands.hpp"
#include "voicefeat/synth.hpp"
#include "voicefeat/wav.hpp"

using namespace vf;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  REQUIRE(is.good());
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

// one corpus + extraction shared across test cases
struct Workspace {
  fs::path dir;
  fs::path manifest;
  fs::path table;

  Workspace() {
    dir = fs::temp_directory_path() / "voicefeat_test_cli";
    fs::remove_all(dir);
    fs::create_directories(dir);
    REQUIRE(cmd_synth((dir / "corpus").string(), 10, 1) == kExitOk);
    manifest = dir / "corpus" / "manifest.csv";
    table = dir / "features.csv";
    REQUIRE(cmd_extract(manifest.string(), table.string(), "") == kExitOk);
  }
};

Workspace& workspace() {
  static Workspace ws;
  return ws;
}

}  // namespace

TEST_CASE("extract produces a full feature table") {
  Workspace& ws = workspace();
  std::ifstream is(ws.table);
  std::string header;
  std::getline(is, header);
  CHECK(header ==
        "file_id,frame_index,label,S_Bal1,S_Bal2,S_Bal3,S_CoG,S_HNR,S_Fm,"
        "G_Fg,G_Bw,G_minGCI,G_Bal1,G_Bal2,G_Bal3,G_CoG,P_DeltaF0,P_DeltaE");
  std::size_t rows = 0;
  for (std::string line; std::getline(is, line);) {
    if (line.empty()) continue;
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 17);
  }
  CHECK(rows >= 500);

  const LabeledDataset ds = read_feature_table(ws.table.string());
  CHECK(ds.n_features() == 15);
  CHECK(ds.n_records() == rows);
  std::array<std::size_t, 2> counts = {0, 0};
  for (int l : ds.labels) ++counts[l];
  CHECK(counts[0] > 100);
  CHECK(counts[1] > 100);
}

TEST_CASE("extract is deterministic") {
  Workspace& ws = workspace();
  const fs::path again = ws.dir / "features_again.csv";
  REQUIRE(cmd_extract(ws.manifest.string(), again.string(), "") == kExitOk);
  CHECK(slurp(ws.table) == slurp(again));
}

TEST_CASE("analyze writes a parseable report and matrix csv") {
  Workspace& ws = workspace();
  const fs::path report = ws.dir / "report.json";
  REQUIRE(cmd_analyze(ws.table.string(), report.string(), 30) == kExitOk);

  const auto js = nlohmann::json::parse(slurp(report));
  CHECK(js["n_bins"] == 30);
  CHECK(js["class_entropy_bits"].get<double>() > 0.5);
  REQUIRE(js["feature_names"].size() == 15);
  REQUIRE(js["relative_intrinsic"].size() == 15);
  REQUIRE(js["relative_joint"].size() == 15);
  REQUIRE(js["relative_redundancy"].size() == 15);
  for (const auto& row : js["relative_joint"]) REQUIRE(row.size() == 15);

  const fs::path csv = ws.dir / "report.csv";
  REQUIRE(fs::exists(csv));
  std::ifstream is(csv);
  std::string header;
  std::getline(is, header);
  CHECK(header.find("S_HNR") != std::string::npos);

  SUBCASE("bin count changes the estimates") {
    const fs::path report50 = ws.dir / "report50.json";
    REQUIRE(cmd_analyze(ws.table.string(), report50.string(), 50) == kExitOk);
    CHECK(slurp(report50) != slurp(report));
  }
}

TEST_CASE("a silent file contributes no rows but does not abort the run") {
  Workspace& ws = workspace();
  AudioBuffer silence;
  silence.sample_rate = 16000;
  silence.samples.assign(16000, 0.0);
  const fs::path wav = ws.dir / "silence.wav";
  save_wav(wav.string(), silence);

  // silent file alongside one real file: warning, run succeeds
  const fs::path mixed = ws.dir / "mixed.csv";
  {
    std::ofstream m(mixed);
    m << "path,label\n";
    m << wav.string() << ",normal\n";
    m << (ws.dir / "corpus" / "normal_000.wav").string() << ",normal\n";
  }
  CHECK(cmd_extract(mixed.string(), (ws.dir / "mixed_out.csv").string(),
                    "") == kExitOk);

  // silent file alone: no frames at all is a data error
  const fs::path only = ws.dir / "only_silence.csv";
  {
    std::ofstream m(only);
    m << "path,label\n" << wav.string() << ",normal\n";
  }
  CHECK(cmd_extract(only.string(), (ws.dir / "only_out.csv").string(), "") ==
        kExitData);
}

TEST_CASE("exit codes for bad inputs") {
  Workspace& ws = workspace();
  CHECK(cmd_extract((ws.dir / "missing.csv").string(),
                    (ws.dir / "out.csv").string(), "") == kExitIo);
  CHECK(cmd_dump("nonsense", (ws.dir / "corpus" / "normal_000.wav").string(),
                 (ws.dir / "dump.csv").string()) == kExitUsage);
  CHECK(cmd_analyze((ws.dir / "missing_table.csv").string(),
                    (ws.dir / "r.json").string(), 30) == kExitData);
}

TEST_CASE("dump emits per-kind csv files") {
  Workspace& ws = workspace();
  const std::string wav = (ws.dir / "corpus" / "normal_000.wav").string();
  for (const std::string what : {"pitch", "gci", "glottal", "spectrum"}) {
    const fs::path out = ws.dir / ("dump_" + what + ".csv");
    REQUIRE(cmd_dump(what, wav, out.string()) == kExitOk);
    const std::string text = slurp(out);
    CHECK(text.find('\n') != std::string::npos);
  }
  CHECK(slurp(ws.dir / "dump_pitch.csv").rfind("hop_index", 0) == 0);
  CHECK(slurp(ws.dir / "dump_glottal.csv").find("min_marker") !=
        std::string::npos);
  CHECK(slurp(ws.dir / "dump_spectrum.csv").find("harmonic") !=
        std::string::npos);
}

TEST_CASE("config files are parsed and validated") {
  Workspace& ws = workspace();
  const fs::path good = ws.dir / "good.cfg";
  {
    std::ofstream os(good);
    os << "# comment\n";
    os << "target_rate = 16000\n";
    os << "f0_min = 70\n";
    os << "f0_max = 350\n";
    os << "voicing_threshold = 0.5\n";
    os << "bins = 40\n";
  }
  const PipelineConfig cfg = load_config(good.string());
  CHECK(cfg.target_rate == 16000);
  CHECK(cfg.f0_min_hz == 70.0);
  CHECK(cfg.f0_max_hz == 350.0);
  CHECK(cfg.voicing_threshold == 0.5);
  CHECK(cfg.n_bins == 40);

  const fs::path bad = ws.dir / "bad.cfg";
  {
    std::ofstream os(bad);
    os << "frobnicate = 3\n";
  }
  CHECK_THROWS_AS(load_config(bad.string()), FormatError);
  CHECK_THROWS_AS(load_config((ws.dir / "missing.cfg").string()),
                  FormatError);
}
