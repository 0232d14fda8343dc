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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "voicefeat/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Voice feature extraction and mutual-information analysis"};
  app.require_subcommand(1);

  std::string manifest, table, config, report, what, audio, out, dir;
  int bins = 50;
  int n_per_class = 50;
  uint32_t seed = 0;

  CLI::App* extract =
      app.add_subcommand("extract", "Extract frame-level features");
  extract->add_option("manifest", manifest, "corpus manifest CSV (path,label)")
      ->required();
  extract->add_option("table", table, "output feature table CSV")->required();
  extract->add_option("--config", config, "key=value configuration file");

  CLI::App* analyze =
      app.add_subcommand("analyze", "Mutual-information report");
  analyze->add_option("table", table, "feature table CSV")->required();
  analyze->add_option("report", report, "output report (JSON; .csv sibling)")
      ->required();
  analyze->add_option("--bins", bins, "histogram bins per feature dimension");

  CLI::App* dump = app.add_subcommand("dump", "Plot-data CSV emitters");
  dump->add_option("what", what, "pitch|gci|glottal|spectrum")->required();
  dump->add_option("audio", audio, "input WAV file")->required();
  dump->add_option("out", out, "output CSV")->required();

  CLI::App* synth = app.add_subcommand("synth", "Synthetic two-class corpus");
  synth->add_option("dir", dir, "output directory")->required();
  synth->add_option("--n", n_per_class, "files per class");
  synth->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : vf::kExitUsage;
  }

  try {
    if (extract->parsed()) return vf::cmd_extract(manifest, table, config);
    if (analyze->parsed()) return vf::cmd_analyze(table, report, bins);
    if (dump->parsed()) return vf::cmd_dump(what, audio, out);
    if (synth->parsed()) return vf::cmd_synth(dir, n_per_class, seed);
  } catch (const vf::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return vf::kExitData;
  } catch (const vf::DegenerateInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return vf::kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return vf::kExitIo;
  }
  return vf::kExitUsage;
}
