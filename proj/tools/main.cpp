// Copyright 2026 The srenhance Authors
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

#include <CLI11.hpp>
#include <string>

#include "cli_commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Single-channel speech enhancement with SR frame classification"};
  app.require_subcommand(1);

  std::string clean_path, noise_path, in_path, out_path, manifest_path;
  std::string out_csv, out_json, config_path, trace_path, method_name = "sr";
  double snr_db = 0.0;
  double dyn_range_db = 60.0;

  CLI::App* mix = app.add_subcommand("mix", "Mix clean speech and noise at a global SNR");
  mix->add_option("clean", clean_path, "clean speech WAV")->required();
  mix->add_option("noise", noise_path, "noise WAV (at least as long as clean)")->required();
  mix->add_option("snr_db", snr_db, "target global SNR in dB")->required();
  mix->add_option("out", out_path, "output WAV")->required();

  CLI::App* enh = app.add_subcommand("enhance", "Denoise a WAV file");
  enh->add_option("input", in_path, "noisy WAV")->required();
  enh->add_option("output", out_path, "enhanced WAV")->required();
  enh->add_option("--method", method_name, "sr or wat")
      ->check(CLI::IsMember({"sr", "wat"}));
  enh->add_option("--config", config_path, "run configuration file");
  enh->add_option("--trace", trace_path, "per-frame trace CSV");

  CLI::App* eval = app.add_subcommand("eval", "Evaluate methods over a condition manifest");
  eval->add_option("manifest", manifest_path,
                   "rows: clean,noise,snr_db,noise_type")->required();
  eval->add_option("out_csv", out_csv, "report CSV path")->required();
  eval->add_option("out_json", out_json, "report JSON path")->required();
  eval->add_option("--config", config_path, "run configuration file");

  CLI::App* spec = app.add_subcommand("spectrogram", "Render a grayscale PGM spectrogram");
  spec->add_option("input", in_path, "input WAV")->required();
  spec->add_option("output", out_path, "output PGM")->required();
  spec->add_option("--dyn-range", dyn_range_db, "dynamic range in dB below peak");
  spec->add_option("--config", config_path, "run configuration file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  if (mix->parsed()) {
    return sre::cli::run_mix(clean_path, noise_path, snr_db, out_path);
  }
  if (enh->parsed()) {
    const sre::Method method =
        method_name == "wat" ? sre::Method::wat : sre::Method::sr;
    return sre::cli::run_enhance(in_path, out_path, method, config_path, trace_path);
  }
  if (eval->parsed()) {
    return sre::cli::run_eval(manifest_path, out_csv, out_json, config_path);
  }
  if (spec->parsed()) {
    return sre::cli::run_spectrogram(in_path, out_path, dyn_range_db, config_path);
  }
  return 1;
}
