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

#include "cli_commands.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "sre/metrics.hpp"
#include "sre/run_config.hpp"
#include "sre/viz.hpp"

namespace sre::cli {
namespace {

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::missing_input: return 2;
    case ErrorKind::invalid_parameter: return 3;
    case ErrorKind::signal_contract: return 4;
    case ErrorKind::other: return 1;
  }
  return 1;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return 0;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

RunConfig load_config(const std::string& config_path) {
  if (config_path.empty()) return RunConfig{};
  return RunConfig::load(config_path);
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Manifest rows: clean_path,noise_path,snr_db,noise_type. '#' comments.
std::vector<EvalCondition> load_manifest(const std::string& path) {
  if (!std::filesystem::exists(path)) {
    throw NotFoundError("no such manifest: " + path);
  }
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest: " + path);

  std::vector<EvalCondition> conditions;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;

    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (fields.size() != 4) {
      throw InvalidParameterError("manifest line " + std::to_string(line_no) +
                                  ": expected clean,noise,snr_db,noise_type");
    }
    EvalCondition cond;
    cond.clean_path = fields[0];
    cond.noise_path = fields[1];
    try {
      cond.snr_db = std::stod(fields[2]);
    } catch (const std::exception&) {
      throw InvalidParameterError("manifest line " + std::to_string(line_no) +
                                  ": bad snr_db: " + fields[2]);
    }
    cond.noise_type = fields[3];
    for (const auto& p : {cond.clean_path, cond.noise_path}) {
      if (!std::filesystem::exists(p)) {
        throw NotFoundError("manifest line " + std::to_string(line_no) +
                            ": no such file: " + p);
      }
    }
    conditions.push_back(std::move(cond));
  }
  return conditions;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << text;
  if (!out) throw IoError("short write: " + path);
}

void write_trace(const std::string& path, const EnhanceResult& result, Method method) {
  std::ostringstream out;
  if (method == Method::sr) {
    out << "frame,class,mean_noise_psd,mean_presence,mean_gain\n";
  } else {
    out << "frame,mean_noise_psd,mean_presence,mean_gain\n";
  }
  char buf[128];
  for (const auto& t : result.trace) {
    if (method == Method::sr) {
      std::snprintf(buf, sizeof(buf), "%zu,%s,%.9g,%.9g,%.9g\n", t.frame,
                    to_string(t.cls.value()), t.mean_noise_psd, t.mean_presence,
                    t.mean_gain);
    } else {
      std::snprintf(buf, sizeof(buf), "%zu,%.9g,%.9g,%.9g\n", t.frame,
                    t.mean_noise_psd, t.mean_presence, t.mean_gain);
    }
    out << buf;
  }
  write_text(path, out.str());
}

std::uint64_t effective_seed(std::uint64_t config_seed) {
  const char* env = std::getenv("SR_ENHANCE_SEED");
  if (env == nullptr || *env == '\0') return config_seed;
  std::uint64_t v = 0;
  const std::string s(env);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidParameterError("SR_ENHANCE_SEED is not a non-negative integer: " + s);
  }
  return v;
}

}  // namespace

int run_mix(const std::string& clean_path, const std::string& noise_path,
            double snr_db, const std::string& out_path) {
  return guarded([&] {
    const Waveform clean = read_wav(clean_path);
    const Waveform noise = read_wav(noise_path);
    write_wav(mix_at_snr(clean, noise, snr_db), out_path);
  });
}

int run_enhance(const std::string& in_path, const std::string& out_path,
                Method method, const std::string& config_path,
                const std::string& trace_path) {
  return guarded([&] {
    RunConfig cfg = load_config(config_path);
    cfg.enhance.method = method;
    const Waveform noisy = read_wav(in_path);
    const EnhanceResult result = enhance(noisy, cfg.enhance);
    write_wav(result.enhanced, out_path);
    if (!trace_path.empty()) write_trace(trace_path, result, method);
  });
}

int run_eval(const std::string& manifest_path, const std::string& out_csv,
             const std::string& out_json, const std::string& config_path) {
  return guarded([&] {
    RunConfig cfg = load_config(config_path);
    const std::vector<EvalCondition> conditions = load_manifest(manifest_path);
    const Method methods[] = {Method::wat, Method::sr};
    const MetricsReport report = build_report(conditions, methods, cfg.enhance,
                                              cfg.metrics, effective_seed(cfg.seed));
    write_text(out_csv, report.to_csv());
    write_text(out_json, report.to_json());

    std::printf("%-12s %6s %10s %10s %12s %12s\n", "noise_type", "snr_db",
                "wat_llr", "sr_llr", "wat_seg_snr", "sr_seg_snr");
    for (std::size_t i = 0; i + 1 < report.rows.size(); i += 2) {
      const ReportRow& wat = report.rows[i];
      const ReportRow& sr = report.rows[i + 1];
      std::printf("%-12s %6g %10.6f %10.6f %12.6f %12.6f\n", wat.noise_type.c_str(),
                  wat.snr_db, wat.llr, sr.llr, wat.seg_snr, sr.seg_snr);
    }
  });
}

int run_spectrogram(const std::string& in_path, const std::string& out_pgm,
                    double dyn_range_db, const std::string& config_path) {
  return guarded([&] {
    const RunConfig cfg = load_config(config_path);
    const Waveform wave = read_wav(in_path);
    const StftMatrix mat = stft(wave, cfg.enhance.stft);
    write_pgm(spectrogram_raster(mat, dyn_range_db), out_pgm);
  });
}

}  // namespace sre::cli
