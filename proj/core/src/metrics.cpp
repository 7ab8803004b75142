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

#include "sre/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

namespace sre {
namespace {

constexpr double kSilenceEnergy = 1e-10;

struct Framing {
  std::size_t len;
  std::size_t hop;
};

Framing metric_framing(const MetricParams& p, int sample_rate_hz) {
  const auto len = static_cast<std::size_t>(
      std::lround(sample_rate_hz * p.seg_frame_ms / 1000.0));
  const auto hop = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::lround(len * (1.0 - p.seg_overlap))));
  return {std::max<std::size_t>(len, 2), hop};
}

void check_aligned(const Waveform& clean, const Waveform& enhanced) {
  if (clean.sample_rate_hz != enhanced.sample_rate_hz) {
    throw SampleRateMismatchError("metric inputs have different rates");
  }
  if (clean.samples.size() != enhanced.samples.size()) {
    throw LengthMismatchError("metric inputs have different lengths");
  }
}

std::vector<double> hann(std::size_t n) {
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                 static_cast<double>(n - 1)));
  }
  return w;
}

// a' R a over the Toeplitz autocorrelation matrix R[|i-j|].
double toeplitz_quadratic(std::span<const double> a, std::span<const double> r) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      acc += a[i] * a[j] * r[i > j ? i - j : j - i];
    }
  }
  return acc;
}

std::string format_row(const ReportRow& row) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%s,%g,%s,%.6f,%.6f", row.noise_type.c_str(),
                row.snr_db, to_string(row.method), row.llr, row.seg_snr);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

void MetricParams::validate() const {
  if (!(seg_frame_ms > 0.0)) throw InvalidParameterError("seg_frame_ms must be positive");
  if (!(seg_overlap > 0.0 && seg_overlap < 1.0)) {
    throw InvalidParameterError("seg_overlap must be in (0, 1)");
  }
  if (!(seg_min_db < seg_max_db)) throw InvalidParameterError("seg_min_db must be below seg_max_db");
  if (lpc_order != 0 && lpc_order < 2) throw InvalidParameterError("lpc_order must be >= 2");
  if (!(llr_trim > 0.0 && llr_trim <= 1.0)) {
    throw InvalidParameterError("llr_trim must be in (0, 1]");
  }
}

int MetricParams::effective_lpc_order(int sample_rate_hz) const {
  if (lpc_order != 0) return lpc_order;
  return static_cast<int>(std::ceil(sample_rate_hz / 1000.0)) + 2;
}

double segmental_snr(const Waveform& clean, const Waveform& enhanced,
                     const MetricParams& p) {
  p.validate();
  check_aligned(clean, enhanced);
  const Framing fr = metric_framing(p, clean.sample_rate_hz);

  double acc = 0.0;
  std::size_t retained = 0;
  for (std::size_t start = 0; start + fr.len <= clean.samples.size(); start += fr.hop) {
    double es = 0.0, er = 0.0;
    for (std::size_t i = start; i < start + fr.len; ++i) {
      const double s = clean.samples[i];
      const double d = s - enhanced.samples[i];
      es += s * s;
      er += d * d;
    }
    if (es < kSilenceEnergy) continue;
    double snr;
    if (er <= 0.0) {
      snr = p.seg_max_db;  // zero residual saturates the clamp ceiling
    } else {
      snr = std::clamp(10.0 * std::log10(es / er), p.seg_min_db, p.seg_max_db);
    }
    acc += snr;
    ++retained;
  }
  if (retained == 0) throw AllFramesSilentError("no frame with clean energy above threshold");
  return acc / static_cast<double>(retained);
}

LpcFit lpc_coefficients(std::span<const double> frame, int order) {
  if (order < 1) throw InvalidParameterError("lpc order must be >= 1");
  if (frame.size() <= static_cast<std::size_t>(order)) {
    throw InvalidParameterError("frame must be longer than the lpc order");
  }

  std::vector<double> r(static_cast<std::size_t>(order) + 1, 0.0);
  for (int lag = 0; lag <= order; ++lag) {
    double acc = 0.0;
    for (std::size_t i = static_cast<std::size_t>(lag); i < frame.size(); ++i) {
      acc += frame[i] * frame[i - static_cast<std::size_t>(lag)];
    }
    r[static_cast<std::size_t>(lag)] = acc;
  }
  if (r[0] <= 0.0) throw SingularAutocorrelationError("zero-energy frame");

  // Levinson-Durbin on the normal equations.
  std::vector<double> a(static_cast<std::size_t>(order) + 1, 0.0);
  std::vector<double> tmp(a.size(), 0.0);
  a[0] = 1.0;
  double err = r[0];
  for (int i = 1; i <= order; ++i) {
    double acc = r[static_cast<std::size_t>(i)];
    for (int j = 1; j < i; ++j) {
      acc += a[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(i - j)];
    }
    const double reflection = -acc / err;
    tmp = a;
    for (int j = 1; j < i; ++j) {
      a[static_cast<std::size_t>(j)] =
          tmp[static_cast<std::size_t>(j)] +
          reflection * tmp[static_cast<std::size_t>(i - j)];
    }
    a[static_cast<std::size_t>(i)] = reflection;
    err *= (1.0 - reflection * reflection);
    if (err <= 0.0) throw SingularAutocorrelationError("unstable prediction error");
  }
  return LpcFit{std::move(a), std::move(r)};
}

double llr(const Waveform& clean, const Waveform& enhanced, const MetricParams& p) {
  p.validate();
  check_aligned(clean, enhanced);
  const Framing fr = metric_framing(p, clean.sample_rate_hz);
  const int order = p.effective_lpc_order(clean.sample_rate_hz);
  if (fr.len <= static_cast<std::size_t>(order)) {
    throw InvalidParameterError("metric frame too short for the lpc order");
  }
  const std::vector<double> window = hann(fr.len);

  std::vector<double> values;
  std::vector<double> cbuf(fr.len), ebuf(fr.len);
  for (std::size_t start = 0; start + fr.len <= clean.samples.size(); start += fr.hop) {
    double energy = 0.0;
    for (std::size_t i = 0; i < fr.len; ++i) {
      cbuf[i] = clean.samples[start + i] * window[i];
      ebuf[i] = enhanced.samples[start + i] * window[i];
      energy += clean.samples[start + i] * clean.samples[start + i];
    }
    if (energy < kSilenceEnergy) continue;
    LpcFit fit_c, fit_e;
    try {
      fit_c = lpc_coefficients(cbuf, order);
      fit_e = lpc_coefficients(ebuf, order);
    } catch (const SingularAutocorrelationError&) {
      continue;
    }
    const double num = toeplitz_quadratic(fit_e.a, fit_c.autocorr);
    const double den = toeplitz_quadratic(fit_c.a, fit_c.autocorr);
    if (!(num > 0.0) || !(den > 0.0)) continue;
    values.push_back(std::log(num / den));
  }
  if (values.empty()) throw AllFramesSilentError("no usable frame for llr");

  std::sort(values.begin(), values.end());
  const auto keep = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::floor(static_cast<double>(values.size()) * p.llr_trim)));
  double acc = 0.0;
  for (std::size_t i = 0; i < keep; ++i) acc += values[i];
  return acc / static_cast<double>(keep);
}

std::string MetricsReport::to_csv() const {
  std::string out = "noise_type,snr_db,method,llr,seg_snr\n";
  for (const auto& row : rows) {
    out += format_row(row);
    out += '\n';
  }
  return out;
}

std::string MetricsReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows) {
    arr.push_back({{"noise_type", row.noise_type},
                   {"snr_db", row.snr_db},
                   {"method", to_string(row.method)},
                   {"llr", row.llr},
                   {"seg_snr", row.seg_snr}});
  }
  return arr.dump(2) + "\n";
}

MetricsReport MetricsReport::from_csv(const std::string& text) {
  MetricsReport report;
  std::stringstream ss(text);
  std::string line;
  bool first = true;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line != "noise_type,snr_db,method,llr,seg_snr") {
        throw InvalidParameterError("unexpected report CSV header: " + line);
      }
      continue;
    }
    const auto fields = split_csv_line(line);
    if (fields.size() != 5) throw InvalidParameterError("malformed report row: " + line);
    ReportRow row;
    row.noise_type = fields[0];
    row.snr_db = std::stod(fields[1]);
    if (fields[2] == "sr") {
      row.method = Method::sr;
    } else if (fields[2] == "wat") {
      row.method = Method::wat;
    } else {
      throw InvalidParameterError("unknown method in report row: " + fields[2]);
    }
    row.llr = std::stod(fields[3]);
    row.seg_snr = std::stod(fields[4]);
    report.rows.push_back(std::move(row));
  }
  return report;
}

MetricsReport build_report(std::span<const EvalCondition> conditions,
                           std::span<const Method> methods,
                           const EnhanceConfig& base_cfg, const MetricParams& mp,
                           std::uint64_t seed) {
  mp.validate();
  MetricsReport report;
  std::size_t row_index = 0;
  for (const auto& cond : conditions) {
    Waveform clean, noise;
    try {
      clean = read_wav(cond.clean_path);
      noise = read_wav(cond.noise_path);
    } catch (const Error& e) {
      throw Error(e.kind(), "condition (" + cond.noise_type + ", " +
                                std::to_string(cond.snr_db) + " dB): " + e.what());
    }

    std::size_t offset = 0;
    if (seed != 0 && noise.samples.size() > clean.samples.size()) {
      std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (row_index + 1)));
      offset = rng() % (noise.samples.size() - clean.samples.size() + 1);
    }

    for (Method method : methods) {
      try {
        const Waveform noisy = mix_at_snr(clean, noise, cond.snr_db, offset);
        EnhanceConfig cfg = base_cfg;
        cfg.method = method;
        EnhanceResult res = enhance(noisy, cfg);
        // Align to the clean length: pad the dropped synthesis tail with
        // silence.
        res.enhanced.samples.resize(clean.samples.size(), 0.0);
        ReportRow row;
        row.noise_type = cond.noise_type;
        row.snr_db = cond.snr_db;
        row.method = method;
        row.llr = llr(clean, res.enhanced, mp);
        row.seg_snr = segmental_snr(clean, res.enhanced, mp);
        report.rows.push_back(std::move(row));
      } catch (const Error& e) {
        throw Error(e.kind(), "condition (" + cond.noise_type + ", " +
                                  std::to_string(cond.snr_db) + " dB, " +
                                  to_string(method) + "): " + e.what());
      }
    }
    ++row_index;
  }
  return report;
}

}  // namespace sre
