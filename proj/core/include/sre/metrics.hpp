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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sre/audio_io.hpp"
#include "sre/enhancer.hpp"

namespace sre {

struct MetricParams {
  double seg_frame_ms = 30.0;
  double seg_overlap = 0.75;
  double seg_min_db = -10.0;
  double seg_max_db = 35.0;
  int lpc_order = 0;          // 0 = derive from rate: ceil(rate/1000) + 2
  double llr_trim = 0.95;     // keep the lowest fraction of frame values

  void validate() const;
  int effective_lpc_order(int sample_rate_hz) const;
};

/// Mean of per-frame 10*log10(sum s^2 / sum (s - s_hat)^2), each frame
/// clamped to [seg_min_db, seg_max_db]; frames with clean energy below 1e-10
/// are excluded.
double segmental_snr(const Waveform& clean, const Waveform& enhanced,
                     const MetricParams& p);

/// Autocorrelation-method linear prediction via Levinson-Durbin.
/// a[0] == 1; autocorr holds lags 0..order. The caller windows the frame.
struct LpcFit {
  std::vector<double> a;
  std::vector<double> autocorr;
};
LpcFit lpc_coefficients(std::span<const double> frame, int order);

/// Log-likelihood ratio between LPC envelopes: per frame
/// d = log((a_e R_c a_e') / (a_c R_c a_c')) with the clean-signal
/// autocorrelation matrix; frames sorted, the lowest llr_trim fraction kept,
/// mean returned. Identical signals (up to a gain) give 0.
double llr(const Waveform& clean, const Waveform& enhanced, const MetricParams& p);

struct ReportRow {
  std::string noise_type;
  double snr_db = 0.0;
  Method method = Method::sr;
  double llr = 0.0;
  double seg_snr = 0.0;
};

struct MetricsReport {
  std::vector<ReportRow> rows;

  /// CSV with header noise_type,snr_db,method,llr,seg_snr; UTF-8, LF,
  /// metric values printed with 6 decimal places.
  std::string to_csv() const;
  std::string to_json() const;
  static MetricsReport from_csv(const std::string& text);
};

struct EvalCondition {
  std::string noise_type;
  double snr_db = 0.0;
  std::string clean_path;
  std::string noise_path;
};

/// Mixes, enhances and scores every condition x method. Rows keep the
/// condition order of the input, methods in the given order within each
/// condition. `seed` derives per-row noise offsets (0 = no offset).
MetricsReport build_report(std::span<const EvalCondition> conditions,
                           std::span<const Method> methods,
                           const EnhanceConfig& base_cfg, const MetricParams& mp,
                           std::uint64_t seed = 0);

}  // namespace sre
