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

#include <optional>
#include <span>
#include <vector>

#include "sre/audio_io.hpp"
#include "sre/classifier.hpp"
#include "sre/noise_tracker.hpp"
#include "sre/stft.hpp"

namespace sre {

enum class Method { sr, wat };

const char* to_string(Method m);

struct EnhanceConfig {
  Method method = Method::sr;
  double dd_alpha = 0.98;   // decision-directed weight
  double gain_floor = 0.1;  // -20 dB
  std::size_t init_frames = 6;  // leading frames assumed noise-dominated
  TrackerParams tracker;
  StftParams stft;
  ClassifierThresholds thresholds;

  void validate() const;
};

/// Per-frame diagnostics emitted alongside the enhanced signal. `cls` is
/// empty for the WAT method, which does not classify.
struct FrameTrace {
  std::size_t frame = 0;
  std::optional<FrameClass> cls;
  double mean_noise_psd = 0.0;
  double mean_presence = 0.0;
  double mean_gain = 0.0;
};

struct EnhanceResult {
  Waveform enhanced;
  std::vector<FrameTrace> trace;
};

/// Decision-directed a priori SNR:
///   xi(k) = dd_alpha*prev_gain(k)^2*prev_post(k)
///         + (1 - dd_alpha)*max(post(k) - 1, 0)
std::vector<double> prior_snr_dd(std::span<const double> prev_gain,
                                 std::span<const double> prev_post,
                                 std::span<const double> post, double dd_alpha);

/// Wiener gain H = max(xi/(1+xi), floor), never above 1.
std::vector<double> wiener_gain(std::span<const double> prior, double floor);

/// Full pipeline: analysis, per-frame classification (SR) or unconditional
/// presence weighting (WAT), noise tracking, decision-directed Wiener gains
/// applied to the noisy spectrum with phase untouched, overlap-add synthesis.
EnhanceResult enhance(const Waveform& noisy, const EnhanceConfig& cfg);

}  // namespace sre
