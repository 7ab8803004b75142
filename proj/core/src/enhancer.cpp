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

#include "sre/enhancer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sre {
namespace {

double mean_of(std::span<const double> v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

const char* to_string(Method m) {
  return m == Method::sr ? "sr" : "wat";
}

void EnhanceConfig::validate() const {
  if (!(dd_alpha >= 0.0 && dd_alpha < 1.0)) {
    throw InvalidParameterError("dd_alpha must be in [0, 1)");
  }
  if (!(gain_floor > 0.0 && gain_floor < 1.0)) {
    throw InvalidParameterError("gain_floor must be in (0, 1)");
  }
  if (init_frames == 0) throw InvalidParameterError("init_frames must be >= 1");
  tracker.validate();
  stft.validate();
  thresholds.validate();
}

std::vector<double> prior_snr_dd(std::span<const double> prev_gain,
                                 std::span<const double> prev_post,
                                 std::span<const double> post, double dd_alpha) {
  if (prev_gain.size() != post.size() || prev_post.size() != post.size()) {
    throw BinCountMismatchError("prior_snr_dd inputs differ in size");
  }
  std::vector<double> prior(post.size());
  for (std::size_t k = 0; k < post.size(); ++k) {
    prior[k] = dd_alpha * prev_gain[k] * prev_gain[k] * prev_post[k] +
               (1.0 - dd_alpha) * std::max(post[k] - 1.0, 0.0);
  }
  return prior;
}

std::vector<double> wiener_gain(std::span<const double> prior, double floor) {
  std::vector<double> gain(prior.size());
  for (std::size_t k = 0; k < prior.size(); ++k) {
    gain[k] = std::max(prior[k] / (1.0 + prior[k]), floor);
  }
  return gain;
}

EnhanceResult enhance(const Waveform& noisy, const EnhanceConfig& cfg) {
  cfg.validate();
  if (noisy.samples.size() < cfg.stft.frame_len + cfg.stft.hop) {
    throw SignalTooShortError("input shorter than two frames");
  }
  StftMatrix mat = stft(noisy, cfg.stft);
  const std::size_t num_frames = mat.num_frames;
  const std::size_t num_bins = mat.num_bins;

  const std::size_t init_n = std::min<std::size_t>(cfg.init_frames, num_frames);
  std::vector<std::vector<double>> init_powers;
  init_powers.reserve(init_n);
  for (std::size_t m = 0; m < init_n; ++m) {
    init_powers.push_back(power_spectrum(mat, m));
  }
  TrackerState state = init_tracker(cfg.tracker, init_powers);

  std::vector<double> prev_gain(num_bins, 0.0);
  std::vector<double> prev_post(num_bins, 0.0);
  std::vector<double> post(num_bins);

  EnhanceResult result;
  result.trace.reserve(num_frames);

  for (std::size_t m = 0; m < num_frames; ++m) {
    const std::vector<double> power = power_spectrum(mat, m);
    std::optional<FrameClass> cls;
    if (m >= init_n) {
      // Classification is strictly causal: it sees the noise estimate from
      // frame m-1, then the tracker consumes frame m.
      if (cfg.method == Method::sr) {
        cls = classify_frame(power, state.noise_psd, cfg.thresholds);
        step_sr(state, power, *cls, cfg.tracker);
      } else {
        step_wat(state, power, cfg.tracker);
      }
    } else if (cfg.method == Method::sr) {
      cls = FrameClass::non_speech;  // init window is assumed noise
    }

    for (std::size_t k = 0; k < num_bins; ++k) {
      post[k] = power[k] / std::max(state.noise_psd[k], cfg.tracker.denom_floor);
    }
    const std::vector<double> prior = prior_snr_dd(prev_gain, prev_post, post, cfg.dd_alpha);
    const std::vector<double> gain = wiener_gain(prior, cfg.gain_floor);
    for (std::size_t k = 0; k < num_bins; ++k) {
      mat.at(m, k) *= gain[k];
    }

    result.trace.push_back(FrameTrace{
        m, cls, mean_of(state.noise_psd), mean_of(state.presence_prob), mean_of(gain)});
    prev_gain = gain;
    prev_post = post;
  }

  result.enhanced = istft_overlap_add(mat);
  return result;
}

}  // namespace sre
