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

#include "sre/noise_tracker.hpp"

#include <algorithm>
#include <cmath>

namespace sre {
namespace {

void require_initialized(const TrackerState& state,
                         std::span<const double> frame_power) {
  if (!state.initialized()) {
    throw UninitializedStateError("tracker state not initialized");
  }
  if (frame_power.size() != state.num_bins()) {
    throw BinCountMismatchError("frame power bin count differs from state");
  }
}

void check_unit_interval(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0)) {
    throw InvalidParameterError(std::string(name) + " must be in (0, 1)");
  }
}

// Common per-frame updates shared by both estimators, in pipeline order.
void run_common_updates(TrackerState& state, std::span<const double> frame_power,
                        const TrackerParams& params) {
  smooth_noisy_power(state, frame_power, params);
  track_minimum(state, params);
  speech_presence_ratio(state, frame_power, params);
  update_presence_prob(state, params);
  posterior_snr(state, params);
}

// sigma = B_tf*sigma + (1 - B_tf)*power with the time-frequency smoothing
// factor B_tf = alpha_s + (1-alpha_s)*b. Shared between the quasi-speech
// branch of the SR step and every WAT step.
void presence_weighted_update(TrackerState& state,
                              std::span<const double> frame_power,
                              const TrackerParams& params) {
  for (std::size_t k = 0; k < state.num_bins(); ++k) {
    const double b = params.use_raw_presence
                         ? std::clamp(state.presence_ratio[k], 0.0, 1.0)
                         : state.presence_prob[k];
    const double b_tf = params.alpha_s + (1.0 - params.alpha_s) * b;
    state.noise_psd[k] = b_tf * state.noise_psd[k] + (1.0 - b_tf) * frame_power[k];
  }
}

}  // namespace

void TrackerParams::validate() const {
  check_unit_interval(alpha, "alpha");
  check_unit_interval(alpha_s, "alpha_s");
  check_unit_interval(alpha_b, "alpha_b");
  check_unit_interval(beta, "beta");
  check_unit_interval(gamma, "gamma");
  check_unit_interval(xi, "xi");
  if (xi > 0.98) throw InvalidParameterError("xi is capped at 0.98");
  if (!(delta > 1.0)) throw InvalidParameterError("delta must exceed 1");
  if (!(gamma > beta)) throw InvalidParameterError("gamma must exceed beta");
  if (!(logistic_slope > 0.0)) throw InvalidParameterError("logistic_slope must be positive");
  if (!(denom_floor > 0.0)) throw InvalidParameterError("denom_floor must be positive");
}

TrackerState init_tracker(const TrackerParams& params,
                          std::span<const std::vector<double>> initial_frames) {
  params.validate();
  if (initial_frames.empty()) {
    throw EmptyInitError("at least one initialization frame required");
  }
  const std::size_t bins = initial_frames.front().size();
  if (bins == 0) throw EmptyInitError("initialization frames have no bins");
  for (const auto& f : initial_frames) {
    if (f.size() != bins) throw BinCountMismatchError("initialization frames disagree on bin count");
  }

  std::vector<double> mean(bins, 0.0);
  for (const auto& f : initial_frames) {
    for (std::size_t k = 0; k < bins; ++k) mean[k] += f[k];
  }
  for (double& v : mean) v /= static_cast<double>(initial_frames.size());

  TrackerState state;
  state.noise_psd = mean;
  state.smoothed_power = mean;
  state.prev_smoothed_power = mean;
  state.running_min = mean;
  state.presence_prob.assign(bins, 0.0);
  state.presence_ratio.assign(bins, 0.0);
  state.posterior.assign(bins, 0.0);
  state.frame_index = initial_frames.size();
  return state;
}

double sigmoid(double x, double slope) {
  if (!(slope > 0.0)) throw InvalidParameterError("sigmoid slope must be positive");
  return 1.0 / (1.0 + std::exp(-slope * x));
}

void smooth_noisy_power(TrackerState& state, std::span<const double> frame_power,
                        const TrackerParams& params) {
  require_initialized(state, frame_power);
  state.prev_smoothed_power = state.smoothed_power;
  for (std::size_t k = 0; k < state.num_bins(); ++k) {
    state.smoothed_power[k] =
        params.xi * state.smoothed_power[k] + (1.0 - params.xi) * frame_power[k];
  }
}

void track_minimum(TrackerState& state, const TrackerParams& params) {
  if (!state.initialized()) throw UninitializedStateError("tracker state not initialized");
  const double rise = (1.0 - params.gamma) / (1.0 - params.beta);
  for (std::size_t k = 0; k < state.num_bins(); ++k) {
    const double b_cur = state.smoothed_power[k];
    if (state.running_min[k] <= b_cur) {
      const double decayed =
          params.gamma * state.running_min[k] +
          rise * (b_cur - params.beta * state.prev_smoothed_power[k]);
      // decayed <= b_cur holds in exact arithmetic whenever gamma > beta;
      // the min only absorbs rounding at fixed points.
      state.running_min[k] = std::min(decayed, b_cur);
    } else {
      state.running_min[k] = b_cur;
    }
  }
}

void speech_presence_ratio(TrackerState& state,
                           std::span<const double> frame_power,
                           const TrackerParams& params) {
  require_initialized(state, frame_power);
  for (std::size_t k = 0; k < state.num_bins(); ++k) {
    state.presence_ratio[k] =
        frame_power[k] / std::max(state.running_min[k], params.denom_floor);
  }
}

void update_presence_prob(TrackerState& state, const TrackerParams& params) {
  if (!state.initialized()) throw UninitializedStateError("tracker state not initialized");
  for (std::size_t k = 0; k < state.num_bins(); ++k) {
    const double excess = state.presence_ratio[k] - params.delta;
    const double indicator =
        params.soft_presence ? sigmoid(excess, params.logistic_slope)
                             : (excess > 0.0 ? 1.0 : 0.0);
    const double b = params.alpha_b * state.presence_prob[k] +
                     (1.0 - params.alpha_b) * indicator;
    state.presence_prob[k] = std::clamp(b, 0.0, 1.0);
  }
}

void posterior_snr(TrackerState& state, const TrackerParams& params) {
  if (!state.initialized()) throw UninitializedStateError("tracker state not initialized");
  for (std::size_t k = 0; k < state.num_bins(); ++k) {
    state.posterior[k] = state.prev_smoothed_power[k] /
                         std::max(state.noise_psd[k], params.denom_floor);
  }
}

void step_sr(TrackerState& state, std::span<const double> frame_power,
             FrameClass frame_class, const TrackerParams& params) {
  require_initialized(state, frame_power);
  params.validate();
  run_common_updates(state, frame_power, params);
  switch (frame_class) {
    case FrameClass::non_speech:
      for (std::size_t k = 0; k < state.num_bins(); ++k) {
        state.noise_psd[k] = params.alpha * state.noise_psd[k] +
                             (1.0 - params.alpha) * frame_power[k];
      }
      break;
    case FrameClass::quasi_speech:
      presence_weighted_update(state, frame_power, params);
      break;
    case FrameClass::pure_speech:
      break;  // estimate held
  }
  ++state.frame_index;
}

void step_wat(TrackerState& state, std::span<const double> frame_power,
              const TrackerParams& params) {
  require_initialized(state, frame_power);
  params.validate();
  run_common_updates(state, frame_power, params);
  presence_weighted_update(state, frame_power, params);
  ++state.frame_index;
}

}  // namespace sre
