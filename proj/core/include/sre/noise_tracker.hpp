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

#include <cstddef>
#include <span>
#include <vector>

#include "sre/classifier.hpp"
#include "sre/errors.hpp"

namespace sre {

/// Recursive noise-PSD estimator parameters.
///
/// alpha      smoothing factor of the non-speech update
/// alpha_s    base constant of the time-frequency smoothing factor
/// alpha_b    presence-probability smoothing
/// beta       minimum-tracking look-back weight
/// gamma      minimum-tracking decay (must exceed beta)
/// xi         noisy-power smoothing, capped at 0.98 so the posterior cannot
///            lock at r = 1
/// delta      presence-ratio threshold for the speech indicator
struct TrackerParams {
  double alpha = 0.98;
  double alpha_s = 0.85;
  double alpha_b = 0.2;
  double beta = 0.96;
  double gamma = 0.998;
  double xi = 0.7;
  double delta = 2.0;
  bool soft_presence = false;    // logistic indicator instead of hard
  double logistic_slope = 1.0;
  bool use_raw_presence = false; // feed clamped presence ratio, not the
                                 // smoothed probability, into the
                                 // time-frequency smoothing factor
  double denom_floor = 1e-12;

  void validate() const;
};

/// Per-bin recursive state. All vectors share the bin count fixed at init.
struct TrackerState {
  std::vector<double> noise_psd;           // running estimate sigma_N^2(m,k)
  std::vector<double> smoothed_power;      // B(m,k)
  std::vector<double> prev_smoothed_power; // B(m-1,k)
  std::vector<double> running_min;         // B_min(m,k)
  std::vector<double> presence_prob;       // b(m,k) in [0,1]
  std::vector<double> presence_ratio;      // B_sp(m,k)
  std::vector<double> posterior;           // r(m,k)
  std::size_t frame_index = 0;

  std::size_t num_bins() const { return noise_psd.size(); }
  bool initialized() const { return !noise_psd.empty(); }
};

/// Builds the initial state from the first frames' power spectra: noise PSD,
/// smoothed power and running minimum all start at the per-bin mean;
/// presence probability starts at zero.
TrackerState init_tracker(const TrackerParams& params,
                          std::span<const std::vector<double>> initial_frames);

/// Logistic 1/(1 + exp(-slope*x)).
double sigmoid(double x, double slope);

/// B(m,k) = xi*B(m-1,k) + (1-xi)*power(k).
void smooth_noisy_power(TrackerState& state, std::span<const double> frame_power,
                        const TrackerParams& params);

/// Nonlinear running-minimum update. While the minimum lies at or below the
/// smoothed power it decays upward via
///   B_min = gamma*B_min + (1-gamma)/(1-beta) * (B(m) - beta*B(m-1));
/// otherwise it snaps down to B(m) exactly.
void track_minimum(TrackerState& state, const TrackerParams& params);

/// B_sp(m,k) = raw frame power / running minimum (floored).
void speech_presence_ratio(TrackerState& state,
                           std::span<const double> frame_power,
                           const TrackerParams& params);

/// Indicator I = [B_sp > delta] (or its logistic relaxation), smoothed into
/// the presence probability b = alpha_b*b + (1-alpha_b)*I.
void update_presence_prob(TrackerState& state, const TrackerParams& params);

/// Posterior r(m,k) = B(m-1,k) / noise_psd(m,k), noise floored.
void posterior_snr(TrackerState& state, const TrackerParams& params);

/// One full frame step of the SR estimator: the common updates above, then a
/// class-dependent noise update:
///   non-speech   sigma = alpha*sigma + (1-alpha)*power
///   quasi-speech sigma = B_tf*sigma + (1-B_tf)*power,
///                B_tf = alpha_s + (1-alpha_s)*b
///   pure speech  sigma held bit-exactly
/// The caller classifies against the previous frame's noise estimate.
void step_sr(TrackerState& state, std::span<const double> frame_power,
             FrameClass frame_class, const TrackerParams& params);

/// Baseline weighted-average step: the same machinery with the
/// presence-weighted update applied on every frame.
void step_wat(TrackerState& state, std::span<const double> frame_power,
              const TrackerParams& params);

}  // namespace sre
