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

#include "sre/classifier.hpp"

#include <algorithm>
#include <cmath>

namespace sre {
namespace {

// Labels a posterior power ratio gamma = power/noise. Comparing gamma
// against 1 + theta keeps the rho = theta boundary exact; subtracting one
// first would round the threshold case away.
FrameClass label_from_posterior(double gamma, const ClassifierThresholds& th) {
  if (gamma < 1.0 + th.theta_low) return FrameClass::non_speech;
  if (gamma < 1.0 + th.theta_high) return FrameClass::quasi_speech;
  return FrameClass::pure_speech;
}

void check_pair(std::span<const double> frame_power,
                std::span<const double> noise_psd) {
  if (frame_power.size() != noise_psd.size()) {
    throw BinCountMismatchError("frame power and noise PSD bin counts differ");
  }
  for (double n : noise_psd) {
    if (!(n > 0.0)) throw ZeroNoiseEstimateError("noise PSD must be positive");
  }
}

}  // namespace

const char* to_string(FrameClass cls) {
  switch (cls) {
    case FrameClass::non_speech: return "non_speech";
    case FrameClass::quasi_speech: return "quasi_speech";
    case FrameClass::pure_speech: return "pure_speech";
  }
  return "?";
}

void ClassifierThresholds::validate() const {
  if (!(theta_low > 0.0) || !(theta_low < theta_high)) {
    throw InvalidParameterError("thresholds must satisfy 0 < theta_low < theta_high");
  }
}

std::vector<double> compute_sr(std::span<const double> clean_mag,
                               std::span<const double> est_mag, double eps) {
  if (clean_mag.size() != est_mag.size()) {
    throw BinCountMismatchError("magnitude vectors differ in size");
  }
  if (!(eps > 0.0)) throw InvalidParameterError("eps must be positive");
  std::vector<double> sr(clean_mag.size());
  for (std::size_t k = 0; k < clean_mag.size(); ++k) {
    const double s = clean_mag[k];
    const double e = est_mag[k];
    if (s < 0.0 || e < 0.0) throw NegativeMagnitudeError("magnitudes must be >= 0");
    const double residual = s - e;
    sr[k] = s * s / std::max(residual * residual, eps);
  }
  return sr;
}

DistortionRegion classify_region_oracle(double clean_mag, double est_mag) {
  if (clean_mag < 0.0 || est_mag < 0.0) {
    throw NegativeMagnitudeError("magnitudes must be >= 0");
  }
  if (est_mag <= clean_mag) return DistortionRegion::attenuation_only;
  if (est_mag <= 2.0 * clean_mag) return DistortionRegion::amplification_under_6db;
  return DistortionRegion::amplification_over_6db;
}

FrameClass classify_frame(std::span<const double> frame_power,
                          std::span<const double> noise_psd,
                          const ClassifierThresholds& th) {
  th.validate();
  check_pair(frame_power, noise_psd);
  if (frame_power.empty()) throw BinCountMismatchError("empty frame");
  double acc = 0.0;
  for (std::size_t k = 0; k < frame_power.size(); ++k) {
    acc += frame_power[k] / noise_psd[k];
  }
  return label_from_posterior(acc / static_cast<double>(frame_power.size()), th);
}

std::vector<FrameClass> classify_bins(std::span<const double> frame_power,
                                      std::span<const double> noise_psd,
                                      const ClassifierThresholds& th) {
  th.validate();
  check_pair(frame_power, noise_psd);
  std::vector<FrameClass> labels(frame_power.size());
  for (std::size_t k = 0; k < frame_power.size(); ++k) {
    labels[k] = label_from_posterior(frame_power[k] / noise_psd[k], th);
  }
  return labels;
}

}  // namespace sre
