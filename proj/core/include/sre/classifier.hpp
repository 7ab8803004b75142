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

#include <span>
#include <vector>

#include "sre/errors.hpp"

namespace sre {

/// Distortion regime of an (clean, estimated) magnitude pair. The 2x
/// magnitude boundary is 20*log10(2) = 6.02 dB of amplification.
enum class DistortionRegion {
  attenuation_only,        // est <= clean
  amplification_under_6db, // clean < est <= 2*clean
  amplification_over_6db,  // est > 2*clean
};

/// Per-frame speech content label.
enum class FrameClass {
  non_speech,
  quasi_speech,
  pure_speech,
};

const char* to_string(FrameClass cls);

/// Power-ratio thresholds for the blind frame classifier. The lower default
/// is the 1/3 SNR bound; the upper mirrors the power-domain factor behind
/// the 6.02 dB amplification boundary.
struct ClassifierThresholds {
  double theta_low = 1.0 / 3.0;
  double theta_high = 3.0;

  void validate() const;
};

/// Signal-to-residual spectrum ratio per bin: S^2 / max((S - S_est)^2, eps).
/// A perfect estimate has zero residual, hence the eps floor.
std::vector<double> compute_sr(std::span<const double> clean_mag,
                               std::span<const double> est_mag,
                               double eps = 1e-12);

/// Labels one (clean, estimated) magnitude pair by distortion region.
/// Boundaries go to the lower region.
DistortionRegion classify_region_oracle(double clean_mag, double est_mag);

/// Blind three-way frame label from the mean posterior power ratio.
/// The per-frame SNR estimate is rho = max(mean_k(power/noise) - 1, 0);
/// non-speech below theta_low, pure speech at theta_high and above.
FrameClass classify_frame(std::span<const double> frame_power,
                          std::span<const double> noise_psd,
                          const ClassifierThresholds& th);

/// Per-bin variant of classify_frame using each bin's own posterior ratio.
std::vector<FrameClass> classify_bins(std::span<const double> frame_power,
                                      std::span<const double> noise_psd,
                                      const ClassifierThresholds& th);

}  // namespace sre
