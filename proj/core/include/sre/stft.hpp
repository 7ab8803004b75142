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

#include <complex>
#include <cstddef>
#include <vector>

#include "sre/audio_io.hpp"
#include "sre/errors.hpp"

namespace sre {

/// Analysis/synthesis parameters. The window is the generalized Hamming
/// family w[n] = 0.54 - a*cos(2*pi*n/(N-1)); `window_coeff` is a.
struct StftParams {
  std::size_t frame_len = 256;
  std::size_t hop = 128;
  double window_coeff = 0.46;
  std::size_t fft_size = 256;

  /// Throws InvalidParameterError on any invariant violation
  /// (hop > frame_len, fft_size < frame_len or not a power of two,
  /// window_coeff outside (0, 1)).
  void validate() const;
};

/// One-sided complex spectra, one row per frame, bins 0..fft_size/2.
struct StftMatrix {
  std::vector<std::complex<double>> coeffs;  // row-major, num_frames x num_bins
  std::size_t num_frames = 0;
  std::size_t num_bins = 0;
  StftParams params;
  int sample_rate_hz = 8000;

  std::complex<double>& at(std::size_t frame, std::size_t bin) {
    return coeffs[frame * num_bins + bin];
  }
  const std::complex<double>& at(std::size_t frame, std::size_t bin) const {
    return coeffs[frame * num_bins + bin];
  }
};

/// Window samples, length frame_len. Symmetric: w[n] == w[N-1-n] exactly.
std::vector<double> hamming_window(const StftParams& params);

/// Frames the signal at hop intervals (full frames only; a trailing remainder
/// shorter than one hop is dropped), windows, zero-pads to fft_size and
/// transforms. Requires wave length >= frame_len.
StftMatrix stft(const Waveform& wave, const StftParams& params);

/// Weighted overlap-add synthesis: inverse transform, window again,
/// accumulate, divide by the summed squared-window normalizer. Output length
/// is (num_frames-1)*hop + frame_len. Throws ColaViolationError if the
/// normalizer falls below 1e-8 anywhere in the fully-overlapped interior.
Waveform istft_overlap_add(const StftMatrix& mat);

/// |X(m,k)|^2 for every bin of frame m.
std::vector<double> power_spectrum(const StftMatrix& mat, std::size_t frame);

}  // namespace sre
