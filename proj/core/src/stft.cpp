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

#include "sre/stft.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <mutex>
#include <numbers>

namespace sre {
namespace {

constexpr double kNormalizerFloor = 1e-8;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// FFTW plan creation is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// RAII pair of r2c/c2r plans with owned buffers for one transform size.
class FftEngine {
 public:
  explicit FftEngine(std::size_t n)
      : n_(n),
        real_(fftw_alloc_real(n)),
        cplx_(fftw_alloc_complex(n / 2 + 1)) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fwd_ = fftw_plan_dft_r2c_1d(static_cast<int>(n), real_, cplx_, FFTW_ESTIMATE);
    inv_ = fftw_plan_dft_c2r_1d(static_cast<int>(n), cplx_, real_, FFTW_ESTIMATE);
  }

  ~FftEngine() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(inv_);
    fftw_free(real_);
    fftw_free(cplx_);
  }

  FftEngine(const FftEngine&) = delete;
  FftEngine& operator=(const FftEngine&) = delete;

  // time (n samples) -> one-sided spectrum (n/2+1 bins).
  // std::complex<double> is array-compatible with fftw_complex.
  void forward(const double* in, std::complex<double>* out) {
    std::memcpy(real_, in, n_ * sizeof(double));
    fftw_execute(fwd_);
    std::memcpy(static_cast<void*>(out), cplx_,
                (n_ / 2 + 1) * sizeof(fftw_complex));
  }

  // one-sided spectrum -> time, scaled by 1/n
  void inverse(const std::complex<double>* in, double* out) {
    std::memcpy(cplx_, static_cast<const void*>(in),
                (n_ / 2 + 1) * sizeof(fftw_complex));
    fftw_execute(inv_);
    const double scale = 1.0 / static_cast<double>(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = real_[i] * scale;
  }

 private:
  std::size_t n_;
  double* real_;
  fftw_complex* cplx_;
  fftw_plan fwd_;
  fftw_plan inv_;
};

std::size_t frame_count(std::size_t signal_len, const StftParams& p) {
  return (signal_len - p.frame_len) / p.hop + 1;
}

}  // namespace

void StftParams::validate() const {
  if (frame_len < 2) throw InvalidParameterError("frame_len must be >= 2");
  if (hop == 0 || hop > frame_len) {
    throw InvalidParameterError("hop must be in [1, frame_len]");
  }
  if (fft_size < frame_len) throw InvalidParameterError("fft_size must be >= frame_len");
  if (!is_power_of_two(fft_size)) {
    throw InvalidParameterError("fft_size must be a power of two");
  }
  if (!(window_coeff > 0.0 && window_coeff < 1.0)) {
    throw InvalidParameterError("window_coeff must be in (0, 1)");
  }
}

std::vector<double> hamming_window(const StftParams& params) {
  const std::size_t n = params.frame_len;
  if (n < 2) throw InvalidLengthError("window length must be >= 2");
  const double a = params.window_coeff;
  std::vector<double> w(n);
  // Fill the first half and mirror so symmetry holds bit-exactly.
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    const double phase = 2.0 * std::numbers::pi * static_cast<double>(i) /
                         static_cast<double>(n - 1);
    const double v = 0.54 - a * std::cos(phase);
    w[i] = v;
    w[n - 1 - i] = v;
  }
  return w;
}

StftMatrix stft(const Waveform& wave, const StftParams& params) {
  params.validate();
  if (wave.samples.size() < params.frame_len) {
    throw SignalTooShortError("signal shorter than one frame");
  }
  const std::vector<double> window = hamming_window(params);
  const std::size_t num_frames = frame_count(wave.samples.size(), params);
  const std::size_t num_bins = params.fft_size / 2 + 1;

  StftMatrix mat;
  mat.params = params;
  mat.sample_rate_hz = wave.sample_rate_hz;
  mat.num_frames = num_frames;
  mat.num_bins = num_bins;
  mat.coeffs.resize(num_frames * num_bins);

  FftEngine fft(params.fft_size);
  std::vector<double> buf(params.fft_size, 0.0);
  for (std::size_t m = 0; m < num_frames; ++m) {
    const double* src = wave.samples.data() + m * params.hop;
    for (std::size_t i = 0; i < params.frame_len; ++i) buf[i] = src[i] * window[i];
    std::fill(buf.begin() + static_cast<std::ptrdiff_t>(params.frame_len), buf.end(), 0.0);
    fft.forward(buf.data(), &mat.at(m, 0));
  }
  return mat;
}

Waveform istft_overlap_add(const StftMatrix& mat) {
  const StftParams& p = mat.params;
  p.validate();
  if (mat.num_frames == 0 || mat.num_bins != p.fft_size / 2 + 1) {
    throw InvalidParameterError("matrix shape inconsistent with params");
  }
  const std::vector<double> window = hamming_window(p);
  const std::size_t out_len = (mat.num_frames - 1) * p.hop + p.frame_len;

  std::vector<double> acc(out_len, 0.0);
  std::vector<double> norm(out_len, 0.0);
  FftEngine fft(p.fft_size);
  std::vector<double> frame(p.fft_size);
  for (std::size_t m = 0; m < mat.num_frames; ++m) {
    fft.inverse(&mat.at(m, 0), frame.data());
    const std::size_t base = m * p.hop;
    for (std::size_t i = 0; i < p.frame_len; ++i) {
      acc[base + i] += frame[i] * window[i];
      norm[base + i] += window[i] * window[i];
    }
  }

  // The fully-overlapped interior must be covered by a usable normalizer.
  if (out_len > 2 * p.frame_len) {
    for (std::size_t i = p.frame_len; i < out_len - p.frame_len; ++i) {
      if (norm[i] < kNormalizerFloor) {
        throw ColaViolationError("window/hop combination leaves synthesis gaps");
      }
    }
  }

  Waveform out;
  out.sample_rate_hz = mat.sample_rate_hz;
  out.samples.resize(out_len);
  for (std::size_t i = 0; i < out_len; ++i) {
    out.samples[i] = norm[i] > 0.0 ? acc[i] / norm[i] : 0.0;
  }
  return out;
}

std::vector<double> power_spectrum(const StftMatrix& mat, std::size_t frame) {
  if (frame >= mat.num_frames) throw IndexOutOfRangeError("frame index out of range");
  std::vector<double> power(mat.num_bins);
  for (std::size_t k = 0; k < mat.num_bins; ++k) {
    power[k] = std::norm(mat.at(frame, k));
  }
  return power;
}

}  // namespace sre
