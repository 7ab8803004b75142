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
#include <string>
#include <vector>

#include "sre/errors.hpp"

namespace sre {

/// Mono audio signal, samples normalized to [-1, 1).
struct Waveform {
  std::vector<double> samples;
  int sample_rate_hz = 8000;
};

/// Reads a RIFF/WAVE file containing 16-bit PCM. Multi-channel input is
/// mean-downmixed to mono; samples are scaled by 1/32768.
///
/// Throws NotFoundError, UnsupportedFormatError (non-PCM or non-16-bit),
/// CorruptHeaderError.
Waveform read_wav(const std::string& path);

/// Writes `wave` as mono 16-bit PCM little-endian. Samples outside [-1, 1)
/// are hard-clipped before quantization.
void write_wav(const Waveform& wave, const std::string& path);

/// Returns clean + g*noise where g scales the noise (truncated to the clean
/// length, starting at `noise_offset`) so the remeasured global SNR equals
/// `target_snr_db`. The noise must be at least clean.size() + noise_offset
/// samples long.
Waveform mix_at_snr(const Waveform& clean, const Waveform& noise,
                    double target_snr_db, std::size_t noise_offset = 0);

/// 10*log10(sum p^2 / sum q^2) over two equal-length signals.
double measure_global_snr(const Waveform& clean,
                          const Waveform& residual_or_noise);

}  // namespace sre
