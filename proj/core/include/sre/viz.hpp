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

#include "sre/stft.hpp"

namespace sre {

/// 8-bit grayscale raster, row-major, top row = highest frequency.
struct Raster {
  std::size_t width = 0;   // frames
  std::size_t height = 0;  // bins
  std::vector<std::uint8_t> pixels;
};

/// Maps magnitudes to gray levels over dyn_range_db below the global peak:
/// pixel = clamp(round(255*(db - (peak - range))/range), 0, 255), with
/// db = 20*log10(|X| + 1e-12) and rounding half away from zero.
Raster spectrogram_raster(const StftMatrix& mat, double dyn_range_db = 60.0);

/// Binary PGM (P5), maxval 255. Byte-exact header "P5\n<w> <h>\n255\n".
void write_pgm(const Raster& raster, const std::string& path);

}  // namespace sre
