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

#include "sre/viz.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

namespace sre {

Raster spectrogram_raster(const StftMatrix& mat, double dyn_range_db) {
  if (!(dyn_range_db > 0.0)) throw InvalidParameterError("dyn_range_db must be positive");
  if (mat.num_frames == 0 || mat.num_bins == 0) {
    throw EmptyMatrixError("cannot rasterize an empty spectrum");
  }

  double peak_db = -std::numeric_limits<double>::infinity();
  double peak_mag = 0.0;
  std::vector<double> db(mat.num_frames * mat.num_bins);
  for (std::size_t i = 0; i < db.size(); ++i) {
    const double mag = std::abs(mat.coeffs[i]);
    peak_mag = std::max(peak_mag, mag);
    db[i] = 20.0 * std::log10(mag + 1e-12);
    peak_db = std::max(peak_db, db[i]);
  }
  const double lo = peak_db - dyn_range_db;

  Raster raster;
  raster.width = mat.num_frames;
  raster.height = mat.num_bins;
  raster.pixels.resize(raster.width * raster.height);
  if (peak_mag == 0.0) {
    return raster;  // identically silent input renders black
  }
  for (std::size_t m = 0; m < mat.num_frames; ++m) {
    for (std::size_t k = 0; k < mat.num_bins; ++k) {
      const double level = 255.0 * (db[m * mat.num_bins + k] - lo) / dyn_range_db;
      const long rounded = std::lround(level);  // half away from zero
      const std::size_t row = mat.num_bins - 1 - k;  // top = highest frequency
      raster.pixels[row * raster.width + m] =
          static_cast<std::uint8_t>(std::clamp<long>(rounded, 0, 255));
    }
  }
  return raster;
}

void write_pgm(const Raster& raster, const std::string& path) {
  if (raster.pixels.size() != raster.width * raster.height) {
    throw InvalidParameterError("raster pixel count does not match dimensions");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "P5\n" << raster.width << ' ' << raster.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(raster.pixels.data()),
            static_cast<std::streamsize>(raster.pixels.size()));
  if (!out) throw IoError("short write: " + path);
}

}  // namespace sre
